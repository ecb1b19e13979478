//! Brute-force oracles and corpora shared by the integration tests.
//!
//! Everything here works from materialized trace lists with plain enumeration
//! and hash sets, independent of the library's pruned searches and analytic
//! family rules.

#![allow(dead_code)]

use std::collections::HashSet;

use falsilab::families::{catalog, random_class};
use falsilab::{FamilyDescriptor, FamilyKind, GroundSet, HypothesisClass, PartialAssignment};
use rand::rngs::StdRng;
use rand::SeedableRng;

pub fn traces(class: &HypothesisClass) -> Vec<u64> {
    class.materialize().unwrap().iter().map(|t| t.bits()).collect()
}

pub fn subset_of(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn naive_patterns(traces: &[u64], subset: &[usize]) -> HashSet<Vec<bool>> {
    traces
        .iter()
        .map(|&t| subset.iter().map(|&e| t >> e & 1 == 1).collect())
        .collect()
}

pub fn naive_shatters(traces: &[u64], subset: &[usize]) -> bool {
    naive_patterns(traces, subset).len() == 1usize << subset.len()
}

/// Maximum shattered size and the lexicographically smallest witness of that size.
pub fn naive_vc(traces: &[u64], n: usize) -> Option<(usize, Vec<usize>)> {
    if traces.is_empty() {
        return None;
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    for mask in 0..(1u64 << n) {
        let subset = subset_of(mask, n);
        if !naive_shatters(traces, &subset) {
            continue;
        }
        let better = match &best {
            None => true,
            Some((d, w)) => subset.len() > *d || (subset.len() == *d && subset < *w),
        };
        if better {
            best = Some((subset.len(), subset));
        }
    }
    best
}

/// Smallest unshattered subset of the free coordinates of `H_f`, lexicographically first; `None` if all shattered.
pub fn naive_popper(traces: &[u64], n: usize, assign: &PartialAssignment) -> Option<(usize, Vec<usize>)> {
    let conditioned: Vec<u64> = traces
        .iter()
        .copied()
        .filter(|&t| assign.iter().all(|(e, v)| (t >> e & 1 == 1) == v))
        .collect();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for mask in 0..(1u64 << n) {
        let subset = subset_of(mask, n);
        if subset.iter().any(|&e| assign.get(e).is_some()) {
            continue;
        }
        if naive_shatters(&conditioned, &subset) {
            continue;
        }
        let better = match &best {
            None => true,
            Some((d, w)) => subset.len() < *d || (subset.len() == *d && subset < *w),
        };
        if better {
            best = Some((subset.len(), subset));
        }
    }
    best
}

pub fn naive_growth(traces: &[u64], n: usize, m: usize) -> usize {
    (0..(1u64 << n))
        .filter(|mask| mask.count_ones() as usize == m)
        .map(|mask| naive_patterns(traces, &subset_of(mask, n)).len())
        .max()
        .unwrap_or(0)
}

/// `|H↾S ∩ H^c↾S|` computed from fibers: a pattern of `H↾S` is shared with the
/// complement unless `H` contains all `2^(n-|S|)` of its extensions.
pub fn shared_patterns(traces: &[u64], n: usize, window: &[usize]) -> usize {
    let mut fibers: std::collections::HashMap<Vec<bool>, usize> = std::collections::HashMap::new();
    for &t in traces {
        *fibers.entry(window.iter().map(|&e| t >> e & 1 == 1).collect()).or_default() += 1;
    }
    let full_fiber = 1usize << (n - window.len());
    fibers.values().filter(|&&c| c < full_fiber).count()
}

pub fn all_assignments(n: usize, depth: usize) -> Vec<PartialAssignment> {
    let mut out = Vec::new();
    for mask in 0..(1u64 << n) {
        let dom = subset_of(mask, n);
        if dom.len() > depth {
            continue;
        }
        for values in 0..(1u64 << dom.len()) {
            out.push(
                PartialAssignment::from_pairs(dom.iter().enumerate().map(|(j, &e)| (e, values >> j & 1 == 1))).unwrap(),
            );
        }
    }
    out
}

pub fn random_classes(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<HypothesisClass> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|i| random_class(min_n + i % (max_n - min_n + 1), &mut rng).unwrap())
        .collect()
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every descriptor on a ground of size `n`: all supports, partitions and pivots.
pub fn exhaustive_descriptors(n: usize) -> Vec<FamilyDescriptor> {
    let ground = GroundSet::new(n).unwrap();
    let mut kinds = vec![
        FamilyKind::Threshold,
        FamilyKind::Interval,
        FamilyKind::EvenZero,
        FamilyKind::AllHeads,
        FamilyKind::Full,
        FamilyKind::Empty,
    ];
    kinds.extend((0..(1u64 << n)).map(|m| FamilyKind::Cylinder { support: subset_of(m, n) }));
    kinds.extend(compositions(n).into_iter().map(|b| FamilyKind::PartitionUnion { block_sizes: b }));
    kinds.extend((0..n).map(|p| FamilyKind::CoordinateHalf { pivot: p }));
    kinds.into_iter().map(|k| FamilyDescriptor::new(k, ground.clone()).unwrap()).collect()
}

/// The catalog plus a few extra parameterizations, for grounds too large to enumerate exhaustively.
pub fn sampled_descriptors(n: usize) -> Vec<FamilyDescriptor> {
    let ground = GroundSet::new(n).unwrap();
    let mut out = catalog(n).unwrap();
    let extra = vec![
        FamilyKind::Cylinder { support: vec![] },
        FamilyKind::Cylinder { support: (0..n).collect() },
        FamilyKind::Cylinder { support: (0..n).step_by(2).collect() },
        FamilyKind::PartitionUnion { block_sizes: vec![n] },
        FamilyKind::PartitionUnion { block_sizes: vec![1; n] },
        FamilyKind::CoordinateHalf { pivot: 0 },
        FamilyKind::CoordinateHalf { pivot: n - 1 },
    ];
    out.extend(extra.into_iter().map(|k| FamilyDescriptor::new(k, ground.clone()).unwrap()));
    out
}
