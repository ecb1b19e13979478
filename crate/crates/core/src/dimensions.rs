//! VC dimension, Popper dimension, growth function and Sauer-Shelah bounds.
//!
//! Shattering is downward closed, so every search here runs by increasing
//! subset size. Within one size, subsets are visited in lexicographic order of
//! their ascending element lists, which makes the first hit the
//! lexicographically smallest witness.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::model::{elements_mask, mask_elements, HypothesisClass, PartialAssignment};

/// Lexicographic `k`-combinations of `pool` (which must be ascending).
pub(crate) struct Combinations<'a> {
    pool: &'a [usize],
    idx: Vec<usize>,
    done: bool,
}

impl<'a> Combinations<'a> {
    pub(crate) fn new(pool: &'a [usize], k: usize) -> Self {
        Combinations { pool, idx: (0..k).collect(), done: k > pool.len() }
    }
}

impl Iterator for Combinations<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().map(|&i| self.pool[i]).collect();
        let k = self.idx.len();
        let n = self.pool.len();
        match (0..k).rev().find(|&i| self.idx[i] != i + n - k) {
            Some(i) => {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcResult {
    pub dimension: usize,
    /// Lexicographically smallest shattered set of maximal size.
    pub witness: Vec<usize>,
}

/// VC dimension with a shattered witness.
///
/// Candidates of size `k` are built only from shattered sets of size `k-1`
/// extended by a larger element, and must have every `(k-1)`-subset shattered.
pub fn vc_dimension(class: &HypothesisClass) -> Result<VcResult> {
    if class.is_empty() {
        return Err(Error::EmptyClass);
    }
    let n = class.ground_size();
    let size = class.len();
    let mut level: Vec<u64> = vec![0];
    let mut best = VcResult { dimension: 0, witness: Vec::new() };
    for k in 1..=n {
        if k >= 128 || size < 1u128 << k {
            break;
        }
        let previous: HashSet<u64> = level.iter().copied().collect();
        let mut next = Vec::new();
        for &parent in &level {
            let top = if parent == 0 { 0 } else { 64 - parent.leading_zeros() as usize };
            for e in top..n {
                let cand = parent | (1u64 << e);
                let closed = mask_elements(parent).all(|d| previous.contains(&(cand & !(1u64 << d))));
                if closed && class.shatters_mask(cand) {
                    next.push(cand);
                }
            }
        }
        match next.first() {
            Some(&first) => {
                best = VcResult { dimension: k, witness: mask_elements(first).collect() };
                level = next;
            }
            None => break,
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PopperResult {
    /// Smallest unshattered subset of the free coordinates, lexicographically first among ties.
    Finite { value: usize, witness: Vec<usize> },
    /// Every subset of the free coordinates is shattered within the ground set.
    Unwitnessed,
}

impl PopperResult {
    pub fn value(&self) -> Option<usize> {
        match self {
            PopperResult::Finite { value, .. } => Some(*value),
            PopperResult::Unwitnessed => None,
        }
    }
}

impl fmt::Display for PopperResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PopperResult::Finite { value, witness } => {
                write!(f, "{value} witness={}", format_set(witness))
            }
            PopperResult::Unwitnessed => f.write_str("unwitnessed (no unshattered subset within ground set)"),
        }
    }
}

/// Renders an element list as `{a,b,c}`.
pub fn format_set(elements: &[usize]) -> String {
    let inner: Vec<String> = elements.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Popper dimension of `class` relative to `assign`.
pub fn popper_dimension(class: &HypothesisClass, assign: &PartialAssignment) -> Result<PopperResult> {
    let conditioned = class.conditioned(assign)?;
    if conditioned.is_empty() {
        // H_f↾∅ = ∅ ≠ 2^∅
        return Ok(PopperResult::Finite { value: 0, witness: Vec::new() });
    }
    let assigned = elements_mask(&assign.domain());
    let free: Vec<usize> = (0..class.ground_size()).filter(|&e| assigned & (1u64 << e) == 0).collect();
    let size = conditioned.len();
    // Traces of H_f differ only on free coordinates.
    if free.len() < 128 && size == 1u128 << free.len() {
        return Ok(PopperResult::Unwitnessed);
    }
    for k in 1..=free.len() {
        let mut combos = Combinations::new(&free, k);
        if k >= 128 || size < 1u128 << k {
            let witness = combos.next().expect("k <= |free|");
            return Ok(PopperResult::Finite { value: k, witness });
        }
        if let Some(witness) = combos.find(|c| !conditioned.shatters_mask(elements_mask(c))) {
            return Ok(PopperResult::Finite { value: k, witness });
        }
    }
    Ok(PopperResult::Unwitnessed)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthEntry {
    pub m: usize,
    pub value: u128,
    /// Lexicographically smallest size-`m` subset attaining `value`.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthTable {
    pub entries: Vec<GrowthEntry>,
}

impl GrowthTable {
    pub fn get(&self, m: usize) -> Option<u128> {
        self.entries.get(m).map(|e| e.value)
    }
}

/// `τ_H(m)` for a single `m`, with witness.
pub fn growth_at(class: &HypothesisClass, m: usize) -> Result<GrowthEntry> {
    let n = class.ground_size();
    if m > n {
        return Err(Error::BadRange(format!("m = {m} exceeds ground size {n}")));
    }
    let pool: Vec<usize> = (0..n).collect();
    let ceiling = class.len().min(if m < 128 { 1u128 << m } else { u128::MAX });
    let mut best: Option<(u128, Vec<usize>)> = None;
    for subset in Combinations::new(&pool, m) {
        let count = class.pattern_count_mask(elements_mask(&subset));
        if best.as_ref().is_none_or(|(b, _)| count > *b) {
            let reached = count >= ceiling;
            best = Some((count, subset));
            if reached {
                break;
            }
        }
    }
    let (value, witness) = best.expect("at least one subset of each size");
    Ok(GrowthEntry { m, value, witness })
}

/// Growth function for `m = 0..=max_m`.
pub fn growth_function(class: &HypothesisClass, max_m: usize) -> Result<GrowthTable> {
    if max_m > class.ground_size() {
        return Err(Error::BadRange(format!(
            "M = {max_m} exceeds ground size {}",
            class.ground_size()
        )));
    }
    let entries = (0..=max_m).map(|m| growth_at(class, m)).collect::<Result<_>>()?;
    Ok(GrowthTable { entries })
}

/// `Σ_{i=0}^{d} C(m, i)`.
pub fn sauer_bound(m: usize, d: usize) -> u128 {
    let mut sum = 0u128;
    let mut binom = 1u128;
    for i in 0..=d.min(m) {
        sum += binom;
        binom = binom * (m - i) as u128 / (i + 1) as u128;
    }
    sum
}

/// `(e·m/d)^d`, defined for `d ≥ 1` and `m > d + 1`. Advisory only.
pub fn analytic_bound(m: usize, d: usize) -> Option<f64> {
    if d == 0 || m <= d + 1 {
        return None;
    }
    Some((std::f64::consts::E * m as f64 / d as f64).powi(d as i32))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PopperProfile {
    pub entries: Vec<(PartialAssignment, PopperResult)>,
    pub max_finite: Option<usize>,
    pub unwitnessed: usize,
}

/// Upper limit on the number of assignments a profile may enumerate.
pub const PROFILE_BUDGET: u128 = 1 << 20;

/// Popper dimension for every partial assignment with at most `depth` entries,
/// ordered by domain size, then domain, then values.
pub fn popper_profile(class: &HypothesisClass, depth: usize) -> Result<PopperProfile> {
    let n = class.ground_size();
    if depth > n {
        return Err(Error::BadRange(format!("depth {depth} exceeds ground size {n}")));
    }
    let total: u128 = (0..=depth).map(|k| binomial(n, k).saturating_mul(1u128 << k.min(127))).sum();
    if total > PROFILE_BUDGET {
        return Err(Error::CapExceeded { size: n, cap: class.cap() });
    }
    let pool: Vec<usize> = (0..n).collect();
    let mut entries = Vec::new();
    for k in 0..=depth {
        for domain in Combinations::new(&pool, k) {
            for values in 0..(1u64 << k) {
                let assign =
                    PartialAssignment::from_pairs(domain.iter().enumerate().map(|(j, &e)| (e, (values >> j) & 1 == 1)))?;
                let result = popper_dimension(class, &assign)?;
                entries.push((assign, result));
            }
        }
    }
    let max_finite = entries.iter().filter_map(|(_, r)| r.value()).max();
    let unwitnessed = entries.iter().filter(|(_, r)| *r == PopperResult::Unwitnessed).count();
    Ok(PopperProfile { entries, max_finite, unwitnessed })
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family, FamilyKind};
    use crate::model::GroundSet;

    #[test]
    fn combinations_are_lexicographic() {
        let pool = [0, 2, 5, 7];
        let all: Vec<Vec<usize>> = Combinations::new(&pool, 2).collect();
        assert_eq!(all, vec![vec![0, 2], vec![0, 5], vec![0, 7], vec![2, 5], vec![2, 7], vec![5, 7]]);
        assert_eq!(Combinations::new(&pool, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(Combinations::new(&pool, 5).count(), 0);
    }

    #[test]
    fn vc_examples() {
        let full = family(FamilyKind::Full, 4).unwrap();
        assert_eq!(vc_dimension(&full).unwrap(), VcResult { dimension: 4, witness: vec![0, 1, 2, 3] });
        assert_eq!(vc_dimension(&family(FamilyKind::Threshold, 5).unwrap()).unwrap().dimension, 1);
        assert_eq!(vc_dimension(&family(FamilyKind::Interval, 6).unwrap()).unwrap().dimension, 2);
        let ez = vc_dimension(&family(FamilyKind::EvenZero, 6).unwrap()).unwrap();
        assert_eq!(ez, VcResult { dimension: 3, witness: vec![1, 3, 5] });
        assert_eq!(vc_dimension(&family(FamilyKind::Empty, 3).unwrap()), Err(Error::EmptyClass));
        assert_eq!(vc_dimension(&family(FamilyKind::AllHeads, 3).unwrap()).unwrap().dimension, 0);
    }

    #[test]
    fn popper_examples() {
        let ez = family(FamilyKind::EvenZero, 6).unwrap();
        assert_eq!(
            popper_dimension(&ez, &PartialAssignment::new()).unwrap(),
            PopperResult::Finite { value: 1, witness: vec![0] }
        );
        let full = family(FamilyKind::Full, 5).unwrap();
        assert_eq!(popper_dimension(&full, &PartialAssignment::new()).unwrap(), PopperResult::Unwitnessed);
        let heads = family(FamilyKind::AllHeads, 4).unwrap();
        let a: PartialAssignment = "0=0".parse().unwrap();
        assert_eq!(
            popper_dimension(&heads, &a).unwrap(),
            PopperResult::Finite { value: 0, witness: vec![] }
        );
        let bad: PartialAssignment = "9=0".parse().unwrap();
        assert!(matches!(popper_dimension(&heads, &bad), Err(Error::InvalidAssignment(_))));
    }

    #[test]
    fn popper_with_fully_assigned_ground() {
        let full = family(FamilyKind::Full, 2).unwrap();
        let a: PartialAssignment = "0=1,1=0".parse().unwrap();
        // one trace left, no free coordinates: only ∅ remains, and it is shattered
        assert_eq!(popper_dimension(&full, &a).unwrap(), PopperResult::Unwitnessed);
    }

    #[test]
    fn popper_threshold_pairs() {
        // thresholds shatter every singleton but no pair; (0,1) is first lexicographically
        let t = family(FamilyKind::Threshold, 4).unwrap();
        assert_eq!(
            popper_dimension(&t, &PartialAssignment::new()).unwrap(),
            PopperResult::Finite { value: 2, witness: vec![0, 1] }
        );
    }

    #[test]
    fn growth_examples() {
        let full = family(FamilyKind::Full, 5).unwrap();
        assert_eq!(growth_at(&full, 3).unwrap().value, 8);
        let t = family(FamilyKind::Threshold, 5).unwrap();
        let table = growth_function(&t, 5).unwrap();
        for m in 0..=5 {
            assert_eq!(table.get(m), Some(m as u128 + 1));
        }
        let heads = family(FamilyKind::AllHeads, 5).unwrap();
        assert!(growth_function(&heads, 5).unwrap().entries.iter().all(|e| e.value == 1));
        assert!(matches!(growth_function(&heads, 6), Err(Error::BadRange(_))));
        let empty = family(FamilyKind::Empty, 3).unwrap();
        assert!(growth_function(&empty, 3).unwrap().entries.iter().all(|e| e.value == 0));
    }

    #[test]
    fn growth_witness_is_lexicographically_first() {
        let ez = family(FamilyKind::EvenZero, 6).unwrap();
        let e = growth_at(&ez, 2).unwrap();
        assert_eq!(e.value, 4);
        assert_eq!(e.witness, vec![1, 3]);
    }

    #[test]
    fn sauer_values() {
        assert_eq!(sauer_bound(5, 2), 16);
        assert_eq!(sauer_bound(10, 1), 11);
        assert_eq!(sauer_bound(4, 4), 16);
        assert_eq!(sauer_bound(4, 9), 16);
        assert_eq!(sauer_bound(0, 0), 1);
        assert_eq!(sauer_bound(64, 64), 1u128 << 64);
        assert!(analytic_bound(3, 2).is_none());
        assert!(analytic_bound(5, 0).is_none());
        let a = analytic_bound(10, 2).unwrap();
        assert!((a - (std::f64::consts::E * 5.0).powi(2)).abs() < 1e-9);
        assert!(a >= sauer_bound(10, 2) as f64);
    }

    #[test]
    fn profile_examples() {
        let ez = family(FamilyKind::EvenZero, 6).unwrap();
        let p = popper_profile(&ez, 0).unwrap();
        assert_eq!(p.entries.len(), 1);
        assert_eq!(p.entries[0].1, PopperResult::Finite { value: 1, witness: vec![0] });
        let full = family(FamilyKind::Full, 4).unwrap();
        let p = popper_profile(&full, 1).unwrap();
        assert_eq!(p.entries.len(), 9);
        assert_eq!(p.unwitnessed, 9);
        assert_eq!(p.max_finite, None);
        let empty = family(FamilyKind::Empty, 3).unwrap();
        let p = popper_profile(&empty, 0).unwrap();
        assert_eq!(p.entries[0].1, PopperResult::Finite { value: 0, witness: vec![] });
        assert!(matches!(popper_profile(&empty, 4), Err(Error::BadRange(_))));
        let big = family(FamilyKind::Threshold, 30).unwrap();
        assert!(matches!(popper_profile(&big, 10), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn vc_of_restriction_as_class() {
        let ez = family(FamilyKind::EvenZero, 6).unwrap();
        let r = ez.restrict(&[0, 1, 3]).unwrap().as_class().unwrap();
        assert_eq!(vc_dimension(&r).unwrap().dimension, 2);
        let g = GroundSet::new(1).unwrap();
        assert_eq!(r.ground_size(), 3);
        assert_eq!(g.size(), 1);
    }
}
