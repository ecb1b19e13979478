//! Built-in hypothesis families.
//!
//! Each family carries an analytic restriction rule: pattern counts on any subset
//! are closed-form, and pattern lists are generated without touching the full
//! trace set. Materialization goes through the same generator over the whole
//! ground set, and the tests cross-check both against brute force.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::model::{low_mask, GroundSet, HypothesisClass};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `h_t(i) = 1` iff `i ≥ t`, for `t ∈ {0, …, n}`.
    Threshold,
    /// `h_{a,b}(i) = 1` iff `a < i < b`, for `a < b` in `{-1, …, n}`.
    Interval,
    /// Every trace that is zero on even indices.
    EvenZero,
    /// Every trace that is zero off `support`.
    Cylinder { support: Vec<usize> },
    /// Traces supported inside a single block of a contiguous partition, zero elsewhere.
    PartitionUnion { block_sizes: Vec<usize> },
    /// The single constant-1 trace.
    AllHeads,
    Full,
    Empty,
    /// Every trace with bit `pivot` equal to 0.
    CoordinateHalf { pivot: usize },
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Threshold => "threshold",
            FamilyKind::Interval => "interval",
            FamilyKind::EvenZero => "evenzero",
            FamilyKind::Cylinder { .. } => "cylinder",
            FamilyKind::PartitionUnion { .. } => "partition",
            FamilyKind::AllHeads => "allheads",
            FamilyKind::Full => "full",
            FamilyKind::Empty => "empty",
            FamilyKind::CoordinateHalf { .. } => "halfpivot",
        }
    }
}

fn join(items: &[usize]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

/// Renders in class-file syntax, e.g. `cylinder support=1,3`.
impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        match self {
            FamilyKind::Cylinder { support } => write!(f, " support={}", join(support)),
            FamilyKind::PartitionUnion { block_sizes } => write!(f, " blocks={}", join(block_sizes)),
            FamilyKind::CoordinateHalf { pivot } => write!(f, " pivot={pivot}"),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyDescriptor {
    kind: FamilyKind,
    ground: GroundSet,
    /// Support for cylinders, odd indices for even-zero, pivot bit for coordinate halves.
    mask: u64,
    /// Block masks for partition unions.
    blocks: Vec<u64>,
}

impl FamilyDescriptor {
    pub fn new(kind: FamilyKind, ground: GroundSet) -> Result<Self> {
        let n = ground.size();
        let mut mask = 0u64;
        let mut blocks = Vec::new();
        match &kind {
            FamilyKind::Cylinder { support } => {
                mask = ground
                    .subset_mask(support)
                    .map_err(|e| Error::BadDescriptor(format!("cylinder support: {e}")))?;
            }
            FamilyKind::EvenZero => {
                mask = (0..n).filter(|i| i % 2 == 1).fold(0, |m, i| m | (1u64 << i));
            }
            FamilyKind::PartitionUnion { block_sizes } => {
                if block_sizes.contains(&0) {
                    return Err(Error::BadDescriptor("partition blocks must be nonempty".into()));
                }
                let total: usize = block_sizes.iter().sum();
                if total != n {
                    return Err(Error::BadDescriptor(format!(
                        "partition block sizes sum to {total}, ground size is {n}"
                    )));
                }
                let mut start = 0;
                for &b in block_sizes {
                    blocks.push(low_mask(b) << start);
                    start += b;
                }
            }
            FamilyKind::CoordinateHalf { pivot } => {
                if *pivot >= n {
                    return Err(Error::BadDescriptor(format!(
                        "pivot {pivot} outside ground set of size {n}"
                    )));
                }
                mask = 1u64 << pivot;
            }
            _ => {}
        }
        Ok(FamilyDescriptor { kind, ground, mask, blocks })
    }

    pub fn kind(&self) -> &FamilyKind {
        &self.kind
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn n(&self) -> usize {
        self.ground.size()
    }

    /// Closed-form `|H↾Y|` for the elements of `mask`.
    pub(crate) fn pattern_count(&self, mask: u64) -> u128 {
        let k = mask.count_ones();
        let pow = |e: u32| 1u128 << e;
        match &self.kind {
            FamilyKind::Threshold => k as u128 + 1,
            FamilyKind::Interval => {
                let k = k as u128;
                1 + k + k * k.saturating_sub(1) / 2
            }
            FamilyKind::EvenZero | FamilyKind::Cylinder { .. } => pow((mask & self.mask).count_ones()),
            FamilyKind::PartitionUnion { .. } => {
                1 + self.blocks.iter().map(|b| pow((mask & b).count_ones()) - 1).sum::<u128>()
            }
            FamilyKind::AllHeads => 1,
            FamilyKind::Full => pow(k),
            FamilyKind::Empty => 0,
            FamilyKind::CoordinateHalf { .. } => pow((mask & !self.mask).count_ones()),
        }
    }

    /// The distinct patterns on the ordered `domain` (may contain duplicates only for unions).
    pub(crate) fn patterns(&self, domain: &[usize]) -> Vec<u64> {
        let k = domain.len();
        // Positions j whose element lies in `elements`.
        let positions = |elements: u64| -> u64 {
            domain
                .iter()
                .enumerate()
                .filter(|(_, &e)| elements & (1u64 << e) != 0)
                .fold(0u64, |m, (j, _)| m | (1u64 << j))
        };
        match &self.kind {
            FamilyKind::Threshold => {
                let cuts = domain.iter().copied().chain(std::iter::once(self.n()));
                let mut out: Vec<u64> = cuts
                    .map(|t| positions(!low_mask(t)))
                    .collect();
                out.sort_unstable();
                out.dedup();
                out
            }
            FamilyKind::Interval => {
                let n = self.n() as isize;
                let lows = std::iter::once(-1).chain(domain.iter().map(|&d| d as isize));
                let mut out = Vec::new();
                for a in lows {
                    for b in domain.iter().map(|&d| d as isize).chain(std::iter::once(n)) {
                        if a < b {
                            let inside = domain
                                .iter()
                                .enumerate()
                                .filter(|(_, &d)| a < d as isize && (d as isize) < b)
                                .fold(0u64, |m, (j, _)| m | (1u64 << j));
                            out.push(inside);
                        }
                    }
                }
                out.sort_unstable();
                out.dedup();
                out
            }
            FamilyKind::EvenZero | FamilyKind::Cylinder { .. } => submasks(positions(self.mask)),
            FamilyKind::PartitionUnion { .. } => {
                let mut out: Vec<u64> = self.blocks.iter().flat_map(|&b| submasks(positions(b))).collect();
                out.sort_unstable();
                out.dedup();
                out
            }
            FamilyKind::AllHeads => vec![low_mask(k)],
            FamilyKind::Full => submasks(low_mask(k)),
            FamilyKind::Empty => Vec::new(),
            FamilyKind::CoordinateHalf { .. } => submasks(low_mask(k) & !positions(self.mask)),
        }
    }

    /// Membership test for a packed trace over the ground set.
    pub(crate) fn contains(&self, trace: u64) -> bool {
        let full = self.ground.full_mask();
        match &self.kind {
            FamilyKind::Threshold => {
                let below = !trace & full;
                below & below.wrapping_add(1) == 0
            }
            FamilyKind::Interval => {
                let run = trace >> trace.trailing_zeros().min(63);
                trace == 0 || run & run.wrapping_add(1) == 0
            }
            FamilyKind::EvenZero | FamilyKind::Cylinder { .. } => trace & !self.mask == 0,
            FamilyKind::PartitionUnion { .. } => self.blocks.iter().any(|b| trace & !b == 0),
            FamilyKind::AllHeads => trace == full,
            FamilyKind::Full => true,
            FamilyKind::Empty => false,
            FamilyKind::CoordinateHalf { .. } => trace & self.mask == 0,
        }
    }

    /// The VC dimension implied by the family's definition; `None` for the empty class.
    pub fn expected_vc(&self) -> Option<usize> {
        let n = self.n();
        Some(match &self.kind {
            FamilyKind::Threshold => 1,
            FamilyKind::Interval => n.min(2),
            FamilyKind::EvenZero | FamilyKind::Cylinder { .. } => self.mask.count_ones() as usize,
            FamilyKind::PartitionUnion { block_sizes } => block_sizes.iter().copied().max().unwrap_or(0),
            FamilyKind::AllHeads => 0,
            FamilyKind::Full => n,
            FamilyKind::Empty => return None,
            FamilyKind::CoordinateHalf { .. } => n - 1,
        })
    }
}

/// All submasks of `mask`, ascending.
fn submasks(mask: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(1usize << mask.count_ones().min(24));
    let mut sub = 0u64;
    loop {
        out.push(sub);
        if sub == mask {
            break;
        }
        sub = sub.wrapping_sub(mask) & mask;
    }
    out
}

pub fn make_family(desc: FamilyDescriptor) -> HypothesisClass {
    HypothesisClass::from_family(desc)
}

/// Convenience constructor: validates `kind` against a ground set of size `n`.
pub fn family(kind: FamilyKind, n: usize) -> Result<HypothesisClass> {
    Ok(make_family(FamilyDescriptor::new(kind, GroundSet::new(n)?)?))
}

pub fn expected_vc(desc: &FamilyDescriptor) -> Option<usize> {
    desc.expected_vc()
}

/// One descriptor of every kind on a ground of size `n`, with representative parameters.
pub fn catalog(n: usize) -> Result<Vec<FamilyDescriptor>> {
    let ground = GroundSet::new(n)?;
    let support: Vec<usize> = (0..n).filter(|i| i % 3 != 2).collect();
    let mut blocks = Vec::new();
    let mut left = n;
    let mut size = 1;
    while left > 0 {
        let b = size.min(left);
        blocks.push(b);
        left -= b;
        size += 1;
    }
    let kinds = vec![
        FamilyKind::Threshold,
        FamilyKind::Interval,
        FamilyKind::EvenZero,
        FamilyKind::Cylinder { support },
        FamilyKind::PartitionUnion { block_sizes: blocks },
        FamilyKind::AllHeads,
        FamilyKind::Full,
        FamilyKind::Empty,
        FamilyKind::CoordinateHalf { pivot: n / 2 },
    ];
    kinds.into_iter().map(|k| FamilyDescriptor::new(k, ground.clone())).collect()
}

/// A random nonempty explicit class on `n` elements.
///
/// Half the draws are sparse (at most `4n` traces), half keep each trace
/// independently with a random density, so both low- and high-VC classes appear.
pub fn random_class<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<HypothesisClass> {
    let ground = GroundSet::new(n)?;
    if n > 20 {
        return Err(Error::CapExceeded { size: n, cap: 20 });
    }
    let total = 1u64 << n;
    let mut bits: Vec<u64> = if rng.gen_bool(0.5) {
        let count = rng.gen_range(1..=total.min(4 * n as u64));
        (0..count).map(|_| rng.gen_range(0..total)).collect()
    } else {
        let density: f64 = rng.gen_range(0.05..0.95);
        (0..total).filter(|_| rng.gen_bool(density)).collect()
    };
    if bits.is_empty() {
        bits.push(rng.gen_range(0..total));
    }
    bits.sort_unstable();
    bits.dedup();
    HypothesisClass::from_bits(ground, bits)
}
