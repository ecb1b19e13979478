//! Ground sets, traces, hypothesis classes and the restriction/shattering primitives.
//!
//! A ground set of size `n` is the canonical set `{0, …, n-1}`. Traces are total
//! assignments `ground → {0,1}` stored as the low `n` bits of a `u64`, bit `i`
//! holding the value at element `i`. Patterns on an ordered domain use the same
//! encoding with bit `j` holding the value at `domain[j]`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::FamilyDescriptor;

/// Largest supported ground set; traces are packed into a `u64`.
pub const MAX_GROUND: usize = 64;

/// Default ceiling on the ground size of classes that need explicit materialization.
pub const DEFAULT_CAP: usize = 24;

#[inline]
pub(crate) fn low_mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// Iterates the set bits of `mask` in ascending order.
pub(crate) fn mask_elements(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

pub(crate) fn elements_mask(elements: &[usize]) -> u64 {
    elements.iter().fold(0u64, |m, &e| m | (1u64 << e))
}

/// Gathers the bits of `trace` at `domain` into a dense pattern.
#[inline]
pub(crate) fn gather(trace: u64, domain: &[usize]) -> u64 {
    domain
        .iter()
        .enumerate()
        .fold(0u64, |p, (j, &e)| p | (((trace >> e) & 1) << j))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    size: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 || size > MAX_GROUND {
            return Err(Error::BadGround { size, max: MAX_GROUND });
        }
        Ok(GroundSet { size, labels: None })
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        let mut ground = GroundSet::new(labels.len())?;
        let mut seen = std::collections::HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::BadLabels(format!("label {label:?} repeated")));
            }
        }
        ground.labels = Some(labels);
        Ok(ground)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of element `i`, falling back to its index.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(labels) => labels[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn full_mask(&self) -> u64 {
        low_mask(self.size)
    }

    /// Checks that `elements` are in range and pairwise distinct; returns them as a mask.
    pub fn subset_mask(&self, elements: &[usize]) -> Result<u64> {
        let mut mask = 0u64;
        for &e in elements {
            if e >= self.size {
                return Err(Error::InvalidSubset(format!(
                    "element {e} outside ground set of size {}",
                    self.size
                )));
            }
            if mask & (1u64 << e) != 0 {
                return Err(Error::InvalidSubset(format!("element {e} listed twice")));
            }
            mask |= 1u64 << e;
        }
        Ok(mask)
    }
}

/// A fixed-width bit string. Used both for traces (width = ground size) and for
/// patterns on an ordered domain (width = domain length).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    width: usize,
    bits: u64,
}

pub type Trace = BitString;
pub type Pattern = BitString;

impl BitString {
    pub fn new(bits: u64, width: usize) -> Result<Self> {
        if width > MAX_GROUND {
            return Err(Error::BadPattern(format!("width {width} exceeds {MAX_GROUND}")));
        }
        if bits & !low_mask(width) != 0 {
            return Err(Error::BadPattern(format!(
                "bits set beyond width {width}"
            )));
        }
        Ok(BitString { width, bits })
    }

    pub(crate) fn from_raw(bits: u64, width: usize) -> Self {
        debug_assert!(bits & !low_mask(width) == 0);
        BitString { width, bits }
    }

    pub fn from_bools(values: &[bool]) -> Result<Self> {
        let bits = values
            .iter()
            .enumerate()
            .fold(0u64, |b, (i, &v)| b | ((v as u64) << i));
        BitString::new(bits, values.len())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.width && (self.bits >> i) & 1 == 1
    }

    pub fn ones(&self) -> usize {
        self.bits.count_ones() as usize
    }
}

/// Renders character `i` as the value at position `i`.
impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut values = Vec::with_capacity(s.len());
        for (col, c) in s.chars().enumerate() {
            match c {
                '0' => values.push(false),
                '1' => values.push(true),
                other => {
                    return Err(Error::BadPattern(format!(
                        "unexpected character {other:?} at position {col}"
                    )))
                }
            }
        }
        BitString::from_bools(&values)
    }
}

/// The restriction of a class to an ordered list of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceSet {
    domain: Vec<usize>,
    patterns: Vec<u64>,
}

impl TraceSet {
    pub(crate) fn from_unsorted(domain: Vec<usize>, mut patterns: Vec<u64>) -> Self {
        patterns.sort_unstable();
        patterns.dedup();
        TraceSet { domain, patterns }
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// True when every one of the `2^|domain|` patterns is present.
    pub fn is_full(&self) -> bool {
        self.domain.len() < 64 && self.patterns.len() as u128 == 1u128 << self.domain.len()
    }

    pub fn contains(&self, pattern: &Pattern) -> bool {
        pattern.width() == self.domain.len() && self.patterns.binary_search(&pattern.bits()).is_ok()
    }

    /// Patterns in ascending numeric order of their packed bits.
    pub fn patterns(&self) -> impl Iterator<Item = Pattern> + '_ {
        let width = self.domain.len();
        self.patterns.iter().map(move |&b| BitString::from_raw(b, width))
    }

    /// Views the restriction as a hypothesis class on the ground set `{0, …, |domain|-1}`.
    pub fn as_class(&self) -> Result<HypothesisClass> {
        let ground = GroundSet::new(self.domain.len().max(1))?;
        if self.domain.is_empty() {
            // Padded to a one-element ground with a constant trace, so no nonempty set is shattered.
            let traces = if self.patterns.is_empty() { vec![] } else { vec![0] };
            return HypothesisClass::from_bits(ground, traces);
        }
        HypothesisClass::from_bits(ground, self.patterns.clone())
    }
}

/// A finite partial function `element → {0,1}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialAssignment {
    entries: BTreeMap<usize, bool>,
}

impl PartialAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, bool)>>(pairs: I) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (e, v) in pairs {
            if entries.insert(e, v).is_some() {
                return Err(Error::InvalidAssignment(format!("element {e} assigned twice")));
            }
        }
        Ok(PartialAssignment { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, element: usize) -> Option<bool> {
        self.entries.get(&element).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.entries.iter().map(|(&e, &v)| (e, v))
    }

    pub fn domain(&self) -> Vec<usize> {
        self.entries.keys().copied().collect()
    }

    pub fn validate(&self, ground: &GroundSet) -> Result<()> {
        match self.entries.keys().next_back() {
            Some(&e) if e >= ground.size() => Err(Error::InvalidAssignment(format!(
                "element {e} outside ground set of size {}",
                ground.size()
            ))),
            _ => Ok(()),
        }
    }

    pub(crate) fn domain_mask(&self) -> u64 {
        self.entries.keys().fold(0u64, |m, &e| m | (1u64 << e))
    }

    pub(crate) fn value_mask(&self) -> u64 {
        self.entries
            .iter()
            .filter(|(_, &v)| v)
            .fold(0u64, |m, (&e, _)| m | (1u64 << e))
    }

    /// True when `trace` agrees with every entry.
    pub fn extended_by(&self, trace: &Trace) -> bool {
        self.iter().all(|(e, v)| trace.get(e) == v)
    }

    /// Adds `pattern` over `domain`; fails if any element is already assigned.
    pub fn extend(&self, domain: &[usize], pattern: &Pattern) -> Result<Self> {
        if pattern.width() != domain.len() {
            return Err(Error::BadPattern(format!(
                "pattern width {} does not match {} elements",
                pattern.width(),
                domain.len()
            )));
        }
        let mut next = self.clone();
        for (j, &e) in domain.iter().enumerate() {
            if next.entries.insert(e, pattern.get(j)).is_some() {
                return Err(Error::InvalidAssignment(format!("element {e} assigned twice")));
            }
        }
        Ok(next)
    }

    pub fn is_subset_of(&self, other: &PartialAssignment) -> bool {
        self.iter().all(|(e, v)| other.get(e) == Some(v))
    }
}

/// Renders as `{i=b,j=b}`.
impl fmt::Display for PartialAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (e, v)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}={}", v as u8)?;
        }
        f.write_str("}")
    }
}

/// Parses `i=b,j=b`; surrounding braces and whitespace are accepted.
impl FromStr for PartialAssignment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if body.is_empty() {
            return Ok(PartialAssignment::new());
        }
        let mut pairs = Vec::new();
        for item in body.split(',') {
            let (e, v) = item.split_once('=').ok_or_else(|| {
                Error::InvalidAssignment(format!("expected `element=bit`, got {item:?}"))
            })?;
            let e: usize = e.trim().parse().map_err(|_| {
                Error::InvalidAssignment(format!("bad element index {:?}", e.trim()))
            })?;
            let v = match v.trim() {
                "0" => false,
                "1" => true,
                other => {
                    return Err(Error::InvalidAssignment(format!(
                        "bit must be 0 or 1, got {other:?}"
                    )))
                }
            };
            pairs.push((e, v));
        }
        PartialAssignment::from_pairs(pairs)
    }
}

/// An injective ordered list of ground elements: the observed prefix of a sample.
///
/// Samples and selectors share this type. A selector is a sample whose order
/// was chosen by the experimenter; nothing in the combinatorics distinguishes them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SamplePrefix {
    order: Vec<usize>,
}

impl SamplePrefix {
    pub fn new(order: Vec<usize>, ground: &GroundSet) -> Result<Self> {
        ground
            .subset_mask(&order)
            .map_err(|e| Error::BadPrefix(e.to_string()))?;
        Ok(SamplePrefix { order })
    }

    /// The identity enumeration `0, 1, …, n-1`.
    pub fn identity(ground: &GroundSet) -> Self {
        SamplePrefix { order: (0..ground.size()).collect() }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The first `n` sampled elements, `f([n])`.
    pub fn window(&self, n: usize) -> Result<&[usize]> {
        self.order.get(..n).ok_or_else(|| {
            Error::BadPrefix(format!("n = {n} exceeds prefix length {}", self.order.len()))
        })
    }

    /// Extends the prefix to a full enumeration by appending unused elements in ascending order.
    pub fn completed(&self, ground: &GroundSet) -> SamplePrefix {
        let used = elements_mask(&self.order);
        let mut order = self.order.clone();
        order.extend((0..ground.size()).filter(|&e| used & (1u64 << e) == 0));
        SamplePrefix { order }
    }

    pub(crate) fn check_ground(&self, ground: &GroundSet) -> Result<()> {
        match self.order.iter().max() {
            Some(&e) if e >= ground.size() => Err(Error::BadPrefix(format!(
                "element {e} outside ground set of size {}",
                ground.size()
            ))),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassBody {
    /// Sorted, deduplicated packed traces.
    Explicit(Vec<u64>),
    Family(FamilyDescriptor),
}

/// A hypothesis `H ⊆ 2^X` over a finite ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisClass {
    ground: GroundSet,
    body: ClassBody,
    cap: usize,
}

impl HypothesisClass {
    /// Builds an explicit class; traces must have the ground width and be pairwise distinct.
    pub fn explicit(ground: GroundSet, traces: Vec<Trace>) -> Result<Self> {
        let n = ground.size();
        let mut bits = Vec::with_capacity(traces.len());
        for t in &traces {
            if t.width() != n {
                return Err(Error::WidthMismatch { expected: n, found: t.width() });
            }
            bits.push(t.bits());
        }
        Self::from_bits(ground, bits)
    }

    /// Builds an explicit class from packed traces, rejecting duplicates.
    pub fn from_bits(ground: GroundSet, mut bits: Vec<u64>) -> Result<Self> {
        let n = ground.size();
        if let Some(&bad) = bits.iter().find(|&&b| b & !low_mask(n) != 0) {
            return Err(Error::WidthMismatch {
                expected: n,
                found: 64 - bad.leading_zeros() as usize,
            });
        }
        bits.sort_unstable();
        if let Some(w) = bits.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateTrace(BitString::from_raw(w[0], n).to_string()));
        }
        Ok(HypothesisClass { ground, body: ClassBody::Explicit(bits), cap: DEFAULT_CAP })
    }

    pub(crate) fn from_sorted_bits(ground: GroundSet, bits: Vec<u64>, cap: usize) -> Self {
        debug_assert!(bits.windows(2).all(|w| w[0] < w[1]));
        HypothesisClass { ground, body: ClassBody::Explicit(bits), cap }
    }

    pub(crate) fn from_family(desc: FamilyDescriptor) -> Self {
        HypothesisClass { ground: desc.ground().clone(), body: ClassBody::Family(desc), cap: DEFAULT_CAP }
    }

    /// Overrides the materialization cap (ground size) for this class and classes derived from it.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap.min(MAX_GROUND);
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn ground_size(&self) -> usize {
        self.ground.size()
    }

    pub fn body(&self) -> &ClassBody {
        &self.body
    }

    pub fn family(&self) -> Option<&FamilyDescriptor> {
        match &self.body {
            ClassBody::Family(d) => Some(d),
            ClassBody::Explicit(_) => None,
        }
    }

    /// Number of traces. Families report analytically without materializing.
    pub fn len(&self) -> u128 {
        self.pattern_count_mask(self.ground.full_mask())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn check_cap(&self) -> Result<()> {
        if self.ground.size() > self.cap {
            Err(Error::CapExceeded { size: self.ground.size(), cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// Packed traces in ascending order.
    pub(crate) fn trace_bits(&self) -> Result<std::borrow::Cow<'_, [u64]>> {
        match &self.body {
            ClassBody::Explicit(bits) => Ok(std::borrow::Cow::Borrowed(bits)),
            ClassBody::Family(desc) => {
                self.check_cap()?;
                let domain: Vec<usize> = (0..self.ground.size()).collect();
                let mut bits = desc.patterns(&domain);
                bits.sort_unstable();
                bits.dedup();
                Ok(std::borrow::Cow::Owned(bits))
            }
        }
    }

    /// The explicit trace set. Idempotent on explicit classes.
    pub fn materialize(&self) -> Result<Vec<Trace>> {
        let n = self.ground.size();
        Ok(self.trace_bits()?.iter().map(|&b| BitString::from_raw(b, n)).collect())
    }

    /// The same class with an explicit body.
    pub fn to_explicit(&self) -> Result<HypothesisClass> {
        let bits = self.trace_bits()?.into_owned();
        Ok(Self::from_sorted_bits(self.ground.clone(), bits, self.cap))
    }

    pub fn contains(&self, trace: &Trace) -> Result<bool> {
        if trace.width() != self.ground.size() {
            return Err(Error::WidthMismatch { expected: self.ground.size(), found: trace.width() });
        }
        Ok(match &self.body {
            ClassBody::Explicit(bits) => bits.binary_search(&trace.bits()).is_ok(),
            ClassBody::Family(desc) => desc.contains(trace.bits()),
        })
    }

    /// Number of distinct patterns on the elements of `mask`.
    pub(crate) fn pattern_count_mask(&self, mask: u64) -> u128 {
        match &self.body {
            ClassBody::Explicit(bits) => count_distinct_masked(bits, mask) as u128,
            ClassBody::Family(desc) => desc.pattern_count(mask),
        }
    }

    pub(crate) fn shatters_mask(&self, mask: u64) -> bool {
        let k = mask.count_ones();
        match &self.body {
            ClassBody::Explicit(bits) => {
                // Need at least 2^k traces before looking at patterns.
                k < 64 && (bits.len() as u128) >= (1u128 << k) && count_distinct_masked(bits, mask) as u128 == 1u128 << k
            }
            ClassBody::Family(desc) => desc.pattern_count(mask) == 1u128 << k,
        }
    }

    /// `H↾Y`: the distinct patterns the class realizes on the ordered `subset`.
    pub fn restrict(&self, subset: &[usize]) -> Result<TraceSet> {
        let mask = self.ground.subset_mask(subset)?;
        let patterns = match &self.body {
            ClassBody::Explicit(bits) => bits.iter().map(|&t| gather(t, subset)).collect(),
            ClassBody::Family(desc) => {
                if self.pattern_count_mask(mask) > 1u128 << self.cap.min(63) {
                    return Err(Error::CapExceeded { size: subset.len(), cap: self.cap });
                }
                desc.patterns(subset)
            }
        };
        Ok(TraceSet::from_unsorted(subset.to_vec(), patterns))
    }

    /// True iff `H↾Y = 2^Y`.
    pub fn shatters(&self, subset: &[usize]) -> Result<bool> {
        let mask = self.ground.subset_mask(subset)?;
        Ok(self.shatters_mask(mask))
    }

    /// `2^X \ H` as an explicit class.
    pub fn complement(&self) -> Result<HypothesisClass> {
        self.check_cap()?;
        let bits = self.trace_bits()?;
        let total = 1u64 << self.ground.size();
        let mut out = Vec::with_capacity((total as usize).saturating_sub(bits.len()));
        let mut present = bits.iter().peekable();
        for t in 0..total {
            if present.peek() == Some(&&t) {
                present.next();
            } else {
                out.push(t);
            }
        }
        Ok(Self::from_sorted_bits(self.ground.clone(), out, self.cap))
    }

    /// `H_f`: the traces extending `assign`, as an explicit class.
    pub fn conditioned(&self, assign: &PartialAssignment) -> Result<HypothesisClass> {
        assign.validate(&self.ground)?;
        if assign.is_empty() {
            return Ok(self.clone());
        }
        let dom = assign.domain_mask();
        let val = assign.value_mask();
        let bits = self
            .trace_bits()?
            .iter()
            .copied()
            .filter(|&t| t & dom == val)
            .collect();
        Ok(Self::from_sorted_bits(self.ground.clone(), bits, self.cap))
    }

    fn check_same_ground(&self, other: &HypothesisClass) -> Result<()> {
        if self.ground.size() != other.ground.size() {
            return Err(Error::GroundMismatch { left: self.ground.size(), right: other.ground.size() });
        }
        Ok(())
    }

    pub fn union(&self, other: &HypothesisClass) -> Result<HypothesisClass> {
        self.check_same_ground(other)?;
        let mut bits = self.trace_bits()?.into_owned();
        bits.extend_from_slice(&other.trace_bits()?);
        bits.sort_unstable();
        bits.dedup();
        Ok(Self::from_sorted_bits(self.ground.clone(), bits, self.cap))
    }

    pub fn intersection(&self, other: &HypothesisClass) -> Result<HypothesisClass> {
        self.check_same_ground(other)?;
        let theirs = other.trace_bits()?;
        let bits = self
            .trace_bits()?
            .iter()
            .copied()
            .filter(|t| theirs.binary_search(t).is_ok())
            .collect();
        Ok(Self::from_sorted_bits(self.ground.clone(), bits, self.cap))
    }

    /// True when every trace of `self` is in `other`.
    pub fn is_subset_of(&self, other: &HypothesisClass) -> Result<bool> {
        self.check_same_ground(other)?;
        let theirs = other.trace_bits()?;
        Ok(self.trace_bits()?.iter().all(|t| theirs.binary_search(t).is_ok()))
    }
}

fn count_distinct_masked(bits: &[u64], mask: u64) -> usize {
    if mask == 0 {
        return usize::from(!bits.is_empty());
    }
    let mut scratch: Vec<u64> = bits.iter().map(|&t| t & mask).collect();
    scratch.sort_unstable();
    scratch.dedup();
    scratch.len()
}

/// Free-function form of [`HypothesisClass::restrict`].
pub fn restrict(class: &HypothesisClass, subset: &[usize]) -> Result<TraceSet> {
    class.restrict(subset)
}

/// Free-function form of [`HypothesisClass::shatters`].
pub fn shatters(class: &HypothesisClass, subset: &[usize]) -> Result<bool> {
    class.shatters(subset)
}

/// Free-function form of [`HypothesisClass::complement`].
pub fn complement(class: &HypothesisClass) -> Result<HypothesisClass> {
    class.complement()
}

/// Free-function form of [`HypothesisClass::conditioned`].
pub fn conditioned_class(class: &HypothesisClass, assign: &PartialAssignment) -> Result<HypothesisClass> {
    class.conditioned(assign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn class(n: usize, traces: &[&str]) -> HypothesisClass {
        let traces = traces.iter().map(|s| s.parse().unwrap()).collect();
        HypothesisClass::explicit(ground(n), traces).unwrap()
    }

    #[test]
    fn ground_bounds() {
        assert!(GroundSet::new(0).is_err());
        assert!(GroundSet::new(64).is_ok());
        assert!(GroundSet::new(65).is_err());
        let g = GroundSet::with_labels(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.label(1), "b");
        assert!(GroundSet::with_labels(vec!["a".into(), "a".into()]).is_err());
    }

    #[test]
    fn bitstring_roundtrip_and_errors() {
        let b: BitString = "0110".parse().unwrap();
        assert_eq!(b.width(), 4);
        assert!(!b.get(0) && b.get(1) && b.get(2) && !b.get(3));
        assert_eq!(b.to_string(), "0110");
        assert!("01x".parse::<BitString>().is_err());
        assert!(BitString::new(0b100, 2).is_err());
    }

    #[test]
    fn explicit_rejects_bad_traces() {
        let g = ground(3);
        let err = HypothesisClass::explicit(g.clone(), vec!["01".parse().unwrap()]).unwrap_err();
        assert_eq!(err, Error::WidthMismatch { expected: 3, found: 2 });
        let dup = vec!["010".parse().unwrap(), "010".parse().unwrap()];
        assert!(matches!(HypothesisClass::explicit(g, dup), Err(Error::DuplicateTrace(_))));
    }

    #[test]
    fn restrict_to_empty_subset() {
        let h = class(3, &["101", "011"]);
        let r = h.restrict(&[]).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r.is_full());
        let empty = class(3, &[]);
        assert_eq!(empty.restrict(&[]).unwrap().len(), 0);
        assert!(!empty.shatters(&[]).unwrap());
    }

    #[test]
    fn restrict_respects_domain_order() {
        let h = class(3, &["100"]);
        let r = h.restrict(&[2, 0]).unwrap();
        assert!(r.contains(&"01".parse().unwrap()));
        assert!(!r.contains(&"10".parse().unwrap()));
    }

    #[test]
    fn restrict_rejects_invalid_subsets() {
        let h = class(3, &["100"]);
        assert!(matches!(h.restrict(&[0, 0]), Err(Error::InvalidSubset(_))));
        assert!(matches!(h.restrict(&[3]), Err(Error::InvalidSubset(_))));
        assert!(matches!(h.shatters(&[5]), Err(Error::InvalidSubset(_))));
    }

    #[test]
    fn complement_counts() {
        let h = class(3, &["111"]);
        let c = h.complement().unwrap();
        assert_eq!(c.len(), 7);
        assert_eq!(c.complement().unwrap(), h);
        let empty = class(3, &[]);
        assert_eq!(empty.complement().unwrap().len(), 8);
    }

    #[test]
    fn complement_respects_cap() {
        let h = HypothesisClass::from_bits(ground(30), vec![0]).unwrap();
        assert_eq!(h.complement().unwrap_err(), Error::CapExceeded { size: 30, cap: DEFAULT_CAP });
        let h = h.with_cap(4);
        assert_eq!(h.complement().unwrap_err(), Error::CapExceeded { size: 30, cap: 4 });
    }

    #[test]
    fn conditioning() {
        let h = class(2, &["00", "01", "10", "11"]);
        let a: PartialAssignment = "0=1".parse().unwrap();
        let c = h.conditioned(&a).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.is_subset_of(&h).unwrap());
        assert_eq!(h.conditioned(&PartialAssignment::new()).unwrap(), h);
        let bad: PartialAssignment = "2=1".parse().unwrap();
        assert!(matches!(h.conditioned(&bad), Err(Error::InvalidAssignment(_))));
    }

    #[test]
    fn assignment_parse_and_display() {
        let a: PartialAssignment = "{3=1, 0=0}".parse().unwrap();
        assert_eq!(a.to_string(), "{0=0,3=1}");
        assert!("1=1,1=0".parse::<PartialAssignment>().is_err());
        assert!("1=2".parse::<PartialAssignment>().is_err());
        assert!("".parse::<PartialAssignment>().unwrap().is_empty());
        let wider = a.extend(&[1, 2], &"10".parse().unwrap()).unwrap();
        assert!(a.is_subset_of(&wider));
        assert_eq!(wider.get(1), Some(true));
        assert!(a.extend(&[0], &"1".parse().unwrap()).is_err());
    }

    #[test]
    fn sample_prefix_validation_and_completion() {
        let g = ground(5);
        assert!(SamplePrefix::new(vec![1, 1], &g).is_err());
        assert!(SamplePrefix::new(vec![5], &g).is_err());
        let p = SamplePrefix::new(vec![3, 1], &g).unwrap();
        assert_eq!(p.completed(&g).as_slice(), &[3, 1, 0, 2, 4]);
        assert_eq!(p.window(1).unwrap(), &[3]);
        assert!(p.window(3).is_err());
    }

    #[test]
    fn trace_set_as_class_over_empty_domain() {
        let h = class(2, &["01"]);
        let r = h.restrict(&[]).unwrap();
        let c = r.as_class().unwrap();
        assert!(c.shatters(&[]).unwrap());
    }

    #[test]
    fn union_and_intersection() {
        let a = class(2, &["00", "01"]);
        let b = class(2, &["01", "11"]);
        assert_eq!(a.union(&b).unwrap().len(), 3);
        assert_eq!(a.intersection(&b).unwrap().len(), 1);
        let c = class(3, &["000"]);
        assert!(matches!(a.union(&c), Err(Error::GroundMismatch { .. })));
    }
}
