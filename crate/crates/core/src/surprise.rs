//! Exact surprise, co-surprise, semi-measure and severe-surprise computations.
//!
//! Every value is an exact [`Rational`]. Along a sample `f`, only the set
//! `f([n])` matters, so all quantities reduce to pattern counts on that window.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::dimensions::growth_at;
use crate::error::{Error, Result};
use crate::families::{family, FamilyKind};
use crate::model::{elements_mask, HypothesisClass, PartialAssignment, Pattern, SamplePrefix};

pub type Rational = BigRational;

pub(crate) fn ratio(num: u128, log2_den: usize) -> Rational {
    Rational::new(BigInt::from(num), BigInt::one() << log2_den)
}

fn window_mask(class: &HypothesisClass, prefix: &SamplePrefix, n: usize) -> Result<u64> {
    prefix.check_ground(class.ground())?;
    Ok(elements_mask(prefix.window(n)?))
}

/// `μ_{f,n}(H) = |H↾f([n])| / 2^n`.
pub fn semi_measure(class: &HypothesisClass, prefix: &SamplePrefix, n: usize) -> Result<Rational> {
    let mask = window_mask(class, prefix, n)?;
    Ok(ratio(class.pattern_count_mask(mask), n))
}

/// `S(H,f,n) = 1 − μ_{f,n}(H)`.
pub fn surprise(class: &HypothesisClass, prefix: &SamplePrefix, n: usize) -> Result<Rational> {
    Ok(Rational::one() - semi_measure(class, prefix, n)?)
}

/// A crucial experiment exists at stage `n` iff some pattern on `f([n])` is excluded.
pub fn crucial_experiment(class: &HypothesisClass, prefix: &SamplePrefix, n: usize) -> Result<bool> {
    let mask = window_mask(class, prefix, n)?;
    Ok(n >= 128 || class.pattern_count_mask(mask) < 1u128 << n)
}

/// `S^co(H,f,n) = S(H^c,f,n)`.
pub fn co_surprise(class: &HypothesisClass, prefix: &SamplePrefix, n: usize) -> Result<Rational> {
    window_mask(class, prefix, n)?;
    surprise(&class.complement()?, prefix, n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SevereVerdict {
    pub epsilon: Rational,
    pub surprise: Rational,
    pub complement_surprise: Rational,
    /// `observed ∈ H↾f([n])`
    pub observed_compatible: bool,
    /// `S(H,f,n) > 1 − ε`
    pub exceeds_threshold: bool,
    /// `S(H,f,n) > S(H^c,f,n)`
    pub dominates_complement: bool,
    pub passed: bool,
}

fn check_epsilon(epsilon: &Rational) -> Result<()> {
    if !epsilon.is_positive() || *epsilon >= Rational::one() {
        return Err(Error::BadParameter(format!("epsilon must lie in (0,1), got {epsilon}")));
    }
    Ok(())
}

/// Severe-surprise verdict at level `epsilon` for the observed pattern on `f([n])`.
pub fn severe_surprise(
    class: &HypothesisClass,
    prefix: &SamplePrefix,
    n: usize,
    epsilon: &Rational,
    observed: &Pattern,
) -> Result<SevereVerdict> {
    check_epsilon(epsilon)?;
    if observed.width() != n {
        return Err(Error::BadPattern(format!(
            "observed pattern has width {}, expected {n}",
            observed.width()
        )));
    }
    let window = prefix.window(n)?.to_vec();
    prefix.check_ground(class.ground())?;
    let observed_compatible = class.restrict(&window)?.contains(observed);
    let s = surprise(class, prefix, n)?;
    let s_c = co_surprise(class, prefix, n)?;
    let exceeds_threshold = s > Rational::one() - epsilon;
    let dominates_complement = s > s_c;
    Ok(SevereVerdict {
        epsilon: epsilon.clone(),
        passed: observed_compatible && exceeds_threshold && dominates_complement,
        surprise: s,
        complement_surprise: s_c,
        observed_compatible,
        exceeds_threshold,
        dominates_complement,
    })
}

/// The cylinder `J_s = {h : h ⊇ s}` over the ground of `prefix`'s class, with `s` laid on `f([n])`.
pub fn cylinder_class(ground_size: usize, prefix: &SamplePrefix, n: usize, s: &Pattern) -> Result<HypothesisClass> {
    if s.width() != n {
        return Err(Error::BadPattern(format!("cylinder pattern has width {}, expected {n}", s.width())));
    }
    let full = family(FamilyKind::Full, ground_size)?;
    prefix.check_ground(full.ground())?;
    let assign = PartialAssignment::new().extend(prefix.window(n)?, s)?;
    full.conditioned(&assign)
}

/// `S^co(J_s, f, n)`, computed from the constructed cylinder and its complement.
pub fn cylinder_co_surprise(ground_size: usize, s: &Pattern, prefix: &SamplePrefix, n: usize) -> Result<Rational> {
    let cylinder = cylinder_class(ground_size, prefix, n, s)?;
    co_surprise(&cylinder, prefix, n)
}

/// `S^co(H ∩ J) / S^co(J)`.
pub fn conditional_co_surprise(
    class: &HypothesisClass,
    condition: &HypothesisClass,
    prefix: &SamplePrefix,
    n: usize,
) -> Result<Rational> {
    let denominator = co_surprise(condition, prefix, n)?;
    if denominator.is_zero() {
        return Err(Error::ZeroCondition);
    }
    let joint = class.intersection(condition)?;
    Ok(co_surprise(&joint, prefix, n)? / denominator)
}

/// `S(H^c,f,n) / S(H,f,n)`, or `None` when `S(H,f,n) = 0`.
pub fn surprise_ratio(class: &HypothesisClass, prefix: &SamplePrefix, n: usize) -> Result<Option<Rational>> {
    let s = surprise(class, prefix, n)?;
    if s.is_zero() {
        return Ok(None);
    }
    Ok(Some(co_surprise(class, prefix, n)? / s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleBound {
    Reached(usize),
    Unreachable,
}

/// Least `m ≥ 1` with `τ_H(m) / 2^m ≤ ε`, so that every injective prefix of
/// length `m` has `S(H,f,m) ≥ 1 − ε`.
pub fn epsilon_sample_bound(class: &HypothesisClass, epsilon: &Rational) -> Result<SampleBound> {
    check_epsilon(epsilon)?;
    for m in 1..=class.ground_size() {
        let tau = growth_at(class, m)?.value;
        if ratio(tau, m) <= *epsilon {
            return Ok(SampleBound::Reached(m));
        }
    }
    Ok(SampleBound::Unreachable)
}

/// Worst case of `μ_{f,m}(H)` over all injective samples, via the growth function.
pub fn worst_case_mu(class: &HypothesisClass, m: usize) -> Result<Rational> {
    Ok(ratio(growth_at(class, m)?.value, m))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurpriseReport {
    pub prefix_length: usize,
    pub mu: Rational,
    pub surprise: Rational,
    pub co_surprise: Rational,
    pub crucial_experiment: bool,
    pub severe: Option<SevereVerdict>,
}

pub fn surprise_report(class: &HypothesisClass, prefix: &SamplePrefix, n: usize) -> Result<SurpriseReport> {
    let mu = semi_measure(class, prefix, n)?;
    let s = Rational::one() - &mu;
    Ok(SurpriseReport {
        prefix_length: n,
        crucial_experiment: s.is_positive(),
        co_surprise: co_surprise(class, prefix, n)?,
        mu,
        surprise: s,
        severe: None,
    })
}
