//! Bernoulli likelihood counterexamples: non-unique and non-existent maximum
//! likelihood estimators, and the tails-probability threshold.
//!
//! This is the only floating-point module in the crate.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flip {
    Heads,
    Tails,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoinData {
    flips: Vec<Flip>,
}

impl CoinData {
    pub fn new(flips: Vec<Flip>) -> Self {
        CoinData { flips }
    }

    pub fn flips(&self) -> &[Flip] {
        &self.flips
    }

    pub fn len(&self) -> usize {
        self.flips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flips.is_empty()
    }

    pub fn heads(&self) -> usize {
        self.flips.iter().filter(|&&f| f == Flip::Heads).count()
    }

    /// `S/n`, the unconstrained maximizer on `[0,1]` (1/2 for no data, where every θ ties).
    pub fn frequency(&self) -> f64 {
        if self.flips.is_empty() {
            0.5
        } else {
            self.heads() as f64 / self.len() as f64
        }
    }
}

/// Parses a string of `H`/`T` characters (case-insensitive; commas and spaces ignored).
impl FromStr for CoinData {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut flips = Vec::new();
        for c in s.chars().filter(|c| !c.is_whitespace() && *c != ',') {
            flips.push(match c.to_ascii_uppercase() {
                'H' => Flip::Heads,
                'T' => Flip::Tails,
                other => return Err(Error::BadParameter(format!("coin flip must be H or T, got {other:?}"))),
            });
        }
        Ok(CoinData { flips })
    }
}

impl fmt::Display for CoinData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for flip in &self.flips {
            f.write_str(if *flip == Flip::Heads { "H" } else { "T" })?;
        }
        Ok(())
    }
}

fn check_probability(theta: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&theta) {
        return Err(Error::BadParameter(format!("probability must lie in [0,1], got {theta}")));
    }
    Ok(())
}

/// `θ^S (1−θ)^(n−S)`.
pub fn likelihood(theta: f64, data: &CoinData) -> Result<f64> {
    check_probability(theta)?;
    let heads = data.heads() as i32;
    let tails = data.len() as i32 - heads;
    Ok(theta.powi(heads) * (1.0 - theta).powi(tails))
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParameterSet {
    Finite(Vec<f64>),
    /// `[lo, hi]` minus `excluded`, searched on a grid of spacing `step`.
    IntervalWithExclusions { lo: f64, hi: f64, excluded: Vec<f64>, step: f64 },
}

impl ParameterSet {
    pub fn validate(&self) -> Result<()> {
        match self {
            ParameterSet::Finite(thetas) => {
                if thetas.is_empty() {
                    return Err(Error::EmptyParameterSet);
                }
                thetas.iter().try_for_each(|&t| check_probability(t))
            }
            ParameterSet::IntervalWithExclusions { lo, hi, excluded, step } => {
                check_probability(*lo)?;
                check_probability(*hi)?;
                if lo > hi {
                    return Err(Error::BadParameter(format!("interval bounds reversed: {lo} > {hi}")));
                }
                if step.is_nan() || *step <= 0.0 {
                    return Err(Error::BadParameter(format!("grid step must be positive, got {step}")));
                }
                excluded.iter().try_for_each(|&t| check_probability(t))?;
                if lo == hi && excluded.contains(lo) {
                    return Err(Error::EmptyParameterSet);
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MleReport {
    /// Exact maximum for finite sets; best grid value for intervals.
    pub supremum: f64,
    pub attained: bool,
    /// Every maximizer for finite sets; the analytic maximizer for intervals when attained.
    pub argmax: Option<Vec<f64>>,
    /// Maximizer of the likelihood over the closed hull `[lo, hi]` (intervals only).
    pub analytic_maximizer: Option<f64>,
    /// Whether that maximizer is one of the excluded points.
    pub maximizer_excluded: bool,
}

/// Points closer than this are treated as the same parameter value.
const SAME_POINT: f64 = 1e-12;

fn is_excluded(theta: f64, excluded: &[f64]) -> bool {
    excluded.iter().any(|&x| (x - theta).abs() <= SAME_POINT)
}

/// Maximum likelihood search over a parameter set.
///
/// For intervals, attainment is decided analytically: the log-likelihood is
/// concave, so the supremum over `[lo, hi]` sits at `S/n` clamped into the
/// interval, and it is attained iff that point is not excluded.
pub fn mle_search(params: &ParameterSet, data: &CoinData) -> Result<MleReport> {
    params.validate()?;
    match params {
        ParameterSet::Finite(thetas) => {
            let values = thetas.iter().map(|&t| likelihood(t, data)).collect::<Result<Vec<_>>>()?;
            let best = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let mut argmax: Vec<f64> = thetas
                .iter()
                .zip(&values)
                .filter(|(_, &v)| v == best)
                .map(|(&t, _)| t)
                .collect();
            argmax.sort_by(|a, b| a.total_cmp(b));
            argmax.dedup();
            Ok(MleReport {
                supremum: best,
                attained: true,
                argmax: Some(argmax),
                analytic_maximizer: None,
                maximizer_excluded: false,
            })
        }
        ParameterSet::IntervalWithExclusions { lo, hi, excluded, step } => {
            let steps = ((hi - lo) / step).floor() as u64;
            let mut best = f64::NEG_INFINITY;
            for i in 0..=steps {
                let theta = (lo + i as f64 * step).min(*hi);
                if !is_excluded(theta, excluded) {
                    best = best.max(likelihood(theta, data)?);
                }
            }
            if !is_excluded(*hi, excluded) {
                best = best.max(likelihood(*hi, data)?);
            }
            let maximizer = data.frequency().clamp(*lo, *hi);
            let maximizer_excluded = is_excluded(maximizer, excluded);
            Ok(MleReport {
                supremum: best,
                attained: !maximizer_excluded,
                argmax: (!maximizer_excluded).then(|| vec![maximizer]),
                analytic_maximizer: Some(maximizer),
                maximizer_excluded,
            })
        }
    }
}

/// `(1−ε)^(1/n)`: any heads probability above it makes at least one tails in
/// `n` flips less likely than `ε`.
pub fn tails_threshold(epsilon: f64, n: usize) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::BadParameter(format!("epsilon must lie in (0,1), got {epsilon}")));
    }
    if n == 0 {
        return Err(Error::BadParameter("number of flips must be at least 1".into()));
    }
    Ok((1.0 - epsilon).powf(1.0 / n as f64))
}

/// `1 − p^n`.
pub fn prob_at_least_one_tails(p_heads: f64, n: usize) -> Result<f64> {
    check_probability(p_heads)?;
    Ok(1.0 - p_heads.powi(n as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ht() -> CoinData {
        "HT".parse().unwrap()
    }

    #[test]
    fn likelihood_examples() {
        assert_eq!(likelihood(0.5, &ht()).unwrap(), 0.25);
        assert_eq!(likelihood(0.0, &ht()).unwrap(), 0.0);
        assert_eq!(likelihood(1.0, &ht()).unwrap(), 0.0);
        assert_eq!(likelihood(1.0, &"HH".parse().unwrap()).unwrap(), 1.0);
        assert_eq!(likelihood(0.3, &CoinData::new(vec![])).unwrap(), 1.0);
        assert!(likelihood(1.5, &ht()).is_err());
        assert!("HX".parse::<CoinData>().is_err());
    }

    #[test]
    fn finite_mle_non_unique() {
        let r = mle_search(&ParameterSet::Finite(vec![0.0, 1.0]), &ht()).unwrap();
        assert_eq!(r.supremum, 0.0);
        assert!(r.attained);
        assert_eq!(r.argmax, Some(vec![0.0, 1.0]));
        let r = mle_search(&ParameterSet::Finite(vec![0.5]), &ht()).unwrap();
        assert_eq!(r.supremum, 0.25);
        assert_eq!(r.argmax, Some(vec![0.5]));
        assert_eq!(mle_search(&ParameterSet::Finite(vec![]), &ht()), Err(Error::EmptyParameterSet));
    }

    #[test]
    fn interval_mle_not_attained() {
        let params = ParameterSet::IntervalWithExclusions { lo: 0.0, hi: 1.0, excluded: vec![0.5], step: 1e-4 };
        let r = mle_search(&params, &ht()).unwrap();
        assert!(!r.attained);
        assert!(r.maximizer_excluded);
        assert!(r.supremum >= 0.25 - 1e-4 && r.supremum < 0.25, "{}", r.supremum);
        assert_eq!(r.argmax, None);
    }

    #[test]
    fn interval_mle_attained_at_clamped_point() {
        let params = ParameterSet::IntervalWithExclusions { lo: 0.0, hi: 0.3, excluded: vec![0.5], step: 1e-3 };
        let r = mle_search(&params, &ht()).unwrap();
        assert!(r.attained);
        assert_eq!(r.analytic_maximizer, Some(0.3));
        assert!((r.supremum - 0.21).abs() < 1e-12);
    }

    #[test]
    fn interval_validation() {
        let bad = |lo, hi, step| ParameterSet::IntervalWithExclusions { lo, hi, excluded: vec![], step };
        assert!(mle_search(&bad(0.6, 0.4, 0.1), &ht()).is_err());
        assert!(mle_search(&bad(0.0, 1.0, 0.0), &ht()).is_err());
        assert!(mle_search(&bad(0.0, 1.1, 0.1), &ht()).is_err());
        let point = ParameterSet::IntervalWithExclusions { lo: 0.5, hi: 0.5, excluded: vec![0.5], step: 0.1 };
        assert_eq!(mle_search(&point, &ht()), Err(Error::EmptyParameterSet));
    }

    #[test]
    fn tails_threshold_values() {
        assert!((tails_threshold(0.19, 1).unwrap() - 0.81).abs() < 1e-15);
        assert!((tails_threshold(0.05, 100).unwrap() - 0.999487).abs() < 1e-6);
        assert!(tails_threshold(0.0, 3).is_err());
        assert!(tails_threshold(0.5, 0).is_err());
        for &(eps, n) in &[(0.05, 100usize), (0.19, 1), (0.5, 7), (0.01, 1000)] {
            let t = tails_threshold(eps, n).unwrap();
            assert!(prob_at_least_one_tails(t + 1e-6, n).unwrap() < eps);
        }
    }
}
