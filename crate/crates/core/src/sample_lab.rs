//! Sample and selector construction: adversarial orders that postpone surprise,
//! selectors that force crucial experiments, and per-step surprise traces.

use crate::dimensions::{popper_dimension, Combinations, PopperResult};
use crate::error::{Error, Result};
use crate::model::{elements_mask, BitString, HypothesisClass, PartialAssignment, Pattern, SamplePrefix};
use crate::surprise::{surprise_report, SurpriseReport};

/// A sample that enumerates the lexicographically smallest shattered `m`-set
/// first, then every other element in ascending order.
///
/// Surprise along the result is zero for every prefix length `k ≤ m`.
pub fn adversarial_sample(class: &HypothesisClass, m: usize) -> Result<SamplePrefix> {
    let n = class.ground_size();
    if m > n {
        return Err(Error::NotShatterable { m });
    }
    let pool: Vec<usize> = (0..n).collect();
    let block = Combinations::new(&pool, m)
        .find(|c| class.shatters_mask(elements_mask(c)))
        .ok_or(Error::NotShatterable { m })?;
    SamplePrefix::new(block, class.ground()).map(|p| p.completed(class.ground()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectorStage {
    pub witness: Vec<usize>,
    pub popper_value: usize,
    /// Outcome on `witness` assumed when planning later stages.
    pub assumed_outcome: Pattern,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectorPlan {
    pub seed: PartialAssignment,
    pub stages: Vec<SelectorStage>,
    /// Seed elements (ascending), then each stage's witness in order.
    pub flattened_order: SamplePrefix,
}

impl SelectorPlan {
    /// The working assignment in force before stage `i` is executed.
    pub fn assignment_before(&self, i: usize) -> Result<PartialAssignment> {
        self.stages[..i]
            .iter()
            .try_fold(self.seed.clone(), |a, s| a.extend(&s.witness, &s.assumed_outcome))
    }
}

/// Builds a falsifying selector by repeated Popper-dimension witnesses.
///
/// After each stage the working assignment is extended by the outcome on the
/// witness that keeps the conditioned class largest (first such pattern in
/// ascending bit order), so the plan tracks the least informative outcome.
/// Planning stops after `max_stages`, when the free coordinates are all
/// shattered, or after an empty witness (the conditioned class is empty).
pub fn build_selector(class: &HypothesisClass, seed: &PartialAssignment, max_stages: usize) -> Result<SelectorPlan> {
    if max_stages == 0 {
        return Err(Error::BadRange("max_stages must be at least 1".into()));
    }
    seed.validate(class.ground())?;
    let mut working = seed.clone();
    let mut stages = Vec::new();
    while stages.len() < max_stages {
        let (value, witness) = match popper_dimension(class, &working)? {
            PopperResult::Finite { value, witness } => (value, witness),
            PopperResult::Unwitnessed if stages.is_empty() => return Err(Error::NoCrucialExperiment),
            PopperResult::Unwitnessed => break,
        };
        let conditioned = class.conditioned(&working)?;
        let restricted = conditioned.restrict(&witness)?;
        let width = witness.len();
        let mut best = (0u128, BitString::new(0, width)?);
        for p in 0..(1u64 << width) {
            let pattern = BitString::new(p, width)?;
            if !restricted.contains(&pattern) {
                continue;
            }
            let size = conditioned.conditioned(&PartialAssignment::new().extend(&witness, &pattern)?)?.len();
            if size > best.0 {
                best = (size, pattern);
            }
        }
        let outcome = best.1;
        working = working.extend(&witness, &outcome)?;
        let empty = witness.is_empty();
        stages.push(SelectorStage { witness, popper_value: value, assumed_outcome: outcome });
        if empty {
            break;
        }
    }
    let mut order = seed.domain();
    order.extend(stages.iter().flat_map(|s| s.witness.iter().copied()));
    let flattened_order = SamplePrefix::new(order, class.ground())?;
    Ok(SelectorPlan { seed: seed.clone(), stages, flattened_order })
}

/// Surprise reports for every prefix length `0..=up_to`.
pub fn surprise_trace(class: &HypothesisClass, prefix: &SamplePrefix, up_to: usize) -> Result<Vec<SurpriseReport>> {
    prefix.window(up_to)?;
    (0..=up_to).map(|k| surprise_report(class, prefix, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family, FamilyKind};
    use crate::surprise::Rational;
    use num_traits::Zero;

    #[test]
    fn adversarial_examples() {
        let full = family(FamilyKind::Full, 5).unwrap();
        assert_eq!(adversarial_sample(&full, 3).unwrap().as_slice(), &[0, 1, 2, 3, 4]);
        let ez = family(FamilyKind::EvenZero, 6).unwrap();
        assert_eq!(adversarial_sample(&ez, 3).unwrap().as_slice(), &[1, 3, 5, 0, 2, 4]);
        let heads = family(FamilyKind::AllHeads, 4).unwrap();
        assert_eq!(adversarial_sample(&heads, 1), Err(Error::NotShatterable { m: 1 }));
        assert_eq!(adversarial_sample(&full, 6), Err(Error::NotShatterable { m: 6 }));
        assert_eq!(adversarial_sample(&heads, 0).unwrap().as_slice(), &[0, 1, 2, 3]);
    }

    #[test]
    fn adversarial_trace_for_even_zero() {
        let ez = family(FamilyKind::EvenZero, 6).unwrap();
        let p = adversarial_sample(&ez, 3).unwrap();
        let trace = surprise_trace(&ez, &p, 4).unwrap();
        let s: Vec<Rational> = trace.iter().map(|r| r.surprise.clone()).collect();
        assert!(s[..4].iter().all(Zero::is_zero));
        assert_eq!(s[4], Rational::new(1.into(), 2.into()));
    }

    #[test]
    fn selector_even_zero() {
        let ez = family(FamilyKind::EvenZero, 6).unwrap();
        let plan = build_selector(&ez, &PartialAssignment::new(), 3).unwrap();
        let witnesses: Vec<Vec<usize>> = plan.stages.iter().map(|s| s.witness.clone()).collect();
        assert_eq!(witnesses, vec![vec![0], vec![2], vec![4]]);
        assert!(plan.stages.iter().all(|s| s.popper_value == 1));
        assert!(plan.stages.iter().all(|s| s.assumed_outcome.to_string() == "0"));
        assert_eq!(plan.flattened_order.as_slice(), &[0, 2, 4]);
        // more stages than needed: stops once only odd coordinates remain
        let plan = build_selector(&ez, &PartialAssignment::new(), 10).unwrap();
        assert_eq!(plan.stages.len(), 3);
    }

    #[test]
    fn selector_edge_cases() {
        let full = family(FamilyKind::Full, 4).unwrap();
        assert_eq!(build_selector(&full, &PartialAssignment::new(), 3), Err(Error::NoCrucialExperiment));
        let empty = family(FamilyKind::Empty, 4).unwrap();
        let plan = build_selector(&empty, &PartialAssignment::new(), 5).unwrap();
        assert_eq!(plan.stages.len(), 1);
        assert_eq!(plan.stages[0].witness, Vec::<usize>::new());
        assert_eq!(plan.stages[0].popper_value, 0);
        assert!(matches!(build_selector(&empty, &PartialAssignment::new(), 0), Err(Error::BadRange(_))));
    }

    #[test]
    fn seeded_selector_starts_with_seed() {
        let t = family(FamilyKind::Threshold, 6).unwrap();
        let seed: PartialAssignment = "3=1".parse().unwrap();
        let plan = build_selector(&t, &seed, 4).unwrap();
        assert_eq!(plan.flattened_order.as_slice()[0], 3);
        for (i, stage) in plan.stages.iter().enumerate() {
            let before = plan.assignment_before(i).unwrap();
            assert!(stage.witness.iter().all(|e| before.get(*e).is_none()));
            let conditioned = t.conditioned(&before).unwrap();
            assert!(!conditioned.shatters(&stage.witness).unwrap());
        }
    }

    #[test]
    fn trace_examples() {
        let heads = family(FamilyKind::AllHeads, 5).unwrap();
        let p = SamplePrefix::identity(heads.ground());
        let s: Vec<String> = surprise_trace(&heads, &p, 3).unwrap().iter().map(|r| r.surprise.to_string()).collect();
        assert_eq!(s, vec!["0", "1/2", "3/4", "7/8"]);
        let full = family(FamilyKind::Full, 5).unwrap();
        assert!(surprise_trace(&full, &p, 5).unwrap().iter().all(|r| r.surprise.is_zero()));
        assert!(matches!(surprise_trace(&full, &p, 6), Err(Error::BadPrefix(_))));
    }
}
