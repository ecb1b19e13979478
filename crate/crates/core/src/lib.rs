//! Exact combinatorics of falsifiability over finite hypothesis classes.
//!
//! A hypothesis is a set of binary traces over a finite ground set. The crate
//! computes shattering, VC and Popper dimensions, growth functions, surprise and
//! co-surprise (as exact rationals), severe-surprise verdicts, adversarial
//! samples and falsifying selectors, plus a few Bernoulli likelihood demos.

pub mod dimensions;
pub mod error;
pub mod families;
pub mod model;
pub mod render;
pub mod sample_lab;
pub mod stats;
pub mod surprise;

pub use dimensions::{
    analytic_bound, growth_function, popper_dimension, popper_profile, sauer_bound, vc_dimension, GrowthTable,
    PopperResult, VcResult,
};
pub use error::{Error, Result};
pub use families::{expected_vc, make_family, FamilyDescriptor, FamilyKind};
pub use model::{
    BitString, ClassBody, GroundSet, HypothesisClass, PartialAssignment, Pattern, SamplePrefix, Trace, TraceSet, DEFAULT_CAP,
};
pub use sample_lab::{adversarial_sample, build_selector, surprise_trace, SelectorPlan};
pub use surprise::{Rational, SampleBound, SevereVerdict, SurpriseReport};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeExamples;
