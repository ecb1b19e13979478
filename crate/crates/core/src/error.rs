use thiserror::Error;

/// Errors raised by the library. Every variant names the precondition that failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size must be between 1 and {max}, got {size}")]
    BadGround { size: usize, max: usize },

    #[error("bad ground labels: {0}")]
    BadLabels(String),

    #[error("trace width {found} does not match ground size {expected}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("duplicate trace {0} in explicit class")]
    DuplicateTrace(String),

    #[error("materializing a class over {size} elements exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),

    #[error("invalid sample prefix: {0}")]
    BadPrefix(String),

    #[error("bad pattern: {0}")]
    BadPattern(String),

    #[error("bad family descriptor: {0}")]
    BadDescriptor(String),

    #[error("value out of range: {0}")]
    BadRange(String),

    #[error("classes live on different ground sets ({left} vs {right})")]
    GroundMismatch { left: usize, right: usize },

    #[error("VC dimension is undefined for the empty class")]
    EmptyClass,

    #[error("no set of size {m} is shattered by the class")]
    NotShatterable { m: usize },

    #[error("no crucial experiment: the class shatters every subset of the free coordinates")]
    NoCrucialExperiment,

    #[error("conditioning class has zero co-surprise")]
    ZeroCondition,

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("parameter set is empty")]
    EmptyParameterSet,
}

pub type Result<T> = std::result::Result<T, Error>;
