use alloc::string::String;

/// Errors raised by distribution construction, descriptor evaluation and
/// the analysis routines.
///
/// Component indices carried by errors are 1-based.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("a distribution needs at least 2 components, got {len}")]
    Length { len: usize },

    #[error("component {index} has value {value}, outside [0, 1]")]
    Range { index: usize, value: f64 },

    #[error("components sum to {sum}, expected 1")]
    Sum { sum: f64 },

    #[error("index {index} outside 1..={n}")]
    Index { index: usize, n: usize },

    #[error("distributions have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("parameter {name} = {value} outside [{low}, {high}]")]
    Parameter {
        name: &'static str,
        value: f64,
        low: f64,
        high: f64,
    },

    #[error("invalid argument: {0}")]
    Argument(&'static str),

    #[error("generator precondition violated: {0}")]
    Generator(GeneratorFailure),

    #[error("malformed descriptor at column {column}: {message}")]
    Descriptor { column: usize, message: String },

    #[error("mixture weights sum to {sum}, expected 1")]
    Weight { sum: f64 },

    #[error("mixture weight {weight} outside [0, 1]")]
    WeightRange { weight: f64 },

    #[error("mixture has no components")]
    EmptyMixture,

    #[error("descriptor depends on the distribution; a context distribution is required")]
    ContextRequired,

    #[error("value {p} is not a component of the context distribution")]
    ContextMismatch { p: f64 },

    #[error("operation requires a descriptor that claims pd-independence")]
    IndependenceRequired,

    #[error("operation requires a descriptor that claims to be a negator")]
    NegatorRequired,

    #[error("output components sum to {sum}; descriptor is internally inconsistent")]
    Inconsistent { sum: f64 },

    #[error("iteration would evaluate {requested} components, limit is {limit}")]
    IterationBudget { requested: usize, limit: usize },
}

/// Which part of the generator contract `f(p_i) >= 0, sum f(p_i) > 0` failed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneratorFailure {
    /// `f(p_index)` is negative or not finite.
    Negative { index: usize, value: f64 },
    /// The generator values sum to zero (or a negative number).
    NonPositiveSum { sum: f64 },
}

impl core::fmt::Display for GeneratorFailure {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GeneratorFailure::Negative { index, value } => {
                write!(f, "f(p_{index}) = {value} is not a non-negative number")
            }
            GeneratorFailure::NonPositiveSum { sum } => {
                write!(f, "generator values sum to {sum}, must be positive")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
