use alloc::string::String;

/// Errors raised by geometric, model and query operations.
///
/// Check failures (an invalid model, a failed axiom) are never errors; they
/// come back as report entries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("spatial axis {axis} out of range for dimension {dimension}")]
    AxisOutOfRange { axis: usize, dimension: usize },
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
    #[error("duplicate scenario `{0}`")]
    DuplicateScenario(String),
    #[error("operation needs two distinct scenarios, got `{0}` twice")]
    SameScenario(String),
    #[error("points are not strictly causally ordered")]
    NotStrictlyOrdered,
    #[error("operation needs an explicit finite scenario set; use the representative form instead")]
    GeneratorMode,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no prior choice witness found below the chain")]
    NoPcpWitness,
    #[error("grid has {points} points, more than the limit of {limit}")]
    GridTooLarge { points: u128, limit: u128 },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
