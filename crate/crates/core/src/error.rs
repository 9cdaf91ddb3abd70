use thiserror::Error;

/// Errors raised while building or evaluating solvable systems.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A polynomial-family or system parameter lies outside its admissible range.
    #[error("parameter `{name}` = {value} is outside its domain: {requirement}")]
    ParameterDomain {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    /// Parameters are valid individually but the system has no normalizable bound states.
    #[error("not a bound-state configuration: {0}")]
    Admissibility(String),

    #[error("derivative order {0} is not supported (expected 1 or 2)")]
    UnsupportedOrder(u32),

    #[error("Rodrigues reference is limited to n <= {max}, got n = {n}")]
    OracleRange { n: usize, max: usize },

    #[error("transformation branch `{0}` is declared but not implemented")]
    BranchNotImplemented(&'static str),

    #[error("sigma vanishes inside the domain of the transformation: {0}")]
    SingularTransformation(String),

    #[error("cannot express term in the potential basis: {0}")]
    DecompositionFailure(String),

    /// A point lies on or outside the open domain of the system.
    #[error("r = {r} is outside the open domain ({left}, {right})")]
    Domain { r: f64, left: f64, right: f64 },

    #[error("level n = {0} is not available for this system")]
    LevelUnavailable(usize),

    #[error("potential is not finite at grid node r = {0}; shift the grid")]
    GridPlacement(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("no bound state for n = {n}: {reason}")]
    NoBoundState { n: usize, reason: String },

    #[error("wavefunction tail did not decay below the truncation threshold before r = {0}")]
    TailTruncation(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
