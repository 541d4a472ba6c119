use thiserror::Error;

/// Errors raised by gyrogroup construction and graph analysis.
#[derive(Debug, Error)]
pub enum Error {
    #[error("G(n) is defined only for n >= 3 (got n = {0})")]
    OrderParameterTooSmall(u32),
    #[error("empty Cayley table")]
    EmptyTable,
    #[error("Cayley table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("Cayley table entry ({row}, {col}) = {value} is outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: i64,
        order: usize,
    },
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("no left identity row found")]
    NoLeftIdentity,
    #[error("element {0} is not a left identity")]
    NotLeftIdentity(usize),
    #[error("element {element} is outside 0..{order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("element {0} has no left inverse")]
    MissingLeftInverse(usize),
    #[error("power exponent must be at least 1")]
    ZeroExponent,
    #[error("vertex {vertex} is outside 0..{order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{what}: order {order} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        order: usize,
        bound: usize,
    },
    #[error("enumeration of {needed} subsets exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix has a negative entry")]
    NegativeEntry,
    #[error("power iteration did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
