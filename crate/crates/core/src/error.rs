use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range for {what} of length {len}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },

    #[error("drop_unit precondition violated: {0}")]
    DropUnit(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("{what} guard exceeded: {size} > {limit}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid pretzel spec: {0}")]
    InvalidSpec(String),

    #[error("order {order} out of range 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },

    #[error("inexact division: {numerator} / {denominator}")]
    InexactDivision {
        numerator: String,
        denominator: String,
    },

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("evaluation at t = 0 is undefined for Laurent polynomials")]
    EvalAtZero,

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
