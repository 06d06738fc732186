use thiserror::Error;

use crate::ring::Side;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("variable {letter}{index} out of range for {nvars} variables")]
    VariableOutOfRange { letter: char, index: usize, nvars: usize },

    #[error("division by zero in coefficient literal at position {pos}")]
    DivisionByZero { pos: usize },

    #[error("number of variables differs: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },

    #[error("expected a {expected} polynomial, got a {found} one")]
    SideMismatch { expected: Side, found: Side },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("expected a nonzero linear form")]
    NotLinear,

    #[error("polynomial must be nonzero")]
    ZeroPolynomial,

    #[error("target degree {target} is smaller than the degree {degree} of the polynomial")]
    DegreeTooSmall { target: u32, degree: u32 },

    #[error("operator {index} has order {order}, at least 2 is required")]
    OrderTooLow { index: usize, order: u32 },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
