use thiserror::Error;

use crate::poly::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no exact quotient exists over the integers")]
    NotDivisible,
    #[error("variable `{0}` is not one of the polynomial's variables")]
    UnknownVariable(Var),
    #[error("variables do not match: {0}")]
    VarMismatch(String),
    #[error("negative index {0} is not allowed here")]
    NegativeIndex(i64),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("trace is not symmetric under s <-> 1/s in u-degree {u_degree}")]
    NotSymmetric { u_degree: u32 },
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("malformed polynomial encoding: {0}")]
    Decode(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
