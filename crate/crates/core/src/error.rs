use thiserror::Error;

/// Errors raised across the toolkit.
///
/// The mathematical variants (`SpanViolation`, `SingularBasis`, `ZeroDeterminant`,
/// `NotIdempotent`, `NotEigen`, `TheoremViolation`) mean an exact check disagreed with
/// the representation theory; they are never expected on correct input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("group parameter mismatch: (r,n)=({0},{1}) vs ({2},{3})")]
    ParameterMismatch(u32, usize, u32, usize),
    #[error("resource cap exceeded: {what} = {value} > {cap}")]
    CapExceeded { what: &'static str, value: u128, cap: u128 },
    #[error("total degree {degree} exceeds the bound {bound}")]
    DegreeBound { degree: u32, bound: u32 },
    #[error("tableau is not standard: {0}")]
    NotStandard(String),
    #[error("malformed input: {0}")]
    InvalidInput(String),
    #[error("tableaux have different shapes")]
    ShapeMismatch,
    #[error("higher Specht polynomial vanished for S={s}, T={t}")]
    ZeroResult { s: String, t: String },
    #[error("group image left the span of the basis (shape {0})")]
    SpanViolation(String),
    #[error("basis polynomials are linearly dependent (shape {0})")]
    SingularBasis(String),
    #[error("determinant vanished at {attempts} generic points")]
    ZeroDeterminant { attempts: usize },
    #[error("idempotent identity failed: {0}")]
    NotIdempotent(String),
    #[error("idempotent image is not proportional: {0}")]
    NotEigen(String),
    #[error("operator image contradicts the isomorphic-copy statement: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
