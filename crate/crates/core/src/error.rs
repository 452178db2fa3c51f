use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is neither 0 nor a prime below 2^63")]
    InvalidField(u64),

    #[error("polynomials belong to different rings")]
    RingMismatch,

    #[error("monomials have {0} and {1} variables")]
    VariableCountMismatch(usize, usize),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("divisor list contains the zero polynomial (index {0})")]
    ZeroDivisor(usize),

    #[error("ideal has no nonzero generator")]
    ZeroIdeal,

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("coefficient not representable in the field: {0}")]
    Unrepresentable(String),

    #[error("quotient is not Artinian: no power of `{witness}` lies in the initial ideal")]
    NotArtinian { witness: String },

    #[error("ideal is not homogeneous")]
    NotHomogeneous,

    #[error("ideal is not contained in the maximal ideal of the origin")]
    NotInMaximalIdeal,

    #[error("quotient is not supported only at the origin")]
    NotLocal,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("module is not free of rank one: {0}")]
    NotFreeRankOne(String),
}
