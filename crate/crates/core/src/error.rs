use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("degree r = {r} out of range for n = {n} (need 1 <= r <= n)")]
    DegreeOutOfRange { n: usize, r: usize },
    #[error("parameters out of range: n = {n}, r = {r} (need {requirement})")]
    ParameterOutOfRange {
        n: usize,
        r: usize,
        requirement: &'static str,
    },
    #[error("group elements have different parameters: {0}")]
    ParameterMismatch(String),
    #[error("invalid permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("matrix is not monomial: {0}")]
    NotMonomial(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix does not stabilize the polynomial")]
    NotStabilizer,
    #[error("entry {0} is zero")]
    ZeroEntry(usize),
    #[error("weight is not dominant: {0:?}")]
    NotDominant(Vec<i64>),
    #[error("malformed tableau: {0}")]
    MalformedShape(String),
    #[error("tableau entry {entry} outside 1..={max}")]
    EntryOutOfRange { entry: u32, max: usize },
    #[error("shape has {rows} rows but entries are bounded by {max}")]
    TooManyRows { rows: usize, max: usize },
    #[error("canonical filling of shape {0:?} is not semistandard")]
    FillingNotSemistandard(Vec<usize>),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("negative exponent at position {position}")]
    ExponentNegative { position: usize },
}
