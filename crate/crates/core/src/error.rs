use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system {series}{rank}")]
    InvalidRootSystem { series: String, rank: usize },
    #[error("Weyl group too large: rank {rank} exceeds cap {cap}")]
    RankCapExceeded { rank: usize, cap: usize },
    #[error("Weyl group too large: more than {limit} elements")]
    WeylGroupTooLarge { limit: usize },
    #[error("Weyl group index {index} out of range (|W| = {order})")]
    WeylIndexOutOfRange { index: usize, order: usize },
    #[error("weight has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight {0:?} is not dominant integral")]
    NotDominant(Vec<i64>),
    #[error("representation dimension {dim} exceeds cap {cap}")]
    DimensionCapExceeded { dim: String, cap: u64 },
    #[error("division by zero in Q(zeta_{q})")]
    ZeroDivision { q: u64 },
    #[error("cyclotomic number is not rational: {0}")]
    NotRational(String),
    #[error("torus element of order {order} does not divide modulus {q}")]
    OrderNotDividingModulus { order: u64, q: u64 },
    #[error("invalid subgroup data: {0}")]
    InvalidSubgroup(String),
    #[error("averaged character is not an integer: {0}")]
    NotAnInteger(String),
    #[error("averaged character {value} is outside [0, {dim}]")]
    OutOfRange { value: String, dim: String },
    #[error("backend mismatch at highest weight {lambda:?}: cr = {cr}, weight_sum = {weight_sum}")]
    BackendMismatch {
        lambda: Vec<i64>,
        cr: String,
        weight_sum: String,
    },
    #[error("tail nonvanishing: coefficient of z^{degree} is {value}")]
    TailNonvanishing { degree: usize, value: String },
    #[error("numerator not rational at degree {0}")]
    NumeratorNotRational(usize),
    #[error("numerator has non-integral coefficient {value} at degree {degree}")]
    NonIntegralNumerator { degree: usize, value: String },
    #[error("numerator degree {degree} is not below q(N+1) = {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("closed-form and truncated numerators differ at degree {degree}: {characters} vs {truncation}")]
    PathMismatch {
        degree: usize,
        characters: String,
        truncation: String,
    },
    #[error("window condition violated: residues {residues:?} have fewer than {needed} samples")]
    WindowConditionViolated { residues: Vec<u64>, needed: usize },
    #[error("window condition violated on string {string}: residues {residues:?} have fewer than {needed} samples")]
    FamilyWindowViolated {
        string: usize,
        residues: Vec<u64>,
        needed: usize,
    },
    #[error("inconsistent samples: n_{k} = {sampled} but the solved numerator predicts {predicted}")]
    InconsistentSamples {
        k: u64,
        sampled: String,
        predicted: String,
    },
    #[error("windows are not comparable: {0}")]
    IncompatibleWindows(String),
    #[error("singular linear system")]
    SingularSystem,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed or out-of-contract input.
    Input,
    /// An internal consistency check failed (backend mismatch, non-integral
    /// averages, nonvanishing tails).
    Contract,
    /// A sample window does not satisfy the residue-count condition.
    Window,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            WindowConditionViolated { .. } | FamilyWindowViolated { .. } => ErrorClass::Window,
            NotRational(_)
            | NotAnInteger(_)
            | OutOfRange { .. }
            | BackendMismatch { .. }
            | TailNonvanishing { .. }
            | NumeratorNotRational(_)
            | NonIntegralNumerator { .. }
            | DegreeBound { .. }
            | PathMismatch { .. }
            | InconsistentSamples { .. }
            | SingularSystem
            | ZeroDivision { .. } => ErrorClass::Contract,
            _ => ErrorClass::Input,
        }
    }
}
