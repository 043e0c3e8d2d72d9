use thiserror::Error;

/// Error type shared by the algebra modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("invalid ring declaration: {0}")]
    InvalidRing(String),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("monomial quotient undefined: not a divisor")]
    MonomialNotDivisible,
    #[error("expected univariate input (at most one variable in the combined support)")]
    MultivariateInput,
    #[error("variable index {index} out of range for arity {arity}")]
    VariableIndex { index: usize, arity: usize },
    #[error("division requires a nonempty divisor sequence")]
    EmptyDivisorSet,
    #[error("ideal must have at least one nonzero generator")]
    EmptyIdeal,
    #[error("not a Groebner basis: S-polynomial of elements {i} and {j} has nonzero normal form")]
    NotGroebnerBasis { i: usize, j: usize },
    #[error("basis must be reduced")]
    BasisNotReduced,
    #[error("kept variables must form a suffix of the ring's variable sequence")]
    NotASuffix,
    #[error("basis is not triangular: {0}")]
    NonTriangular(String),
    #[error("system is not zero-dimensional: {0}")]
    NotZeroDimensional(String),
    #[error("width must be positive")]
    InvalidWidth,
    #[error("invalid interval: lower endpoint exceeds upper endpoint")]
    InvalidInterval,
    #[error("box does not isolate a solution of the system")]
    NotIsolating,
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("permutation degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("image sequence is not a bijection on 1..={0}")]
    NotABijection(usize),
    #[error("malformed cycle notation: {0}")]
    BadCycle(String),
    #[error("a group needs at least one generator")]
    EmptyGenerators,
    #[error("enumeration cap of {cap} elements exceeded")]
    CapExceeded { cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
