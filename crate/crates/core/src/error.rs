use thiserror::Error;

/// Errors raised by the library. Mathematical verdicts (an identity that turns
/// out false) are reported through result types, never through this enum.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system type {0}: allowed families are A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4), E_6, E_7, E_8, F_4, G_2")]
    InvalidType(String),

    #[error("invalid level k = {k}: the level must avoid 0 and -h^vee = {neg_hvee}")]
    InvalidLevel { k: String, neg_hvee: String },

    #[error("level must be a positive integer, got {0}")]
    NonPositiveIntegerLevel(String),

    #[error("cannot parse rational number from {0:?}")]
    ParseRational(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("weight is not in the root lattice Q: {0}")]
    NotInRootLattice(String),

    #[error("weight {weight} is not in the coset of {base}")]
    NotInCoset { weight: String, base: String },

    #[error("lattice is not definite; norm-bounded enumeration is infinite")]
    IndefiniteLattice,

    #[error("Gram matrix is singular")]
    SingularGram,

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("cocycle identity fails on basis pair ({0}, {1})")]
    CocycleIdentity(usize, usize),

    #[error("root system {0} is not simply laced; the Q^vee_sc lattice is only defined for types A, D, E")]
    NotSimplyLaced(String),

    #[error("lattice vector is not registered with the contraction table: {0}")]
    UnregisteredVector(String),

    #[error("no OPE rule for affine symbols {0}")]
    MissingAffineRule(String),

    #[error("field is not parity homogeneous")]
    MixedParity,

    #[error("string function at weight {0} has no recorded minimum exponent")]
    MissingMinimum(String),

    #[error("enumeration bound cannot be certified: {0}")]
    Uncertifiable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid seed: {0}")]
    Seed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
