use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),

    #[error("generator s{letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("elements belong to different Coxeter systems ({0} vs {1})")]
    SystemMismatch(String, String),

    #[error("subset I = {subset:?} is not contained in the left descent set J(w) = {descents:?}")]
    NotInDescentSet {
        subset: Vec<usize>,
        descents: Vec<usize>,
    },

    #[error("group has {size} elements, above the enumeration cap of {cap}")]
    EnumerationCap { size: u128, cap: u128 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("word is not reduced: {0}")]
    NotReduced(String),

    #[error("{0}")]
    NotSplitSymmetric(String),

    #[error(
        "composition {composition} has a descent at {descent}, outside the split set {split:?}"
    )]
    DescentOutsideSplit {
        composition: String,
        descent: usize,
        split: Vec<usize>,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("permutation {0} is not bigrassmannian")]
    NotBigrassmannian(String),

    #[error("operation requires a type A system, got {0}")]
    NotTypeA(String),

    #[error("operation requires a rank two system, got {0}")]
    NotDihedral(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
