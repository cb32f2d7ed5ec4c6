use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system spec: {0}")]
    InvalidSpec(String),

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("Weyl group of order {order} exceeds the enumeration cap of {cap}")]
    GroupTooLarge { order: u128, cap: usize },

    #[error("rank {rank} exceeds the supported maximum of {max}")]
    RankTooLarge { rank: usize, max: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("translation by a non-integral coweight")]
    NonIntegralCoweight,

    #[error("level vectors are not nested at root {root}")]
    NotNested { root: String },

    #[error("index is infinite at root {root}")]
    InfiniteIndex { root: String },

    #[error("subset {subset} is not admissible: root {witness} has a coefficient above 1")]
    NotAdmissible { subset: String, witness: String },

    #[error("integer overflow while evaluating a polynomial")]
    Overflow,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
