use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for series {series}")]
    InvalidRank { series: char, rank: usize },

    #[error("unknown Cartan type `{0}`")]
    UnknownCartanType(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("weight {0} is not dominant integral")]
    NotDominant(String),

    #[error("weight {0} is not half-integral in the ambient coordinates")]
    NotHalfIntegral(String),

    #[error("characters live on different groups: {0} vs {1}")]
    ContextMismatch(String, String),

    #[error("lattice map sends {0} outside the target weight lattice")]
    OffLattice(String),

    #[error("negative multiplicity {mult} at highest weight {weight}")]
    NegativeMultiplicity { weight: String, mult: String },

    #[error("incompatible tuple lengths {upper} and {lower}")]
    IncompatibleLengths { upper: usize, lower: usize },

    #[error("restricted roots of {0} do not form a supported root system")]
    UnsupportedMarking(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
