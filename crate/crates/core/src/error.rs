use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid array: {0}")]
    InvalidArray(String),
    #[error("alphabet of size {v} is not larger than max(r, c) = {max}")]
    AlphabetTooSmall { v: usize, max: usize },
    #[error("invalid block design: {0}")]
    InvalidDesign(String),
    #[error("invalid group element {element} for a group of order {order}")]
    InvalidGroupElement { element: usize, order: usize },
    #[error("design has {points} points, above the isomorphism guard of {limit}")]
    TooLarge { points: usize, limit: usize },
    #[error("not a Latin square: {0}")]
    NotLatin(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("letter sets overlap: {0}")]
    AlphabetOverlap(String),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("invalid permutation set: {0}")]
    InvalidSigmaSet(String),
    #[error("not a biplane: {0}")]
    NotBiplane(String),
    #[error("block size {0} is too small; need at least 4")]
    BlockSizeTooSmall(usize),
    #[error("chain axiom violated: {0}")]
    ChainAxiomViolation(String),
    #[error("expected block size {expected}, found {found}")]
    WrongBlockSize { expected: usize, found: usize },
    #[error("design is not equireplicate")]
    NotEquireplicate,
    #[error("block sizes vary")]
    BlockSizesVary,
    #[error("array is not binary")]
    NotBinary,
    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("design is disconnected ({zeros} zero eigenvalues)")]
    Disconnected { zeros: usize },
    #[error("replication {0} is not supported; use 2 or 3")]
    UnsupportedReplication(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    /// Stable variant name, printed by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidArray(_) => "InvalidArray",
            Error::AlphabetTooSmall { .. } => "AlphabetTooSmall",
            Error::InvalidDesign(_) => "InvalidDesign",
            Error::InvalidGroupElement { .. } => "InvalidGroupElement",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotLatin(_) => "NotLatin",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::AlphabetOverlap(_) => "AlphabetOverlap",
            Error::NotAdjacent(..) => "NotAdjacent",
            Error::InvalidSigmaSet(_) => "InvalidSigmaSet",
            Error::NotBiplane(_) => "NotBiplane",
            Error::BlockSizeTooSmall(_) => "BlockSizeTooSmall",
            Error::ChainAxiomViolation(_) => "ChainAxiomViolation",
            Error::WrongBlockSize { .. } => "WrongBlockSize",
            Error::NotEquireplicate => "NotEquireplicate",
            Error::BlockSizesVary => "BlockSizesVary",
            Error::NotBinary => "NotBinary",
            Error::NoConvergence(_) => "NoConvergence",
            Error::Disconnected { .. } => "Disconnected",
            Error::UnsupportedReplication(_) => "UnsupportedReplication",
            Error::Parse { .. } => "Parse",
        }
    }

    /// Parse errors are input problems; everything else is a domain error.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
