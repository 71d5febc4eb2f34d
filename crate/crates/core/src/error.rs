use thiserror::Error;

/// Every failure the library can report.
///
/// Variant names are part of the public contract: the command-line front end
/// prints them verbatim, so renaming a variant is a breaking change.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("basis `{0}` is not available for this root system")]
    UnsupportedBasis(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("group exceeds the element cap of {cap}")]
    GroupTooLarge { cap: usize },
    #[error("affine reduction did not converge within {steps} steps")]
    NonConvergence { steps: usize },
    #[error("weight {0} is not strictly dominant")]
    NotStrictlyDominant(String),
    #[error("non-integral multiplicity for orbit {rep}: {count} points over orbit size {size}")]
    NonIntegralMultiplicity { rep: String, count: usize, size: usize },
    #[error("unsupported branching: {0}")]
    UnsupportedBranch(String),
    #[error("operation requires a different series: {0}")]
    UnsupportedSeries(String),
    #[error("rank {rank} exceeds the limit {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("grid of {points} points exceeds the cap of {cap}")]
    GridTooLarge { points: u128, cap: u128 },
    #[error("orbits of {first} and {second} are not separated by T_{m}")]
    OrbitsNotSeparated { first: String, second: String, m: u64 },
    #[error("orbit of {lambda} is not separated at resolution {m}")]
    BandLimitExceeded { lambda: String, m: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// The variant name, used as the diagnostic tag on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidDiagram(_) => "InvalidDiagram",
            Error::RankMismatch { .. } => "RankMismatch",
            Error::UnsupportedBasis(_) => "UnsupportedBasis",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::GroupTooLarge { .. } => "GroupTooLarge",
            Error::NonConvergence { .. } => "NonConvergence",
            Error::NotStrictlyDominant(_) => "NotStrictlyDominant",
            Error::NonIntegralMultiplicity { .. } => "NonIntegralMultiplicity",
            Error::UnsupportedBranch(_) => "UnsupportedBranch",
            Error::UnsupportedSeries(_) => "UnsupportedSeries",
            Error::RankTooLarge { .. } => "RankTooLarge",
            Error::GridTooLarge { .. } => "GridTooLarge",
            Error::OrbitsNotSeparated { .. } => "OrbitsNotSeparated",
            Error::BandLimitExceeded { .. } => "BandLimitExceeded",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
