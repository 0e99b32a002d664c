use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unsupported family `{0}`")]
    UnsupportedFamily(String),
    #[error("base system must be finite")]
    NonFiniteBase,
    #[error("the subset is not parabolic")]
    NotParabolicInput,
    #[error("root {0} is not a simple root of the positive system")]
    NotSimple(usize),
    #[error("regenerating the positive system from its indecomposables failed")]
    GenerationFailure,
    #[error("invalid positive system: {0}")]
    InvalidPositiveSystem(String),
    #[error("the simple roots do not form a basis of the span of the roots")]
    BaseNotSpanning,
    #[error("system `{0}` ships no standard positive system")]
    NoStandardPositiveSystem(String),
    #[error("size guard exceeded: {size} > {limit}")]
    SizeGuardExceeded { size: usize, limit: usize },
    #[error("descriptor invariant violated: {0}")]
    DescriptorInvariant(String),
    #[error("verdict at window {window} differs from window {wider}")]
    UnstableAtWindow { window: u32, wider: u32 },
    #[error("unsupported scalar field: {0}")]
    UnsupportedScalarField(String),
    #[error("root id {0} out of range")]
    UnknownRoot(usize),
    #[error("subset refers to system `{found}`, expected `{expected}`")]
    SystemMismatch { expected: String, found: String },
    #[error("no witness: {0}")]
    NoWitness(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("certificate rejected: {0}")]
    Certificate(String),
    #[error("internal self-check failed: {0}")]
    SelfCheck(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Variant name, used in error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::InvalidParams(_) => "InvalidParams",
            Error::UnsupportedFamily(_) => "UnsupportedFamily",
            Error::NonFiniteBase => "NonFiniteBase",
            Error::NotParabolicInput => "NotParabolicInput",
            Error::NotSimple(_) => "NotSimple",
            Error::GenerationFailure => "GenerationFailure",
            Error::InvalidPositiveSystem(_) => "InvalidPositiveSystem",
            Error::BaseNotSpanning => "BaseNotSpanning",
            Error::NoStandardPositiveSystem(_) => "NoStandardPositiveSystem",
            Error::SizeGuardExceeded { .. } => "SizeGuardExceeded",
            Error::DescriptorInvariant(_) => "DescriptorInvariant",
            Error::UnstableAtWindow { .. } => "UnstableAtWindow",
            Error::UnsupportedScalarField(_) => "UnsupportedScalarField",
            Error::UnknownRoot(_) => "UnknownRoot",
            Error::SystemMismatch { .. } => "SystemMismatch",
            Error::NoWitness(_) => "NoWitness",
            Error::Parse(_) => "Parse",
            Error::Certificate(_) => "Certificate",
            Error::SelfCheck(_) => "SelfCheck",
            Error::Json(_) => "Json",
            Error::Io(_) => "Io",
        }
    }

    /// Stable nonzero numeric code per variant.
    pub fn code(&self) -> i32 {
        match self {
            Error::DimensionMismatch { .. } => 1,
            Error::InvalidParams(_) => 2,
            Error::UnsupportedFamily(_) => 3,
            Error::NonFiniteBase => 4,
            Error::NotParabolicInput => 5,
            Error::NotSimple(_) => 6,
            Error::GenerationFailure => 7,
            Error::InvalidPositiveSystem(_) => 8,
            Error::BaseNotSpanning => 9,
            Error::NoStandardPositiveSystem(_) => 10,
            Error::SizeGuardExceeded { .. } => 11,
            Error::DescriptorInvariant(_) => 12,
            Error::UnstableAtWindow { .. } => 13,
            Error::UnsupportedScalarField(_) => 14,
            Error::UnknownRoot(_) => 15,
            Error::SystemMismatch { .. } => 16,
            Error::NoWitness(_) => 17,
            Error::Parse(_) => 18,
            Error::Certificate(_) => 19,
            Error::SelfCheck(_) => 20,
            Error::Json(_) => 21,
            Error::Io(_) => 22,
        }
    }
}
