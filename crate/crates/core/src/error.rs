use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("cannot parse scalar {0:?}")]
    ScalarParse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("composite of consecutive maps is nonzero")]
    NonzeroComposite,
    #[error("fields differ: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    AssociativityViolation(usize, usize, usize),
    #[error("unit law fails on basis element {0}")]
    UnitViolation(usize),
    #[error("idempotent data invalid: {0}")]
    IdempotentViolation(String),
    #[error("relation {0} mixes non-parallel paths")]
    MalformedRelation(String),
    #[error("nilpotency bound {bound} too small: path {path} of length {bound} is not in the relation ideal")]
    BoundTooSmall { bound: usize, path: String },
    #[error("unsupported characteristic: {0}")]
    UnsupportedCharacteristic(String),
    #[error("algebra carries no idempotent data")]
    MissingIdempotents,
    #[error("not a module: {0}")]
    RepresentationViolation(String),
    #[error("not a module homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("incompatible modules: {0}")]
    Incompatible(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("theorem violation (implementation bug): {0}")]
    TheoremViolation(String),
}

impl Error {
    /// Process exit code: 1 schema, 2 semantic, 3 theorem violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Schema(_) => 1,
            Error::TheoremViolation(_) => 3,
            _ => 2,
        }
    }

    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidField(_) => "InvalidField",
            Error::ScalarParse(_) => "ScalarParse",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NonzeroComposite => "NonzeroComposite",
            Error::FieldMismatch(..) => "FieldMismatch",
            Error::AssociativityViolation(..) => "AssociativityViolation",
            Error::UnitViolation(_) => "UnitViolation",
            Error::IdempotentViolation(_) => "IdempotentViolation",
            Error::MalformedRelation(_) => "MalformedRelation",
            Error::BoundTooSmall { .. } => "BoundTooSmall",
            Error::UnsupportedCharacteristic(_) => "UnsupportedCharacteristic",
            Error::MissingIdempotents => "MissingIdempotents",
            Error::RepresentationViolation(_) => "RepresentationViolation",
            Error::NotAHomomorphism(_) => "NotAHomomorphism",
            Error::Incompatible(_) => "Incompatible",
            Error::UnknownName(_) => "UnknownName",
            Error::Schema(_) => "SchemaError",
            Error::TheoremViolation(_) => "TheoremViolation",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
