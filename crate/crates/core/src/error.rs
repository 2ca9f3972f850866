use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("loop at vertex `{0}`")]
    Loop(String),
    #[error("{0} vertices requested; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("{0}")]
    OutOfRange(String),
    #[error("{{{0}}} is not a face of the complex")]
    NotAFace(String),
    #[error("deleting the empty face leaves the void complex")]
    EmptyFaceDeletion,
    #[error("operation is undefined on the void complex")]
    VoidComplex,
    #[error("enumeration would exceed the guard of {limit} faces")]
    FaceGuard { limit: usize },
    #[error("the Alexander dual of the zero ideal is not computed")]
    DualOfZero,
    #[error("the Alexander dual of the unit ideal is not computed")]
    DualOfUnit,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid JSON input: {0}")]
    Json(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("cross-check mismatch: {0}")]
    CrossCheck(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
