use thiserror::Error;

/// Errors raised by validation, algebra and enumeration.
///
/// Every payload names the object that failed so that callers (and the CLI)
/// can report it without extra context.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arrow `{arrow}` is a vertex loop at `{vertex}`")]
    VertexLoop { arrow: String, vertex: String },
    #[error("arrow `{arrow}` has undeclared endpoint `{vertex}`")]
    DanglingEndpoint { arrow: String, vertex: String },
    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),
    #[error("{what} is not a permutation: {detail}")]
    NotPermutation { what: String, detail: String },
    #[error("arrow map disagrees with vertex map on arrow `{arrow}`")]
    Incompatible { arrow: String },
    #[error("arrow `{arrow}` joins two vertices of the same orbit")]
    NotAdmissible { arrow: String },
    #[error("lattice mismatch: {0}")]
    LatticeMismatch(String),
    #[error("vector {0:?} is not fixed by the automorphism")]
    NotFixed(Vec<i64>),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("zero vector has no root classification")]
    ZeroVector,
    #[error("budget exceeded for {what}: predicted {predicted}, cap {cap}")]
    BudgetExceeded {
        what: String,
        predicted: u128,
        cap: u128,
    },
    #[error("quiver has no null root")]
    NoNullRoot,
    #[error("valued quiver cannot be unfolded: {0}")]
    NotUnfoldable(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree {degree} exceeds cap {cap}")]
    DegreeTooLarge { degree: u32, cap: u32 },
    #[error("F_{sub} is not a subfield of F_{big}")]
    NotSubfield { sub: String, big: String },
    #[error("representations live over different fields")]
    FieldMismatch,
    #[error("endomorphism ring too large to enumerate: q^{dim} with q = {q}")]
    EndRingTooLarge { q: u32, dim: usize },
    #[error("hom space too large to search: q^{dim} with q = {q}")]
    HomSpaceTooLarge { q: u32, dim: usize },
    #[error("vertex `{0}` is not a sink")]
    NotSink(String),
    #[error("vertex `{0}` is not a source")]
    NotSource(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
