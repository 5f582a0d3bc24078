use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("point {0} out of range for degree {1}")]
    PointOutOfRange(u32, usize),

    #[error("element is not a member of the group")]
    NotInGroup,

    #[error("element is not an involution")]
    NotInvolution,

    #[error("element does not commute with the involution")]
    NotCommuting,

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("word parse error at byte {at}: {message}")]
    WordParse { at: usize, message: String },

    #[error("unbound generator name '{0}'")]
    UnboundName(char),

    #[error("unknown group '{0}'")]
    UnknownGroup(String),

    #[error("no representation bundled for '{0}'")]
    NoRepresentation(String),

    #[error("dataset error: {0}")]
    Dataset(String),

    #[error("word table error: {0}")]
    WordTable(String),

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("invalid quotient map: {0}")]
    InvalidQuotient(String),

    #[error("triple does not multiply to the identity")]
    BrokenTriple,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
