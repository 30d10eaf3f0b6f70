use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("invalid element label `{0}`: labels must be non-empty and free of whitespace, '<', '#', '(' and ')'")]
    InvalidLabel(String),

    #[error("cover relation contains a cycle: {}", .0.join(" < "))]
    Cycle(Vec<String>),

    #[error("relation is not a strict partial order: {0}")]
    NotAnOrder(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what} refused for n = {n} (cap {cap}); {hint}")]
    ScopeExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("not a chain decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("decomposition is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("decomposition is not the minimum homogeneous chain decomposition")]
    NotMinimumHcd,

    #[error("cut height {height} out of range for chain {chain} of size {len}")]
    HeightOutOfRange { chain: usize, height: usize, len: usize },

    #[error("expected {expected} entries, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("not a linear extension: {0}")]
    NotLinearExtension(String),

    #[error("permutation is not 132-avoiding: {0}")]
    Not132Avoiding(String),

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("automorphism scatters chain {chain} across chains {targets:?}")]
    ChainScattered { chain: usize, targets: Vec<usize> },

    #[error("missing cut for scoped signed chain matrix")]
    MissingCut,

    #[error("internal inconsistency in {check}: {witness}")]
    TheoremViolation { check: &'static str, witness: String },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("integer overflow in exact arithmetic")]
    Overflow,
}
