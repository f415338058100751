use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },

    #[error("duplicate {kind} `{name}`")]
    DuplicateName { kind: &'static str, name: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("order relation contains a cycle through `{0}`")]
    Cycle(String),

    #[error("order relation is not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("{what} has size {size}, above the enumeration guard {limit}")]
    GuardExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("family member {index} is not a downset of the poset")]
    NotADownset { index: usize },

    #[error("family {family} is not an antichain: members {first} and {second} are comparable")]
    NotAntichain {
        family: &'static str,
        first: usize,
        second: usize,
    },

    #[error("families violate (*): A-member {a} is contained in B-member {b}")]
    StarViolated { a: usize, b: usize },

    #[error("frequency of an empty family is undefined")]
    EmptyFamily,

    #[error("operation needs a nonempty poset")]
    EmptyPoset,

    #[error("size must be positive")]
    ZeroSize,

    #[error("attribute lists of positive and negative contexts differ")]
    AttributeMismatch,

    #[error("object `{0}` occurs among both positive and negative examples")]
    SharedObject(String),

    #[error("set {0:?} is not a minimal hypothesis of the training context")]
    NotMinimalHypothesis(Vec<usize>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not a lattice: elements `{a}` and `{b}` have no unique {bound}")]
    NotALattice {
        a: String,
        b: String,
        bound: &'static str,
    },

    #[error("set {0:?} is not an intent of the context")]
    NotAnIntent(Vec<usize>),

    #[error("minimal 1-values {0} and {1} are comparable")]
    ComparableMinvals(usize, usize),

    #[error("implication set is not a base of the context")]
    NotABase,

    #[error("degenerate CNF: {0}")]
    DegenerateCnf(String),

    #[error("assignment undefined: neither literal of variable {0} lies in the complement")]
    UndefinedAssignment(usize),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}
