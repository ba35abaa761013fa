use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0}")]
    Usage(String),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("group order exceeds cap of {cap} elements")]
    OrderCap { cap: usize },

    #[error("more than {cap} types requested in all-subsets mode")]
    TypeCap { cap: usize },

    #[error("subset geometry of degree {n} exceeds cap {cap}")]
    SubsetCap { n: usize, cap: usize },

    #[error("action table of {cells} cells exceeds cap {cap}")]
    ActionCap { cells: usize, cap: usize },

    #[error("more than {limit} flags of a single type")]
    FlagLimit { limit: usize },

    #[error("empty generator set")]
    EmptyGenerators,

    #[error("unknown group family `{0}`")]
    UnknownFamily(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("generator {generator} image is not a bijection on objects")]
    NotBijection { generator: usize },

    #[error("type not preserved: generator {generator} sends object {object}")]
    TypeNotPreserved { generator: usize, object: usize },

    #[error("incidence not preserved: generator {generator} on objects ({a}, {b})")]
    IncidenceNotPreserved { generator: usize, a: usize, b: usize },

    #[error("action is not well defined on group element {element}")]
    IllDefinedAction { element: usize },

    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("objects from different groups mixed")]
    MixedGroups,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal disagreement: {0}")]
    Disagreement(String),
}
