use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {requested} is outside the supported range (cap {cap})")]
    DimensionOutOfRange { requested: usize, cap: usize },

    #[error("operation needs level {needed}, but the complex is truncated at {cap}")]
    Truncated { needed: usize, cap: usize },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid simplicial groupoid: {0}")]
    InvalidGroupoid(String),

    #[error("invalid crossed module: {0}")]
    InvalidCrossedModule(String),

    #[error("invalid horn: {0}")]
    InvalidHorn(String),

    #[error("malformed table at level {level}, index {index}: {reason}")]
    MalformedTable { level: usize, index: usize, reason: String },

    #[error("simplicial identity violated: {0}")]
    Validation(String),

    #[error("enumeration budget of {cap} candidate assignments exceeded at level {level}")]
    BudgetExceeded { level: usize, cap: u64 },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("cannot parse {what} from `{input}`")]
    Parse { what: &'static str, input: String },

    #[error("schema mismatch: expected {expected}, found {found}")]
    Schema { expected: u32, found: u32 },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
