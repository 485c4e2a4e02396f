use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("series has zero constant term and cannot be inverted")]
    Singular,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("recurrence truncated: leading coefficient vanishes at n = {n}")]
    Truncated { n: usize },
    #[error("invalid parameters: {0}")]
    Validation(String),
    #[error("cannot parse {what} from `{input}`")]
    Parse { what: &'static str, input: String },
    #[error("unknown {kind} `{id}`")]
    Unknown { kind: &'static str, id: String },
    #[error("unsupported domain: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
