use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An operation needs a level the object was not built to.
    #[error("level {required} required but the object is truncated at level {available}")]
    LevelShortfall { required: usize, available: usize },

    /// Malformed tables: dangling references, wrong lengths, duplicate names.
    #[error("structural error: {0}")]
    Structural(String),

    /// A builder input breaks one of its algebraic axioms.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A criterion was asked about an object that fails the simplicial identities.
    #[error("input is not a simplicial set: {0}")]
    NotSimplicial(String),

    #[error("square does not commute: {0}")]
    NonCommutingSquare(String),

    /// A serialized document does not match its schema. `pointer` is a JSON
    /// pointer to the offending field (empty for the whole document).
    #[error("schema violation at {}: {message}", if pointer.is_empty() { "document root" } else { pointer.as_str() })]
    Schema { pointer: String, message: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn schema(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema { pointer: pointer.into(), message: message.into() }
    }
}
