use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("bad deformation matrix at ({row}, {col}): {reason}")]
    BadMatrix {
        row: usize,
        col: usize,
        reason: String,
    },

    #[error("letters at positions {position}, {} are already ordered", position + 1)]
    NotReducible { position: usize },

    #[error("parameter `{0}` has no assigned value")]
    MissingParameter(String),

    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed relation: {0}")]
    MalformedRelation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("internal error: {0}")]
    Internal(String),
}
