use thiserror::Error;

/// Error type shared by every module of the engine.
#[derive(Debug, Error)]
pub enum Error {
    /// Tensor or layer shape disagreement, with the expectation spelled out.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Architecture spec violates a structural constraint.
    #[error("invalid spec: {0}")]
    Spec(String),

    /// Bad scalar argument (negative learning rate, out-of-range target, ...).
    #[error("invalid argument: {0}")]
    InvalidArg(String),

    /// Eval-mode batch norm before any train-mode statistics update.
    #[error("batch norm running statistics are uninitialized; run at least one train-mode pass first")]
    BnUninitialized,

    /// Training diverged; names the position so the run can be diagnosed.
    #[error("non-finite loss at epoch {epoch}, minibatch {minibatch}")]
    NonFiniteLoss { epoch: usize, minibatch: usize },

    /// On-disk artifact violates its format contract.
    #[error("format error in {path}: {reason}")]
    Format { path: String, reason: String },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(String),
}

impl Error {
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn spec(msg: impl Into<String>) -> Self {
        Error::Spec(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArg(msg.into())
    }

    pub fn format(path: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Format { path: path.into(), reason: reason.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
