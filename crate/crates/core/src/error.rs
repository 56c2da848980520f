use thiserror::Error;

/// Errors raised across the workbench.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured state or product-space budget would be exceeded.
    #[error("resource limit exceeded: {what} needs {required} states but the budget is {budget}")]
    Resource {
        what: &'static str,
        required: u64,
        budget: u64,
    },

    #[error("time limit exceeded during {what}")]
    Timeout { what: &'static str },

    /// A precondition of an operation does not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A policy proposed an illegal move or failed internally.
    #[error("policy fault at turn {turn}: {message}")]
    PolicyFault { turn: usize, message: String },

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("invalid input: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    /// True for budget failures, which callers may want to treat as "unknown".
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. } | Error::Timeout { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
