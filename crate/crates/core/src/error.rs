use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{what} supports at most {max} vertices, got {n}")]
    Capacity {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("graph6 parse error {}byte {offset}: {message}", line.map_or(String::new(), |l| format!("on line {l}, ")))]
    Graph6 {
        line: Option<usize>,
        offset: usize,
        message: String,
    },

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("precondition violated: {0}")]
    Misuse(String),

    /// A state the case analysis rules out. Always a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn graph6(offset: usize, message: impl Into<String>) -> Self {
        Error::Graph6 {
            line: None,
            offset,
            message: message.into(),
        }
    }
}
