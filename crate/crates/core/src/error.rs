use thiserror::Error;

/// Everything that can go wrong inside the library.
///
/// Variants split into two families: [`Error::Parse`] and [`Error::Io`] are
/// input problems, everything else is a violated domain precondition.
#[derive(Debug, Error)]
pub enum Error {
    #[error("loop edge ({0}, {0}) is not allowed")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex pair must consist of two distinct vertices, got ({0}, {0})")]
    SameVertex(usize),
    #[error("coloring has {got} entries but the graph has {expected} edges")]
    ColoringLength { expected: usize, got: usize },
    #[error("color ids must be positive, edge {edge} has color 0")]
    ZeroColor { edge: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("{side} is not connected")]
    SideDisconnected { side: &'static str },
    #[error("graph has no edges")]
    NoEdges,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("block {block} coloring is not an MD-coloring of that block")]
    BlockColoring { block: usize },
    #[error("graph has {m} edges, above the brute-force cap of {cap}")]
    OracleCap { m: usize, cap: usize },
    #[error("implication violated in trial {trial}: every pair has three common neighbors but no closure certificate was found")]
    ImplicationViolated { trial: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// True for malformed input or IO failures, false for domain rejections.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Io(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
