use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A configured search or enumeration budget was exhausted.
    #[error("resource cap exceeded: {what} (limit {limit})")]
    ResourceCap { what: &'static str, limit: u64 },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("improper input: {0}")]
    ImproperInput(String),

    #[error("no proper {k}-colouring exists")]
    NoColourings { k: usize },

    #[error("neighbourhood of vertex {vertex} is not a disjoint union of cliques")]
    NotCliquePartition { vertex: usize },

    #[error("input graph is empty")]
    EmptyInput,

    #[error("input graph is not connected")]
    NotConnected,

    #[error("input graph is not a line graph")]
    NotLineGraph,

    /// Two non-isomorphic roots were found for something other than a triangle.
    #[error("line graph has several non-isomorphic roots outside the triangle case")]
    AmbiguousRoot,

    #[error("component admits no layering")]
    NoLayering,

    #[error("component admits more than one layering")]
    AmbiguousLayering,

    #[error("cycle component of length {len} cannot arise from any graph")]
    InvalidComponent { len: usize },

    #[error("reconstruction is not supported for rule {rule} with {k} tokens")]
    UnsupportedCase { rule: String, k: usize },

    #[error("graph has no frozen vertex for k = {k}")]
    NoFrozenVertex { k: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("reconstructed graph failed the self-check")]
    SelfCheckFailed,

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
