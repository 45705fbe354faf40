use alloc::string::String;

/// Errors surfaced by the analysis pipeline.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A caller-supplied parameter is outside its documented range.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// More than half of the input rows were malformed.
    #[error("corpus format error: {0}")]
    CorpusFormat(String),
    /// A mapped skill does not appear in the vocabulary.
    #[error("skill `{0}` is not in the vocabulary")]
    UnknownSkill(String),
    /// A skill with zero mentions reached the embedding step.
    #[error("skill `{0}` has no mentions; remove it before embedding")]
    DegenerateSkill(String),
    /// An embedding row has zero norm, so cosine similarity is undefined.
    #[error("embedding row for skill `{0}` has zero norm")]
    ZeroNormEmbedding(String),
    /// All pairwise distances are zero; normalisation is impossible.
    #[error("all embeddings are identical; the distance matrix is degenerate")]
    DegenerateGeometry,
    /// An operation requiring a connected graph received a disconnected one.
    #[error("graph is disconnected ({components} components); take the largest component first")]
    Disconnected {
        /// Number of connected components found.
        components: usize,
    },
    /// Two partitions do not share a node set.
    #[error("partitions are defined over different node sets ({left} vs {right} nodes)")]
    NodeSetMismatch {
        /// Node count of the left partition.
        left: usize,
        /// Node count of the right partition.
        right: usize,
    },
    /// A cluster referenced by a computation has no members.
    #[error("cluster {0} is empty")]
    EmptyCluster(usize),
    /// No text embedding was supplied for a skill that needs one.
    #[error("no text embedding supplied for skill `{0}`")]
    MissingEmbedding(String),
    /// A skill lacks a taxonomy category.
    #[error("skill `{0}` has no taxonomy category")]
    UncategorizedSkill(String),
    /// Exhaustive enumeration refused to run on an oversized graph.
    #[error("graph too large for exhaustive enumeration: {nodes} nodes (cap {cap})")]
    TooLarge {
        /// Nodes in the offending graph.
        nodes: usize,
        /// Maximum node count the enumeration accepts.
        cap: usize,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
