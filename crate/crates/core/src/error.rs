use thiserror::Error;

/// Errors surfaced by parsing, recognition and construction entry points.
///
/// Semantic negatives (a graph merely failing to belong to a class) are never
/// errors; they are reported through `Option`/report types. `Error` is
/// reserved for unusable input and violated preconditions.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed edge-list input, with the 1-based offending line.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The operation is only defined on connected graphs.
    #[error("graph is not connected")]
    Disconnected,

    /// A size guard tripped (pattern search, exhaustive enumeration, ...).
    #[error("{what} is capped at {limit}, got {got}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    /// The brute-force word search would be astronomically large; pass
    /// `force` to run it anyway.
    #[error(
        "brute-force word search over {n} letters with cap {cap} is \
         prohibitively large; pass force to run it anyway"
    )]
    OracleGuard { n: usize, cap: usize },

    /// A word was checked against a graph it does not cover.
    #[error("word does not contain vertex {0}")]
    WordMissingVertex(String),

    /// A word mentions a letter that is not a vertex of the graph.
    #[error("word letter {0} is not a vertex of the graph")]
    WordUnknownLetter(String),

    /// A chain handed to the word builder is not a maximum root-to-leaf
    /// chain of the poset.
    #[error("invalid chain: {0}")]
    InvalidChain(String),

    /// Invalid generator or search configuration.
    #[error("bad configuration: {0}")]
    BadConfig(String),

    /// A generation request no graph can satisfy.
    #[error("unsatisfiable request: {0}")]
    Unsatisfiable(String),
}
