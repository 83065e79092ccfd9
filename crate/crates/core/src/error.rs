use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {vertex}: darts must join distinct vertices")]
    Loop { vertex: usize },

    #[error("vertex order is not a permutation: {reason}")]
    NotAPermutation { reason: String },

    #[error("coloring has {got} entries but the digraph has {expected} vertices")]
    ColoringLength { expected: usize, got: usize },

    #[error("color indices must be dense 0..{k}: color {missing} is unused")]
    SparseColors { k: usize, missing: usize },

    #[error("coloring is not acyclic: class {class} induces a directed cycle")]
    NotAcyclic { class: usize },

    #[error("parameter undefined on the empty digraph")]
    EmptyDigraph,

    #[error("{what} supports at most {limit} vertices, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("color count {k} out of range 1..={n}")]
    ColorCountOutOfRange { k: usize, n: usize },

    #[error("invalid jump {jump} for circulant of order {n}: {reason}")]
    InvalidJump { jump: i64, n: usize, reason: String },

    #[error("invalid family spec: {0}")]
    InvalidFamily(String),

    #[error("digraph is not regular")]
    NotRegular,

    #[error("random regular generation failed after {attempts} attempts")]
    RetryBudgetExhausted { attempts: usize },

    #[error("construction precondition violated: {0}")]
    Precondition(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("parse error at line {line}, offset {offset}: {message}")]
    Parse {
        line: usize,
        offset: usize,
        message: String,
    },

    #[error("unknown property id `{0}`")]
    UnknownProperty(String),

    #[error("exhaustive sweep of {corpus} needs order <= {limit}, got {n_max}; use sampled mode")]
    CorpusTooLarge {
        corpus: &'static str,
        n_max: usize,
        limit: usize,
    },
}

impl Error {
    /// Stable snake_case name of the variant, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::Loop { .. } => "loop",
            Error::NotAPermutation { .. } => "not_a_permutation",
            Error::ColoringLength { .. } => "coloring_length",
            Error::SparseColors { .. } => "sparse_colors",
            Error::NotAcyclic { .. } => "not_acyclic",
            Error::EmptyDigraph => "empty_digraph",
            Error::TooLarge { .. } => "too_large",
            Error::ColorCountOutOfRange { .. } => "color_count_out_of_range",
            Error::InvalidJump { .. } => "invalid_jump",
            Error::InvalidFamily(_) => "invalid_family",
            Error::NotRegular => "not_regular",
            Error::RetryBudgetExhausted { .. } => "retry_budget_exhausted",
            Error::Precondition(_) => "precondition",
            Error::ConstructionFailed(_) => "construction_failed",
            Error::Parse { .. } => "parse",
            Error::UnknownProperty(_) => "unknown_property",
            Error::CorpusTooLarge { .. } => "corpus_too_large",
        }
    }
}
