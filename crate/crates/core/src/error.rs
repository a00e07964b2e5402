use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Most variants describe bad user input. [`Error::Parity`] and
/// [`Error::Internal`] signal a broken invariant inside the library and never
/// a problem with the input; see [`Error::is_internal`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("could not parse `{0}` as an integer label")]
    BadToken(String),
    #[error("top row has {top} labels but bottom row has {bottom}")]
    LengthMismatch { top: usize, bottom: usize },
    #[error("label {label} occurs {count} times; every label must occur exactly twice")]
    BadMultiplicity { label: i64, count: usize },
    #[error("beta is a multi-curve with {components} components")]
    MultiCurve { components: usize },
    #[error("k - |F| = {k} - {faces} is odd")]
    Parity { k: usize, faces: usize },
    #[error("the pair fills a surface of genus {genus}; genus at least 2 is required")]
    GenusTooSmall { genus: usize },
    #[error("the pair fills genus {genus}, which exceeds the declared ambient genus {ambient}")]
    AmbientTooSmall { genus: usize, ambient: usize },
    #[error("two arcs of the candidate curve demand the {side} side at crossing {edge}")]
    SideConflict { edge: usize, side: &'static str },
    #[error("more than {limit} elementary circuits")]
    CircuitLimitExceeded { limit: usize },
    #[error("the dual graph has no elementary circuits")]
    NoCircuits,
    #[error("no feasible weight vector with total at most {searched_up_to}")]
    Infeasible { searched_up_to: u64 },
    #[error("++ weight total {pp} differs from -- weight total {mm}")]
    Unbalanced { pp: i64, mm: i64 },
    #[error("weight w{class} is negative")]
    NegativeWeight { class: usize },
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("all weights are zero; the expansion has no arcs")]
    EmptyExpansion,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("catalog checksum mismatch: header says {expected}, content hashes to {actual}")]
    ChecksumMismatch { expected: String, actual: String },
    #[error("cancelled")]
    Cancelled,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True when the error reflects a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Parity { .. } | Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
