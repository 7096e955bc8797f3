use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported graph size {0} (supported: 1..=64)")]
    UnsupportedSize(usize),

    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),

    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),

    #[error("truncated graph6: {0}")]
    TruncatedGraph6(String),

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("labelled enumeration of n = {n} refused: cap is {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("eigensolver failed to converge on {g6}")]
    NoConvergence { g6: String },

    #[error("inertia mismatch on {g6}: numeric {numeric:?} vs exact {exact:?}")]
    InertiaMismatch {
        g6: String,
        numeric: (usize, usize, usize),
        exact: (usize, usize, usize),
    },

    #[error("trace identity violated: s+ + s- = {sum}, 2m = {two_m}; zero tolerance mis-set")]
    TraceIdentity { sum: f64, two_m: usize },

    #[error("exact chromatic number capped: n = {n} exceeds cap {cap}")]
    ChromaticCapped { n: usize, cap: usize },

    #[error("unknown bound id {0:?}")]
    UnknownBound(String),

    #[error("bound {0} needs complement invariants")]
    MissingComplement(&'static str),

    #[error("unknown objective {0:?}")]
    UnknownObjective(String),

    #[error("invalid search config: {0}")]
    InvalidConfig(String),

    #[error("invalid conference order {0}: need n = 4t + 1 >= 5")]
    InvalidConferenceOrder(usize),

    #[error("{path}:{line}: {source}")]
    Corpus {
        path: String,
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
