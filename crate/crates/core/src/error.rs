use thiserror::Error;

/// Errors raised while building, validating or comparing fuzzy sets.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid universe: min {min} must be finite and below max {max}")]
    InvalidUniverse { min: f64, max: f64 },

    #[error("invalid fuzzy set `{name}`: {reason}")]
    InvalidSet { name: String, reason: String },

    #[error("invalid interval [{left}, {right}]")]
    InvalidInterval { left: f64, right: f64 },

    #[error("no data")]
    NoData,

    #[error("out of range: {value} lies outside [{min}, {max}]")]
    OutOfRange { value: f64, min: f64, max: f64 },

    #[error("invalid bins: {0}")]
    InvalidBins(String),

    #[error("invalid alpha {0}: must lie in (0, 1]")]
    InvalidAlpha(f64),

    #[error("universe mismatch between `{left}` and `{right}`")]
    UniverseMismatch { left: String, right: String },

    #[error("degenerate pair: `{left}` and `{right}` are zero on every grid point")]
    DegeneratePair { left: String, right: String },

    #[error("set not normal: `{name}` has height {height}")]
    NotNormal { name: String, height: f64 },

    #[error("set not convex: `{name}`")]
    NotConvex { name: String },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("length mismatch: {values} values but {weights} weights")]
    LengthMismatch { values: usize, weights: usize },

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("non-finite value {0}")]
    NonFinite(f64),

    #[error("invalid lambda {0}: must be positive")]
    InvalidLambda(f64),

    #[error("{what} {value} outside [{min}, {max}]")]
    OutOfDomain {
        what: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("not enough inputs: {0}")]
    NotEnoughInputs(String),

    #[error("ambiguous classification: {} tie", .labels.join(", "))]
    AmbiguousClassification { labels: Vec<String> },

    #[error("missing column `{0}`")]
    MissingColumn(String),

    #[error("row {row}: cannot parse `{value}` as a number")]
    UnparsableRow { row: u64, value: String },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("malformed CSV: {0}")]
    Csv(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// True for failures of the filesystem rather than of the data.
    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
