//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape error: expected {expected}, got {got}")]
    Shape { expected: String, got: String },

    #[error("spectral estimate failed: power iteration did not converge within {max_iter} iterations")]
    SpectralEstimateFailed { max_iter: usize },

    #[error("oracle too large: n = {n} exceeds dense oracle cap {cap}")]
    OracleTooLarge { n: usize, cap: usize },

    #[error("degenerate feature vector: zero variance")]
    DegenerateFeatureVector,

    #[error("incomplete phenotype: sample {sample_id} measure {measure}: {problem}")]
    IncompletePhenotype {
        sample_id: String,
        measure: String,
        problem: String,
    },

    #[error("ill-posed, increase alpha")]
    IllPosed,

    #[error("cannot select more features than exist: requested {requested}, have {available}")]
    SelectTooMany { requested: usize, available: usize },

    #[error("no labelled nodes")]
    NoLabelledNodes,

    #[error("divergence at epoch {epoch}")]
    Divergence { epoch: usize },

    #[error("cannot form folds: {subjects} subjects for {folds} folds")]
    CannotFormFolds { subjects: usize, folds: usize },

    #[error("AUC undefined: truth contains a single class")]
    AucUndefined,

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("data error in {file}, line {line}: {problem}")]
    Data {
        file: String,
        line: usize,
        problem: String,
    },

    #[error("missing file: {0}")]
    MissingFile(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn shape(expected: impl Into<String>, got: impl Into<String>) -> Self {
        Error::Shape {
            expected: expected.into(),
            got: got.into(),
        }
    }
}
