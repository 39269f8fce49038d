use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    ProfileParse { line: usize, message: String },

    #[error("line {line}: duplicate feature {feature}")]
    DuplicateFeature { line: usize, feature: u16 },

    #[error("feature number {0} outside 1..=235")]
    FeatureOutOfRange(i64),

    #[error("sentence {sent_id}, line {line}: {message}")]
    Conllu {
        sent_id: String,
        line: usize,
        message: String,
    },

    #[error("invalid sentence {sent_id}: {message}")]
    InvalidSentence { sent_id: String, message: String },

    #[error("cannot merge an empty list of profiles")]
    EmptyMerge,

    #[error("duplicate feature {0} in universe")]
    DuplicateUniverse(u16),

    #[error("empty feature universe")]
    EmptyUniverse,

    #[error("feature vectors are defined over different universes")]
    UniverseMismatch,

    #[error("feature {0} was already asked")]
    RepeatedQuestion(u16),

    #[error("feature {0} is not the pending question")]
    NotPending(u16),

    #[error("resample count must be positive")]
    ZeroResamples,

    #[error("paired scores must have equal, non-zero lengths (got {a} and {b})")]
    PairedLength { a: usize, b: usize },

    #[error("non-finite score at position {0}")]
    NonFiniteScore(usize),

    #[error("density scale {0} outside [0, 1]")]
    DensityScale(f64),

    #[error("invalid field selector {selector:?}: {message}")]
    Selector { selector: String, message: String },

    #[error("record {record}: {message}")]
    Record { record: String, message: String },

    #[error("record {record}: no parse for field {field}")]
    MissingParse { record: String, field: String },
}

pub type Result<T> = std::result::Result<T, Error>;
