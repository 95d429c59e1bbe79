use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("no FASTA records found (expected a line starting with '>')")]
    NoRecords,

    #[error("record '{id}' has a header but no sequence")]
    EmptyRecord { id: String },

    #[error("empty sequence")]
    EmptySequence,

    /// `line` and `column` are 1-based positions in the input text.
    #[error("invalid symbol '{symbol}' in '{id}' at line {line}, column {column}")]
    InvalidSymbol {
        id: String,
        symbol: char,
        line: usize,
        column: usize,
    },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("DP table of {rows}x{cols} cells exceeds the budget of {budget} cells")]
    SizeLimitExceeded {
        rows: usize,
        cols: usize,
        budget: u64,
    },

    #[error("per-rank extremal selection is not a valid chain at rank {rank}: {detail}")]
    ExtremalChainViolation { rank: usize, detail: String },

    #[error("more than {0} optimal alignments")]
    TooManyAlignments(usize),

    #[error("invalid model parameter `{field}`: {reason}")]
    InvalidModel { field: String, reason: String },

    #[error("degenerate model: {0}")]
    DegenerateModel(String),

    #[error("degenerate letter law: {0}")]
    DegenerateLaw(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{name} = {value} is outside {domain}")]
    DomainError {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },
}

impl Error {
    pub(crate) fn model(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidModel {
            field: field.into(),
            reason: reason.into(),
        }
    }
}
