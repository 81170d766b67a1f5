//! Crate-wide error type.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown language code {0:?} (expected one of: en, es, fr)")]
    UnknownLanguage(String),

    #[error("corpus directory not found or unreadable: {path}")]
    CorpusDir {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("failed to read {path}")]
    FileRead {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("lemma dictionary {path}, line {line}: expected `surface<TAB>lemma`")]
    MalformedLemmaLine { path: PathBuf, line: usize },

    #[error("invalid normalization strategy {0:?} (expected raw, stem, lemma or fix:<n>)")]
    InvalidStrategy(String),

    #[error("fix:<n> requires 1 <= n <= 32, got {0}")]
    FixOutOfRange(u32),

    #[error("lemma strategy selected but no lemma dictionary was provided")]
    MissingLemmaDict,

    #[error("empty document: {0:?} has no sentences")]
    EmptyDocument(String),

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("matrix has no cells (P={rows}, N={cols})")]
    EmptyMatrix { rows: usize, cols: usize },

    #[error("volume baseline has size zero")]
    ZeroBaseline,

    #[error("invalid matrix dump: {0}")]
    BadMatrixDump(String),

    #[error("score vector length {scores} does not match sentence count {sentences}")]
    ScoreLengthMismatch { scores: usize, sentences: usize },

    #[error("invalid budget {0:?} (expected words:<k>, sentences:<k> or percent:<p>)")]
    InvalidBudget(String),

    #[error("budget must be positive")]
    ZeroBudget,

    #[error("invalid summarizer {0:?} (expected cortex, enertex or artex)")]
    InvalidSummarizer(String),

    #[error("empty source: the source profile has no terms")]
    EmptySource,

    #[error("matrix orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("matrix order {0} too small for triangle correlation (need P >= 3)")]
    OrderTooSmall(usize),

    #[error("degenerate matrix (constant distances)")]
    DegenerateMatrix,

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("non-finite matrix entry at ({0}, {1})")]
    NonFiniteEntry(usize, usize),

    #[error("permutation count {0} too small (need at least 99)")]
    TooFewPermutations(usize),

    #[error("empty corpus statistics: no tokens")]
    NoTokens,
}
