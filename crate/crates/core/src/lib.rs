//! Multilingual extractive summarization built on a sentence-term vector
//! space model.
//!
//! The pipeline runs in five stages: split a document into sentences,
//! filter tokens (lowercasing, punctuation and digit removal, stop-words,
//! words occurring fewer than twice), normalize each surviving token
//! (raw text, suffix-stripping stem, dictionary lemma, or truncation to
//! the first `n` letters), vectorize the document into a sparse
//! sentence-by-term occurrence matrix, and score sentences with one of
//! three summarizers to assemble an extract in source order.
//!
//! Around that pipeline sit diagnostics: matrix density and volume
//! statistics, a seeded Mantel permutation test comparing the gram
//! matrices induced by two normalizations, letter-ranking and word-length
//! statistics, and a reference-free summary grade computed from absolute
//! log-differences of n-gram distributions between a summary and its
//! source.

pub mod analyze;
pub mod corpus_io;
pub mod error;
pub mod evaluate;
pub mod normalize;
mod resources;
pub mod stem;
pub mod summarize;
pub mod vsm;

pub use error::{Error, Result};

use std::fmt;
use std::str::FromStr;

/// Languages with bundled stop-lists, abbreviation lists and stemmers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Language {
    English,
    Spanish,
    French,
}

impl Language {
    /// Two-letter code used in CLI flags and file naming.
    pub fn code(self) -> &'static str {
        match self {
            Language::English => "en",
            Language::Spanish => "es",
            Language::French => "fr",
        }
    }

    /// All supported languages.
    pub fn all() -> [Language; 3] {
        [Language::English, Language::Spanish, Language::French]
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Language {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "en" | "english" => Ok(Language::English),
            "es" | "spanish" => Ok(Language::Spanish),
            "fr" | "french" => Ok(Language::French),
            other => Err(Error::UnknownLanguage(other.to_string())),
        }
    }
}
