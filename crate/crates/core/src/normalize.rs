//! Token normalization: raw text, suffix-stripping stems, dictionary
//! lemmas, or truncation to the first n letters.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use crate::corpus_io::{Document, Sentence};
use crate::error::{Error, Result};
use crate::{stem, Language};

/// Largest supported truncation length.
pub const MAX_FIX: u32 = 32;

/// Surface-form to lemma mapping; lookups of unknown words fall back to
/// the word itself.
#[derive(Debug, Clone)]
pub struct LemmaDict {
    language: Language,
    entries: HashMap<String, String>,
}

impl LemmaDict {
    pub fn new(language: Language, entries: HashMap<String, String>) -> LemmaDict {
        let entries = entries
            .into_iter()
            .map(|(k, v)| (k.to_lowercase(), v.to_lowercase()))
            .collect();
        LemmaDict { language, entries }
    }

    pub fn empty(language: Language) -> LemmaDict {
        LemmaDict {
            language,
            entries: HashMap::new(),
        }
    }

    pub fn language(&self) -> Language {
        self.language
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lookup<'a>(&'a self, surface: &'a str) -> &'a str {
        self.entries.get(surface).map(String::as_str).unwrap_or(surface)
    }
}

/// Load `surface<TAB>lemma` lines; later duplicates overwrite earlier
/// ones. Blank lines are skipped, anything else without a tab is an
/// error naming the line.
pub fn load_lemma_dict(path: &Path, language: Language) -> Result<LemmaDict> {
    let text = fs::read_to_string(path).map_err(|source| Error::FileRead {
        path: path.to_path_buf(),
        source,
    })?;
    let mut entries = HashMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let Some((surface, lemma)) = line.split_once('\t') else {
            return Err(Error::MalformedLemmaLine {
                path: path.to_path_buf(),
                line: i + 1,
            });
        };
        entries.insert(
            surface.trim().to_lowercase(),
            lemma.trim().to_lowercase(),
        );
    }
    Ok(LemmaDict { language, entries })
}

/// How tokens are mapped to their canonical form (pipeline step 3).
#[derive(Debug, Clone)]
pub enum NormalizationStrategy {
    /// Leave tokens untouched.
    Raw,
    /// Rule-based suffix stripping for the document's language.
    Stem,
    /// Dictionary lookup with identity fallback.
    Lemma(Arc<LemmaDict>),
    /// Keep only the first n letters (Unicode scalar values).
    Fix(u32),
}

impl NormalizationStrategy {
    /// Truncation strategy; n must lie in 1..=32.
    pub fn fix(n: u32) -> Result<NormalizationStrategy> {
        if (1..=MAX_FIX).contains(&n) {
            Ok(NormalizationStrategy::Fix(n))
        } else {
            Err(Error::FixOutOfRange(n))
        }
    }

    /// Parse a CLI-style label: `raw`, `stem`, `lemma` or `fix:<n>`.
    /// `lemma` requires a dictionary.
    pub fn parse(s: &str, lemma_dict: Option<&Arc<LemmaDict>>) -> Result<NormalizationStrategy> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "raw" => Ok(NormalizationStrategy::Raw),
            "stem" => Ok(NormalizationStrategy::Stem),
            "lemma" => lemma_dict
                .cloned()
                .map(NormalizationStrategy::Lemma)
                .ok_or(Error::MissingLemmaDict),
            other => {
                if let Some(n) = other.strip_prefix("fix:") {
                    let n: u32 = n
                        .parse()
                        .map_err(|_| Error::InvalidStrategy(s.clone()))?;
                    NormalizationStrategy::fix(n)
                } else {
                    Err(Error::InvalidStrategy(s.clone()))
                }
            }
        }
    }

    pub fn kind(&self) -> StrategyKind {
        match self {
            NormalizationStrategy::Raw => StrategyKind::Raw,
            NormalizationStrategy::Stem => StrategyKind::Stem,
            NormalizationStrategy::Lemma(_) => StrategyKind::Lemma,
            NormalizationStrategy::Fix(n) => StrategyKind::Fix(*n),
        }
    }

    pub fn label(&self) -> String {
        self.kind().to_string()
    }
}

/// Strategy name without attached resources; used as a matrix label and
/// in file names and dumps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrategyKind {
    Raw,
    Stem,
    Lemma,
    Fix(u32),
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrategyKind::Raw => write!(f, "raw"),
            StrategyKind::Stem => write!(f, "stem"),
            StrategyKind::Lemma => write!(f, "lemma"),
            StrategyKind::Fix(n) => write!(f, "fix:{n}"),
        }
    }
}

impl FromStr for StrategyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<StrategyKind> {
        match s {
            "raw" => Ok(StrategyKind::Raw),
            "stem" => Ok(StrategyKind::Stem),
            "lemma" => Ok(StrategyKind::Lemma),
            other => other
                .strip_prefix("fix:")
                .and_then(|n| n.parse().ok())
                .map(StrategyKind::Fix)
                .ok_or_else(|| Error::InvalidStrategy(s.to_string())),
        }
    }
}

/// Map one token to its canonical form.
pub fn normalize_token(token: &str, strategy: &NormalizationStrategy, language: Language) -> String {
    match strategy {
        NormalizationStrategy::Raw => token.to_string(),
        NormalizationStrategy::Stem => stem::stem(language, token),
        NormalizationStrategy::Lemma(dict) => dict.lookup(token).to_string(),
        NormalizationStrategy::Fix(n) => token.chars().take(*n as usize).collect(),
    }
}

/// Element-wise [`normalize_token`]; length and order preserved.
pub fn normalize_sentence(
    tokens: &[String],
    strategy: &NormalizationStrategy,
    language: Language,
) -> Vec<String> {
    tokens
        .iter()
        .map(|t| normalize_token(t, strategy, language))
        .collect()
}

/// A copy of `doc` with every sentence's tokens normalized.
pub fn normalize_document(doc: &Document, strategy: &NormalizationStrategy) -> Document {
    Document {
        id: doc.id.clone(),
        language: doc.language,
        sentences: doc
            .sentences
            .iter()
            .map(|s| Sentence {
                index: s.index,
                surface: s.surface.clone(),
                tokens: normalize_sentence(&s.tokens, strategy, doc.language),
            })
            .collect(),
    }
}
