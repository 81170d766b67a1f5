//! Document ingestion, sentence splitting, tokenization and filtering.
//!
//! Filtering lowercases, treats every non-alphabetic character (the
//! configured punctuation set, which also covers digits) as a separator,
//! removes stop-words, and removes words occurring fewer than twice in
//! the document. Sentences that filter to nothing are kept as empty
//! token lists so sentence indices stay aligned across the pipeline.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::{resources, Language};

/// Default document-frequency floor: words seen fewer than twice go.
pub const DEFAULT_MIN_FREQUENCY: u32 = 2;

/// A document as loaded from disk, before any processing.
#[derive(Debug, Clone)]
pub struct RawDocument {
    /// File stem; unique within a corpus.
    pub id: String,
    pub text: String,
    pub language: Language,
}

/// One sentence: original surface text plus filtered tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    /// 0-based position within the document.
    pub index: usize,
    pub surface: String,
    pub tokens: Vec<String>,
}

/// A fully preprocessed document; sentence order equals source order.
#[derive(Debug, Clone)]
pub struct Document {
    pub id: String,
    pub language: Language,
    pub sentences: Vec<Sentence>,
}

impl Document {
    /// Number of sentences (the matrix row count P).
    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    /// All filtered tokens in document order.
    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.sentences
            .iter()
            .flat_map(|s| s.tokens.iter().map(String::as_str))
    }
}

/// Per-language stop-word set; all entries lowercase.
#[derive(Debug, Clone)]
pub struct StopList {
    language: Language,
    words: HashSet<String>,
}

impl StopList {
    pub fn bundled(language: Language) -> StopList {
        let words = resources::parse_word_list(resources::stopwords(language));
        StopList {
            language,
            words: words.into_iter().collect(),
        }
    }

    /// Load from a UTF-8 file, one word per line, `#` comments ignored.
    pub fn from_path(path: &Path, language: Language) -> Result<StopList> {
        let text = fs::read_to_string(path).map_err(|source| Error::FileRead {
            path: path.to_path_buf(),
            source,
        })?;
        let words = resources::parse_word_list(&text);
        Ok(StopList {
            language,
            words: words.into_iter().collect(),
        })
    }

    pub fn language(&self) -> Language {
        self.language
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Abbreviations whose trailing dot does not end a sentence.
#[derive(Debug, Clone)]
pub struct AbbreviationList {
    entries: HashSet<String>,
}

impl AbbreviationList {
    pub fn bundled(language: Language) -> AbbreviationList {
        let entries = resources::parse_word_list(resources::abbreviations(language));
        AbbreviationList {
            entries: entries.into_iter().collect(),
        }
    }

    pub fn from_path(path: &Path) -> Result<AbbreviationList> {
        let text = fs::read_to_string(path).map_err(|source| Error::FileRead {
            path: path.to_path_buf(),
            source,
        })?;
        let entries = resources::parse_word_list(&text);
        Ok(AbbreviationList {
            entries: entries.into_iter().collect(),
        })
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains(word)
    }
}

/// Result of loading a corpus directory: documents in lexicographic id
/// order plus one warning per skipped file.
#[derive(Debug)]
pub struct LoadOutcome {
    pub documents: Vec<RawDocument>,
    pub warnings: Vec<String>,
}

/// Load every regular file of `dir` as one document. Non-UTF-8 files are
/// skipped with a warning record rather than failing the whole load.
pub fn load_corpus(dir: &Path, language: Language) -> Result<LoadOutcome> {
    let entries = fs::read_dir(dir).map_err(|source| Error::CorpusDir {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut files = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|source| Error::CorpusDir {
            path: dir.to_path_buf(),
            source,
        })?;
        let path = entry.path();
        if path.is_file() {
            files.push(path);
        }
    }
    let mut documents = Vec::new();
    let mut warnings = Vec::new();
    for path in files {
        let id = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        match fs::read_to_string(&path) {
            Ok(text) => documents.push(RawDocument {
                id,
                text,
                language,
            }),
            Err(err) => warnings.push(format!("skipped {}: {err}", path.display())),
        }
    }
    documents.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(LoadOutcome {
        documents,
        warnings,
    })
}

/// Like [`load_corpus`], but subdirectories are treated as clusters:
/// with `concat` each cluster becomes one document (files concatenated
/// in lexicographic order, id = directory name); without it each file
/// becomes `cluster_file`.
pub fn load_corpus_clustered(dir: &Path, language: Language, concat: bool) -> Result<LoadOutcome> {
    let mut outcome = load_corpus(dir, language)?;
    let entries = fs::read_dir(dir).map_err(|source| Error::CorpusDir {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut subdirs = Vec::new();
    for entry in entries.flatten() {
        let path = entry.path();
        if path.is_dir() {
            subdirs.push(path);
        }
    }
    subdirs.sort();
    for sub in subdirs {
        let cluster = sub
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let inner = load_corpus(&sub, language)?;
        outcome.warnings.extend(inner.warnings);
        if concat {
            let text = inner
                .documents
                .iter()
                .map(|d| d.text.as_str())
                .collect::<Vec<_>>()
                .join("\n");
            outcome.documents.push(RawDocument {
                id: cluster,
                text,
                language,
            });
        } else {
            for doc in inner.documents {
                outcome.documents.push(RawDocument {
                    id: format!("{cluster}_{}", doc.id),
                    text: doc.text,
                    language,
                });
            }
        }
    }
    outcome.documents.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(LoadOutcome {
        documents: outcome.documents,
        warnings: outcome.warnings,
    })
}

/// Split at `.`, `!` and `?`. A dot does not split after a single
/// uppercase initial or a configured abbreviation, nor inside a decimal
/// number. Consecutive terminators stay attached to their sentence.
pub fn split_sentences(doc: &RawDocument) -> Vec<String> {
    split_text(&doc.text, &AbbreviationList::bundled(doc.language))
}

pub fn split_text(text: &str, abbreviations: &AbbreviationList) -> Vec<String> {
    let chars: Vec<char> = text.chars().collect();
    let mut sentences = Vec::new();
    let mut start = 0;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let boundary = match c {
            '!' | '?' => true,
            '.' => is_boundary_dot(&chars, i, abbreviations),
            _ => false,
        };
        if boundary {
            let mut j = i + 1;
            while j < chars.len() && matches!(chars[j], '.' | '!' | '?') {
                j += 1;
            }
            push_trimmed(&chars[start..j], &mut sentences);
            start = j;
            i = j;
        } else {
            i += 1;
        }
    }
    if start < chars.len() {
        push_trimmed(&chars[start..], &mut sentences);
    }
    sentences
}

fn push_trimmed(chars: &[char], out: &mut Vec<String>) {
    let s: String = chars.iter().collect();
    let trimmed = s.trim();
    if !trimmed.is_empty() {
        out.push(trimmed.to_string());
    }
}

fn is_boundary_dot(chars: &[char], i: usize, abbreviations: &AbbreviationList) -> bool {
    // Decimal number: digit.digit
    if i > 0
        && i + 1 < chars.len()
        && chars[i - 1].is_ascii_digit()
        && chars[i + 1].is_ascii_digit()
    {
        return false;
    }
    // Word immediately before the dot.
    let mut s = i;
    while s > 0 && chars[s - 1].is_alphabetic() {
        s -= 1;
    }
    if s == i {
        return true; // no preceding word (e.g. after whitespace or punctuation)
    }
    let token: String = chars[s..i].iter().collect();
    if i - s == 1 && chars[s].is_uppercase() {
        return false; // an initial, as in a person's middle name
    }
    !abbreviations.contains(&token.to_lowercase())
}

/// Lowercase and split on every non-alphabetic character.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut cleaned = String::with_capacity(text.len());
    for c in text.chars() {
        if c.is_alphabetic() {
            cleaned.extend(c.to_lowercase());
        } else {
            cleaned.push(' ');
        }
    }
    cleaned.split_whitespace().map(str::to_string).collect()
}

/// Token frequencies over a whole document's lowercased,
/// punctuation-stripped tokens (stop-words included).
pub fn token_frequencies(text: &str) -> HashMap<String, u32> {
    let mut freqs = HashMap::new();
    for token in tokenize(text) {
        *freqs.entry(token).or_insert(0) += 1;
    }
    freqs
}

/// Filter one sentence: lowercase, strip punctuation and digits, drop
/// stop-words and words with document frequency below two. Order is
/// preserved; the result may be empty.
pub fn filter_sentence(
    surface: &str,
    stoplist: &StopList,
    doc_frequency: &HashMap<String, u32>,
) -> Vec<String> {
    filter_sentence_with(surface, stoplist, doc_frequency, DEFAULT_MIN_FREQUENCY)
}

pub fn filter_sentence_with(
    surface: &str,
    stoplist: &StopList,
    doc_frequency: &HashMap<String, u32>,
    min_frequency: u32,
) -> Vec<String> {
    tokenize(surface)
        .into_iter()
        .filter(|t| !stoplist.contains(t))
        .filter(|t| doc_frequency.get(t).copied().unwrap_or(0) >= min_frequency)
        .collect()
}

/// Run split + filter over a raw document.
pub fn build_document(raw: &RawDocument, stoplist: &StopList) -> Document {
    build_document_with_min_frequency(raw, stoplist, DEFAULT_MIN_FREQUENCY)
}

pub fn build_document_with_min_frequency(
    raw: &RawDocument,
    stoplist: &StopList,
    min_frequency: u32,
) -> Document {
    let freqs = token_frequencies(&raw.text);
    let sentences = split_sentences(raw)
        .into_iter()
        .enumerate()
        .map(|(index, surface)| {
            let tokens = filter_sentence_with(&surface, stoplist, &freqs, min_frequency);
            Sentence {
                index,
                surface,
                tokens,
            }
        })
        .collect();
    Document {
        id: raw.id.clone(),
        language: raw.language,
        sentences,
    }
}
