//! Bundled per-language data: stop-lists and abbreviation lists.
//!
//! Both file formats are one lowercase entry per line with `#` comment
//! lines ignored; the same parser backs user-supplied files.

use crate::Language;

pub(crate) const STOPWORDS_EN: &str = include_str!("../data/stopwords/en.txt");
pub(crate) const STOPWORDS_ES: &str = include_str!("../data/stopwords/es.txt");
pub(crate) const STOPWORDS_FR: &str = include_str!("../data/stopwords/fr.txt");

pub(crate) const ABBREV_EN: &str = include_str!("../data/abbreviations/en.txt");
pub(crate) const ABBREV_ES: &str = include_str!("../data/abbreviations/es.txt");
pub(crate) const ABBREV_FR: &str = include_str!("../data/abbreviations/fr.txt");

pub(crate) fn stopwords(lang: Language) -> &'static str {
    match lang {
        Language::English => STOPWORDS_EN,
        Language::Spanish => STOPWORDS_ES,
        Language::French => STOPWORDS_FR,
    }
}

pub(crate) fn abbreviations(lang: Language) -> &'static str {
    match lang {
        Language::English => ABBREV_EN,
        Language::Spanish => ABBREV_ES,
        Language::French => ABBREV_FR,
    }
}

/// Parse a word-per-line list: trims whitespace, lowercases, skips blank
/// lines and `#` comments.
pub(crate) fn parse_word_list(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_lowercase)
        .collect()
}
