//! Rule-based suffix-stripping stemmers, bundled per language.
//!
//! Each stemmer works on a marked copy of the word: region boundaries
//! (R1/R2 and, for Spanish and French, RV) are fixed positions computed
//! up front, and every step strips or rewrites the longest matching
//! suffix whose region test passes. No external resources are consulted.

mod english;
mod french;
mod spanish;

use crate::Language;

/// Stem a single lowercase token with the stemmer for `language`.
pub fn stem(language: Language, token: &str) -> String {
    match language {
        Language::English => english::stem(token),
        Language::Spanish => spanish::stem(token),
        Language::French => french::stem(token),
    }
}

/// True if `w` ends with `suffix` (chars, not bytes).
pub(crate) fn ends_with(w: &[char], suffix: &str) -> bool {
    let s: Vec<char> = suffix.chars().collect();
    w.len() >= s.len() && w[w.len() - s.len()..] == s[..]
}

/// Longest entry of `table` that is a suffix of `w`, with its tag.
pub(crate) fn find_longest<'t>(w: &[char], table: &'t [(&'t str, u8)]) -> Option<(&'t str, u8)> {
    table
        .iter()
        .filter(|(s, _)| ends_with(w, s))
        .max_by_key(|(s, _)| s.chars().count())
        .map(|&(s, tag)| (s, tag))
}

/// Char length of a suffix literal.
pub(crate) fn suffix_len(s: &str) -> usize {
    s.chars().count()
}
