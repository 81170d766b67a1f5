//! French suffix-stripping stemmer.
//!
//! The prelude uppercases `u`/`i`/`y` occurrences that act as consonants
//! (U/I/Y); the postlude restores them. Steps follow the usual two-region
//! scheme plus an RV region for verb endings.

use super::{ends_with, find_longest, suffix_len};

fn is_vowel(c: char) -> bool {
    matches!(
        c,
        'a' | 'e' | 'i' | 'o' | 'u' | 'y' | 'â' | 'à' | 'ë' | 'é' | 'ê' | 'è' | 'ï' | 'î' | 'ô'
            | 'û' | 'ù'
    )
}

fn region_after_vc(w: &[char], from: usize) -> usize {
    let mut i = from;
    while i < w.len() && !is_vowel(w[i]) {
        i += 1;
    }
    while i < w.len() && is_vowel(w[i]) {
        i += 1;
    }
    if i < w.len() {
        i + 1
    } else {
        w.len()
    }
}

/// RV: after the third letter for words starting with two vowels or one
/// of "par"/"col"/"tap", otherwise after the first vowel not at the
/// start of the word.
fn rv_pos(w: &[char]) -> usize {
    let n = w.len();
    if n < 3 {
        return n;
    }
    let head: String = w[..3].iter().collect();
    if matches!(head.as_str(), "par" | "col" | "tap") {
        return 3;
    }
    if is_vowel(w[0]) && is_vowel(w[1]) {
        return 3;
    }
    for (i, &c) in w.iter().enumerate().skip(1) {
        if is_vowel(c) {
            return i + 1;
        }
    }
    n
}

fn truncate_suffix(w: &mut Vec<char>, suffix: &str) {
    let keep = w.len() - suffix_len(suffix);
    w.truncate(keep);
}

fn replace_suffix(w: &mut Vec<char>, suffix: &str, with: &str) {
    truncate_suffix(w, suffix);
    w.extend(with.chars());
}

fn starts_in(w: &[char], suffix: &str, region: usize) -> bool {
    ends_with(w, suffix) && w.len() - suffix_len(suffix) >= region
}

fn strip_in(w: &mut Vec<char>, suffix: &str, region: usize) -> bool {
    if starts_in(w, suffix, region) {
        truncate_suffix(w, suffix);
        true
    } else {
        false
    }
}

#[allow(clippy::needless_range_loop)] // look-around over neighbors
fn prelude(w: &mut [char]) {
    for i in 0..w.len() {
        let c = w[i];
        let prev_vowel = i > 0 && is_vowel(w[i - 1]);
        let next_vowel = i + 1 < w.len() && is_vowel(w[i + 1]);
        match c {
            'u' if i > 0 && w[i - 1] == 'q' => w[i] = 'U',
            'u' if prev_vowel && next_vowel => w[i] = 'U',
            'i' if prev_vowel && next_vowel => w[i] = 'I',
            'y' if prev_vowel || next_vowel => w[i] = 'Y',
            _ => {}
        }
    }
}

pub fn stem(word: &str) -> String {
    let lower = word.to_lowercase();
    let mut w: Vec<char> = lower.chars().collect();
    if w.len() < 3 {
        return lower;
    }
    prelude(&mut w);
    let rv = rv_pos(&w);
    let r1 = region_after_vc(&w, 0);
    let r2 = region_after_vc(&w, r1);

    let (altered1, ment_found) = step1(&mut w, r1, r2, rv);
    let mut altered = altered1;
    if !altered1 || ment_found {
        let removed_2a = step2a(&mut w, rv);
        altered = removed_2a;
        if !removed_2a {
            altered = step2b(&mut w, r2, rv);
        }
    }
    if altered {
        // Step 3.
        let n = w.len();
        if n > 0 && w[n - 1] == 'Y' {
            w[n - 1] = 'i';
        } else if n > 0 && w[n - 1] == 'ç' {
            w[n - 1] = 'c';
        }
    } else {
        step4(&mut w, r2, rv);
    }
    step5_undouble(&mut w);
    step6_unaccent(&mut w);

    w.iter()
        .map(|&c| match c {
            'I' => 'i',
            'U' => 'u',
            'Y' => 'y',
            other => other,
        })
        .collect()
}

/// Standard suffix removal. Returns (word altered, ment-family suffix seen).
fn step1(w: &mut Vec<char>, r1: usize, r2: usize, rv: usize) -> (bool, bool) {
    const TABLE: [(&str, u8); 40] = [
        ("issements", 10),
        ("issement", 10),
        ("atrices", 1),
        ("amment", 11),
        ("emment", 12),
        ("ements", 5),
        ("atrice", 1),
        ("ateurs", 1),
        ("ations", 1),
        ("logies", 2),
        ("usions", 3),
        ("utions", 3),
        ("ement", 5),
        ("ences", 4),
        ("ances", 0),
        ("iqUes", 0),
        ("ismes", 0),
        ("ables", 0),
        ("istes", 0),
        ("euses", 9),
        ("ments", 13),
        ("ateur", 1),
        ("ation", 1),
        ("logie", 2),
        ("usion", 3),
        ("ution", 3),
        ("ence", 4),
        ("ance", 0),
        ("iqUe", 0),
        ("isme", 0),
        ("able", 0),
        ("iste", 0),
        ("euse", 9),
        ("ment", 13),
        ("eaux", 6),
        ("ités", 7),
        ("ives", 8),
        ("aux", 14),
        ("ité", 7),
        ("eux", 0),
    ];
    // "if"/"ifs"/"ive" are checked after the table: every table entry that
    // shares an ending with them is longer, so a fallthrough is safe.
    let found = find_longest(w, &TABLE);
    let Some((suffix, tag)) = found else {
        for s in ["ives", "ifs", "ive", "if"] {
            if ends_with(w, s) {
                return (apply_if_ive(w, s, r2), false);
            }
        }
        return (false, false);
    };
    let start = w.len() - suffix_len(suffix);
    let altered = match tag {
        0 => strip_in(w, suffix, r2),
        1 => {
            if start >= r2 {
                truncate_suffix(w, suffix);
                if ends_with(w, "ic")
                    && !strip_in(w, "ic", r2) {
                        replace_suffix(w, "ic", "iqU");
                    }
                true
            } else {
                false
            }
        }
        2 => {
            if start >= r2 {
                replace_suffix(w, suffix, "log");
                true
            } else {
                false
            }
        }
        3 => {
            if start >= r2 {
                replace_suffix(w, suffix, "u");
                true
            } else {
                false
            }
        }
        4 => {
            if start >= r2 {
                replace_suffix(w, suffix, "ent");
                true
            } else {
                false
            }
        }
        5 => {
            // ement(s): delete in RV, then tidy the exposed stem.
            if start >= rv {
                truncate_suffix(w, suffix);
                if strip_in(w, "iv", r2) {
                    let _ = strip_in(w, "at", r2);
                } else if ends_with(w, "eus") {
                    if !strip_in(w, "eus", r2) && starts_in(w, "eus", r1) {
                        replace_suffix(w, "eus", "eux");
                    }
                } else if strip_in(w, "abl", r2) || strip_in(w, "iqU", r2) {
                } else if starts_in(w, "ièr", rv) {
                    replace_suffix(w, "ièr", "i");
                } else if starts_in(w, "Ièr", rv) {
                    replace_suffix(w, "Ièr", "i");
                }
                true
            } else {
                false
            }
        }
        6 => {
            replace_suffix(w, suffix, "eau");
            true
        }
        7 => {
            // ité(s): delete in R2 with abil/ic/iv follow-ups.
            if start >= r2 {
                truncate_suffix(w, suffix);
                if ends_with(w, "abil") {
                    if !strip_in(w, "abil", r2) {
                        replace_suffix(w, "abil", "abl");
                    }
                } else if ends_with(w, "ic") {
                    if !strip_in(w, "ic", r2) {
                        replace_suffix(w, "ic", "iqU");
                    }
                } else {
                    let _ = strip_in(w, "iv", r2);
                }
                true
            } else {
                false
            }
        }
        8 => apply_if_ive(w, suffix, r2),
        9 => {
            if start >= r2 {
                truncate_suffix(w, suffix);
                true
            } else if start >= r1 {
                replace_suffix(w, suffix, "eux");
                true
            } else {
                false
            }
        }
        10 => {
            if start >= r1 && start >= 1 && !is_vowel(w[start - 1]) {
                truncate_suffix(w, suffix);
                true
            } else {
                false
            }
        }
        11 => {
            if start >= rv {
                replace_suffix(w, suffix, "ant");
                true
            } else {
                false
            }
        }
        12 => {
            if start >= rv {
                replace_suffix(w, suffix, "ent");
                true
            } else {
                false
            }
        }
        13 => {
            // ment(s): deleted when a vowel inside RV precedes.
            if start >= 1 && is_vowel(w[start - 1]) && start > rv {
                truncate_suffix(w, suffix);
                true
            } else {
                false
            }
        }
        _ => {
            // aux -> al in R1.
            if start >= r1 {
                replace_suffix(w, suffix, "al");
                true
            } else {
                false
            }
        }
    };
    let ment_family = matches!(suffix, "amment" | "emment" | "ment" | "ments");
    (altered, ment_family)
}

fn apply_if_ive(w: &mut Vec<char>, suffix: &str, r2: usize) -> bool {
    if !starts_in(w, suffix, r2) {
        return false;
    }
    truncate_suffix(w, suffix);
    if strip_in(w, "at", r2) && ends_with(w, "ic") && !strip_in(w, "ic", r2) {
        replace_suffix(w, "ic", "iqU");
    }
    true
}

const I_VERB_SUFFIXES: [&str; 35] = [
    "issaIent", "issantes", "issions", "issante", "issants", "issais", "issait", "issant",
    "issent", "issiez", "issons", "iraIent", "irions", "isses", "issez", "îmes", "îtes", "irais",
    "irait", "irent", "irez", "iriez", "irons", "iront", "iras", "isse", "ies", "ira", "irai",
    "ais", "ait", "ir", "is", "it", "i",
];

fn step2a(w: &mut Vec<char>, rv: usize) -> bool {
    // "ie" and "ira" families all start with i; longest match then a
    // preceding non-vowel, both inside RV.
    let mut best: Option<&str> = None;
    for s in I_VERB_SUFFIXES.iter().copied().chain(std::iter::once("ie")) {
        if ends_with(w, s) && best.is_none_or(|b| suffix_len(s) > suffix_len(b)) {
            best = Some(s);
        }
    }
    let Some(suffix) = best else {
        return false;
    };
    let start = w.len() - suffix_len(suffix);
    if start >= rv && start >= 1 && start > rv && !is_vowel(w[start - 1]) {
        truncate_suffix(w, suffix);
        true
    } else {
        false
    }
}

const ER_SUFFIXES: [&str; 18] = [
    "eraIent", "erions", "èrent", "erais", "erait", "eriez", "erons", "eront", "erai", "eras",
    "erez", "ées", "era", "iez", "ée", "és", "er", "ez",
];
const A_SUFFIXES: [&str; 18] = [
    "assions", "assiez", "assent", "aIent", "antes", "asses", "âmes", "âtes", "ante", "ants",
    "asse", "ais", "ait", "ant", "ât", "ai", "as", "a",
];

fn step2b(w: &mut Vec<char>, r2: usize, rv: usize) -> bool {
    let ions = if starts_in(w, "ions", r2) && w.len() - 4 >= rv {
        Some("ions")
    } else {
        None
    };
    let er_best = ER_SUFFIXES
        .iter()
        .filter(|s| ends_with(w, s))
        .max_by_key(|s| suffix_len(s))
        .copied();
    let a_best = A_SUFFIXES
        .iter()
        .filter(|s| ends_with(w, s))
        .max_by_key(|s| suffix_len(s))
        .copied();

    // Longest match across the three groups; "ions" only counts when its
    // own region test holds.
    let mut suffix: Option<(&str, u8)> = None;
    let mut consider = |s: Option<&'static str>, tag: u8| {
        if let Some(s) = s {
            if suffix.is_none_or(|(cur, _)| suffix_len(s) > suffix_len(cur)) {
                suffix = Some((s, tag));
            }
        }
    };
    consider(er_best, 1);
    consider(a_best, 2);
    if ends_with(w, "ions") {
        // Competes for longest-match even when it will fail its test.
        if suffix.is_none_or(|(cur, _)| 4 > suffix_len(cur)) {
            suffix = Some(("ions", 0));
        }
    }
    let Some((suffix, tag)) = suffix else {
        return false;
    };
    match tag {
        0 => {
            if ions.is_some() {
                truncate_suffix(w, "ions");
                true
            } else {
                false
            }
        }
        1 => {
            if starts_in(w, suffix, rv) {
                truncate_suffix(w, suffix);
                true
            } else {
                false
            }
        }
        _ => {
            if starts_in(w, suffix, rv) {
                truncate_suffix(w, suffix);
                // A bare preceding e inside RV goes too.
                if !w.is_empty() && w[w.len() - 1] == 'e' && w.len() > rv {
                    w.pop();
                }
                true
            } else {
                false
            }
        }
    }
}

fn step4(w: &mut Vec<char>, r2: usize, rv: usize) {
    let n = w.len();
    if n >= 2 && w[n - 1] == 's' && !matches!(w[n - 2], 'a' | 'i' | 'o' | 'u' | 'è' | 's') {
        w.pop();
    }
    if starts_in(w, "ion", r2) && starts_in(w, "ion", rv) {
        let start = w.len() - 3;
        if start >= 1 && matches!(w[start - 1], 's' | 't') {
            truncate_suffix(w, "ion");
            return;
        }
    }
    for s in ["ière", "Ière", "ier", "Ier"] {
        if starts_in(w, s, rv) {
            replace_suffix(w, s, "i");
            return;
        }
    }
    if starts_in(w, "e", rv) {
        w.pop();
        return;
    }
    if starts_in(w, "ë", rv) && ends_with(&w[..w.len() - 1], "gu") {
        w.pop();
    }
}

fn step5_undouble(w: &mut Vec<char>) {
    for s in ["enn", "onn", "ett", "ell", "eill"] {
        if ends_with(w, s) {
            w.pop();
            return;
        }
    }
}

/// Unaccent a final é/è followed only by non-vowels.
fn step6_unaccent(w: &mut [char]) {
    let n = w.len();
    let mut j = n;
    while j > 0 && !is_vowel(w[j - 1]) {
        j -= 1;
    }
    if j < n && j > 0 && matches!(w[j - 1], 'é' | 'è') {
        w[j - 1] = 'e';
    }
}
