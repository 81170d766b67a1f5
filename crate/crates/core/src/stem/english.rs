//! English suffix-stripping stemmer.
//!
//! Works on a marked character buffer: `y` that can only act as a
//! consonant is uppercased to `Y` while stemming, and the R1/R2 region
//! starts are fixed before any suffix is touched.

use super::{ends_with, find_longest, suffix_len};

const DOUBLES: [&str; 9] = ["bb", "dd", "ff", "gg", "mm", "nn", "pp", "rr", "tt"];
const LI_ENDINGS: [char; 10] = ['c', 'd', 'e', 'g', 'h', 'k', 'm', 'n', 'r', 't'];

// Irregular forms resolved before the algorithm proper.
const EXCEPTIONS: [(&str, &str); 18] = [
    ("skis", "ski"),
    ("skies", "sky"),
    ("dying", "die"),
    ("lying", "lie"),
    ("tying", "tie"),
    ("idly", "idl"),
    ("gently", "gentl"),
    ("ugly", "ugli"),
    ("early", "earli"),
    ("only", "onli"),
    ("singly", "singl"),
    ("sky", "sky"),
    ("news", "news"),
    ("howe", "howe"),
    ("atlas", "atlas"),
    ("cosmos", "cosmos"),
    ("bias", "bias"),
    ("andes", "andes"),
];

// Words left alone once step 1a has run.
const POST_1A_INVARIANT: [&str; 8] = [
    "inning", "outing", "canning", "herring", "earring", "proceed", "exceed", "succeed",
];

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u' | 'y')
}

fn word_of(w: &[char]) -> String {
    w.iter().collect()
}

/// R1 is the region after the first non-vowel following a vowel; R2 is
/// the same rule applied within R1. A handful of prefixes pin R1 early.
fn regions(w: &[char]) -> (usize, usize) {
    let text = word_of(w);
    let mut r1 = w.len();
    for prefix in ["gener", "commun", "arsen"] {
        if text.starts_with(prefix) {
            r1 = prefix.len();
            break;
        }
    }
    if r1 == w.len() {
        r1 = region_after_vc(w, 0);
    }
    let r2 = region_after_vc(w, r1);
    (r1, r2)
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

fn ends_with_short_syllable(w: &[char]) -> bool {
    let n = w.len();
    if n == 2 {
        return is_vowel(w[0]) && !is_vowel(w[1]);
    }
    if n >= 3 {
        let last = w[n - 1];
        return is_vowel(w[n - 2])
            && !is_vowel(last)
            && !matches!(last, 'w' | 'x' | 'Y')
            && !is_vowel(w[n - 3]);
    }
    false
}

fn is_short_word(w: &[char], r1: usize) -> bool {
    r1 >= w.len() && ends_with_short_syllable(w)
}

fn contains_vowel(w: &[char]) -> bool {
    w.iter().copied().any(is_vowel)
}

fn truncate_suffix(w: &mut Vec<char>, suffix: &str) {
    let keep = w.len() - suffix_len(suffix);
    w.truncate(keep);
}

fn replace_suffix(w: &mut Vec<char>, suffix: &str, with: &str) {
    truncate_suffix(w, suffix);
    w.extend(with.chars());
}

pub fn stem(word: &str) -> String {
    let lower = word.to_lowercase();
    let mut w: Vec<char> = lower.chars().collect();
    if w.len() <= 2 {
        return lower;
    }
    if w[0] == '\'' {
        w.remove(0);
    }
    let current = word_of(&w);
    for (form, stemmed) in EXCEPTIONS {
        if current == form {
            return stemmed.to_string();
        }
    }

    // Mark y that cannot be a vowel: at the start or right after a vowel.
    if w[0] == 'y' {
        w[0] = 'Y';
    }
    for i in 1..w.len() {
        if w[i] == 'y' && is_vowel(w[i - 1]) {
            w[i] = 'Y';
        }
    }
    let (r1, r2) = regions(&w);

    step0(&mut w);
    step1a(&mut w);
    if POST_1A_INVARIANT.contains(&word_of(&w).as_str()) {
        return word_of(&w);
    }
    step1b(&mut w, r1);
    step1c(&mut w);
    step2(&mut w, r1);
    step3(&mut w, r1, r2);
    step4(&mut w, r2);
    step5(&mut w, r1, r2);

    w.iter()
        .map(|&c| if c == 'Y' { 'y' } else { c })
        .collect()
}

fn step0(w: &mut Vec<char>) {
    for suffix in ["'s'", "'s", "'"] {
        if ends_with(w, suffix) {
            truncate_suffix(w, suffix);
            return;
        }
    }
}

fn step1a(w: &mut Vec<char>) {
    const TABLE: [(&str, u8); 6] = [
        ("sses", 0),
        ("ied", 1),
        ("ies", 1),
        ("us", 2),
        ("ss", 2),
        ("s", 3),
    ];
    let Some((suffix, tag)) = find_longest(w, &TABLE) else {
        return;
    };
    match tag {
        0 => replace_suffix(w, suffix, "ss"),
        1 => {
            // "i" after more than one letter, "ie" otherwise.
            if w.len() - 3 > 1 {
                replace_suffix(w, suffix, "i");
            } else {
                replace_suffix(w, suffix, "ie");
            }
        }
        2 => {}
        _ => {
            // Delete s when a vowel occurs before the previous letter.
            if w.len() >= 3 && contains_vowel(&w[..w.len() - 2]) {
                w.pop();
            }
        }
    }
}

fn step1b(w: &mut Vec<char>, r1: usize) {
    const TABLE: [(&str, u8); 6] = [
        ("eedly", 0),
        ("eed", 0),
        ("ingly", 1),
        ("edly", 1),
        ("ing", 1),
        ("ed", 1),
    ];
    let Some((suffix, tag)) = find_longest(w, &TABLE) else {
        return;
    };
    if tag == 0 {
        if w.len() - suffix_len(suffix) >= r1 {
            replace_suffix(w, suffix, "ee");
        }
        return;
    }
    if !contains_vowel(&w[..w.len() - suffix_len(suffix)]) {
        return;
    }
    truncate_suffix(w, suffix);
    if ["at", "bl", "iz"].iter().any(|s| ends_with(w, s)) {
        w.push('e');
    } else if DOUBLES.iter().any(|s| ends_with(w, s)) {
        w.pop();
    } else if is_short_word(w, r1) {
        w.push('e');
    }
}

fn step1c(w: &mut [char]) {
    let n = w.len();
    if n >= 3 && matches!(w[n - 1], 'y' | 'Y') && !is_vowel(w[n - 2]) {
        w[n - 1] = 'i';
    }
}

fn step2(w: &mut Vec<char>, r1: usize) {
    const TABLE: [(&str, u8); 24] = [
        ("ational", 0),
        ("ization", 1),
        ("iveness", 2),
        ("fulness", 3),
        ("ousness", 4),
        ("tional", 5),
        ("biliti", 6),
        ("lessli", 7),
        ("entli", 8),
        ("ation", 0),
        ("alism", 9),
        ("aliti", 9),
        ("ousli", 4),
        ("iviti", 2),
        ("fulli", 3),
        ("enci", 10),
        ("anci", 11),
        ("abli", 12),
        ("izer", 1),
        ("ator", 0),
        ("alli", 9),
        ("bli", 6),
        ("ogi", 13),
        ("li", 14),
    ];
    let Some((suffix, tag)) = find_longest(w, &TABLE) else {
        return;
    };
    let start = w.len() - suffix_len(suffix);
    if start < r1 {
        return;
    }
    match tag {
        0 => replace_suffix(w, suffix, "ate"),
        1 => replace_suffix(w, suffix, "ize"),
        2 => replace_suffix(w, suffix, "ive"),
        3 => replace_suffix(w, suffix, "ful"),
        4 => replace_suffix(w, suffix, "ous"),
        5 => replace_suffix(w, suffix, "tion"),
        6 => replace_suffix(w, suffix, "ble"),
        7 => replace_suffix(w, suffix, "less"),
        8 => replace_suffix(w, suffix, "ent"),
        9 => replace_suffix(w, suffix, "al"),
        10 => replace_suffix(w, suffix, "ence"),
        11 => replace_suffix(w, suffix, "ance"),
        12 => replace_suffix(w, suffix, "able"),
        13 => {
            if start >= 1 && w[start - 1] == 'l' {
                replace_suffix(w, suffix, "og");
            }
        }
        _ => {
            if start >= 1 && LI_ENDINGS.contains(&w[start - 1]) {
                truncate_suffix(w, suffix);
            }
        }
    }
}

fn step3(w: &mut Vec<char>, r1: usize, r2: usize) {
    const TABLE: [(&str, u8); 9] = [
        ("ational", 0),
        ("tional", 1),
        ("alize", 2),
        ("icate", 3),
        ("iciti", 3),
        ("ative", 4),
        ("ical", 3),
        ("ness", 5),
        ("ful", 5),
    ];
    let Some((suffix, tag)) = find_longest(w, &TABLE) else {
        return;
    };
    let start = w.len() - suffix_len(suffix);
    if start < r1 {
        return;
    }
    match tag {
        0 => replace_suffix(w, suffix, "ate"),
        1 => replace_suffix(w, suffix, "tion"),
        2 => replace_suffix(w, suffix, "al"),
        3 => replace_suffix(w, suffix, "ic"),
        4 => {
            if start >= r2 {
                truncate_suffix(w, suffix);
            }
        }
        _ => truncate_suffix(w, suffix),
    }
}

fn step4(w: &mut Vec<char>, r2: usize) {
    const TABLE: [(&str, u8); 18] = [
        ("ement", 0),
        ("ance", 0),
        ("ence", 0),
        ("able", 0),
        ("ible", 0),
        ("ment", 0),
        ("ant", 0),
        ("ent", 0),
        ("ism", 0),
        ("ate", 0),
        ("iti", 0),
        ("ous", 0),
        ("ive", 0),
        ("ize", 0),
        ("ion", 1),
        ("al", 0),
        ("er", 0),
        ("ic", 0),
    ];
    let Some((suffix, tag)) = find_longest(w, &TABLE) else {
        return;
    };
    let start = w.len() - suffix_len(suffix);
    if start < r2 {
        return;
    }
    if tag == 1 {
        if start >= 1 && matches!(w[start - 1], 's' | 't') {
            truncate_suffix(w, suffix);
        }
    } else {
        truncate_suffix(w, suffix);
    }
}

fn step5(w: &mut Vec<char>, r1: usize, r2: usize) {
    let n = w.len();
    if n == 0 {
        return;
    }
    if w[n - 1] == 'e' {
        let in_r2 = n > r2;
        let in_r1 = n > r1;
        if in_r2 || (in_r1 && !ends_with_short_syllable(&w[..n - 1])) {
            w.pop();
        }
        return;
    }
    if w[n - 1] == 'l' && n > r2 && n >= 2 && w[n - 2] == 'l' {
        w.pop();
    }
}
