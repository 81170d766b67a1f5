//! Spanish suffix-stripping stemmer.

use super::{ends_with, find_longest, suffix_len};

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u' | 'á' | 'é' | 'í' | 'ó' | 'ú' | 'ü')
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

/// RV: after the next vowel when the second letter is a consonant; after
/// the next consonant when the word starts with two vowels; otherwise
/// after the third letter.
fn rv_pos(w: &[char]) -> usize {
    let n = w.len();
    if n < 3 {
        return n;
    }
    if !is_vowel(w[1]) {
        for (i, &c) in w.iter().enumerate().skip(2) {
            if is_vowel(c) {
                return i + 1;
            }
        }
        n
    } else if is_vowel(w[0]) {
        for (i, &c) in w.iter().enumerate().skip(2) {
            if !is_vowel(c) {
                return i + 1;
            }
        }
        n
    } else {
        3
    }
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

/// Drop a trailing suffix when it sits inside `region`; reports success.
fn strip_in(w: &mut Vec<char>, suffix: &str, region: usize) -> bool {
    if starts_in(w, suffix, region) {
        truncate_suffix(w, suffix);
        true
    } else {
        false
    }
}

pub fn stem(word: &str) -> String {
    let lower = word.to_lowercase();
    let mut w: Vec<char> = lower.chars().collect();
    if w.len() < 3 {
        return lower;
    }
    let rv = rv_pos(&w);
    let r1 = region_after_vc(&w, 0);
    let r2 = region_after_vc(&w, r1);

    step0_pronoun(&mut w, rv);
    if !step1(&mut w, r1, r2) && !step2a(&mut w, rv) {
        step2b(&mut w, rv);
    }
    step3(&mut w, rv);

    w.iter()
        .map(|&c| match c {
            'á' => 'a',
            'é' => 'e',
            'í' => 'i',
            'ó' => 'o',
            'ú' => 'u',
            other => other,
        })
        .collect()
}

const PRONOUNS: [&str; 13] = [
    "selas", "selos", "sela", "selo", "las", "les", "los", "nos", "me", "se", "la", "le", "lo",
];

fn step0_pronoun(w: &mut Vec<char>, rv: usize) {
    let Some(pron) = PRONOUNS
        .iter()
        .filter(|p| ends_with(w, p))
        .max_by_key(|p| p.chars().count())
    else {
        return;
    };
    let stem_end = w.len() - suffix_len(pron);
    let head = &w[..stem_end];

    // Accented gerund/infinitive endings lose both pronoun and accent.
    const ACCENTED: [(&str, &str); 5] = [
        ("iéndo", "iendo"),
        ("ándo", "ando"),
        ("ár", "ar"),
        ("ér", "er"),
        ("ír", "ir"),
    ];
    for (acc, plain) in ACCENTED {
        if ends_with(head, acc) && stem_end - suffix_len(acc) >= rv {
            w.truncate(stem_end);
            let keep = w.len() - suffix_len(acc);
            w.truncate(keep);
            w.extend(plain.chars());
            return;
        }
    }
    for plain in ["iendo", "ando", "ar", "er", "ir"] {
        if ends_with(head, plain) && stem_end - suffix_len(plain) >= rv {
            w.truncate(stem_end);
            return;
        }
    }
    if ends_with(head, "yendo") {
        let y_start = stem_end - 5;
        if y_start >= 1 && y_start > rv && w[y_start - 1] == 'u' {
            w.truncate(stem_end);
        }
    }
}

fn step1(w: &mut Vec<char>, r1: usize, r2: usize) -> bool {
    const TABLE: [(&str, u8); 46] = [
        ("amientos", 0),
        ("imientos", 0),
        ("amiento", 0),
        ("imiento", 0),
        ("aciones", 1),
        ("uciones", 3),
        ("adoras", 1),
        ("adores", 1),
        ("ancias", 1),
        ("logías", 2),
        ("encias", 4),
        ("amente", 5),
        ("idades", 7),
        ("anzas", 0),
        ("ismos", 0),
        ("ables", 0),
        ("ibles", 0),
        ("istas", 0),
        ("adora", 1),
        ("ación", 1),
        ("antes", 1),
        ("ancia", 1),
        ("logía", 2),
        ("ución", 3),
        ("encia", 4),
        ("mente", 6),
        ("anza", 0),
        ("icos", 0),
        ("icas", 0),
        ("ismo", 0),
        ("able", 0),
        ("ible", 0),
        ("ista", 0),
        ("osos", 0),
        ("osas", 0),
        ("idad", 7),
        ("ivas", 8),
        ("ivos", 8),
        ("ador", 1),
        ("ante", 1),
        ("ico", 0),
        ("ica", 0),
        ("oso", 0),
        ("osa", 0),
        ("iva", 8),
        ("ivo", 8),
    ];
    let Some((suffix, tag)) = find_longest(w, &TABLE) else {
        return false;
    };
    let start = w.len() - suffix_len(suffix);
    match tag {
        0 => strip_in(w, suffix, r2),
        1 => {
            if start >= r2 {
                truncate_suffix(w, suffix);
                let _ = strip_in(w, "ic", r2);
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
                replace_suffix(w, suffix, "ente");
                true
            } else {
                false
            }
        }
        5 => {
            // amente: R1, with iv(at) / os / ic / ad follow-ups in R2.
            if start >= r1 {
                truncate_suffix(w, suffix);
                if strip_in(w, "iv", r2) {
                    let _ = strip_in(w, "at", r2);
                } else {
                    for s in ["os", "ic", "ad"] {
                        if strip_in(w, s, r2) {
                            break;
                        }
                    }
                }
                true
            } else {
                false
            }
        }
        6 => {
            if start >= r2 {
                truncate_suffix(w, suffix);
                for s in ["ante", "able", "ible"] {
                    if strip_in(w, s, r2) {
                        break;
                    }
                }
                true
            } else {
                false
            }
        }
        7 => {
            if start >= r2 {
                truncate_suffix(w, suffix);
                for s in ["abil", "ic", "iv"] {
                    if strip_in(w, s, r2) {
                        break;
                    }
                }
                true
            } else {
                false
            }
        }
        _ => {
            if start >= r2 {
                truncate_suffix(w, suffix);
                let _ = strip_in(w, "at", r2);
                true
            } else {
                false
            }
        }
    }
}

fn step2a(w: &mut Vec<char>, rv: usize) -> bool {
    const TABLE: [&str; 12] = [
        "yeron", "yendo", "yamos", "yais", "yan", "yen", "yas", "yes", "ya", "ye", "yo", "yó",
    ];
    let Some(suffix) = TABLE
        .iter()
        .filter(|s| ends_with(w, s))
        .max_by_key(|s| s.chars().count())
    else {
        return false;
    };
    let start = w.len() - suffix_len(suffix);
    if start >= rv && start >= 1 && start > rv && w[start - 1] == 'u' {
        truncate_suffix(w, suffix);
        true
    } else {
        false
    }
}

// The "en/es/éis/emos" group also drops a preceding u after g.
const GU_GROUP: [&str; 4] = ["emos", "éis", "en", "es"];

const VERB_SUFFIXES: [&str; 92] = [
    "aríamos", "eríamos", "iríamos", "iéramos", "iésemos", "aríais", "eríais", "iríais",
    "ierais", "ieseis", "asteis", "isteis", "ábamos", "áramos", "ásemos", "aremos", "eremos",
    "iremos", "arían", "arías", "aréis", "erían", "erías", "eréis", "irían", "irías", "iréis",
    "ieran", "iesen", "ieron", "iendo", "ieras", "ieses", "abais", "arais", "aseis", "íamos",
    "arán", "arás", "aría", "erán", "erás", "ería", "irán", "irás", "iría", "iera", "iese",
    "aste", "iste", "aban", "aran", "asen", "aron", "ando", "abas", "adas", "idas", "aras",
    "ases", "íais", "ados", "idos", "amos", "imos", "ará", "aré", "erá", "eré", "irá", "iré",
    "aba", "ada", "ida", "ara", "ase", "ían", "ado", "ido", "ías", "áis", "ió", "an",
    "ar", "er", "ir", "as", "ís", "ía", "ad", "ed", "id",
];

fn step2b(w: &mut Vec<char>, rv: usize) -> bool {
    let gu_best = GU_GROUP
        .iter()
        .filter(|s| ends_with(w, s))
        .max_by_key(|s| s.chars().count())
        .copied();
    let plain_best = VERB_SUFFIXES
        .iter()
        .filter(|s| ends_with(w, s))
        .max_by_key(|s| s.chars().count())
        .copied();
    let (suffix, is_gu) = match (gu_best, plain_best) {
        (Some(g), Some(p)) if suffix_len(g) >= suffix_len(p) => (g, true),
        (Some(_), Some(p)) => (p, false),
        (Some(g), None) => (g, true),
        (None, Some(p)) => (p, false),
        (None, None) => return false,
    };
    let start = w.len() - suffix_len(suffix);
    if start < rv {
        return false;
    }
    truncate_suffix(w, suffix);
    if is_gu && ends_with(w, "gu") && w.len() > rv {
        w.pop();
    }
    true
}

fn step3(w: &mut Vec<char>, rv: usize) {
    for s in ["os", "a", "o", "á", "í", "ó"] {
        if starts_in(w, s, rv) {
            truncate_suffix(w, s);
            return;
        }
    }
    for s in ["e", "é"] {
        if starts_in(w, s, rv) {
            truncate_suffix(w, s);
            if ends_with(w, "gu") && w.len() > rv {
                w.pop();
            }
            return;
        }
    }
}
