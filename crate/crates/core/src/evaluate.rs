//! Reference-free summary evaluation.
//!
//! Summary and source are compared through their stem n-gram profiles at
//! three grains: unigrams, within-sentence bigrams, and skip bigrams
//! allowing up to two intervening stems. The divergence is the sum over
//! source terms of absolute differences of log(count/total + 1), and
//! each divergence maps to a score in [0, 1] via 1/(1+D) (monotone, so
//! orderings do not depend on the mapping). Evaluation always stems,
//! independent of the normalization the summarizer used, and skips the
//! frequency floor so that short summaries keep their vocabulary.

use std::collections::BTreeMap;

use crate::corpus_io::{build_document_with_min_frequency, Document, RawDocument, StopList};
use crate::error::{Error, Result};
use crate::{stem, Language};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NgramGrain {
    Unigram,
    Bigram,
    /// Skip bigrams with 0, 1 or 2 intervening stems.
    Su4,
}

/// An n-gram key: a stem, optionally paired with a following stem.
pub type NgramKey = (String, Option<String>);

/// Counted n-grams of one text at one grain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NgramProfile {
    pub grain: NgramGrain,
    counts: BTreeMap<NgramKey, u64>,
    /// Sum of all counts (|T| or |S|).
    pub total: u64,
}

impl NgramProfile {
    pub fn count(&self, key: &NgramKey) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&NgramKey, u64)> {
        self.counts.iter().map(|(k, &v)| (k, v))
    }
}

/// Profile a preprocessed document: tokens are stemmed with the
/// document's language stemmer, n-grams never cross sentence boundaries.
pub fn profile(doc: &Document, grain: NgramGrain) -> NgramProfile {
    let stems: Vec<Vec<String>> = doc
        .sentences
        .iter()
        .map(|s| {
            s.tokens
                .iter()
                .map(|t| stem::stem(doc.language, t))
                .collect()
        })
        .collect();
    profile_stems(&stems, grain)
}

/// Profile already-stemmed sentences.
pub fn profile_stems(sentences: &[Vec<String>], grain: NgramGrain) -> NgramProfile {
    let mut counts: BTreeMap<NgramKey, u64> = BTreeMap::new();
    let mut bump = |key: NgramKey| {
        *counts.entry(key).or_insert(0) += 1;
    };
    for sentence in sentences {
        match grain {
            NgramGrain::Unigram => {
                for s in sentence {
                    bump((s.clone(), None));
                }
            }
            NgramGrain::Bigram => {
                for pair in sentence.windows(2) {
                    bump((pair[0].clone(), Some(pair[1].clone())));
                }
            }
            NgramGrain::Su4 => {
                for i in 0..sentence.len() {
                    for gap in 0..=2usize {
                        let j = i + 1 + gap;
                        if j < sentence.len() {
                            bump((sentence[i].clone(), Some(sentence[j].clone())));
                        }
                    }
                }
            }
        }
    }
    let total = counts.values().sum();
    NgramProfile {
        grain,
        counts,
        total,
    }
}

/// D(T||S) = sum over source terms of
/// |log(C_t_T/|T| + 1) - log(C_t_S/|S| + 1)| (natural log). An empty
/// summary contributes C_t_S/|S| = 0 for every term.
pub fn divergence(source: &NgramProfile, summary: &NgramProfile) -> Result<f64> {
    if source.total == 0 {
        return Err(Error::EmptySource);
    }
    let t_total = source.total as f64;
    let s_total = summary.total as f64;
    let mut d = 0.0;
    for (key, t_count) in source.iter() {
        let source_term = (t_count as f64 / t_total + 1.0).ln();
        let summary_term = if summary.total == 0 {
            0.0f64.ln_1p()
        } else {
            (summary.count(key) as f64 / s_total + 1.0).ln()
        };
        d += (source_term - summary_term).abs();
    }
    Ok(d)
}

/// Map a divergence to [0, 1]: score = 1/(1+D). Strictly decreasing,
/// score(0) = 1.
pub fn fresa_score(d: f64) -> f64 {
    1.0 / (1.0 + d)
}

/// Scores at the three grains plus their mean, with raw divergences.
#[derive(Debug, Clone, PartialEq)]
pub struct FresaReport {
    pub fresa1: f64,
    pub fresa2: f64,
    pub fresa_su4: f64,
    pub mean: f64,
    pub d1: f64,
    pub d2: f64,
    pub d_su4: f64,
}

/// Evaluate a summary document against its source document. Both are
/// expected to have passed the same preprocessing; stemming happens
/// here. A source with no bigrams at some grain contributes zero
/// divergence at that grain (nothing to diverge from).
pub fn evaluate_summary(source: &Document, summary: &Document) -> Result<FresaReport> {
    let source_uni = profile(source, NgramGrain::Unigram);
    if source_uni.total == 0 {
        return Err(Error::EmptySource);
    }
    let grain_divergence = |grain: NgramGrain| -> Result<f64> {
        let src = profile(source, grain);
        if src.total == 0 {
            return Ok(0.0);
        }
        divergence(&src, &profile(summary, grain))
    };
    let d1 = divergence(&source_uni, &profile(summary, NgramGrain::Unigram))?;
    let d2 = grain_divergence(NgramGrain::Bigram)?;
    let d_su4 = grain_divergence(NgramGrain::Su4)?;
    let (fresa1, fresa2, fresa_su4) = (fresa_score(d1), fresa_score(d2), fresa_score(d_su4));
    Ok(FresaReport {
        fresa1,
        fresa2,
        fresa_su4,
        mean: (fresa1 + fresa2 + fresa_su4) / 3.0,
        d1,
        d2,
        d_su4,
    })
}

/// Full evaluation from raw text: split, filter (no frequency floor),
/// stem, profile, diverge.
pub fn evaluate_text(
    source_text: &str,
    summary_text: &str,
    language: Language,
    stoplist: &StopList,
) -> Result<FresaReport> {
    let make = |id: &str, text: &str| {
        let raw = RawDocument {
            id: id.to_string(),
            text: text.to_string(),
            language,
        };
        build_document_with_min_frequency(&raw, stoplist, 1)
    };
    evaluate_summary(&make("source", source_text), &make("summary", summary_text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stems(rows: &[&[&str]]) -> Vec<Vec<String>> {
        rows.iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    #[test]
    fn bigram_profile_of_three_stems() {
        let p = profile_stems(&stems(&[&["a", "b", "c"]]), NgramGrain::Bigram);
        assert_eq!(p.total, 2);
        assert_eq!(p.count(&("a".into(), Some("b".into()))), 1);
        assert_eq!(p.count(&("b".into(), Some("c".into()))), 1);
    }

    #[test]
    fn su4_profile_of_four_stems_has_six_pairs() {
        let p = profile_stems(&stems(&[&["a", "b", "c", "d"]]), NgramGrain::Su4);
        assert_eq!(p.total, 6);
        for (x, y) in [
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ] {
            assert_eq!(p.count(&(x.into(), Some(y.into()))), 1, "({x},{y})");
        }
    }

    #[test]
    fn su4_counts_match_brute_force_on_random_sentences() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let len = rng.gen_range(0..12usize);
            let sentence: Vec<String> = (0..len)
                .map(|_| format!("w{}", rng.gen_range(0..6u32)))
                .collect();
            let p = profile_stems(std::slice::from_ref(&sentence), NgramGrain::Su4);
            // Brute force: all ordered pairs with gap <= 2.
            let mut want: BTreeMap<NgramKey, u64> = BTreeMap::new();
            for i in 0..sentence.len() {
                for j in (i + 1)..sentence.len() {
                    if j - i - 1 <= 2 {
                        *want
                            .entry((sentence[i].clone(), Some(sentence[j].clone())))
                            .or_insert(0) += 1;
                    }
                }
            }
            let got: BTreeMap<NgramKey, u64> =
                p.iter().map(|(k, v)| (k.clone(), v)).collect();
            assert_eq!(got, want);
            let k = sentence.len();
            let expected_total: usize = (0..=2usize)
                .map(|g| k.saturating_sub(1 + g))
                .sum();
            assert_eq!(p.total as usize, expected_total);
        }
    }

    #[test]
    fn bigrams_do_not_cross_sentence_boundaries() {
        let p = profile_stems(&stems(&[&["a", "b"], &["c", "d"]]), NgramGrain::Bigram);
        assert_eq!(p.total, 2);
        assert_eq!(p.count(&("b".into(), Some("c".into()))), 0);
    }

    #[test]
    fn empty_text_profiles_to_zero_total() {
        let p = profile_stems(&stems(&[]), NgramGrain::Unigram);
        assert_eq!(p.total, 0);
        assert_eq!(p.distinct(), 0);
    }

    #[test]
    fn divergence_of_identical_profiles_is_zero() {
        for grain in [NgramGrain::Unigram, NgramGrain::Bigram, NgramGrain::Su4] {
            let p = profile_stems(&stems(&[&["a", "b", "a", "c"]]), grain);
            assert_eq!(divergence(&p, &p).unwrap(), 0.0);
        }
    }

    #[test]
    fn divergence_against_empty_summary_is_log_two() {
        let source = profile_stems(&stems(&[&["a"]]), NgramGrain::Unigram);
        let summary = profile_stems(&stems(&[]), NgramGrain::Unigram);
        let d = divergence(&source, &summary).unwrap();
        assert!((d - 2.0f64.ln()).abs() < 1e-4, "{d}");
    }

    #[test]
    fn divergence_two_term_hand_example() {
        // Source {a:2, b:1}, |T|=3; summary {a:1}, |S|=1.
        let source = profile_stems(&stems(&[&["a", "a", "b"]]), NgramGrain::Unigram);
        let summary = profile_stems(&stems(&[&["a"]]), NgramGrain::Unigram);
        let d = divergence(&source, &summary).unwrap();
        assert!((d - 0.4700).abs() < 1e-4, "{d}");
        let s = fresa_score(d);
        assert!((s - 0.6803).abs() < 1e-4, "{s}");
    }

    #[test]
    fn fresa_score_fixed_points() {
        assert_eq!(fresa_score(0.0), 1.0);
        assert_eq!(fresa_score(1.0), 0.5);
    }

    #[test]
    fn score_is_order_preserving() {
        let pairs = [(0.1, 0.2), (0.0, 5.0), (1.5, 1.50001)];
        for (a, b) in pairs {
            assert!(a < b);
            assert!(fresa_score(a) > fresa_score(b));
        }
    }

    #[test]
    fn summary_terms_absent_from_source_contribute_nothing() {
        let source = profile_stems(&stems(&[&["a", "a"]]), NgramGrain::Unigram);
        let with_noise = profile_stems(&stems(&[&["a", "z"]]), NgramGrain::Unigram);
        let without = profile_stems(&stems(&[&["a", "b"]]), NgramGrain::Unigram);
        // Both summaries have |S|=2 and the same count of "a".
        assert_eq!(
            divergence(&source, &with_noise).unwrap(),
            divergence(&source, &without).unwrap()
        );
    }

    #[test]
    fn under_represented_term_contribution_shrinks_when_summary_gains_it() {
        // Direct formula evaluation: while the term stays at or below its
        // source relative frequency, one more summary occurrence of it
        // never increases that term's contribution.
        let contribution = |p: f64, c: f64, total: f64| -> f64 {
            ((p + 1.0).ln() - (c / total + 1.0).ln()).abs()
        };
        for p in [0.2, 0.4, 0.6, 0.9] {
            for total in [2.0f64, 5.0, 10.0, 40.0] {
                for c in 0..(total as u32) {
                    let c = f64::from(c);
                    let grown = (c + 1.0) / (total + 1.0);
                    if grown <= p {
                        let before = contribution(p, c, total);
                        let after = contribution(p, c + 1.0, total + 1.0);
                        assert!(
                            after <= before + 1e-15,
                            "p={p} c={c} total={total}: {after} > {before}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn divergence_errors_on_empty_source() {
        let empty = profile_stems(&stems(&[]), NgramGrain::Unigram);
        let summary = profile_stems(&stems(&[&["a"]]), NgramGrain::Unigram);
        assert!(matches!(
            divergence(&empty, &summary),
            Err(Error::EmptySource)
        ));
    }

    fn doc(rows: &[&[&str]]) -> Document {
        use crate::corpus_io::Sentence;
        Document {
            id: "t".into(),
            language: Language::English,
            sentences: rows
                .iter()
                .enumerate()
                .map(|(index, toks)| Sentence {
                    index,
                    surface: toks.join(" "),
                    tokens: toks.iter().map(|s| s.to_string()).collect(),
                })
                .collect(),
        }
    }

    #[test]
    fn summary_equal_to_source_scores_one() {
        let d = doc(&[&["harbor", "ships", "cargo"], &["cargo", "moved", "north"]]);
        let report = evaluate_summary(&d, &d).unwrap();
        assert_eq!(report.fresa1, 1.0);
        assert_eq!(report.fresa2, 1.0);
        assert_eq!(report.fresa_su4, 1.0);
        assert_eq!(report.mean, 1.0);
    }

    #[test]
    fn overlapping_summary_beats_disjoint_one() {
        let source = doc(&[
            &["harbor", "ships", "cargo", "tide"],
            &["cargo", "ships", "dock", "tide"],
        ]);
        let overlapping = doc(&[&["harbor", "ships", "cargo", "tide"]]);
        let disjoint = doc(&[&["quartz", "valley", "meadow", "stone"]]);
        let good = evaluate_summary(&source, &overlapping).unwrap();
        let bad = evaluate_summary(&source, &disjoint).unwrap();
        assert!(good.mean > bad.mean, "{} vs {}", good.mean, bad.mean);
    }

    #[test]
    fn report_mean_is_arithmetic_mean_and_in_range() {
        let source = doc(&[
            &["alpha", "beta", "gamma"],
            &["beta", "delta", "alpha"],
        ]);
        let summary = doc(&[&["alpha", "beta"]]);
        let r = evaluate_summary(&source, &summary).unwrap();
        for v in [r.fresa1, r.fresa2, r.fresa_su4, r.mean] {
            assert!((0.0..=1.0).contains(&v));
        }
        assert!((r.mean - (r.fresa1 + r.fresa2 + r.fresa_su4) / 3.0).abs() < f64::EPSILON);
    }

    #[test]
    fn evaluate_summary_errors_on_empty_source() {
        let empty = doc(&[]);
        let summary = doc(&[&["a"]]);
        assert!(matches!(
            evaluate_summary(&empty, &summary),
            Err(Error::EmptySource)
        ));
    }
}
