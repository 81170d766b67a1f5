//! Sentence scoring and extract assembly.
//!
//! Three scorers operate on the sentence-term matrix:
//!
//! * `artex` — dot product of each sentence vector with the mean
//!   ("global topic") column vector, weighted by the sentence's token
//!   mass and scaled by 1/(P*N). The scale factor is a fixed choice;
//!   only the ranking matters downstream.
//! * `enertex` — interaction energy: with G the gram matrix, E = G*G and
//!   a sentence scores the sum of absolute entries of its E row. Second
//!   order keeps sentences connected through shared vocabulary even when
//!   they share no term directly.
//! * `cortex` — three per-sentence metrics (token mass, term entropy,
//!   off-diagonal gram interaction), each min-max normalized across
//!   sentences, combined by a vote around the neutral point 0.5.
//!
//! Raw scores are min-max normalized per document before extraction so
//! reports are comparable across scorers; extraction is greedy by
//! descending score with ties broken by the lower sentence index, and
//! the final summary is assembled in source order.

use std::fmt;
use std::str::FromStr;

use crate::corpus_io::Document;
use crate::error::{Error, Result};
use crate::vsm::{gram, SentenceMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SummarizerKind {
    Cortex,
    Enertex,
    Artex,
}

impl SummarizerKind {
    pub fn all() -> [SummarizerKind; 3] {
        [
            SummarizerKind::Cortex,
            SummarizerKind::Enertex,
            SummarizerKind::Artex,
        ]
    }
}

impl fmt::Display for SummarizerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SummarizerKind::Cortex => "cortex",
            SummarizerKind::Enertex => "enertex",
            SummarizerKind::Artex => "artex",
        };
        f.write_str(name)
    }
}

impl FromStr for SummarizerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<SummarizerKind> {
        match s.trim().to_ascii_lowercase().as_str() {
            "cortex" => Ok(SummarizerKind::Cortex),
            "enertex" => Ok(SummarizerKind::Enertex),
            "artex" => Ok(SummarizerKind::Artex),
            other => Err(Error::InvalidSummarizer(other.to_string())),
        }
    }
}

/// Summary length target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Budget {
    /// Whole surface-word budget; the last sentence may overflow it.
    Words(usize),
    /// Fixed number of sentences.
    Sentences(usize),
    /// Percentage p of the document's sentences, ceil(p * P / 100).
    Percent(f64),
}

impl Budget {
    pub fn parse(s: &str) -> Result<Budget> {
        let s = s.trim().to_ascii_lowercase();
        let budget = if let Some(k) = s.strip_prefix("words:") {
            Budget::Words(k.parse().map_err(|_| Error::InvalidBudget(s.clone()))?)
        } else if let Some(k) = s.strip_prefix("sentences:") {
            Budget::Sentences(k.parse().map_err(|_| Error::InvalidBudget(s.clone()))?)
        } else if let Some(p) = s.strip_prefix("percent:") {
            Budget::Percent(p.parse().map_err(|_| Error::InvalidBudget(s.clone()))?)
        } else {
            return Err(Error::InvalidBudget(s));
        };
        if budget.is_zero() {
            return Err(Error::ZeroBudget);
        }
        Ok(budget)
    }

    fn is_zero(&self) -> bool {
        match self {
            Budget::Words(k) | Budget::Sentences(k) => *k == 0,
            Budget::Percent(p) => *p <= 0.0,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Budget::Words(k) => format!("words:{k}"),
            Budget::Sentences(k) => format!("sentences:{k}"),
            Budget::Percent(p) => format!("percent:{p}"),
        }
    }
}

/// Per-sentence scores plus the selected indices in source order.
#[derive(Debug, Clone)]
pub struct SummaryScore {
    /// Min-max normalized scores, one per sentence.
    pub scores: Vec<f64>,
    /// Strictly increasing sentence indices.
    pub selected: Vec<usize>,
    pub budget: Budget,
    /// Set when the budget asked for more than the document holds.
    pub budget_exceeds_source: bool,
}

/// Dispatch to one of the scorers; raw (un-normalized) scores.
pub fn score(kind: SummarizerKind, m: &SentenceMatrix) -> Vec<f64> {
    match kind {
        SummarizerKind::Cortex => score_cortex(m),
        SummarizerKind::Enertex => score_enertex(m),
        SummarizerKind::Artex => score_artex(m),
    }
}

/// Artex: (s_i . g) * (s_i . 1) / (P * N), with g the mean column vector.
pub fn score_artex(m: &SentenceMatrix) -> Vec<f64> {
    let p = m.rows();
    let n = m.cols();
    if p == 0 {
        return Vec::new();
    }
    if n == 0 {
        return vec![0.0; p];
    }
    let mut topic = vec![0.0f64; n];
    for (_, c, v) in m.entries() {
        topic[c] += v as f64;
    }
    for t in topic.iter_mut() {
        *t /= p as f64;
    }
    let scale = 1.0 / (p as f64 * n as f64);
    (0..p)
        .map(|i| {
            let mut dot = 0.0;
            let mut mass = 0.0;
            for (c, v) in m.row_entries(i) {
                dot += v as f64 * topic[c];
                mass += v as f64;
            }
            dot * mass * scale
        })
        .collect()
}

/// Enertex: textual energy E = G*G; score_i = sum_j |E[i][j]|.
pub fn score_enertex(m: &SentenceMatrix) -> Vec<f64> {
    let g = gram(m);
    let p = g.len();
    let mut scores = vec![0.0f64; p];
    for i in 0..p {
        let mut total = 0i64;
        for j in 0..p {
            let mut e = 0i64;
            for (k, gik) in g[i].iter().enumerate() {
                e += gik * g[k][j];
            }
            total += e.abs();
        }
        scores[i] = total as f64;
    }
    scores
}

/// Cortex metrics: token mass F, term entropy E, off-diagonal gram
/// interaction I; each min-max normalized, then combined by the vote.
pub fn score_cortex(m: &SentenceMatrix) -> Vec<f64> {
    let p = m.rows();
    if p == 0 {
        return Vec::new();
    }
    let g = gram(m);
    let mass: Vec<f64> = (0..p).map(|i| m.row_sum(i) as f64).collect();
    let entropy: Vec<f64> = (0..p)
        .map(|i| {
            let total = mass[i];
            if total == 0.0 {
                return 0.0;
            }
            -m.row_entries(i)
                .map(|(_, v)| {
                    let q = v as f64 / total;
                    q * q.ln()
                })
                .sum::<f64>()
        })
        .collect();
    let interaction: Vec<f64> = (0..p)
        .map(|i| {
            g[i].iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &v)| v as f64)
                .sum()
        })
        .collect();
    let metrics = [
        min_max_normalize(&mass),
        min_max_normalize(&entropy),
        min_max_normalize(&interaction),
    ];
    decision_vote(&metrics)
}

/// Combine normalized metric columns: each metric votes by its distance
/// from 0.5; the result is 0.5 + sum(lambda - 0.5) / (2 * #metrics),
/// which stays in [0, 1].
pub fn decision_vote(metrics: &[Vec<f64>]) -> Vec<f64> {
    let count = metrics.len();
    if count == 0 {
        return Vec::new();
    }
    let p = metrics[0].len();
    (0..p)
        .map(|i| {
            let mut positive = 0.0;
            let mut negative = 0.0;
            for metric in metrics {
                let lambda = metric[i];
                if lambda > 0.5 {
                    positive += lambda - 0.5;
                } else if lambda < 0.5 {
                    negative += 0.5 - lambda;
                }
            }
            0.5 + (positive - negative) / (2.0 * count as f64)
        })
        .collect()
}

/// Min-max normalize to [0, 1]; a constant vector maps to all 0.5.
pub fn min_max_normalize(values: &[f64]) -> Vec<f64> {
    let Some(min) = values.iter().copied().reduce(f64::min) else {
        return Vec::new();
    };
    let max = values.iter().copied().reduce(f64::max).unwrap();
    if max == min {
        return vec![0.5; values.len()];
    }
    values.iter().map(|v| (v - min) / (max - min)).collect()
}

/// Greedy extraction: take sentences by descending score (ties to the
/// lower index) until the budget is reached; the addition that crosses a
/// word budget is kept whole. Empty-token sentences are never selected
/// unless every sentence is empty.
pub fn extract(scores: &[f64], doc: &Document, budget: Budget) -> Result<SummaryScore> {
    if scores.len() != doc.sentences.len() {
        return Err(Error::ScoreLengthMismatch {
            scores: scores.len(),
            sentences: doc.sentences.len(),
        });
    }
    if budget.is_zero() {
        return Err(Error::ZeroBudget);
    }
    let p = doc.sentences.len();
    let all_empty = doc.sentences.iter().all(|s| s.tokens.is_empty());
    let mut candidates: Vec<usize> = (0..p)
        .filter(|&i| all_empty || !doc.sentences[i].tokens.is_empty())
        .collect();
    candidates.sort_by(|&a, &b| {
        scores[b]
            .total_cmp(&scores[a])
            .then_with(|| a.cmp(&b))
    });

    let mut selected = Vec::new();
    let exceeded = match budget {
        Budget::Sentences(k) => {
            selected.extend(candidates.iter().copied().take(k));
            k > candidates.len()
        }
        Budget::Percent(pct) => {
            let k = ((pct * p as f64) / 100.0).ceil() as usize;
            selected.extend(candidates.iter().copied().take(k));
            k > candidates.len()
        }
        Budget::Words(k) => {
            let mut words = 0usize;
            for &i in &candidates {
                selected.push(i);
                words += doc.sentences[i].surface.split_whitespace().count();
                if words >= k {
                    break;
                }
            }
            words < k
        }
    };
    selected.sort_unstable();
    Ok(SummaryScore {
        scores: scores.to_vec(),
        selected,
        budget,
        budget_exceeds_source: exceeded,
    })
}

/// Join the selected original sentences, ascending, with single spaces.
pub fn assemble(summary: &SummaryScore, doc: &Document) -> String {
    summary
        .selected
        .iter()
        .map(|&i| doc.sentences[i].surface.as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Score, normalize, extract and assemble in one step.
pub fn summarize(
    doc: &Document,
    m: &SentenceMatrix,
    kind: SummarizerKind,
    budget: Budget,
) -> Result<(SummaryScore, String)> {
    if m.rows() != doc.sentences.len() {
        return Err(Error::ScoreLengthMismatch {
            scores: m.rows(),
            sentences: doc.sentences.len(),
        });
    }
    let raw = score(kind, m);
    let normalized = min_max_normalize(&raw);
    let summary = extract(&normalized, doc, budget)?;
    let text = assemble(&summary, doc);
    Ok((summary, text))
}
