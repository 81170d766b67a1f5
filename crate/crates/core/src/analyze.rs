//! Representation diagnostics: Pearson correlation over matrix
//! triangles, a seeded Mantel permutation test, and corpus statistics
//! (letter ranking, word-length distribution).
//!
//! The Mantel comparison works on the gram matrices of two vectorizations
//! of the same document: both are square symmetric with aligned rows, so
//! their strictly-lower-triangular parts can be correlated even when the
//! underlying vocabularies differ in size. Permutations co-permute rows
//! and columns of the first matrix; the one-sided p-value uses the +1
//! correction, so it is never zero.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus_io::Document;
use crate::error::{Error, Result};
use crate::normalize::NormalizationStrategy;
use crate::vsm::{gram, vectorize};

/// Dense symmetric matrix with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    values: Vec<f64>,
}

impl SymMatrix {
    /// Build from dense rows, validating shape, symmetry and finiteness.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<SymMatrix> {
        let order = rows.len();
        let mut values = vec![0.0; order * order];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::OrderMismatch(row.len(), order));
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NonFiniteEntry(i, j));
                }
                values[i * order + j] = v;
            }
        }
        for i in 0..order {
            for j in (i + 1)..order {
                if values[i * order + j] != values[j * order + i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix { order, values })
    }

    /// Adopt an integer gram product (symmetric by construction).
    pub fn from_gram(g: &[Vec<i64>]) -> SymMatrix {
        let order = g.len();
        let mut values = vec![0.0; order * order];
        for (i, row) in g.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                values[i * order + j] = v as f64;
            }
        }
        SymMatrix { order, values }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.order + j]
    }

    /// Strictly-lower-triangular elements, row by row.
    pub fn lower_triangle(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.order * (self.order - 1) / 2);
        for i in 1..self.order {
            for j in 0..i {
                out.push(self.get(i, j));
            }
        }
        out
    }
}

/// Pearson correlation over the strictly-lower-triangular elements of
/// two symmetric matrices of the same order; clamped to [-1, 1].
pub fn pearson_lower_triangle(a: &SymMatrix, b: &SymMatrix) -> Result<f64> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    if a.order() < 3 {
        return Err(Error::OrderTooSmall(a.order()));
    }
    pearson_flat(&a.lower_triangle(), &b.lower_triangle())
}

fn pearson_flat(x: &[f64], y: &[f64]) -> Result<f64> {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for (&a, &b) in x.iter().zip(y) {
        let da = a - mx;
        let db = b - my;
        sxx += da * da;
        syy += db * db;
        sxy += da * db;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::DegenerateMatrix);
    }
    // Identical triangles correlate at exactly 1; the arithmetic below
    // can land an ulp away from it.
    if x == y {
        return Ok(1.0);
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// Outcome of a seeded Mantel permutation test.
#[derive(Debug, Clone, PartialEq)]
pub struct MantelResult {
    pub r_observed: f64,
    pub permutations: usize,
    /// One-sided upper-tail p-value, (count + 1) / (permutations + 1).
    pub p_value: f64,
    /// Number of permuted correlations >= the observed one.
    pub greater_or_equal_count: usize,
    /// Mean of the permutation reference distribution.
    pub perm_mean: f64,
    /// Population standard deviation of the reference distribution.
    pub perm_std: f64,
}

/// Mantel test between symmetric matrices: observed r, then `permutations`
/// random co-permutations of A's rows and columns (Fisher-Yates driven by
/// a seeded ChaCha stream, so results are identical across platforms).
pub fn mantel_test(
    a: &SymMatrix,
    b: &SymMatrix,
    permutations: usize,
    seed: u64,
) -> Result<MantelResult> {
    if permutations < 99 {
        return Err(Error::TooFewPermutations(permutations));
    }
    let r_observed = pearson_lower_triangle(a, b)?;
    let p = a.order();

    // Co-permuting rows and columns permutes the multiset of triangle
    // values, so A's mean and deviation are permutation invariants and
    // only the cross term has to be recomputed.
    let a_tri = a.lower_triangle();
    let b_tri = b.lower_triangle();
    let n = a_tri.len() as f64;
    let ma = a_tri.iter().sum::<f64>() / n;
    let mb = b_tri.iter().sum::<f64>() / n;
    let b_centered: Vec<f64> = b_tri.iter().map(|v| v - mb).collect();
    let sa: f64 = a_tri.iter().map(|v| (v - ma) * (v - ma)).sum::<f64>().sqrt();
    let sb: f64 = b_centered.iter().map(|v| v * v).sum::<f64>().sqrt();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..p).collect();
    let mut count = 0usize;
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for _ in 0..permutations {
        fisher_yates(&mut perm, &mut rng);
        let mut sxy = 0.0;
        let mut idx = 0;
        for i in 1..p {
            for j in 0..i {
                let av = a.get(perm[i], perm[j]);
                sxy += (av - ma) * b_centered[idx];
                idx += 1;
            }
        }
        let r = (sxy / (sa * sb)).clamp(-1.0, 1.0);
        if r >= r_observed {
            count += 1;
        }
        sum += r;
        sum_sq += r * r;
    }
    let m = permutations as f64;
    let perm_mean = sum / m;
    let perm_std = (sum_sq / m - perm_mean * perm_mean).max(0.0).sqrt();
    Ok(MantelResult {
        r_observed,
        permutations,
        p_value: (count as f64 + 1.0) / (m + 1.0),
        greater_or_equal_count: count,
        perm_mean,
        perm_std,
    })
}

fn fisher_yates(perm: &mut [usize], rng: &mut ChaCha8Rng) {
    for (i, slot) in perm.iter_mut().enumerate() {
        *slot = i;
    }
    for i in (1..perm.len()).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
}

/// Vectorize `doc` under both strategies, take the gram matrix of each
/// (square symmetric with aligned rows) and run the Mantel test.
pub fn mantel_between_normalizations(
    doc: &Document,
    strat_a: &NormalizationStrategy,
    strat_b: &NormalizationStrategy,
    permutations: usize,
    seed: u64,
) -> Result<MantelResult> {
    let a = SymMatrix::from_gram(&gram(&vectorize(doc, strat_a)?));
    let b = SymMatrix::from_gram(&gram(&vectorize(doc, strat_b)?));
    mantel_test(&a, &b, permutations, seed)
}

/// Distinct token types per initial letter, ranked by count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterRanking {
    pub counts: BTreeMap<char, u64>,
    /// Sorted by count descending, ties by letter ascending.
    pub ranked: Vec<(char, u64)>,
}

impl LetterRanking {
    pub fn total_types(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Rank initial letters by the number of distinct token types starting
/// with them (types, not occurrences).
pub fn letter_ranking(corpus: &[Document]) -> LetterRanking {
    let types: BTreeSet<&str> = corpus.iter().flat_map(|d| d.tokens()).collect();
    let mut counts: BTreeMap<char, u64> = BTreeMap::new();
    for t in types {
        if let Some(first) = t.chars().next() {
            *counts.entry(first).or_insert(0) += 1;
        }
    }
    let mut ranked: Vec<(char, u64)> = counts.iter().map(|(&c, &n)| (c, n)).collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    LetterRanking { counts, ranked }
}

/// Histogram of letters per token occurrence, with mean and mode.
#[derive(Debug, Clone, PartialEq)]
pub struct WordLengthDistribution {
    pub histogram: BTreeMap<usize, u64>,
    pub mean: f64,
    /// Smallest length on ties.
    pub mode: usize,
    pub total_tokens: u64,
}

impl WordLengthDistribution {
    /// Histogram scaled so its maximum is 1.0, for plotting.
    pub fn normalized_curve(&self) -> Vec<(usize, f64)> {
        let max = self.histogram.values().copied().max().unwrap_or(1) as f64;
        self.histogram
            .iter()
            .map(|(&len, &n)| (len, n as f64 / max))
            .collect()
    }
}

pub fn word_length_distribution(corpus: &[Document]) -> Result<WordLengthDistribution> {
    let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
    let mut total_letters = 0u64;
    let mut total_tokens = 0u64;
    for doc in corpus {
        for token in doc.tokens() {
            let len = token.chars().count();
            *histogram.entry(len).or_insert(0) += 1;
            total_letters += len as u64;
            total_tokens += 1;
        }
    }
    if total_tokens == 0 {
        return Err(Error::NoTokens);
    }
    let mut mode = 0;
    let mut best = 0;
    for (&len, &n) in &histogram {
        if n > best {
            best = n;
            mode = len;
        }
    }
    Ok(WordLengthDistribution {
        histogram,
        mean: total_letters as f64 / total_tokens as f64,
        mode,
        total_tokens,
    })
}
