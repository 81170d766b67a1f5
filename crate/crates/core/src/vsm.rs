//! Vector space model: sparse sentence-by-term occurrence matrices and
//! their diagnostics (density, volume against the raw-text baseline,
//! gram products).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::corpus_io::Document;
use crate::error::{Error, Result};
use crate::normalize::{normalize_sentence, NormalizationStrategy, StrategyKind};

/// Sparse P x N occurrence-count matrix with sorted column vocabulary.
/// Zero counts are absent from the map; empty sentences stay as all-zero
/// rows so P is identical across normalization strategies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SentenceMatrix {
    rows: usize,
    vocab: Vec<String>,
    counts: BTreeMap<(usize, usize), u32>,
    strategy: StrategyKind,
}

impl SentenceMatrix {
    /// Number of sentences P.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Vocabulary size N.
    pub fn cols(&self) -> usize {
        self.vocab.len()
    }

    /// Sorted column labels.
    pub fn vocab(&self) -> &[String] {
        &self.vocab
    }

    pub fn strategy(&self) -> StrategyKind {
        self.strategy
    }

    pub fn nonzeros(&self) -> usize {
        self.counts.len()
    }

    /// Matrix size rho = P x N.
    pub fn size(&self) -> u64 {
        self.rows as u64 * self.vocab.len() as u64
    }

    pub fn count(&self, row: usize, col: usize) -> u32 {
        self.counts.get(&(row, col)).copied().unwrap_or(0)
    }

    /// Nonzero (col, count) entries of a row, in column order.
    pub fn row_entries(&self, row: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.counts
            .range((row, 0)..(row + 1, 0))
            .map(|(&(_, c), &v)| (c, v))
    }

    pub fn row_sum(&self, row: usize) -> u64 {
        self.row_entries(row).map(|(_, v)| v as u64).sum()
    }

    /// Iterate all nonzero entries in (row, col) order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.counts.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    /// Build from dense rows; vocabulary must be sorted and unique, and
    /// every row must have one count per column.
    pub fn from_dense(
        rows: &[Vec<u32>],
        vocab: Vec<String>,
        strategy: StrategyKind,
    ) -> Result<SentenceMatrix> {
        for pair in vocab.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::BadMatrixDump(format!(
                    "vocabulary not sorted/unique at {:?}",
                    pair[1]
                )));
            }
        }
        let mut counts = BTreeMap::new();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != vocab.len() {
                return Err(Error::BadMatrixDump(format!(
                    "row {r} has {} columns, expected {}",
                    row.len(),
                    vocab.len()
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                if v > 0 {
                    counts.insert((r, c), v);
                }
            }
        }
        Ok(SentenceMatrix {
            rows: rows.len(),
            vocab,
            counts,
            strategy,
        })
    }

    pub fn to_dense(&self) -> Vec<Vec<u32>> {
        let mut dense = vec![vec![0u32; self.vocab.len()]; self.rows];
        for (r, c, v) in self.entries() {
            dense[r][c] = v;
        }
        dense
    }

    /// Stable, diffable text dump: header `P N strategy`, one
    /// `row col count` line per nonzero, then the vocabulary.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.rows, self.vocab.len(), self.strategy);
        for (r, c, v) in self.entries() {
            let _ = writeln!(out, "{r} {c} {v}");
        }
        for term in &self.vocab {
            let _ = writeln!(out, "{term}");
        }
        out
    }

    /// Parse the [`dump`](Self::dump) format back.
    pub fn parse_dump(text: &str) -> Result<SentenceMatrix> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::BadMatrixDump("missing header".into()))?;
        let mut parts = header.split_whitespace();
        let bad = |m: &str| Error::BadMatrixDump(m.to_string());
        let rows: usize = parts
            .next()
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| bad("bad P"))?;
        let cols: usize = parts
            .next()
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| bad("bad N"))?;
        let strategy: StrategyKind = parts
            .next()
            .ok_or_else(|| bad("missing strategy"))?
            .parse()?;
        let rest: Vec<&str> = lines.collect();
        if rest.len() < cols {
            return Err(bad("truncated dump"));
        }
        let (entry_lines, vocab_lines) = rest.split_at(rest.len() - cols);
        let vocab: Vec<String> = vocab_lines.iter().map(|s| s.to_string()).collect();
        let mut counts = BTreeMap::new();
        for line in entry_lines {
            let mut p = line.split_whitespace();
            let (Some(r), Some(c), Some(v)) = (p.next(), p.next(), p.next()) else {
                return Err(bad("bad entry line"));
            };
            let r: usize = r.parse().map_err(|_| bad("bad row"))?;
            let c: usize = c.parse().map_err(|_| bad("bad col"))?;
            let v: u32 = v.parse().map_err(|_| bad("bad count"))?;
            if r >= rows || c >= cols || v == 0 {
                return Err(bad("entry out of bounds"));
            }
            counts.insert((r, c), v);
        }
        Ok(SentenceMatrix {
            rows,
            vocab,
            counts,
            strategy,
        })
    }
}

/// Density, size and nonzero count for one matrix; `volume` is filled by
/// [`stats_with_baseline`] when a raw baseline is available.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixStats {
    pub rows: usize,
    pub cols: usize,
    /// rho = P x N.
    pub size: u64,
    pub nonzeros: u64,
    /// Fraction of nonzero cells, in [0, 1].
    pub density: f64,
    /// Size ratio against the raw baseline, when known.
    pub volume: Option<f64>,
}

/// Vectorize a filtered document under one normalization strategy. The
/// vocabulary is exactly the set of normalized tokens of the document.
pub fn vectorize(doc: &Document, strategy: &NormalizationStrategy) -> Result<SentenceMatrix> {
    if doc.sentences.is_empty() {
        return Err(Error::EmptyDocument(doc.id.clone()));
    }
    let normalized: Vec<Vec<String>> = doc
        .sentences
        .iter()
        .map(|s| normalize_sentence(&s.tokens, strategy, doc.language))
        .collect();
    count_matrix(&normalized, strategy.kind())
}

/// Vectorize a document whose tokens are already in their final form,
/// recording `label` as the strategy. Lets callers time normalization
/// and vectorization separately.
pub fn vectorize_tokens(doc: &Document, label: StrategyKind) -> Result<SentenceMatrix> {
    if doc.sentences.is_empty() {
        return Err(Error::EmptyDocument(doc.id.clone()));
    }
    let rows: Vec<Vec<String>> = doc.sentences.iter().map(|s| s.tokens.clone()).collect();
    count_matrix(&rows, label)
}

fn count_matrix(normalized: &[Vec<String>], label: StrategyKind) -> Result<SentenceMatrix> {
    let vocab_set: BTreeSet<&String> = normalized.iter().flatten().collect();
    let vocab: Vec<String> = vocab_set.iter().map(|s| s.to_string()).collect();
    let index: BTreeMap<&str, usize> = vocab
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    let mut counts: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for (r, tokens) in normalized.iter().enumerate() {
        for token in tokens {
            let c = index[token.as_str()];
            *counts.entry((r, c)).or_insert(0) += 1;
        }
    }
    Ok(SentenceMatrix {
        rows: normalized.len(),
        vocab,
        counts,
        strategy: label,
    })
}

/// Density delta = nonzeros / (P x N). Exact integer counting, one final
/// division.
pub fn density(m: &SentenceMatrix) -> Result<MatrixStats> {
    if m.rows() == 0 || m.cols() == 0 {
        return Err(Error::EmptyMatrix {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let size = m.size();
    let nonzeros = m.nonzeros() as u64;
    Ok(MatrixStats {
        rows: m.rows(),
        cols: m.cols(),
        size,
        nonzeros,
        density: nonzeros as f64 / size as f64,
        volume: None,
    })
}

/// Volume V = rho(m) / rho(raw baseline).
pub fn volume(m: &SentenceMatrix, raw_baseline: &SentenceMatrix) -> Result<f64> {
    if raw_baseline.size() == 0 {
        return Err(Error::ZeroBaseline);
    }
    Ok(m.size() as f64 / raw_baseline.size() as f64)
}

/// Density stats plus volume against the raw baseline.
pub fn stats_with_baseline(m: &SentenceMatrix, raw: &SentenceMatrix) -> Result<MatrixStats> {
    let mut stats = density(m)?;
    stats.volume = Some(volume(m, raw)?);
    Ok(stats)
}

/// Gram product G = S * S^T: square, symmetric, integer entries;
/// G[i][j] is the dot product of sentence rows i and j.
pub fn gram(m: &SentenceMatrix) -> Vec<Vec<i64>> {
    let p = m.rows();
    let rows: Vec<Vec<(usize, u32)>> = (0..p).map(|r| m.row_entries(r).collect()).collect();
    let mut g = vec![vec![0i64; p]; p];
    for i in 0..p {
        for j in i..p {
            let dot = sparse_dot(&rows[i], &rows[j]);
            g[i][j] = dot;
            g[j][i] = dot;
        }
    }
    g
}

fn sparse_dot(a: &[(usize, u32)], b: &[(usize, u32)]) -> i64 {
    let mut dot = 0i64;
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].0.cmp(&b[y].0) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => {
                dot += a[x].1 as i64 * b[y].1 as i64;
                x += 1;
                y += 1;
            }
        }
    }
    dot
}
