//! `stats`: letter-ranking and word-length tables for a corpus under a
//! chosen normalization, as plot-ready TSV.

use std::fmt::Write as _;

use anyhow::{bail, Result};
use ultrasumm_core::analyze::{letter_ranking, word_length_distribution};
use ultrasumm_core::corpus_io::Document;
use ultrasumm_core::normalize::normalize_document;

use super::{load_documents, print_warnings, write_atomic};
use crate::config::CommonArgs;

#[derive(Debug, clap::Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Normalization applied before counting (default raw).
    #[arg(long)]
    pub norm: Option<String>,
}

pub fn run(args: &StatsArgs) -> Result<()> {
    let cfg = args.common.resolve()?;
    let strategy = cfg.strategy(args.norm.as_deref().unwrap_or("raw"))?;
    let (docs, warnings) = load_documents(&cfg)?;
    print_warnings(&warnings);
    if docs.is_empty() {
        bail!("empty corpus: {}", cfg.corpus_dir.display());
    }
    let normalized: Vec<Document> = docs
        .iter()
        .map(|(_, doc)| normalize_document(doc, &strategy))
        .collect();

    let header = format!(
        "# corpus={} language={} norm={} docs={} min_frequency=2 stoplist={}\n",
        cfg.corpus_dir.display(),
        cfg.language,
        strategy.label(),
        normalized.len(),
        cfg.stoplist.len(),
    );

    let ranking = letter_ranking(&normalized);
    let mut letters = header.clone();
    let _ = writeln!(letters, "# total_types={}", ranking.total_types());
    letters.push_str("letter\ttypes\n");
    for (letter, count) in &ranking.ranked {
        let _ = writeln!(letters, "{letter}\t{count}");
    }
    write_atomic(&cfg.output_dir.join("letter_ranking.tsv"), &letters)?;

    let dist = word_length_distribution(&normalized)?;
    let mut lengths = header;
    let _ = writeln!(
        lengths,
        "# mean={:.4} mode={} tokens={}",
        dist.mean, dist.mode, dist.total_tokens
    );
    lengths.push_str("length\tcount\tnormalized\n");
    let curve = dist.normalized_curve();
    for ((len, count), (_, norm)) in dist.histogram.iter().zip(curve) {
        let _ = writeln!(lengths, "{len}\t{count}\t{norm:.6}");
    }
    write_atomic(&cfg.output_dir.join("word_lengths.tsv"), &lengths)?;

    println!(
        "stats: {} types, mean word length {:.2}, mode {} -> {}",
        ranking.total_types(),
        dist.mean,
        dist.mode,
        cfg.output_dir.display()
    );
    Ok(())
}
