//! `sweep`: run the truncation lengths 1..=max_n plus the raw, stem and
//! lemma baselines through every requested summarizer, grade each
//! summary against its source, and emit the per-document and mean rows
//! behind the score-versus-n curves.

use std::fmt::Write as _;
use std::str::FromStr;

use anyhow::{bail, Result};
use rayon::prelude::*;
use ultrasumm_core::corpus_io::{build_document_with_min_frequency, Document, RawDocument};
use ultrasumm_core::evaluate::evaluate_summary;
use ultrasumm_core::normalize::NormalizationStrategy;
use ultrasumm_core::summarize::{summarize, Budget, SummarizerKind};
use ultrasumm_core::vsm::vectorize;

use super::{load_documents, print_warnings, write_atomic};
use crate::config::{CommonArgs, RunConfig};

#[derive(Debug, clap::Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Summarizers to sweep (repeatable; defaults to all three).
    #[arg(long = "summarizer")]
    pub summarizers: Vec<String>,

    /// Summary budget applied to every run.
    #[arg(long)]
    pub budget: Option<String>,

    /// Largest truncation length in the sweep.
    #[arg(long, default_value_t = 14)]
    pub max_n: u32,
}

/// One evaluated run: scores of a (document, summarizer, strategy) cell.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub doc_id: String,
    pub summarizer: SummarizerKind,
    pub norm: String,
    pub fresa1: f64,
    pub fresa2: f64,
    pub fresa_su4: f64,
    pub mean: f64,
}

pub const MEAN_DOC_ID: &str = "MEAN";

/// Sweep a corpus in memory; rows come back sorted by (doc, summarizer,
/// norm) with MEAN rows appended per (summarizer, norm).
pub fn sweep_corpus(
    cfg: &RunConfig,
    docs: &[(RawDocument, Document)],
    summarizers: &[SummarizerKind],
    budget: Budget,
    max_n: u32,
) -> Result<Vec<SweepRow>> {
    let mut strategies: Vec<NormalizationStrategy> = Vec::new();
    for n in 1..=max_n {
        strategies.push(NormalizationStrategy::fix(n)?);
    }
    strategies.push(NormalizationStrategy::Raw);
    strategies.push(NormalizationStrategy::Stem);
    match cfg.lemma_dict.as_ref() {
        Some(dict) => strategies.push(NormalizationStrategy::Lemma(dict.clone())),
        None => eprintln!("warning: no lemma dictionary; the lemma baseline is skipped"),
    }

    let mut rows: Vec<SweepRow> = cfg.with_pool(|| {
        docs.par_iter()
            .map(|(raw, doc)| {
                // Evaluation-side preprocessing keeps every token (no
                // frequency floor) and always stems.
                let source_eval =
                    build_document_with_min_frequency(raw, &cfg.stoplist, 1);
                let mut doc_rows = Vec::new();
                for strategy in &strategies {
                    let matrix = vectorize(doc, strategy)?;
                    for &kind in summarizers {
                        let (_, text) = summarize(doc, &matrix, kind, budget)?;
                        let summary_raw = RawDocument {
                            id: format!("{}-summary", raw.id),
                            text: text.clone(),
                            language: raw.language,
                        };
                        let summary_eval =
                            build_document_with_min_frequency(&summary_raw, &cfg.stoplist, 1);
                        let report = evaluate_summary(&source_eval, &summary_eval)?;
                        doc_rows.push(SweepRow {
                            doc_id: raw.id.clone(),
                            summarizer: kind,
                            norm: strategy.label(),
                            fresa1: report.fresa1,
                            fresa2: report.fresa2,
                            fresa_su4: report.fresa_su4,
                            mean: report.mean,
                        });
                    }
                }
                Ok(doc_rows)
            })
            .collect::<Result<Vec<_>>>()
            .map(|nested| nested.into_iter().flatten().collect())
    })?;

    // Mean rows per (summarizer, norm), in sweep order.
    let n_docs = docs.len() as f64;
    let mut means = Vec::new();
    for &kind in summarizers {
        for strategy in &strategies {
            let label = strategy.label();
            let cell: Vec<&SweepRow> = rows
                .iter()
                .filter(|r| r.summarizer == kind && r.norm == label)
                .collect();
            let avg = |f: fn(&SweepRow) -> f64| cell.iter().map(|r| f(r)).sum::<f64>() / n_docs;
            means.push(SweepRow {
                doc_id: MEAN_DOC_ID.to_string(),
                summarizer: kind,
                norm: label,
                fresa1: avg(|r| r.fresa1),
                fresa2: avg(|r| r.fresa2),
                fresa_su4: avg(|r| r.fresa_su4),
                mean: avg(|r| r.mean),
            });
        }
    }
    rows.extend(means);
    Ok(rows)
}

pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    let mut csv = String::from("doc_id,summarizer,norm,fresa1,fresa2,fresa_su4,mean\n");
    for r in rows {
        let _ = writeln!(
            csv,
            "{},{},{},{:.6},{:.6},{:.6},{:.6}",
            r.doc_id, r.summarizer, r.norm, r.fresa1, r.fresa2, r.fresa_su4, r.mean
        );
    }
    csv
}

pub fn run(args: &SweepArgs) -> Result<()> {
    let cfg = args.common.resolve()?;
    let budget = RunConfig::parse_budget(args.budget.as_deref(), None)?;
    let summarizers: Vec<SummarizerKind> = if args.summarizers.is_empty() {
        SummarizerKind::all().to_vec()
    } else {
        args.summarizers
            .iter()
            .map(|s| SummarizerKind::from_str(s))
            .collect::<std::result::Result<_, _>>()?
    };
    let (docs, warnings) = load_documents(&cfg)?;
    print_warnings(&warnings);
    if docs.is_empty() {
        bail!("empty corpus: {}", cfg.corpus_dir.display());
    }
    let rows = sweep_corpus(&cfg, &docs, &summarizers, budget, args.max_n)?;
    write_atomic(&cfg.output_dir.join("sweep.csv"), &rows_to_csv(&rows))?;
    println!(
        "sweep: {} rows ({} docs x {} summarizers) -> {}",
        rows.len(),
        docs.len(),
        summarizers.len(),
        cfg.output_dir.join("sweep.csv").display()
    );
    Ok(())
}
