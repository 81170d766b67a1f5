//! `summarize`: score and extract each document, writing summary text,
//! a JSON score record and a per-stage timing CSV.

use std::fmt::Write as _;
use std::time::Instant;

use anyhow::{bail, Result};
use rayon::prelude::*;
use ultrasumm_core::corpus_io::{build_document, RawDocument, StopList};
use ultrasumm_core::normalize::{normalize_document, NormalizationStrategy};
use ultrasumm_core::summarize::{
    assemble, extract, min_max_normalize, score, Budget, SummarizerKind, SummaryScore,
};
use ultrasumm_core::vsm::vectorize_tokens;

use super::{file_label, load_documents, print_warnings, write_atomic};
use crate::config::{CommonArgs, RunConfig};
use crate::timing::TimingRecord;

#[derive(Debug, clap::Args)]
pub struct SummarizeArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Normalization strategy: raw, stem, lemma or fix:<n>.
    #[arg(long)]
    pub norm: Option<String>,

    /// Sentence scorer: cortex, enertex or artex.
    #[arg(long)]
    pub summarizer: Option<String>,

    /// Summary budget: words:<k>, sentences:<k> or percent:<p>.
    #[arg(long)]
    pub budget: Option<String>,
}

pub struct DocSummary {
    pub doc_id: String,
    pub text: String,
    pub score: SummaryScore,
    pub timing: TimingRecord,
}

/// One full pipeline run over a raw document, timed per stage.
pub fn summarize_raw_document(
    raw: &RawDocument,
    stoplist: &StopList,
    strategy: &NormalizationStrategy,
    kind: SummarizerKind,
    budget: Budget,
) -> Result<DocSummary> {
    let started = Instant::now();

    let t = Instant::now();
    let doc = build_document(raw, stoplist);
    let filter = t.elapsed();

    let t = Instant::now();
    let normalized = normalize_document(&doc, strategy);
    let normalize = t.elapsed();

    let t = Instant::now();
    let matrix = vectorize_tokens(&normalized, strategy.kind())?;
    let vectorize = t.elapsed();

    let t = Instant::now();
    let raw_scores = score(kind, &matrix);
    let scores = min_max_normalize(&raw_scores);
    let summary = extract(&scores, &doc, budget)?;
    let text = assemble(&summary, &doc);
    let summarize = t.elapsed();

    Ok(DocSummary {
        doc_id: raw.id.clone(),
        text,
        score: summary,
        timing: TimingRecord {
            doc_id: raw.id.clone(),
            filter,
            normalize,
            vectorize,
            summarize,
            total: started.elapsed(),
        },
    })
}

pub fn score_record_json(
    summary: &DocSummary,
    kind: SummarizerKind,
    strategy_label: &str,
) -> String {
    let value = serde_json::json!({
        "doc_id": summary.doc_id,
        "summarizer": kind.to_string(),
        "norm": strategy_label,
        "budget": summary.score.budget.label(),
        "budget_exceeds_source": summary.score.budget_exceeds_source,
        "selected": summary.score.selected,
        "scores": summary.score.scores,
    });
    format!("{value:#}\n")
}

pub fn run(args: &SummarizeArgs) -> Result<()> {
    let cfg = args.common.resolve()?;
    let strategy = cfg.strategy(args.norm.as_deref().unwrap_or("fix:1"))?;
    let kind = RunConfig::parse_summarizer(args.summarizer.as_deref())?;
    let budget = RunConfig::parse_budget(args.budget.as_deref(), None)?;

    let (docs, warnings) = load_documents(&cfg)?;
    print_warnings(&warnings);
    if docs.is_empty() {
        bail!("empty corpus: {}", cfg.corpus_dir.display());
    }

    // Per-document failures are isolated; the batch continues.
    let results: Vec<(String, Result<DocSummary>)> = cfg.with_pool(|| {
        Ok(docs
            .par_iter()
            .map(|(raw, _)| {
                (
                    raw.id.clone(),
                    summarize_raw_document(raw, &cfg.stoplist, &strategy, kind, budget),
                )
            })
            .collect())
    })?;

    let label = strategy.label();
    let fname_label = file_label(strategy.kind());
    let mut timings = String::from(TimingRecord::CSV_HEADER);
    timings.push('\n');
    let mut failures = Vec::new();
    for (doc_id, result) in &results {
        match result {
            Ok(summary) => {
                let base = format!("{}.{}.{}", summary.doc_id, kind, fname_label);
                write_atomic(
                    &cfg.output_dir.join(format!("{base}.txt")),
                    &format!("{}\n", summary.text),
                )?;
                write_atomic(
                    &cfg.output_dir.join(format!("{base}.json")),
                    &score_record_json(summary, kind, &label),
                )?;
                let _ = writeln!(timings, "{}", summary.timing.to_csv_row());
            }
            Err(err) => {
                eprintln!("error: {doc_id}: {err}");
                failures.push(doc_id.clone());
            }
        }
    }
    write_atomic(&cfg.output_dir.join("timings.csv"), &timings)?;
    println!(
        "summarize: {} ok, {} failed -> {}",
        results.len() - failures.len(),
        failures.len(),
        cfg.output_dir.display()
    );
    if !failures.is_empty() {
        bail!("{} document(s) failed: {}", failures.len(), failures.join(", "));
    }
    Ok(())
}
