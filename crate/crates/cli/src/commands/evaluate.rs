//! `evaluate`: grade existing summary files against their source
//! documents. Summary files pair with sources by id prefix, following
//! the `<id>.<summarizer>.<norm>.txt` convention of `summarize`.

use std::fmt::Write as _;
use std::fs;

use anyhow::{bail, Context, Result};
use std::path::PathBuf;
use ultrasumm_core::evaluate::evaluate_text;

use super::{load_documents, print_warnings, write_atomic};
use crate::config::CommonArgs;

#[derive(Debug, clap::Args)]
pub struct EvaluateArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Directory of candidate summaries (one .txt per summary).
    #[arg(long)]
    pub summaries: PathBuf,
}

pub fn run(args: &EvaluateArgs) -> Result<()> {
    let cfg = args.common.resolve()?;
    let (docs, warnings) = load_documents(&cfg)?;
    print_warnings(&warnings);
    if docs.is_empty() {
        bail!("empty corpus: {}", cfg.corpus_dir.display());
    }

    let mut summary_files: Vec<PathBuf> = fs::read_dir(&args.summaries)
        .with_context(|| format!("cannot read {}", args.summaries.display()))?
        .flatten()
        .map(|e| e.path())
        .filter(|p| p.is_file() && p.extension().is_some_and(|e| e == "txt"))
        .collect();
    summary_files.sort();
    if summary_files.is_empty() {
        bail!("no .txt summaries under {}", args.summaries.display());
    }

    let mut csv = String::from("doc_id,summarizer,norm,fresa1,fresa2,fresa_su4,mean\n");
    let mut evaluated = 0usize;
    let mut unmatched = 0usize;
    for path in &summary_files {
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        // Name pattern: <doc_id>.<summarizer>.<norm>; anything shorter
        // still pairs by the first dot-separated field.
        let mut parts = name.split('.');
        let doc_id = parts.next().unwrap_or_default().to_string();
        let summarizer = parts.next().unwrap_or("-").to_string();
        let norm = parts.next().unwrap_or("-").to_string();
        let Some((raw, _)) = docs.iter().find(|(raw, _)| raw.id == doc_id) else {
            eprintln!("warning: no source document for {}", path.display());
            unmatched += 1;
            continue;
        };
        let summary_text = fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        let report = evaluate_text(&raw.text, &summary_text, cfg.language, &cfg.stoplist)?;
        let _ = writeln!(
            csv,
            "{},{},{},{:.6},{:.6},{:.6},{:.6}",
            doc_id, summarizer, norm, report.fresa1, report.fresa2, report.fresa_su4, report.mean
        );
        evaluated += 1;
    }
    write_atomic(&cfg.output_dir.join("evaluation.csv"), &csv)?;
    println!(
        "evaluate: {} summaries graded, {} unmatched -> {}",
        evaluated,
        unmatched,
        cfg.output_dir.join("evaluation.csv").display()
    );
    if evaluated == 0 {
        bail!("no summary matched a source document");
    }
    Ok(())
}
