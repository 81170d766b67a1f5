//! Subcommand implementations.

pub mod evaluate;
pub mod mantel;
pub mod preprocess;
pub mod stats;
pub mod summarize;
pub mod sweep;

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use ultrasumm_core::corpus_io::{
    build_document, load_corpus_clustered, Document, RawDocument,
};
use ultrasumm_core::normalize::StrategyKind;

use crate::config::RunConfig;

/// Raw documents paired with their filtered form, in id order.
pub(crate) type CorpusDocs = Vec<(RawDocument, Document)>;

/// Load the corpus and run the filtering pipeline over every document.
/// Returns raw and filtered documents in lexicographic id order plus any
/// per-file warnings.
pub(crate) fn load_documents(cfg: &RunConfig) -> Result<(CorpusDocs, Vec<String>)> {
    let outcome = load_corpus_clustered(&cfg.corpus_dir, cfg.language, cfg.concat_cluster)?;
    let docs = outcome
        .documents
        .into_iter()
        .map(|raw| {
            let doc = build_document(&raw, &cfg.stoplist);
            (raw, doc)
        })
        .collect();
    Ok((docs, outcome.warnings))
}

/// Write a file via a temp sibling and an atomic rename.
pub(crate) fn write_atomic(path: &Path, content: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)
            .with_context(|| format!("cannot create {}", parent.display()))?;
    }
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, content).with_context(|| format!("cannot write {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("cannot move into {}", path.display()))?;
    Ok(())
}

/// Strategy label suitable for file names ("fix:3" becomes "fix3").
pub(crate) fn file_label(kind: StrategyKind) -> String {
    kind.to_string().replace(':', "")
}

pub(crate) fn print_warnings(warnings: &[String]) {
    for w in warnings {
        eprintln!("warning: {w}");
    }
}
