//! `preprocess`: vectorize each document under the requested strategies
//! and report density/volume statistics, with optional matrix dumps.

use std::fmt::Write as _;

use anyhow::{bail, Result};
use rayon::prelude::*;
use ultrasumm_core::normalize::NormalizationStrategy;
use ultrasumm_core::vsm::{density, vectorize, volume, SentenceMatrix};

use super::{file_label, load_documents, print_warnings, write_atomic};
use crate::config::CommonArgs;

#[derive(Debug, clap::Args)]
pub struct PreprocessArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Normalization strategies to measure (repeatable).
    #[arg(long = "norm", default_values_t = ["raw".to_string(), "stem".to_string(), "fix:1".to_string()])]
    pub norms: Vec<String>,

    /// Also write one matrix dump per document and strategy.
    #[arg(long)]
    pub dump: bool,
}

struct DocRow {
    doc_id: String,
    label: String,
    rows: usize,
    cols: usize,
    nonzeros: u64,
    delta: f64,
    vol: f64,
    dump: Option<(String, String)>,
}

pub fn run(args: &PreprocessArgs) -> Result<()> {
    let cfg = args.common.resolve()?;
    let (docs, warnings) = load_documents(&cfg)?;
    print_warnings(&warnings);
    if docs.is_empty() {
        bail!("empty corpus: {}", cfg.corpus_dir.display());
    }

    let mut strategies: Vec<NormalizationStrategy> = Vec::new();
    for label in &args.norms {
        strategies.push(cfg.strategy(label)?);
    }

    let dump_wanted = args.dump;
    let per_doc: Vec<Vec<DocRow>> = cfg.with_pool(|| {
        docs.par_iter()
            .map(|(_, doc)| {
                let raw_matrix = vectorize(doc, &NormalizationStrategy::Raw)?;
                let mut rows = Vec::new();
                for strategy in &strategies {
                    let m: SentenceMatrix = vectorize(doc, strategy)?;
                    let stats = density(&m)?;
                    let vol = volume(&m, &raw_matrix)?;
                    let dump = dump_wanted.then(|| {
                        (
                            format!("{}.{}.mtx", doc.id, file_label(m.strategy())),
                            m.dump(),
                        )
                    });
                    rows.push(DocRow {
                        doc_id: doc.id.clone(),
                        label: strategy.label(),
                        rows: stats.rows,
                        cols: stats.cols,
                        nonzeros: stats.nonzeros,
                        delta: stats.density,
                        vol,
                        dump,
                    });
                }
                Ok(rows)
            })
            .collect::<Result<Vec<_>>>()
    })?;

    let mut doc_csv = String::from("doc_id,strategy,p,n,rho,nonzeros,delta,volume\n");
    for rows in &per_doc {
        for r in rows {
            let _ = writeln!(
                doc_csv,
                "{},{},{},{},{},{},{:.6},{:.6}",
                r.doc_id,
                r.label,
                r.rows,
                r.cols,
                r.rows as u64 * r.cols as u64,
                r.nonzeros,
                r.delta,
                r.vol
            );
        }
    }
    write_atomic(&cfg.output_dir.join("density_docs.csv"), &doc_csv)?;

    // Corpus table: mean P and N per strategy, rho from the means, mean
    // delta over documents, volume as rho ratio against raw.
    let mut corpus_csv = String::from("strategy,docs,mean_p,mean_n,rho,delta,volume\n");
    let n_docs = per_doc.len() as f64;
    let mean_for = |label: &str| -> (f64, f64, f64) {
        let mut p = 0.0;
        let mut n = 0.0;
        let mut d = 0.0;
        for rows in &per_doc {
            for r in rows.iter().filter(|r| r.label == label) {
                p += r.rows as f64;
                n += r.cols as f64;
                d += r.delta;
            }
        }
        (p / n_docs, n / n_docs, d / n_docs)
    };
    let raw_rho = {
        let (p, n, _) = mean_for("raw");
        // The raw baseline is always computed even when not requested.
        if strategies.iter().any(|s| s.label() == "raw") && p > 0.0 {
            p * n
        } else {
            let mut p_sum = 0.0;
            let mut n_sum = 0.0;
            for (_, doc) in &docs {
                let m = vectorize(doc, &NormalizationStrategy::Raw)?;
                p_sum += m.rows() as f64;
                n_sum += m.cols() as f64;
            }
            (p_sum / n_docs) * (n_sum / n_docs)
        }
    };
    for strategy in &strategies {
        let label = strategy.label();
        let (p, n, d) = mean_for(&label);
        let rho = p * n;
        let _ = writeln!(
            corpus_csv,
            "{},{},{:.2},{:.2},{:.2},{:.6},{:.6}",
            label,
            per_doc.len(),
            p,
            n,
            rho,
            d,
            rho / raw_rho
        );
    }
    write_atomic(&cfg.output_dir.join("density.csv"), &corpus_csv)?;

    for rows in &per_doc {
        for r in rows {
            if let Some((name, content)) = &r.dump {
                write_atomic(&cfg.output_dir.join("dumps").join(name), content)?;
            }
        }
    }
    println!(
        "preprocess: {} documents x {} strategies -> {}",
        per_doc.len(),
        strategies.len(),
        cfg.output_dir.display()
    );
    Ok(())
}
