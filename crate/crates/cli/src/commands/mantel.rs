//! `mantel`: permutation-test correlations between the gram matrices of
//! two (or a grid of) normalization strategies, per document plus a
//! corpus-mean grid.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{bail, Result};
use rayon::prelude::*;
use ultrasumm_core::analyze::{mantel_between_normalizations, MantelResult};
use ultrasumm_core::normalize::NormalizationStrategy;

use super::{load_documents, print_warnings, write_atomic};
use crate::config::{CommonArgs, RunConfig};

#[derive(Debug, clap::Args)]
pub struct MantelArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Compare exactly two strategies, e.g. `fix:1,stem`. Without this
    /// flag a full grid over raw, stem, fix:1 (and lemma when a
    /// dictionary is configured) is computed.
    #[arg(long)]
    pub strategies: Option<String>,
}

pub struct PairOutcome {
    pub doc_id: String,
    pub strat_a: String,
    pub strat_b: String,
    pub result: Result<MantelResult, ultrasumm_core::Error>,
}

pub fn mantel_pairs(
    cfg: &RunConfig,
    strategies: &[NormalizationStrategy],
) -> Result<Vec<PairOutcome>> {
    let (docs, warnings) = load_documents(cfg)?;
    print_warnings(&warnings);
    if docs.is_empty() {
        bail!("empty corpus: {}", cfg.corpus_dir.display());
    }
    let mut pairs = Vec::new();
    for i in 0..strategies.len() {
        for j in (i + 1)..strategies.len() {
            pairs.push((i, j));
        }
    }
    let outcomes: Vec<PairOutcome> = cfg.with_pool(|| {
        Ok(docs
            .par_iter()
            .flat_map_iter(|(_, doc)| {
                pairs.iter().map(move |&(i, j)| PairOutcome {
                    doc_id: doc.id.clone(),
                    strat_a: strategies[i].label(),
                    strat_b: strategies[j].label(),
                    result: mantel_between_normalizations(
                        doc,
                        &strategies[i],
                        &strategies[j],
                        cfg.permutations,
                        cfg.seed,
                    ),
                })
            })
            .collect())
    })?;
    Ok(outcomes)
}

pub fn outcome_json(out: &PairOutcome, cfg: &RunConfig) -> String {
    match &out.result {
        Ok(r) => serde_json::json!({
            "doc_id": out.doc_id,
            "strategies": [out.strat_a, out.strat_b],
            "r": r.r_observed,
            "permutations": r.permutations,
            "p_value": r.p_value,
            "greater_or_equal_count": r.greater_or_equal_count,
            "perm_mean": r.perm_mean,
            "perm_std": r.perm_std,
            "seed": cfg.seed,
        })
        .to_string(),
        Err(err) => serde_json::json!({
            "doc_id": out.doc_id,
            "strategies": [out.strat_a, out.strat_b],
            "skipped": err.to_string(),
            "seed": cfg.seed,
        })
        .to_string(),
    }
}

pub fn run(args: &MantelArgs) -> Result<()> {
    let cfg = args.common.resolve()?;
    let strategies: Vec<NormalizationStrategy> = match &args.strategies {
        Some(pair) => {
            let parts: Vec<&str> = pair.split(',').map(str::trim).collect();
            if parts.len() != 2 {
                bail!("--strategies expects exactly two labels, e.g. fix:1,stem");
            }
            vec![cfg.strategy(parts[0])?, cfg.strategy(parts[1])?]
        }
        None => {
            let mut set = vec![
                cfg.strategy("raw")?,
                cfg.strategy("stem")?,
                cfg.strategy("fix:1")?,
            ];
            if cfg.lemma_dict.is_some() {
                set.insert(0, cfg.strategy("lemma")?);
            }
            set
        }
    };
    let outcomes = mantel_pairs(&cfg, &strategies)?;

    let mut jsonl = String::new();
    for out in &outcomes {
        let _ = writeln!(jsonl, "{}", outcome_json(out, &cfg));
    }
    write_atomic(&cfg.output_dir.join("mantel.jsonl"), &jsonl)?;

    // Corpus-mean grid over documents that produced a result.
    let labels: Vec<String> = strategies.iter().map(|s| s.label()).collect();
    let mut sums: BTreeMap<(String, String), (f64, usize)> = BTreeMap::new();
    for out in &outcomes {
        if let Ok(r) = &out.result {
            let e = sums
                .entry((out.strat_a.clone(), out.strat_b.clone()))
                .or_insert((0.0, 0));
            e.0 += r.r_observed;
            e.1 += 1;
        }
    }
    let mean_r = |a: &str, b: &str| -> Option<f64> {
        if a == b {
            return Some(1.0);
        }
        let key = (a.to_string(), b.to_string());
        let rev = (b.to_string(), a.to_string());
        sums.get(&key)
            .or_else(|| sums.get(&rev))
            .filter(|(_, n)| *n > 0)
            .map(|(sum, n)| sum / *n as f64)
    };
    let mut grid = String::from("strategy");
    for l in &labels {
        let _ = write!(grid, "\t{l}");
    }
    grid.push('\n');
    for a in &labels {
        let _ = write!(grid, "{a}");
        for b in &labels {
            match mean_r(a, b) {
                Some(r) => {
                    let _ = write!(grid, "\t{r:.5}");
                }
                None => {
                    let _ = write!(grid, "\t-");
                }
            }
        }
        grid.push('\n');
    }
    write_atomic(&cfg.output_dir.join("mantel_grid.tsv"), &grid)?;

    let skipped = outcomes.iter().filter(|o| o.result.is_err()).count();
    println!(
        "mantel: {} comparisons, {} skipped -> {}",
        outcomes.len(),
        skipped,
        cfg.output_dir.display()
    );
    Ok(())
}
