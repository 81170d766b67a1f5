//! Run configuration: CLI flags override config-file values, which
//! override the environment seed and built-in defaults.
//!
//! The config file is a flat `key = value` format (strings may be
//! quoted, `#` starts a comment). Recognized keys: corpus, lang, out,
//! norm, summarizer, budget, perms, seed, workers, concat_cluster,
//! lemma_dict, stoplist.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use ultrasumm_core::corpus_io::StopList;
use ultrasumm_core::normalize::{load_lemma_dict, LemmaDict, NormalizationStrategy};
use ultrasumm_core::summarize::{Budget, SummarizerKind};
use ultrasumm_core::Language;

pub const SEED_ENV_VAR: &str = "ULTRASUMM_SEED";
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_PERMUTATIONS: usize = 999;
pub const DEFAULT_BUDGET: &str = "percent:10";

/// Values read from a config file; every field optional.
#[derive(Debug, Default, Clone)]
pub struct FileConfig {
    values: HashMap<String, String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read config file {}", path.display()))?;
        let mut values = HashMap::new();
        for (i, raw_line) in text.lines().enumerate() {
            let line = raw_line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!(
                    "{}:{}: expected `key = value`, got {:?}",
                    path.display(),
                    i + 1,
                    raw_line
                );
            };
            let value = value.trim().trim_matches('"').to_string();
            values.insert(key.trim().to_string(), value);
        }
        Ok(FileConfig { values })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }
}

/// Fully resolved settings shared by all subcommands.
#[derive(Clone)]
pub struct RunConfig {
    pub corpus_dir: PathBuf,
    pub language: Language,
    pub output_dir: PathBuf,
    pub seed: u64,
    pub permutations: usize,
    pub concat_cluster: bool,
    pub workers: Option<usize>,
    pub stoplist: StopList,
    pub lemma_dict: Option<Arc<LemmaDict>>,
}

/// Raw common flags as they arrive from clap; `resolve` merges them with
/// the config file, environment and defaults.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct CommonArgs {
    /// Corpus directory (one UTF-8 text file per document).
    #[arg(long)]
    pub corpus: Option<PathBuf>,

    /// Language code: en, es or fr.
    #[arg(long)]
    pub lang: Option<String>,

    /// Output directory for reports and artifacts.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Config file with `key = value` lines.
    #[arg(long)]
    pub config: Option<PathBuf>,

    /// Seed for permutation tests and any randomized choices.
    #[arg(long)]
    pub seed: Option<u64>,

    /// Permutation count for the Mantel test.
    #[arg(long)]
    pub perms: Option<usize>,

    /// Treat corpus subdirectories as clusters concatenated into one
    /// document each.
    #[arg(long)]
    pub concat_cluster: Option<bool>,

    /// Worker threads for per-document processing (default: all cores).
    #[arg(long)]
    pub workers: Option<usize>,

    /// Stop-list file overriding the bundled list for the language.
    #[arg(long)]
    pub stoplist: Option<PathBuf>,

    /// Lemma dictionary (`surface<TAB>lemma` per line); required for the
    /// lemma strategy.
    #[arg(long)]
    pub lemma_dict: Option<PathBuf>,
}

impl CommonArgs {
    pub fn resolve(&self) -> Result<RunConfig> {
        let file = match &self.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let corpus_dir = self
            .corpus
            .clone()
            .or_else(|| file.get("corpus").map(PathBuf::from))
            .ok_or_else(|| anyhow!("missing --corpus (or `corpus` in the config file)"))?;
        let language: Language = self
            .lang
            .clone()
            .or_else(|| file.get("lang").map(str::to_string))
            .ok_or_else(|| anyhow!("missing --lang (or `lang` in the config file)"))?
            .parse()?;
        let output_dir = self
            .out
            .clone()
            .or_else(|| file.get("out").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("out"));
        let env_seed = std::env::var(SEED_ENV_VAR)
            .ok()
            .and_then(|v| v.parse().ok());
        let seed = self
            .seed
            .or_else(|| file.get("seed").and_then(|v| v.parse().ok()))
            .or(env_seed)
            .unwrap_or(DEFAULT_SEED);
        let permutations = self
            .perms
            .or_else(|| file.get("perms").and_then(|v| v.parse().ok()))
            .unwrap_or(DEFAULT_PERMUTATIONS);
        let concat_cluster = self
            .concat_cluster
            .or_else(|| file.get("concat_cluster").and_then(|v| v.parse().ok()))
            .unwrap_or(true);
        let workers = self
            .workers
            .or_else(|| file.get("workers").and_then(|v| v.parse().ok()));
        let stoplist = match self
            .stoplist
            .clone()
            .or_else(|| file.get("stoplist").map(PathBuf::from))
        {
            Some(path) => StopList::from_path(&path, language)?,
            None => StopList::bundled(language),
        };
        let lemma_dict = match self
            .lemma_dict
            .clone()
            .or_else(|| file.get("lemma_dict").map(PathBuf::from))
        {
            Some(path) => Some(Arc::new(load_lemma_dict(&path, language)?)),
            None => None,
        };
        Ok(RunConfig {
            corpus_dir,
            language,
            output_dir,
            seed,
            permutations,
            concat_cluster,
            workers,
            stoplist,
            lemma_dict,
        })
    }
}

impl RunConfig {
    /// Parse a normalization label, wiring in the lemma dictionary.
    pub fn strategy(&self, label: &str) -> Result<NormalizationStrategy> {
        Ok(NormalizationStrategy::parse(
            label,
            self.lemma_dict.as_ref(),
        )?)
    }

    pub fn parse_budget(spec: Option<&str>, file_default: Option<&str>) -> Result<Budget> {
        let label = spec
            .map(str::to_string)
            .or_else(|| file_default.map(str::to_string))
            .unwrap_or_else(|| DEFAULT_BUDGET.to_string());
        Ok(Budget::parse(&label)?)
    }

    pub fn parse_summarizer(spec: Option<&str>) -> Result<SummarizerKind> {
        Ok(spec.unwrap_or("cortex").parse()?)
    }

    /// Run `body` inside a rayon pool sized by `workers` (or the rayon
    /// default when unset). Per-document work parallelizes; aggregation
    /// stays ordered by doc id.
    pub fn with_pool<T: Send>(&self, body: impl FnOnce() -> Result<T> + Send) -> Result<T> {
        match self.workers {
            Some(n) if n > 0 => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .context("failed to build worker pool")?;
                pool.install(body)
            }
            _ => body(),
        }
    }
}
