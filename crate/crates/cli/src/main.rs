use clap::{Parser, Subcommand};

use ultrasumm_cli::commands;

/// Multilingual extractive summarization toolkit: preprocessing
/// diagnostics, three sentence scorers, truncation sweeps, Mantel
/// matrix correlation, and reference-free summary evaluation.
#[derive(Parser)]
#[command(name = "ultrasumm", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Vectorize documents and report matrix density and volume.
    Preprocess(commands::preprocess::PreprocessArgs),
    /// Score sentences and write extracts with per-stage timings.
    Summarize(commands::summarize::SummarizeArgs),
    /// Evaluate truncation lengths 1..n against raw/stem/lemma baselines.
    Sweep(commands::sweep::SweepArgs),
    /// Mantel permutation test between normalization strategies.
    Mantel(commands::mantel::MantelArgs),
    /// Letter-ranking and word-length tables.
    Stats(commands::stats::StatsArgs),
    /// Grade existing summaries against their source documents.
    Evaluate(commands::evaluate::EvaluateArgs),
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Commands::Preprocess(args) => commands::preprocess::run(args),
        Commands::Summarize(args) => commands::summarize::run(args),
        Commands::Sweep(args) => commands::sweep::run(args),
        Commands::Mantel(args) => commands::mantel::run(args),
        Commands::Stats(args) => commands::stats::run(args),
        Commands::Evaluate(args) => commands::evaluate::run(args),
    };
    if let Err(err) = result {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
