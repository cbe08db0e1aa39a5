use std::path::{Path, PathBuf};
use std::process::ExitCode;

use brui::analysis::run_analysis;
use brui::build::run_build_index;
use brui::compare::run_compare;
use brui::config::AnalysisConfig;
use brui::plot::run_plot_data;
use brui::{Error, Result};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "brui",
    version,
    about = "Text-based event uncertainty indices and VAR analysis"
)]
struct Cli {
    /// Configuration file (TOML, or JSON including an analysis report.json)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    /// Bootstrap seed; overrides the config
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Suppress progress messages
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build both indices from a directory of monthly reports
    BuildIndex {
        /// Directory of YYYY-MM.txt reports (overrides corpus_dir)
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        lexicon: Option<PathBuf>,
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Fit the VAR and write responses, decompositions and a report
    Analyze {
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        panel: Option<PathBuf>,
        /// Previously built index.csv (skips the corpus)
        #[arg(long)]
        index: Option<PathBuf>,
    },
    /// Correlate two month-keyed series over their shared months
    Compare {
        series_a: PathBuf,
        series_b: PathBuf,
        #[arg(long)]
        column_a: Option<String>,
        #[arg(long)]
        column_b: Option<String>,
    },
    /// Write tidy per-figure CSVs from earlier outputs
    PlotData {
        /// Directory holding earlier outputs (defaults to --out)
        input: Option<PathBuf>,
    },
}

fn load_config(path: Option<&Path>) -> Result<AnalysisConfig> {
    match path {
        Some(p) if !p.exists() => Err(Error::Missing(p.to_path_buf())),
        Some(p) => AnalysisConfig::load(p),
        None => Ok(AnalysisConfig::default()),
    }
}

fn run(cli: Cli) -> Result<()> {
    let quiet = cli.quiet;
    let log = move |msg: &str| {
        if !quiet {
            eprintln!("{msg}");
        }
    };
    let mut cfg = load_config(cli.config.as_deref())?;
    match cli.command {
        Command::BuildIndex {
            corpus,
            lexicon,
            radius,
        } => {
            cfg.corpus_dir = corpus.or(cfg.corpus_dir);
            cfg.lexicon_path = lexicon.or(cfg.lexicon_path);
            cfg.radius = radius.unwrap_or(cfg.radius);
            cfg.validate()?;
            let dir = cfg
                .corpus_dir
                .as_deref()
                .ok_or_else(|| Error::Config("corpus_dir is required (config or --corpus)".into()))?;
            let (rows, _) = run_build_index(dir, cfg.lexicon_path.as_deref(), cfg.radius, &cli.out)?;
            log(&format!("built {} months into {}", rows.len(), cli.out.display()));
        }
        Command::Analyze { corpus, panel, index } => {
            cfg.corpus_dir = corpus.or(cfg.corpus_dir);
            cfg.panel_path = panel.or(cfg.panel_path);
            cfg.index_path = index.or(cfg.index_path);
            cfg.validate()?;
            // 53 bits, so the recorded seed survives any JSON reader
            let seed = cli
                .seed
                .or(cfg.bootstrap.seed)
                .unwrap_or_else(|| rand::random::<u64>() >> 11);
            log(&format!("seed {seed}"));
            let report = run_analysis(&cfg, seed, &cli.out, &log)?;
            let failed = report.samples.iter().filter(|s| s.status != "ok").count();
            log(&format!(
                "{} samples, {failed} failed; report in {}",
                report.samples.len(),
                cli.out.join("report.json").display()
            ));
        }
        Command::Compare {
            series_a,
            series_b,
            column_a,
            column_b,
        } => {
            let r = run_compare(
                &series_a,
                &series_b,
                column_a.as_deref(),
                column_b.as_deref(),
                &cli.out,
            )?;
            log(&format!(
                "r = {} over {} months ({}..{})",
                r.r, r.n, r.overlap_start, r.overlap_end
            ));
        }
        Command::PlotData { input } => {
            let input = input.unwrap_or_else(|| cli.out.clone());
            let files = run_plot_data(&input, &cli.out.join("plot"))?;
            log(&format!("wrote {} plot files", files.len()));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = e.to_string().replace(['\n', '\r'], " ");
            eprintln!("error: {}: {msg}", e.kind());
            ExitCode::FAILURE
        }
    }
}
