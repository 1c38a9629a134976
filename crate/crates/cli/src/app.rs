//! Command-line definition and experiment dispatch.

use crate::config::{self, Experiment, Overrides, RunConfig};
use crate::csv::{self, robustness_csv_rows};
use crate::svg::{self, SweepMetric};
use clap::{Parser, Subcommand};
use coordsim::experiments::{
    check_propositions, default_k_grid, grid_points, run_heatmap, run_robustness, run_sweep,
    Regime, ROBUSTNESS_ALPHAS,
};
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(
    name = "coordsim",
    version,
    about = "Deterministic coordination-compression economy simulator",
    long_about = "Simulates how agent capital compresses coordination costs in a hierarchical \
                  economy, sweeping spans of control, employment, wages, and inequality across \
                  parameter regimes. Results are written as CSV (and optional SVG charts)."
)]
pub struct Cli {
    /// Configuration file: one `key = value` per line, `#` comments.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output directory for CSV and SVG files.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker assignment mode: pam | random.
    #[arg(long, global = true)]
    pub mode: Option<String>,
    /// Also render SVG line charts (sweep experiment).
    #[arg(long, global = true)]
    pub svg: bool,
    /// Total factor productivity.
    #[arg(long, global = true)]
    pub tfp: Option<f64>,
    /// Labor share of team output, in (0,1).
    #[arg(long, global = true)]
    pub alpha: Option<f64>,
    /// Baseline coordination friction, > 0.
    #[arg(long, global = true)]
    pub c0: Option<f64>,
    /// Compression effectiveness of agent capital, >= 0.
    #[arg(long, global = true)]
    pub gamma: Option<f64>,
    /// Elite-complementarity exponent, >= 0.
    #[arg(long, global = true)]
    pub beta: Option<f64>,
    /// Task-creation elasticity, >= 0.
    #[arg(long, global = true)]
    pub delta: Option<f64>,
    /// Baseline task frontier, > 0.
    #[arg(long, global = true)]
    pub t0: Option<f64>,
    #[arg(long, global = true)]
    pub n_managers: Option<usize>,
    #[arg(long, global = true)]
    pub n_workers: Option<usize>,
    #[arg(long, global = true)]
    pub manager_skill_min: Option<f64>,
    #[arg(long, global = true)]
    pub manager_skill_max: Option<f64>,
    #[arg(long, global = true)]
    pub worker_skill_a: Option<f64>,
    #[arg(long, global = true)]
    pub worker_skill_b: Option<f64>,
    /// Seed for the random-assignment mode.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub heatmap_beta_min: Option<f64>,
    #[arg(long, global = true)]
    pub heatmap_beta_max: Option<f64>,
    #[arg(long, global = true)]
    pub heatmap_beta_step: Option<f64>,
    #[arg(long, global = true)]
    pub heatmap_delta_min: Option<f64>,
    #[arg(long, global = true)]
    pub heatmap_delta_max: Option<f64>,
    #[arg(long, global = true)]
    pub heatmap_delta_step: Option<f64>,
    /// Agent capital level the heatmap plane is cut at.
    #[arg(long, global = true)]
    pub heatmap_k_a: Option<f64>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum Command {
    /// Sweep all four regimes over the agent-capital grid.
    Sweep,
    /// Evaluate manager Gini and output over the (beta, delta) plane.
    Heatmap,
    /// Re-run the regime endpoints at labor shares 0.50/0.65/0.80.
    Robustness,
    /// Check the five comparative-statics propositions.
    Props,
}

impl From<Command> for Experiment {
    fn from(cmd: Command) -> Experiment {
        match cmd {
            Command::Sweep => Experiment::Sweep,
            Command::Heatmap => Experiment::Heatmap,
            Command::Robustness => Experiment::Robustness,
            Command::Props => Experiment::Props,
        }
    }
}

#[derive(Debug, Error)]
pub enum AppError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Runtime(String),
    #[error("{failed} of 5 proposition checks failed")]
    Propositions { failed: usize },
}

impl AppError {
    pub fn exit_code(&self) -> u8 {
        match self {
            AppError::Config(_) => 1,
            AppError::Runtime(_) => 2,
            AppError::Propositions { .. } => 3,
        }
    }
}

fn runtime(e: impl std::fmt::Display) -> AppError {
    AppError::Runtime(e.to_string())
}

fn io_error(path: &Path, e: std::io::Error) -> AppError {
    AppError::Runtime(format!("{}: {e}", path.display()))
}

/// Resolve defaults, config file, flag overrides, and the subcommand into a
/// run configuration.
pub fn resolve_config(cli: &Cli) -> Result<RunConfig, AppError> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| AppError::Config(format!("cannot read {}: {e}", path.display())))?;
            config::parse_config(&text).map_err(|e| AppError::Config(e.to_string()))?
        }
        None => RunConfig::default(),
    };
    let overrides = Overrides {
        tfp: cli.tfp,
        alpha: cli.alpha,
        c0: cli.c0,
        gamma: cli.gamma,
        beta: cli.beta,
        delta: cli.delta,
        t0: cli.t0,
        n_managers: cli.n_managers,
        n_workers: cli.n_workers,
        manager_skill_min: cli.manager_skill_min,
        manager_skill_max: cli.manager_skill_max,
        worker_skill_a: cli.worker_skill_a,
        worker_skill_b: cli.worker_skill_b,
        seed: cli.seed,
        out: cli.out.clone(),
        mode: cli.mode.clone(),
        svg: cli.svg,
        heatmap_beta_min: cli.heatmap_beta_min,
        heatmap_beta_max: cli.heatmap_beta_max,
        heatmap_beta_step: cli.heatmap_beta_step,
        heatmap_delta_min: cli.heatmap_delta_min,
        heatmap_delta_max: cli.heatmap_delta_max,
        heatmap_delta_step: cli.heatmap_delta_step,
        heatmap_k_a: cli.heatmap_k_a,
        experiment: cli.command.map(Experiment::from),
    };
    config::apply_overrides(&mut cfg, &overrides).map_err(|e| AppError::Config(e.to_string()))?;
    Ok(cfg)
}

pub fn execute(cli: Cli) -> Result<(), AppError> {
    let cfg = resolve_config(&cli)?;
    run_experiment(&cfg)
}

/// Run the configured experiment and write its outputs.
pub fn run_experiment(cfg: &RunConfig) -> Result<(), AppError> {
    std::fs::create_dir_all(&cfg.out_dir).map_err(|e| io_error(&cfg.out_dir, e))?;
    match cfg.experiment {
        Experiment::Sweep => {
            let rows = run_sweep(&cfg.params, cfg.mode, &Regime::ALL, &default_k_grid())
                .map_err(runtime)?;
            let path = cfg.out_dir.join("sweep.csv");
            csv::write_csv(&rows, &path).map_err(|e| io_error(&path, e))?;
            println!("wrote {} ({} rows)", path.display(), rows.len());
            if cfg.emit_svg {
                for metric in SweepMetric::CHARTED {
                    let path = cfg.out_dir.join(format!("sweep_{}.svg", metric.slug()));
                    svg::render_sweep_svg(&rows, metric, &path).map_err(|e| io_error(&path, e))?;
                    println!("wrote {}", path.display());
                }
            }
        }
        Experiment::Heatmap => {
            let h = &cfg.heatmap;
            let betas = grid_points(h.beta_min, h.beta_max, h.beta_step).map_err(runtime)?;
            let deltas = grid_points(h.delta_min, h.delta_max, h.delta_step).map_err(runtime)?;
            let rows =
                run_heatmap(&cfg.params, cfg.mode, &betas, &deltas, h.k_a).map_err(runtime)?;
            let path = cfg.out_dir.join("heatmap.csv");
            csv::write_csv(&rows, &path).map_err(|e| io_error(&path, e))?;
            println!("wrote {} ({} rows)", path.display(), rows.len());
        }
        Experiment::Robustness => {
            let report =
                run_robustness(&cfg.params, cfg.mode, &ROBUSTNESS_ALPHAS).map_err(runtime)?;
            let rows = robustness_csv_rows(&report);
            let path = cfg.out_dir.join("robustness.csv");
            csv::write_csv(&rows, &path).map_err(|e| io_error(&path, e))?;
            println!("wrote {} ({} rows)", path.display(), rows.len());
            println!(
                "qualitative checks passed: {}/{}",
                report.checks_passed(),
                report.checks_total()
            );
        }
        Experiment::Props => {
            let report = check_propositions(&cfg.params, cfg.mode).map_err(runtime)?;
            for outcome in &report.outcomes {
                let status = if outcome.passed { "PASS" } else { "FAIL" };
                let note = outcome
                    .note
                    .as_ref()
                    .map(|n| format!(" [{n}]"))
                    .unwrap_or_default();
                println!(
                    "P{} {status}: {} (worst violation {:.3e}){note}",
                    outcome.index, outcome.name, outcome.worst_violation
                );
            }
            let failed = report.outcomes.iter().filter(|o| !o.passed).count();
            if failed > 0 {
                return Err(AppError::Propositions { failed });
            }
            println!("all propositions hold");
        }
    }
    Ok(())
}
