use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::Args;
use dunkl_darboux::oracle::{run_checks, CheckKind, CheckResult, VerifyConfig};
use dunkl_darboux::{
    enumerate_levels, metric_factor, scalar_curvature, LevelRecord, Model, ModelParams,
    QuantumNumbers, Sector,
};
use serde::{Deserialize, Serialize};

use crate::config::{Format, ModelArgs};
use crate::output::{emit, float, levels_csv, sweep_csv, SweepRecord};

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Output file (stdout when omitted)
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Largest total oscillator index (Σn_i, 2n+|m| or 2k+2m')
    #[arg(long, default_value_t = 10)]
    pub levels: u32,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 6)]
    pub levels: u32,
    /// Comma-separated λ values
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub lambda_sweep: Option<Vec<f64>>,
    /// Comma-separated field values B, applied as ω_c = B/2
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub b_sweep: Option<Vec<f64>>,
    /// Comma-separated ω_c values
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub omega_c_sweep: Option<Vec<f64>>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Suites to run (repeatable): oracle, residual, gram, limits, angular, algebra, implicit.
    /// All of them when omitted.
    #[arg(long = "check")]
    pub checks: Vec<String>,
    #[arg(long, default_value_t = 96)]
    pub basis_size: usize,
    /// Seed for residual sample points and random test functions
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Replace every suite tolerance with this value
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// `json` prints the report instead of the summary lines
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Also write the JSON report here
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CurvatureArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Comma-separated x² sample values (≥ 0)
    #[arg(long, value_delimiter = ',', required = true)]
    pub x_sq: Vec<f64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn sector_filter(records: Vec<LevelRecord>, epsilon: Option<Sector>) -> Vec<LevelRecord> {
    let Some(eps) = epsilon else { return records };
    records
        .into_iter()
        .filter(|r| match r.quantum_numbers {
            QuantumNumbers::Angular { m_prime, .. } => m_prime.sector() == eps,
            _ => true,
        })
        .collect()
}

pub fn spectrum(args: &SpectrumArgs) -> Result<()> {
    let model_args = args.model.resolve()?;
    let (model, params) = model_args.params()?;
    let records = sector_filter(
        enumerate_levels(model, &params, i64::from(args.levels))?,
        model_args.epsilon,
    );
    let text = match args.out.format {
        Format::Csv => levels_csv(&records),
        Format::Json => serde_json::to_string_pretty(&records)? + "\n",
    };
    emit(&text, args.out.output.as_deref())
}

pub fn levels_figure(args: &FigureArgs) -> Result<()> {
    let model_args = args.model.resolve()?;
    let sweeps: Vec<(&str, &Vec<f64>)> = [
        ("lambda", &args.lambda_sweep),
        ("B", &args.b_sweep),
        ("omega_c", &args.omega_c_sweep),
    ]
    .into_iter()
    .filter_map(|(name, v)| v.as_ref().map(|v| (name, v)))
    .collect();
    let (name, values) = match sweeps.as_slice() {
        [one] => *one,
        [] => bail!("give one of --lambda-sweep, --b-sweep or --omega-c-sweep"),
        _ => bail!("give only one sweep"),
    };
    if values.is_empty() {
        bail!(
            "the --{} list is empty",
            name.to_lowercase().replace('_', "-") + "-sweep"
        );
    }
    let mut rows = Vec::new();
    for &value in values {
        let mut swept = model_args.clone();
        match name {
            "lambda" => swept.lambda = Some(value),
            "B" => swept.omega_c = Some(value / 2.0),
            _ => swept.omega_c = Some(value),
        }
        let (model, params) = swept.params()?;
        for level in sector_filter(
            enumerate_levels(model, &params, i64::from(args.levels))?,
            swept.epsilon,
        ) {
            rows.push(SweepRecord {
                sweep: name.to_string(),
                value,
                level,
            });
        }
    }
    let text = match args.out.format {
        Format::Csv => sweep_csv(&rows),
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
    };
    emit(&text, args.out.output.as_deref())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub model: Model,
    pub params: ModelParams,
    pub basis_size: usize,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

/// Runs the suites; returns whether every check passed.
pub fn verify(args: &VerifyArgs) -> Result<bool> {
    let model_args = args.model.resolve()?;
    let (model, params) = model_args.params()?;
    let kinds = args
        .checks
        .iter()
        .map(|c| c.parse::<CheckKind>())
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if let Some(t) = args.tolerance {
        if !(t >= 0.0) {
            bail!("--tolerance must be non-negative");
        }
    }
    let config = VerifyConfig {
        model,
        params: params.clone(),
        basis_size: args.basis_size,
        seed: args.seed,
        epsilon: model_args.epsilon,
        tolerance: args.tolerance,
    };
    let checks = run_checks(&config, &kinds)?;
    let passed = checks.iter().all(|c| c.passed);
    let report = VerifyReport {
        model,
        params,
        basis_size: args.basis_size,
        seed: args.seed,
        passed,
        checks,
    };
    let json = serde_json::to_string_pretty(&report)? + "\n";
    if let Some(path) = &args.output {
        emit(&json, Some(path))?;
    }
    match args.format {
        Format::Json => emit(&json, None)?,
        Format::Csv => {
            let mut text = String::new();
            for c in &report.checks {
                text += &format!(
                    "{} {}: observed {:.3e}, tolerance {:.1e}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.observed,
                    c.tolerance
                );
            }
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            text += &format!("{} checks, {failed} failed\n", report.checks.len());
            emit(&text, None)?;
        }
    }
    Ok(passed)
}

pub fn curvature(args: &CurvatureArgs) -> Result<()> {
    let mut model_args = args.model.resolve()?;
    model_args.model.get_or_insert(Model::Darboux);
    let (_, params) = model_args.params()?;
    let mut text = String::from("x_sq,metric,curvature\n");
    for &x in &args.x_sq {
        if !(x >= 0.0) {
            bail!("x_sq values must be non-negative, got {x}");
        }
        text += &format!(
            "{},{},{}\n",
            float(x),
            float(metric_factor(&params, x)?),
            float(scalar_curvature(&params, x)?)
        );
    }
    emit(&text, args.output.as_deref())
}
