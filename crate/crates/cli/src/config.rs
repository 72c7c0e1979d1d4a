//! Run configuration: command-line flags layered over an optional JSON file.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use dunkl_darboux::{Model, ModelParams, Sector};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Model and parameter flags shared by every subcommand. Every field is
/// optional so a `--config` file can supply it; flags win over the file.
#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ModelArgs {
    /// darboux, dunkl, dunkl-darboux, darboux-landau, dunkl-landau or dunkl-darboux-landau
    #[arg(long, value_parser = parse_model)]
    pub model: Option<Model>,
    /// Spatial dimension N (planar models need 2)
    #[arg(long)]
    pub dim: Option<usize>,
    /// Curvature parameter λ ≥ 0
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    /// Dunkl parameter on the x axis
    #[arg(long, allow_negative_numbers = true)]
    pub mu_x: Option<f64>,
    /// Dunkl parameter on the y axis
    #[arg(long, allow_negative_numbers = true)]
    pub mu_y: Option<f64>,
    /// Per-axis Dunkl parameters, comma separated (one value applies to all axes)
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub mu: Option<Vec<f64>>,
    /// Oscillator frequency ω (default 1)
    #[arg(long)]
    pub omega: Option<f64>,
    /// Larmor frequency ω_c = eB/2c; a figure value B corresponds to ω_c = B/2
    #[arg(long)]
    pub omega_c: Option<f64>,
    /// Reduced Planck constant (default 1)
    #[arg(long)]
    pub hbar: Option<f64>,
    /// Restrict planar Dunkl output to one parity sector ε = e_x e_y
    #[arg(long, allow_negative_numbers = true, value_parser = parse_sector)]
    pub epsilon: Option<Sector>,
    /// JSON file with any of these fields; explicit flags take precedence
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

fn parse_model(s: &str) -> std::result::Result<Model, String> {
    s.parse().map_err(|e: dunkl_darboux::Error| e.to_string())
}

fn parse_sector(s: &str) -> std::result::Result<Sector, String> {
    match s {
        "1" | "+1" | "+" => Ok(Sector::Plus),
        "-1" | "-" => Ok(Sector::Minus),
        _ => Err(format!("epsilon must be +1 or -1, got '{s}'")),
    }
}

macro_rules! overlay {
    ($dst:ident, $src:ident, $($field:ident),*) => {
        $( if $src.$field.is_some() { $dst.$field = $src.$field.clone(); } )*
    };
}

impl ModelArgs {
    /// Reads the config file (if any) and overlays the explicit flags.
    pub fn resolve(&self) -> Result<ModelArgs> {
        let mut merged = match &self.config {
            Some(path) => read_config(path)?,
            None => ModelArgs::default(),
        };
        overlay!(merged, self, model, dim, lambda, mu_x, mu_y, mu, omega, omega_c, hbar, epsilon);
        Ok(merged)
    }

    pub fn model(&self) -> Result<Model> {
        self.model.context("--model is required")
    }

    /// Builds and validates parameters for the selected model.
    pub fn params(&self) -> Result<(Model, ModelParams)> {
        let model = self.model()?;
        let dim = self.dim.unwrap_or(if model.is_magnetic() { 2 } else { 1 });
        let mu = self.mu_vector(dim)?;
        if !model.uses_mu() && mu.iter().any(|&m| m != 0.0) {
            bail!("model {model} takes no Dunkl parameters");
        }
        let lambda = self.lambda.unwrap_or(0.0);
        if !model.uses_lambda() && lambda != 0.0 {
            bail!("model {model} takes no curvature; choose its Darboux variant");
        }
        if self.epsilon.is_some()
            && !matches!(model, Model::DunklLandau | Model::DunklDarbouxLandau)
        {
            bail!("--epsilon only applies to the planar Dunkl models");
        }
        let params = ModelParams {
            hbar: self.hbar.unwrap_or(1.0),
            omega: self.omega.unwrap_or(1.0),
            lambda,
            mu,
            omega_c: self.omega_c.unwrap_or(0.0),
            dim,
        };
        params.validate_for(model)?;
        Ok((model, params))
    }

    fn mu_vector(&self, dim: usize) -> Result<Vec<f64>> {
        if let Some(mu) = &self.mu {
            if self.mu_x.is_some() || self.mu_y.is_some() {
                bail!("give either --mu or --mu-x/--mu-y, not both");
            }
            return match mu.len() {
                1 => Ok(vec![mu[0]; dim]),
                n if n == dim => Ok(mu.clone()),
                n => bail!("--mu has {n} values but the dimension is {dim}"),
            };
        }
        if self.mu_y.is_some() && dim < 2 {
            bail!("--mu-y needs dim >= 2");
        }
        if dim > 2 && (self.mu_x.is_some() || self.mu_y.is_some()) {
            bail!("use --mu for dim > 2");
        }
        let mut mu = vec![0.0; dim];
        mu[0] = self.mu_x.unwrap_or(0.0);
        if dim == 2 {
            mu[1] = self.mu_y.unwrap_or(0.0);
        }
        Ok(mu)
    }
}

fn read_config(path: &Path) -> Result<ModelArgs> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}
