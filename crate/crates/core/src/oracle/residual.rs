//! Pointwise eigen-residuals `(Ĥψ - Eψ)/(|E| max|ψ|)` of constructed states.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::eigenfunctions::Eigenstate;
use crate::error::{invalid, Result};
use crate::model::ModelParams;
use crate::operators::{
    apply_hamiltonian_1d, apply_hamiltonian_2d_polar, AngularFunction, SmoothFunction1D,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub max: f64,
    pub mean: f64,
    pub samples: usize,
}

/// Smallest distance kept from the origin and from the coordinate axes.
const EXCLUSION: f64 = 1e-3;

/// Samples `sample_count` seeded points in the bulk (`|x|` or `r` up to four
/// Gaussian widths, angles off the axes) and reports the relative residual
/// of `state` against `energy`.
pub fn residual_report(
    state: &Eigenstate,
    energy: f64,
    params: &ModelParams,
    sample_count: usize,
    seed: u64,
) -> Result<ResidualReport> {
    if sample_count == 0 {
        return Err(invalid("sample_count must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reach = 4.0 / state.gaussian_width();
    let mut diffs = Vec::with_capacity(sample_count);
    let mut peak: f64 = 0.0;
    for _ in 0..sample_count {
        let (d, psi) = match state {
            Eigenstate::Line { model, state: s } => {
                let mut x: f64 = rng.random_range(-reach..reach);
                if x.abs() < EXCLUSION {
                    x = EXCLUSION.copysign(x);
                }
                let psi = s.value_at(x);
                let h = apply_hamiltonian_1d(*model, params, s, x)?;
                ((h - energy * psi).abs(), psi.abs())
            }
            Eigenstate::Planar(p) => {
                let r: f64 = rng.random_range(EXCLUSION..reach);
                let quarter = std::f64::consts::FRAC_PI_2;
                let q: u32 = rng.random_range(0..4);
                let theta =
                    f64::from(q) * quarter + rng.random_range(EXCLUSION..quarter - EXCLUSION);
                let psi = p.radial.value_at(r) * p.angular.value_at(theta);
                let h =
                    apply_hamiltonian_2d_polar(p.model, params, &p.radial, &p.angular, r, theta)?;
                ((h - energy * psi).norm(), psi.norm())
            }
        };
        peak = peak.max(psi);
        diffs.push(d);
    }
    let scale = energy.abs().max(f64::MIN_POSITIVE) * peak.max(f64::MIN_POSITIVE);
    let max = diffs.iter().fold(0.0_f64, |m, d| m.max(*d)) / scale;
    let mean = diffs.iter().sum::<f64>() / (diffs.len() as f64 * scale);
    Ok(ResidualReport {
        max,
        mean,
        samples: sample_count,
    })
}
