//! Dense collocation of the angular operator 𝒥 on a reflection-closed grid.
//!
//! Nodes `θ_j = (j + 1/2)·2π/M` avoid the four axes, and both reflections
//! permute them: `R_y: j ↦ M-1-j`, `R_x: j ↦ (M/2-1-j) mod M`. The derivative
//! is the periodic spectral (trigonometric) differentiation matrix.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{invalid, Result};
use crate::model::Sector;

/// Eigenvalues closer than this are treated as one defective cluster.
pub const CLUSTER_GAP: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct AngularDiscretization {
    pub grid: Vec<f64>,
    /// Real matrix `K` with `𝒥 = iK`.
    pub k_matrix: DMatrix<f64>,
}

/// Builds the collocation matrix of 𝒥 for `grid_size` nodes.
pub fn discretize_angular_j(
    mu_x: f64,
    mu_y: f64,
    grid_size: usize,
) -> Result<AngularDiscretization> {
    if !grid_size.is_multiple_of(2) || grid_size < 64 {
        return Err(invalid(format!(
            "grid must be even and at least 64 to be reflection-closed, got {grid_size}"
        )));
    }
    if !(mu_x > -0.5 && mu_y > -0.5) {
        return Err(invalid("Dunkl parameters must exceed -1/2"));
    }
    let m = grid_size;
    let h = 2.0 * std::f64::consts::PI / m as f64;
    let grid: Vec<f64> = (0..m).map(|j| (j as f64 + 0.5) * h).collect();
    let mut k = DMatrix::<f64>::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            if i != j {
                let d = i as f64 - j as f64;
                let sign = if (i + m - j).is_multiple_of(2) {
                    1.0
                } else {
                    -1.0
                };
                k[(i, j)] = 0.5 * sign / (0.5 * d * h).tan();
            }
        }
    }
    for (i, &t) in grid.iter().enumerate() {
        let cot = mu_y / t.tan();
        let tan = mu_x * t.tan();
        let ry = m - 1 - i;
        let rx = (m / 2 + m - 1 - i) % m;
        k[(i, i)] += cot - tan;
        k[(i, ry)] -= cot;
        k[(i, rx)] += tan;
    }
    Ok(AngularDiscretization { grid, k_matrix: k })
}

impl AngularDiscretization {
    pub fn grid_size(&self) -> usize {
        self.grid.len()
    }

    /// Matrix of 𝒥 itself.
    pub fn j_matrix(&self) -> DMatrix<Complex64> {
        self.k_matrix.map(|v| Complex64::new(0.0, v))
    }

    /// `K` restricted to functions with `g(θ - π) = ε g(θ)`.
    pub fn sector_block(&self, epsilon: Sector) -> DMatrix<f64> {
        let half = self.grid_size() / 2;
        let e = epsilon.sign();
        DMatrix::from_fn(half, half, |i, j| {
            self.k_matrix[(i, j)] + e * self.k_matrix[(i, j + half)]
        })
    }

    /// Largest entry of `KP - PK`, with `P` the grid map of `R_xR_y`.
    pub fn block_leak(&self) -> f64 {
        let m = self.grid_size();
        let half = m / 2;
        let mut worst: f64 = 0.0;
        for i in 0..m {
            for j in 0..m {
                let kp = self.k_matrix[(i, (j + half) % m)];
                let pk = self.k_matrix[((i + half) % m, j)];
                worst = worst.max((kp - pk).abs());
            }
        }
        worst
    }

    fn sigma_from_k(block: DMatrix<f64>) -> Vec<f64> {
        // 𝒥 = iK, so an eigenvalue κ of K gives σ = iκ, real when κ is imaginary
        let mut out: Vec<f64> = block.complex_eigenvalues().iter().map(|z| -z.im).collect();
        out.sort_by(f64::total_cmp);
        // a Jordan block splits by ~sqrt(eps) under rounding; its mean is stable
        let mut start = 0;
        while start < out.len() {
            let mut end = start + 1;
            while end < out.len() && out[end] - out[end - 1] < CLUSTER_GAP {
                end += 1;
            }
            let mean = out[start..end].iter().sum::<f64>() / (end - start) as f64;
            out[start..end].iter_mut().for_each(|v| *v = mean);
            start = end;
        }
        out.sort_by(|a, b| a.abs().total_cmp(&b.abs()).then(a.total_cmp(b)));
        out
    }

    /// Eigenvalues of 𝒥, sorted by magnitude, with clusters closer than
    /// [`CLUSTER_GAP`] replaced by their mean.
    pub fn eigenvalues(&self) -> Vec<f64> {
        Self::sigma_from_k(self.k_matrix.clone())
    }

    /// Eigenvalues of 𝒥 within one ε sector, sorted by magnitude.
    pub fn sector_eigenvalues(&self, epsilon: Sector) -> Vec<f64> {
        Self::sigma_from_k(self.sector_block(epsilon))
    }

    /// Largest imaginary part among the 𝒥 eigenvalues of a sector.
    pub fn sector_non_reality(&self, epsilon: Sector) -> f64 {
        self.sector_block(epsilon)
            .complex_eigenvalues()
            .iter()
            .map(|z| z.re.abs())
            .fold(0.0, f64::max)
    }
}

/// Distance from `target` to the nearest entry of `values`.
pub fn nearest_distance(values: &[f64], target: f64) -> f64 {
    values
        .iter()
        .map(|v| (v - target).abs())
        .fold(f64::INFINITY, f64::min)
}
