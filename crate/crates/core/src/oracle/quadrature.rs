//! Gauss-type rules for the weighted measures of the oscillator family.
//!
//! Line and radial rules come from Gauss-Laguerre in `u = s²x²`; the
//! `|x|^{2μ}` and `r^{1+2a}` factors become the Laguerre exponent, so
//! products of basis functions are integrated exactly. Weights are stored
//! for the bare integrand (Christoffel numbers divided by the Gaussian),
//! computed from orthonormal Laguerre functions so nothing underflows.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{laguerre_functions, log_gamma};

/// Measures under which the eigenfunction families are orthonormal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InnerProductWeight {
    /// `(1 + λx²) dx`.
    DarbouxLine { lambda: f64 },
    /// `|x|^{2μ} dx`.
    DunklLine { mu: f64 },
    /// `(1 + λx²)|x|^{2μ} dx`.
    DunklDarbouxLine { lambda: f64, mu: f64 },
    /// `(1 + λr²) r^{1+2μ_x+2μ_y} dr`.
    Radial2D { lambda: f64, mu_x: f64, mu_y: f64 },
    /// `(1 + λr²) r^{N-1+2Σμ} dr`, the radial part of the N-dimensional measure.
    RadialND {
        lambda: f64,
        dim: usize,
        mu_sum: f64,
    },
    /// `|cos θ|^{2μ_x} |sin θ|^{2μ_y} dθ` on `[0, 2π)`.
    Angular { mu_x: f64, mu_y: f64 },
}

impl InnerProductWeight {
    fn lambda(&self) -> f64 {
        match *self {
            InnerProductWeight::DarbouxLine { lambda }
            | InnerProductWeight::DunklDarbouxLine { lambda, .. }
            | InnerProductWeight::Radial2D { lambda, .. }
            | InnerProductWeight::RadialND { lambda, .. } => lambda,
            _ => 0.0,
        }
    }

    /// Whether the measure lives on the whole line (rather than `r > 0`).
    pub fn is_line(&self) -> bool {
        matches!(
            self,
            InnerProductWeight::DarbouxLine { .. }
                | InnerProductWeight::DunklLine { .. }
                | InnerProductWeight::DunklDarbouxLine { .. }
        )
    }

    /// Exponent `a` in `|x|^{2a}` (line) or `r^{1+2a}` (radial).
    pub fn power_exponent(&self) -> f64 {
        match *self {
            InnerProductWeight::DarbouxLine { .. } => 0.0,
            InnerProductWeight::DunklLine { mu }
            | InnerProductWeight::DunklDarbouxLine { mu, .. } => mu,
            InnerProductWeight::Radial2D { mu_x, mu_y, .. } => mu_x + mu_y,
            InnerProductWeight::RadialND { dim, mu_sum, .. } => dim as f64 / 2.0 - 1.0 + mu_sum,
            InnerProductWeight::Angular { .. } => 0.0,
        }
    }

    /// Weight density at `x` (or `r`, or θ).
    pub fn density(&self, x: f64) -> f64 {
        match *self {
            InnerProductWeight::Angular { mu_x, mu_y } => {
                x.cos().abs().powf(2.0 * mu_x) * x.sin().abs().powf(2.0 * mu_y)
            }
            _ => {
                let a = self.power_exponent();
                let power = if self.is_line() {
                    x.abs().powf(2.0 * a)
                } else {
                    x.powf(1.0 + 2.0 * a)
                };
                (1.0 + self.lambda() * x * x) * power
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Quadrature(msg));
        if !(self.lambda() >= 0.0) {
            return bad(format!("weight needs lambda >= 0, got {}", self.lambda()));
        }
        match *self {
            InnerProductWeight::Angular { mu_x, mu_y } if !(mu_x > -0.5 && mu_y > -0.5) => bad(
                format!("angular weight not integrable for mu = ({mu_x}, {mu_y})"),
            ),
            InnerProductWeight::Angular { .. } => Ok(()),
            _ if !(self.power_exponent() > -0.5 - f64::EPSILON)
                || !(self.power_exponent() > -1.0) =>
            {
                bad(format!(
                    "weight exponent {} is not integrable",
                    self.power_exponent()
                ))
            }
            _ if self.is_line() && !(self.power_exponent() > -0.5) => bad(format!(
                "|x|^(2mu) not integrable for mu = {}",
                self.power_exponent()
            )),
            _ => Ok(()),
        }
    }
}

/// Nodes and weights such that `Σ w_i f(x_i) ≈ ∫ f(x) ρ(x) dx`, with `ρ` the
/// density of `weight_kind`. Exact when `f·ρ` is a Gaussian `e^{-s²x²}`
/// times the measure's power factor times a polynomial of low enough degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// Integration interval.
    pub domain: (f64, f64),
    pub weight_kind: InnerProductWeight,
    /// Gaussian scale `s` the rule is tuned to.
    pub scale: f64,
    pub declared_tolerance: f64,
}

impl QuadratureRule {
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Symmetric tridiagonal eigenvalues (ascending) and first eigenvector
/// components.
fn golub_welsch(diag: &[f64], off: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = diag.len();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = diag[i];
        if i + 1 < n {
            m[(i, i + 1)] = off[i];
            m[(i + 1, i)] = off[i];
        }
    }
    let eig = SymmetricEigen::new(m);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|j| (eig.eigenvalues[j], eig.eigenvectors[(0, j)]))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    pairs.into_iter().unzip()
}

/// Gauss-Laguerre nodes `u_i` for `u^α e^{-u}` and the bare-integrand
/// weights `1/Σ_{k<n} φ_k(u_i)²`, so that `Σ Λ_i g(u_i) ≈ ∫_0^∞ g(u) du`.
pub fn gauss_laguerre_bare(alpha: f64, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if !(alpha > -1.0) {
        return Err(Error::Quadrature(format!(
            "Laguerre exponent must be > -1, got {alpha}"
        )));
    }
    let diag: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + 1.0 + alpha).collect();
    let off: Vec<f64> = (1..n)
        .map(|k| (k as f64 * (k as f64 + alpha)).sqrt())
        .collect();
    let (mut nodes, _) = golub_welsch(&diag, &off);
    let nf = n as f64;
    let c = (nf * (nf + alpha)).sqrt();
    for u in nodes.iter_mut() {
        for _ in 0..3 {
            let phi = laguerre_functions(alpha, *u, n + 1)?;
            let denom = nf * phi[n] - c * phi[n - 1];
            if denom == 0.0 {
                break;
            }
            let step = *u * phi[n] / denom;
            if !step.is_finite() || step.abs() > 0.1 * *u {
                break;
            }
            *u -= step;
            if step.abs() <= 4.0 * f64::EPSILON * *u {
                break;
            }
        }
    }
    let weights = nodes
        .iter()
        .map(|&u| {
            let phi = laguerre_functions(alpha, u, n)?;
            Ok(1.0 / phi.iter().map(|p| p * p).sum::<f64>())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((nodes, weights))
}

/// Gauss-Jacobi nodes and weights for `(1-t)^α (1+t)^β` on `[-1, 1]`.
pub fn gauss_jacobi(alpha: f64, beta: f64, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if !(alpha > -1.0 && beta > -1.0) {
        return Err(Error::Quadrature(format!(
            "Jacobi exponents must exceed -1, got ({alpha}, {beta})"
        )));
    }
    let ab = alpha + beta;
    let diag: Vec<f64> = (0..n)
        .map(|k| {
            let s = 2.0 * k as f64 + ab;
            if k == 0 {
                (beta - alpha) / (ab + 2.0)
            } else {
                (beta * beta - alpha * alpha) / (s * (s + 2.0))
            }
        })
        .collect();
    let off: Vec<f64> = (1..n)
        .map(|k| {
            let k = k as f64;
            let s = 2.0 * k + ab;
            if k == 1.0 {
                (4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab).powi(2) * (3.0 + ab))).sqrt()
            } else {
                (4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0)))
                    .sqrt()
            }
        })
        .collect();
    let (nodes, first) = golub_welsch(&diag, &off);
    let log_mu0 =
        (ab + 1.0) * std::f64::consts::LN_2 + log_gamma(alpha + 1.0) + log_gamma(beta + 1.0)
            - log_gamma(ab + 2.0);
    let mu0 = log_mu0.exp();
    let weights = first.iter().map(|v| mu0 * v * v).collect();
    Ok((nodes, weights))
}

/// Rule with Gaussian scale 1. See [`make_scaled_quadrature`].
pub fn make_quadrature(weight: InnerProductWeight, size: usize) -> Result<QuadratureRule> {
    make_scaled_quadrature(weight, size, 1.0)
}

/// Builds a rule for `weight` from `size` Gauss nodes per half-line (line
/// measures get `2·size` nodes) or per quadrant (angular measure, `4·size`
/// nodes), tuned to integrands decaying like `e^{-s²x²}`.
pub fn make_scaled_quadrature(
    weight: InnerProductWeight,
    size: usize,
    scale: f64,
) -> Result<QuadratureRule> {
    if size < 8 {
        return Err(Error::Quadrature(format!(
            "rule size must be at least 8, got {size}"
        )));
    }
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::Quadrature(format!(
            "Gaussian scale must be positive, got {scale}"
        )));
    }
    weight.validate()?;
    let tolerance = 1e-12;
    if let InnerProductWeight::Angular { mu_x, mu_y } = weight {
        let (t, w) = gauss_jacobi(mu_x - 0.5, mu_y - 0.5, size)?;
        let c = (-(mu_x + mu_y) + 1.0).exp2() / 4.0;
        let pi = std::f64::consts::PI;
        let mut nodes = Vec::with_capacity(4 * size);
        let mut weights = Vec::with_capacity(4 * size);
        for (ti, wi) in t.iter().zip(&w) {
            let th = 0.5 * (-ti).clamp(-1.0, 1.0).acos();
            for q in [th, pi - th, pi + th, 2.0 * pi - th] {
                nodes.push(q);
                weights.push(c * wi);
            }
        }
        return Ok(QuadratureRule {
            nodes,
            weights,
            domain: (0.0, 2.0 * pi),
            weight_kind: weight,
            scale,
            declared_tolerance: tolerance,
        });
    }
    let a = weight.power_exponent();
    // |x|^{2a} dx and r^{1+2a} dr both become u^{α} du with these α.
    let alpha = if weight.is_line() { a - 0.5 } else { a };
    let (u, lam) = gauss_laguerre_bare(alpha, size)?;
    let mut nodes = Vec::with_capacity(2 * size);
    let mut weights = Vec::with_capacity(2 * size);
    for (&ui, &li) in u.iter().zip(&lam) {
        let x = ui.sqrt() / scale;
        // bare weight in x, divided by the density so that `integrate` takes f only
        let bare = li / (2.0 * scale * ui.sqrt());
        let w = bare * weight.density(x);
        nodes.push(x);
        weights.push(w);
        if weight.is_line() {
            nodes.push(-x);
            weights.push(w);
        }
    }
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by(|&i, &j| nodes[i].total_cmp(&nodes[j]));
    let domain = if weight.is_line() {
        (f64::NEG_INFINITY, f64::INFINITY)
    } else {
        (0.0, f64::INFINITY)
    };
    Ok(QuadratureRule {
        nodes: order.iter().map(|&i| nodes[i]).collect(),
        weights: order.iter().map(|&i| weights[i]).collect(),
        domain,
        weight_kind: weight,
        scale,
        declared_tolerance: tolerance,
    })
}
