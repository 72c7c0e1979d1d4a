//! Orthogonal polynomials and gamma-function ratios.
//!
//! Every polynomial is evaluated by its forward three-term recurrence.
//! Normalisation constants go through [`log_gamma_ratio`] and are
//! exponentiated once, so moderate indices never overflow.

use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::error::{invalid, Result};
use crate::jet::Jet;

/// Physicists' Hermite polynomial `H_n(u)`.
pub fn eval_hermite(n: u32, u: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * u;
    for k in 1..n {
        let next = 2.0 * u * cur - 2.0 * f64::from(k) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `(H_n, dH_n/du, d²H_n/du²)` at `u`, from `H_n' = 2n H_{n-1}`.
pub fn hermite_jet(n: u32, u: f64) -> Jet {
    let nf = f64::from(n);
    let d1 = if n >= 1 {
        2.0 * nf * eval_hermite(n - 1, u)
    } else {
        0.0
    };
    let d2 = if n >= 2 {
        4.0 * nf * (nf - 1.0) * eval_hermite(n - 2, u)
    } else {
        0.0
    };
    Jet::new(eval_hermite(n, u), d1, d2)
}

fn check_jacobi_like(name: &str, p: f64) -> Result<()> {
    if p.is_finite() && p > -1.0 {
        Ok(())
    } else {
        Err(invalid(format!("{name} must be > -1, got {p}")))
    }
}

fn laguerre_unchecked(n: u32, alpha: f64, u: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - u;
    for k in 1..n {
        let kf = f64::from(k);
        let next = ((2.0 * kf + 1.0 + alpha - u) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Generalised Laguerre polynomial `L_n^α(u)`.
pub fn eval_generalized_laguerre(n: u32, alpha: f64, u: f64) -> Result<f64> {
    check_jacobi_like("Laguerre alpha", alpha)?;
    Ok(laguerre_unchecked(n, alpha, u))
}

/// `L_n^α` and its first two `u`-derivatives (`L' = -L_{n-1}^{α+1}`).
pub fn laguerre_jet(n: u32, alpha: f64, u: f64) -> Result<Jet> {
    check_jacobi_like("Laguerre alpha", alpha)?;
    let d1 = if n >= 1 {
        -laguerre_unchecked(n - 1, alpha + 1.0, u)
    } else {
        0.0
    };
    let d2 = if n >= 2 {
        laguerre_unchecked(n - 2, alpha + 2.0, u)
    } else {
        0.0
    };
    Ok(Jet::new(laguerre_unchecked(n, alpha, u), d1, d2))
}

/// Orthonormal Laguerre functions
/// `φ_k(u) = sqrt(k!/Γ(k+α+1)) L_k^α(u) u^{α/2} e^{-u/2}` for `k < count`.
///
/// The recurrence runs on the normalised functions directly, so the table
/// stays bounded where the bare polynomials would overflow.
pub fn laguerre_functions(alpha: f64, u: f64, count: usize) -> Result<Vec<f64>> {
    check_jacobi_like("Laguerre alpha", alpha)?;
    if u <= 0.0 {
        return Err(invalid("Laguerre functions need u > 0"));
    }
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    let first = (0.5 * (alpha * u.ln() - u - ln_gamma(alpha + 1.0))).exp();
    out.push(first);
    if count == 1 {
        return Ok(out);
    }
    out.push((1.0 + alpha - u) * first / (1.0 + alpha).sqrt());
    for k in 1..count - 1 {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - u) * out[k]
            - (kf * (kf + alpha)).sqrt() * out[k - 1])
            / ((kf + 1.0) * (kf + 1.0 + alpha)).sqrt();
        out.push(next);
    }
    Ok(out)
}

fn jacobi_unchecked(n: u32, a: f64, b: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 0.5 * (a - b + (a + b + 2.0) * x);
    for k in 2..=n {
        let k = f64::from(k);
        let s = 2.0 * k + a + b;
        let c0 = 2.0 * k * (k + a + b) * (s - 2.0);
        let c1 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        let c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        let next = (c1 * cur - c2 * prev) / c0;
        prev = cur;
        cur = next;
    }
    cur
}

/// Jacobi polynomial `P_n^{(α,β)}(x)`.
pub fn eval_jacobi(n: u32, alpha: f64, beta_param: f64, x: f64) -> Result<f64> {
    check_jacobi_like("Jacobi alpha", alpha)?;
    check_jacobi_like("Jacobi beta", beta_param)?;
    Ok(jacobi_unchecked(n, alpha, beta_param, x))
}

/// `P_n^{(α,β)}` with its first two `x`-derivatives.
pub fn jacobi_jet(n: u32, alpha: f64, beta_param: f64, x: f64) -> Result<Jet> {
    check_jacobi_like("Jacobi alpha", alpha)?;
    check_jacobi_like("Jacobi beta", beta_param)?;
    let nf = f64::from(n);
    let s = nf + alpha + beta_param;
    let d1 = if n >= 1 {
        0.5 * (s + 1.0) * jacobi_unchecked(n - 1, alpha + 1.0, beta_param + 1.0, x)
    } else {
        0.0
    };
    let d2 = if n >= 2 {
        0.25 * (s + 1.0) * (s + 2.0) * jacobi_unchecked(n - 2, alpha + 2.0, beta_param + 2.0, x)
    } else {
        0.0
    };
    Ok(Jet::new(jacobi_unchecked(n, alpha, beta_param, x), d1, d2))
}

/// `log Γ(a) - log Γ(b)` for positive arguments.
///
/// Integer-spaced arguments use the product `Γ(b+d)/Γ(b) = b(b+1)…(b+d-1)`,
/// which avoids cancelling two large log-gammas.
pub fn log_gamma_ratio(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(invalid(format!(
            "log_gamma_ratio needs positive arguments, got ({a}, {b})"
        )));
    }
    let diff = a - b;
    if diff.fract() == 0.0 && diff.abs() <= 64.0 {
        let (lo, steps, sign) = if diff >= 0.0 {
            (b, diff as u32, 1.0)
        } else {
            (a, (-diff) as u32, -1.0)
        };
        let sum: f64 = (0..steps).map(|k| (lo + f64::from(k)).ln()).sum();
        return Ok(sign * sum);
    }
    Ok(ln_gamma(a) - ln_gamma(b))
}

/// `ln Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> f64 {
    ln_gamma(x)
}

/// Normalised generalised Hermite value
/// `(-1)^n sqrt(β² n! / Γ(n+μ+q+1/2)) x^q L_n^{(μ+q-1/2)}(β² x²)`.
pub fn eval_generalized_hermite(
    n: u32,
    mu: f64,
    parity_q: u8,
    beta_scale: f64,
    x: f64,
) -> Result<f64> {
    if !(mu > -0.5) {
        return Err(invalid(format!(
            "Dunkl parameter mu must be > -1/2, got {mu}"
        )));
    }
    if parity_q > 1 {
        return Err(invalid(format!(
            "parity index must be 0 or 1, got {parity_q}"
        )));
    }
    if !(beta_scale > 0.0) {
        return Err(invalid("beta_scale must be positive"));
    }
    let q = f64::from(parity_q);
    let nf = f64::from(n);
    let log_norm = 0.5 * (2.0 * beta_scale.ln() - log_gamma_ratio(nf + mu + q + 0.5, nf + 1.0)?);
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let lag = laguerre_unchecked(n, mu + q - 0.5, beta_scale * beta_scale * x * x);
    Ok(sign * log_norm.exp() * x.powi(i32::from(parity_q)) * lag)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolyKind {
    Hermite,
    GeneralizedHermite,
    GeneralizedLaguerre,
    Jacobi,
}

/// Which polynomial a wavefunction carries and with what parameters.
///
/// For the odd angular sector the Jacobi degree is the integer `m' - 1/2`;
/// `half_integer_sector` records that the physical label is half-odd.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolyParams {
    pub kind: PolyKind,
    pub degree: u32,
    pub alpha: f64,
    pub beta_param: f64,
    pub mu: f64,
    pub parity_q: u8,
    pub half_integer_sector: bool,
}

impl PolyParams {
    pub fn hermite(degree: u32) -> Self {
        Self {
            kind: PolyKind::Hermite,
            degree,
            alpha: 0.0,
            beta_param: 0.0,
            mu: 0.0,
            parity_q: (degree % 2) as u8,
            half_integer_sector: false,
        }
    }

    /// Laguerre factor of the generalised Hermite family: `L_n^{(μ+q-1/2)}`.
    pub fn generalized_hermite(degree: u32, mu: f64, parity_q: u8) -> Result<Self> {
        if !(mu > -0.5) {
            return Err(invalid(format!("mu must be > -1/2, got {mu}")));
        }
        if parity_q > 1 {
            return Err(invalid("parity index must be 0 or 1"));
        }
        Ok(Self {
            kind: PolyKind::GeneralizedHermite,
            degree,
            alpha: mu + f64::from(parity_q) - 0.5,
            beta_param: 0.0,
            mu,
            parity_q,
            half_integer_sector: false,
        })
    }

    pub fn laguerre(degree: u32, alpha: f64) -> Result<Self> {
        check_jacobi_like("Laguerre alpha", alpha)?;
        Ok(Self {
            kind: PolyKind::GeneralizedLaguerre,
            degree,
            alpha,
            beta_param: 0.0,
            mu: 0.0,
            parity_q: 0,
            half_integer_sector: false,
        })
    }

    pub fn jacobi(
        degree: u32,
        alpha: f64,
        beta_param: f64,
        half_integer_sector: bool,
    ) -> Result<Self> {
        check_jacobi_like("Jacobi alpha", alpha)?;
        check_jacobi_like("Jacobi beta", beta_param)?;
        Ok(Self {
            kind: PolyKind::Jacobi,
            degree,
            alpha,
            beta_param,
            mu: 0.0,
            parity_q: 0,
            half_integer_sector,
        })
    }

    /// Polynomial value and derivatives with respect to its own argument.
    /// For the Laguerre-based kinds the argument is `u = β²x²`.
    pub fn jet(&self, arg: f64) -> Jet {
        match self.kind {
            PolyKind::Hermite => hermite_jet(self.degree, arg),
            PolyKind::GeneralizedHermite | PolyKind::GeneralizedLaguerre => {
                laguerre_jet(self.degree, self.alpha, arg).expect("validated at construction")
            }
            PolyKind::Jacobi => jacobi_jet(self.degree, self.alpha, self.beta_param, arg)
                .expect("validated at construction"),
        }
    }

    pub fn eval(&self, arg: f64) -> f64 {
        self.jet(arg).value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_closed_forms() {
        assert_eq!(eval_hermite(0, 0.7), 1.0);
        assert!((eval_hermite(1, 0.7) - 1.4).abs() < 1e-15);
        assert_eq!(eval_generalized_laguerre(0, 0.3, 5.0).unwrap(), 1.0);
        let (a, u) = (0.37, 1.9);
        assert!((eval_generalized_laguerre(1, a, u).unwrap() - (1.0 + a - u)).abs() < 1e-15);
        assert_eq!(eval_jacobi(0, 0.2, -0.4, 0.3).unwrap(), 1.0);
        assert!((eval_jacobi(1, 0.0, 0.0, 0.5).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn parameter_domains_are_enforced() {
        assert!(eval_generalized_laguerre(3, -1.0, 1.0).is_err());
        assert!(eval_jacobi(2, 0.1, -1.2, 0.0).is_err());
        assert!(eval_generalized_hermite(1, -0.5, 0, 1.0, 0.3).is_err());
        assert!(eval_generalized_hermite(1, 0.1, 2, 1.0, 0.3).is_err());
        assert!(log_gamma_ratio(0.0, 1.0).is_err());
        assert!(log_gamma_ratio(1.0, -2.0).is_err());
    }

    #[test]
    fn generalized_hermite_ground_value() {
        let v = eval_generalized_hermite(0, 0.0, 0, 1.0, 0.8).unwrap();
        assert!((v - std::f64::consts::PI.powf(-0.25)).abs() < 1e-15);
        assert_eq!(eval_generalized_hermite(3, 0.4, 1, 1.3, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn log_gamma_ratio_identities() {
        assert!((log_gamma_ratio(5.0, 3.0).unwrap() - 12.0_f64.ln()).abs() < 1e-15);
        assert_eq!(log_gamma_ratio(7.25, 7.25).unwrap(), 0.0);
        let expected = (999.5_f64 * 998.5).ln();
        assert!((log_gamma_ratio(1000.5, 998.5).unwrap() - expected).abs() < 1e-13);
        assert!((log_gamma_ratio(998.5, 1000.5).unwrap() + expected).abs() < 1e-13);
        // non-integer spacing goes through ln Γ
        let r = log_gamma_ratio(10_000.3, 9_999.1).unwrap();
        assert!(r.is_finite() && r > 0.0);
    }

    #[test]
    fn laguerre_functions_match_direct_evaluation() {
        let alpha = 0.52;
        let u = 3.7;
        let table = laguerre_functions(alpha, u, 12).unwrap();
        for (k, &phi) in table.iter().enumerate() {
            let k32 = k as u32;
            let direct = (0.5
                * (-log_gamma_ratio(k as f64 + alpha + 1.0, k as f64 + 1.0).unwrap()
                    + alpha * u.ln()
                    - u))
                .exp()
                * eval_generalized_laguerre(k32, alpha, u).unwrap();
            assert!((phi - direct).abs() < 1e-13, "k={k}: {phi} vs {direct}");
        }
    }

    #[test]
    fn jets_match_finite_differences() {
        let h = 1e-5;
        let lag = |x: f64| eval_generalized_laguerre(6, 0.3, x).unwrap();
        let j = laguerre_jet(6, 0.3, 1.7).unwrap();
        assert!((j.d1 - (lag(1.7 + h) - lag(1.7 - h)) / (2.0 * h)).abs() < 1e-7);
        assert!((j.d2 - (lag(1.7 + h) - 2.0 * lag(1.7) + lag(1.7 - h)) / (h * h)).abs() < 1e-4);
        let jac = |x: f64| eval_jacobi(5, -0.48, 0.52, x).unwrap();
        let j = jacobi_jet(5, -0.48, 0.52, 0.3).unwrap();
        assert!((j.d1 - (jac(0.3 + h) - jac(0.3 - h)) / (2.0 * h)).abs() < 1e-7);
        assert!((j.d2 - (jac(0.3 + h) - 2.0 * jac(0.3) + jac(0.3 - h)) / (h * h)).abs() < 1e-4);
        let j = hermite_jet(5, 0.9);
        let her = |x: f64| eval_hermite(5, x);
        assert!((j.d1 - (her(0.9 + h) - her(0.9 - h)) / (2.0 * h)).abs() < 1e-6);
    }
}
