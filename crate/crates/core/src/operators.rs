//! Dunkl differential-difference operators and the Hamiltonians built from
//! them, applied pointwise to functions that carry exact derivatives.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::jet::{ComplexJet, Jet};
use crate::model::{ModelParams, Parity};

/// A real function of one variable with exact first and second derivatives.
pub trait SmoothFunction1D {
    fn jet(&self, x: f64) -> Jet;

    /// Reflection eigenvalue, if the function has one.
    fn parity_hint(&self) -> Option<Parity> {
        None
    }

    fn value_at(&self, x: f64) -> f64 {
        self.jet(x).value
    }

    fn derivative_at(&self, x: f64, order: u8) -> Result<f64> {
        match order {
            1 | 2 => Ok(self.jet(x).order(order).expect("order checked")),
            _ => Err(Error::UnsupportedOrder(order)),
        }
    }
}

/// Adapts a closure returning a [`Jet`].
pub struct FnJet<F> {
    f: F,
    parity: Option<Parity>,
}

impl<F: Fn(f64) -> Jet> FnJet<F> {
    pub fn new(f: F) -> Self {
        Self { f, parity: None }
    }

    pub fn with_parity(f: F, parity: Parity) -> Self {
        Self {
            f,
            parity: Some(parity),
        }
    }
}

impl<F: Fn(f64) -> Jet> SmoothFunction1D for FnJet<F> {
    fn jet(&self, x: f64) -> Jet {
        (self.f)(x)
    }

    fn parity_hint(&self) -> Option<Parity> {
        self.parity
    }
}

/// Coordinate reflections. In polar form `X: θ ↦ π - θ` and `Y: θ ↦ -θ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReflectionAxis {
    X,
    Y,
}

impl ReflectionAxis {
    pub fn reflect_angle(self, theta: f64) -> f64 {
        match self {
            ReflectionAxis::X => std::f64::consts::PI - theta,
            ReflectionAxis::Y => -theta,
        }
    }

    pub fn reflect_point(self, (x, y): (f64, f64)) -> (f64, f64) {
        match self {
            ReflectionAxis::X => (-x, y),
            ReflectionAxis::Y => (x, -y),
        }
    }
}

fn check_mu(mu: f64) -> Result<()> {
    if !(mu > -0.5 && mu.is_finite()) {
        return Err(invalid(format!("Dunkl parameter must be > -1/2, got {mu}")));
    }
    Ok(())
}

/// `f'(x) + (μ/x)(f(x) - f(-x))`.
///
/// At the origin the reflection term tends to `2μ f'(0)`; that limit is used
/// when `f` declares a parity and [`Error::SingularOrigin`] is returned
/// otherwise.
pub fn dunkl_derivative_1d(f: &dyn SmoothFunction1D, mu: f64, x: f64) -> Result<f64> {
    check_mu(mu)?;
    let here = f.jet(x);
    if x == 0.0 {
        return match f.parity_hint() {
            Some(_) => Ok((1.0 + 2.0 * mu) * here.d1),
            None => Err(Error::SingularOrigin),
        };
    }
    if mu == 0.0 {
        return Ok(here.d1);
    }
    Ok(here.d1 + mu / x * (here.value - f.value_at(-x)))
}

/// `f''(x) + (2μ/x) f'(x) - (μ/x²)(f(x) - f(-x))`, with the limit
/// `(1 + 2μ) f''(0)` at the origin.
pub fn dunkl_laplacian_1d(f: &dyn SmoothFunction1D, mu: f64, x: f64) -> Result<f64> {
    check_mu(mu)?;
    let here = f.jet(x);
    if x == 0.0 {
        return match f.parity_hint() {
            Some(_) => Ok((1.0 + 2.0 * mu) * here.d2),
            None => Err(Error::SingularOrigin),
        };
    }
    if mu == 0.0 {
        return Ok(here.d2);
    }
    Ok(here.d2 + 2.0 * mu / x * here.d1 - mu / (x * x) * (here.value - f.value_at(-x)))
}

/// One-dimensional Hamiltonians.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LineModel {
    DarbouxIII,
    Dunkl,
    DunklDarbouxIII,
}

/// `[-(ħ²/2)K + (ω²/2)x²] / (1 + λx²)^s` with `K = ∂²` or the Dunkl
/// Laplacian, and `s = 0` only for the flat Dunkl oscillator.
pub fn apply_hamiltonian_1d(
    model: LineModel,
    params: &ModelParams,
    f: &dyn SmoothFunction1D,
    x: f64,
) -> Result<f64> {
    params.validate()?;
    let kinetic = match model {
        LineModel::DarbouxIII => f.jet(x).d2,
        LineModel::Dunkl | LineModel::DunklDarbouxIII => dunkl_laplacian_1d(f, params.mu_x(), x)?,
    };
    let numer = -0.5 * params.hbar * params.hbar * kinetic
        + 0.5 * params.omega * params.omega * x * x * f.value_at(x);
    Ok(match model {
        LineModel::Dunkl => numer,
        _ => numer / (1.0 + params.lambda * x * x),
    })
}

/// A complex 2π-periodic function of the polar angle with exact derivatives.
pub trait AngularFunction {
    fn jet(&self, theta: f64) -> ComplexJet;

    /// Eigenvalue (±1) under the given reflection, if known.
    fn reflection_parity(&self, _axis: ReflectionAxis) -> Option<f64> {
        None
    }

    fn value_at(&self, theta: f64) -> Complex64 {
        self.jet(theta).value
    }

    fn derivative_at(&self, theta: f64, order: u8) -> Result<Complex64> {
        match order {
            1 | 2 => Ok(self.jet(theta).order(order).expect("order checked")),
            _ => Err(Error::UnsupportedOrder(order)),
        }
    }
}

/// `Σ_k c_k e^{ikθ}` over a finite set of integer frequencies.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPolynomial {
    pub terms: Vec<(i32, Complex64)>,
}

impl TrigPolynomial {
    pub fn new(terms: Vec<(i32, Complex64)>) -> Self {
        Self { terms }
    }

    pub fn plane_wave(m: i32) -> Self {
        Self::new(vec![(m, Complex64::new(1.0, 0.0))])
    }
}

impl AngularFunction for TrigPolynomial {
    fn jet(&self, theta: f64) -> ComplexJet {
        let mut out = ComplexJet::new(0.0.into(), 0.0.into(), 0.0.into());
        for &(k, c) in &self.terms {
            let k = f64::from(k);
            let e = c * Complex64::from_polar(1.0, k * theta);
            let ik = Complex64::new(0.0, k);
            out = out + ComplexJet::new(e, ik * e, -k * k * e);
        }
        out
    }
}

const POLE_EPS: f64 = 1e-12;

fn on_axis(s: f64) -> bool {
    s.abs() < POLE_EPS
}

/// Reflection difference `μ·c(θ)·(g(θ) - g(Rθ))`, where `c` is singular on
/// the axis fixed by `R`. Vanishes identically when μ = 0 or `g` is even
/// under `R`; otherwise a pole is an error.
fn reflection_term(
    g: &dyn AngularFunction,
    axis: ReflectionAxis,
    mu: f64,
    coeff: f64,
    singular: bool,
    theta: f64,
    here: Complex64,
) -> Result<Complex64> {
    if mu == 0.0 || g.reflection_parity(axis) == Some(1.0) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if singular {
        return Err(Error::AngularPole(theta));
    }
    Ok(mu * coeff * (here - g.value_at(axis.reflect_angle(theta))))
}

/// `𝒥g = i[g' + μ_y cotθ (g - R_y g) - μ_x tanθ (g - R_x g)]`.
pub fn angular_operator_j(
    g: &dyn AngularFunction,
    mu_x: f64,
    mu_y: f64,
    theta: f64,
) -> Result<Complex64> {
    check_mu(mu_x)?;
    check_mu(mu_y)?;
    let (s, c) = theta.sin_cos();
    let here = g.jet(theta);
    let ry = reflection_term(
        g,
        ReflectionAxis::Y,
        mu_y,
        c / s,
        on_axis(s),
        theta,
        here.value,
    )?;
    let rx = reflection_term(
        g,
        ReflectionAxis::X,
        mu_x,
        s / c,
        on_axis(c),
        theta,
        here.value,
    )?;
    Ok(Complex64::i() * (here.d1 + ry - rx))
}

/// `H_θ g = -g'' + 2(μ_x tanθ - μ_y cotθ) g' + μ_x(1-R_x)g/cos²θ + μ_y(1-R_y)g/sin²θ`.
pub fn angular_operator_htheta(
    g: &dyn AngularFunction,
    mu_x: f64,
    mu_y: f64,
    theta: f64,
) -> Result<Complex64> {
    check_mu(mu_x)?;
    check_mu(mu_y)?;
    let (s, c) = theta.sin_cos();
    if (mu_y != 0.0 && on_axis(s)) || (mu_x != 0.0 && on_axis(c)) {
        return Err(Error::AngularPole(theta));
    }
    let here = g.jet(theta);
    let mut out = -here.d2;
    if mu_x != 0.0 {
        out += 2.0 * mu_x * (s / c) * here.d1;
        out += reflection_term(
            g,
            ReflectionAxis::X,
            mu_x,
            1.0 / (c * c),
            false,
            theta,
            here.value,
        )?;
    }
    if mu_y != 0.0 {
        out -= 2.0 * mu_y * (c / s) * here.d1;
        out += reflection_term(
            g,
            ReflectionAxis::Y,
            mu_y,
            1.0 / (s * s),
            false,
            theta,
            here.value,
        )?;
    }
    Ok(out)
}

/// Planar Hamiltonians in a constant field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PlaneModel {
    DarbouxIIIField,
    DunklField,
    DunklDarbouxIIIField,
}

/// `(Ĥψ)(r, θ)` for `ψ = R(r) F(θ)`:
///
/// ```text
/// [ -ħ²/2 (R'' + (1+2μ_x+2μ_y)/r R') F + ħ²/(2r²) R H_θF
///   + ω̃² r²/2 RF + ħω_c R 𝒥F ] / (1 + λr²)
/// ```
///
/// The flat Dunkl model drops the denominator; the Darboux model sets μ = 0.
pub fn apply_hamiltonian_2d_polar(
    model: PlaneModel,
    params: &ModelParams,
    radial: &dyn SmoothFunction1D,
    angular: &dyn AngularFunction,
    r: f64,
    theta: f64,
) -> Result<Complex64> {
    params.validate()?;
    if params.dim != 2 {
        return Err(invalid("planar Hamiltonian needs dim = 2"));
    }
    if !(r > 0.0) {
        return Err(invalid(format!("polar radius must be positive, got {r}")));
    }
    let (mu_x, mu_y) = match model {
        PlaneModel::DarbouxIIIField => (0.0, 0.0),
        _ => (params.mu_x(), params.mu_y()),
    };
    let hbar = params.hbar;
    let rad = radial.jet(r);
    let f = angular.value_at(theta);
    let h_theta = angular_operator_htheta(angular, mu_x, mu_y, theta)?;
    let j = angular_operator_j(angular, mu_x, mu_y, theta)?;
    let w2 = params.omega_tilde().powi(2);
    let radial_part = -0.5 * hbar * hbar * (rad.d2 + (1.0 + 2.0 * (mu_x + mu_y)) / r * rad.d1);
    let numer = radial_part * f
        + 0.5 * hbar * hbar / (r * r) * rad.value * h_theta
        + 0.5 * w2 * r * r * rad.value * f
        + hbar * params.omega_c * rad.value * j;
    Ok(match model {
        PlaneModel::DunklField => numer,
        _ => numer / (1.0 + params.lambda * r * r),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monomial(p: i32) -> FnJet<impl Fn(f64) -> Jet> {
        FnJet::new(move |x: f64| {
            let pf = f64::from(p);
            Jet::new(
                x.powi(p),
                pf * x.powi(p - 1),
                pf * (pf - 1.0) * x.powi(p - 2),
            )
        })
    }

    #[test]
    fn derivative_examples() {
        assert!((dunkl_derivative_1d(&monomial(1), 0.3, 2.0).unwrap() - 1.6).abs() < 1e-15);
        assert!((dunkl_derivative_1d(&monomial(2), 0.25, 1.3).unwrap() - 2.6).abs() < 1e-15);
        let x2 = monomial(2);
        for mu in [0.0, 0.02, 0.3] {
            assert!((dunkl_laplacian_1d(&x2, mu, 1.0).unwrap() - (2.0 + 4.0 * mu)).abs() < 1e-15);
        }
    }

    #[test]
    fn origin_needs_parity() {
        assert!(matches!(
            dunkl_derivative_1d(&monomial(1), 0.3, 0.0),
            Err(Error::SingularOrigin)
        ));
        let odd = FnJet::with_parity(|x: f64| Jet::variable(x), Parity::Odd);
        assert!((dunkl_derivative_1d(&odd, 0.3, 0.0).unwrap() - 1.6).abs() < 1e-15);
        let even = FnJet::with_parity(|x: f64| Jet::variable(x) * Jet::variable(x), Parity::Even);
        assert!((dunkl_laplacian_1d(&even, 0.25, 0.0).unwrap() - 3.0).abs() < 1e-15);
        assert!(dunkl_laplacian_1d(&even, -0.5, 1.0).is_err());
    }

    #[test]
    fn ground_state_of_the_harmonic_oscillator() {
        let g = FnJet::new(|x: f64| {
            let v = Jet::variable(x);
            (v * v).scale(-0.5).exp()
        });
        let p = ModelParams::new(1);
        for x in [-1.3, 0.4, 2.0] {
            let h = apply_hamiltonian_1d(LineModel::DarbouxIII, &p, &g, x).unwrap();
            assert!((h - 0.5 * g.value_at(x)).abs() < 1e-15);
            let d = apply_hamiltonian_1d(LineModel::Dunkl, &p, &g, x).unwrap();
            assert_eq!(h, d);
        }
    }

    #[test]
    fn reflections_are_involutions() {
        for axis in [ReflectionAxis::X, ReflectionAxis::Y] {
            let t = 0.731;
            assert!((axis.reflect_angle(axis.reflect_angle(t)) - t).abs() < 1e-15);
            assert_eq!(
                axis.reflect_point(axis.reflect_point((0.3, -1.2))),
                (0.3, -1.2)
            );
        }
    }

    #[test]
    fn plane_waves_under_the_angular_operators() {
        for m in -3..=3 {
            let g = TrigPolynomial::plane_wave(m);
            let t = 0.37;
            let j = angular_operator_j(&g, 0.0, 0.0, t).unwrap();
            assert!((j + f64::from(m) * g.value_at(t)).norm() < 1e-14);
            let h = angular_operator_htheta(&g, 0.0, 0.0, t).unwrap();
            assert!((h - f64::from(m * m) * g.value_at(t)).norm() < 1e-13);
        }
        let c = TrigPolynomial::plane_wave(0);
        assert!(angular_operator_j(&c, 0.3, 0.1, 1.0).unwrap().norm() < 1e-15);
    }

    #[test]
    fn poles_are_reported() {
        let g = TrigPolynomial::plane_wave(1);
        assert!(matches!(
            angular_operator_j(&g, 0.0, 0.2, 0.0),
            Err(Error::AngularPole(_))
        ));
        assert!(angular_operator_j(&g, 0.2, 0.0, 0.0).is_ok());
        assert!(angular_operator_htheta(&g, 0.2, 0.0, std::f64::consts::FRAC_PI_2).is_err());
    }

    #[test]
    fn flat_planar_oscillator() {
        // ψ = r e^{-r²/2} e^{iθ}, E = 2
        let radial = FnJet::new(|r: f64| {
            let v = Jet::variable(r);
            v * (v * v).scale(-0.5).exp()
        });
        let angular = TrigPolynomial::plane_wave(1);
        let p = ModelParams::new(2);
        for model in [
            PlaneModel::DarbouxIIIField,
            PlaneModel::DunklField,
            PlaneModel::DunklDarbouxIIIField,
        ] {
            let (r, t) = (0.8, 1.1);
            let h = apply_hamiltonian_2d_polar(model, &p, &radial, &angular, r, t).unwrap();
            let psi = radial.value_at(r) * angular.value_at(t);
            assert!((h - 2.0 * psi).norm() < 1e-14, "{model:?}");
        }
        assert!(apply_hamiltonian_2d_polar(
            PlaneModel::DunklField,
            &p,
            &radial,
            &angular,
            0.0,
            1.0
        )
        .is_err());
    }
}
