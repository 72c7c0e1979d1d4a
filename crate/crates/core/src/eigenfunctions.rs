//! Evaluable eigenfunctions of every family, normalised by quadrature
//! under their own inner products.
//!
//! Every Gaussian is written `exp(-β²x²/2)` with `β² = Ω(E)/ħ`, where
//! `Ω(E)` is the effective frequency at the level's energy. For flat models
//! this is just `ω/ħ` (or `ω̃/ħ` in a field).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::jet::{power, ComplexJet, Jet};
use crate::model::{AngularIndex, Branch, ModelParams, Parity, QuantumNumbers, Sector};
use crate::operators::{AngularFunction, LineModel, PlaneModel, ReflectionAxis, SmoothFunction1D};
use crate::oracle::quadrature::{make_scaled_quadrature, InnerProductWeight};
use crate::specfun::PolyParams;
use crate::spectra;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `H_n(βx) e^{-β²x²/2}`.
    HermiteGaussian1D,
    /// `x^q L_k^{(μ+q-1/2)}(β²x²) e^{-β²x²/2}`.
    GeneralizedHermite1D,
    /// `r^p L_k^{(ν)}(β²r²) e^{-β²r²/2}`.
    RadialLaguerre2D,
}

/// A one-variable eigenfunction factor: prefactor power, Gaussian width and
/// polynomial, with the normalisation constant fixed under `weight`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionSpec {
    pub family: Family,
    /// β in `exp(-β²x²/2)`.
    pub gaussian_width: f64,
    pub prefactor_power: f64,
    pub poly: PolyParams,
    pub norm_constant: f64,
    pub energy: f64,
    /// Effective frequency Ω(E) the width was derived from.
    pub frequency: f64,
    pub parity: Option<Parity>,
    pub weight: InnerProductWeight,
}

impl WavefunctionSpec {
    /// Unnormalised value and derivatives.
    fn raw_jet(&self, x: f64) -> Jet {
        let b = self.gaussian_width;
        let v = Jet::variable(x);
        let u = (v * v).scale(b * b);
        let gauss = u.scale(-0.5).exp();
        match self.family {
            Family::HermiteGaussian1D => v.scale(b).compose(self.poly.jet(b * x)) * gauss,
            Family::GeneralizedHermite1D => {
                let poly = u.compose(self.poly.jet(u.value)) * gauss;
                if self.poly.parity_q == 1 {
                    v * poly
                } else {
                    poly
                }
            }
            Family::RadialLaguerre2D => {
                power(x, self.prefactor_power) * u.compose(self.poly.jet(u.value)) * gauss
            }
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.jet(x).value
    }

    /// Degree of `|ψ|²·ρ/gaussian` as a polynomial in `u = β²x²`, used to
    /// size quadrature rules.
    fn u_degree(&self) -> usize {
        let d = self.poly.degree as usize;
        let prefactor = self.prefactor_power.max(0.0).ceil() as usize;
        match self.family {
            Family::HermiteGaussian1D => d / 2 + 1,
            _ => d + prefactor / 2 + 1,
        }
    }

    fn with_norm(mut self) -> Result<Self> {
        self.norm_constant = 1.0;
        let n2 = inner_product(&self, &self, self.weight)?;
        if !(n2 > 0.0 && n2.is_finite()) {
            return Err(Error::Quadrature(format!(
                "norm of {:?} is {n2}",
                self.family
            )));
        }
        self.norm_constant = 1.0 / n2.sqrt();
        Ok(self)
    }
}

impl SmoothFunction1D for WavefunctionSpec {
    fn jet(&self, x: f64) -> Jet {
        self.raw_jet(x).scale(self.norm_constant)
    }

    fn parity_hint(&self) -> Option<Parity> {
        self.parity
    }
}

fn line_params(params: &ModelParams) -> Result<ModelParams> {
    params.validate()?;
    if params.dim != 1 {
        return Err(invalid(format!(
            "line eigenfunctions need dim = 1, got {}",
            params.dim
        )));
    }
    if params.omega_c != 0.0 {
        return Err(invalid("line eigenfunctions take no magnetic field"));
    }
    Ok(params.clone())
}

/// Darboux III line state `ψ_n ∝ H_n(βx) e^{-β²x²/2}`, `β = sqrt(Ω(E_n)/ħ)`,
/// normalised under `(1+λx²)dx`.
pub fn build_darboux_1d(params: &ModelParams, n: u32) -> Result<WavefunctionSpec> {
    let p = line_params(params)?;
    let energy = spectra::spectrum_darboux_nd(&p, n);
    let frequency = spectra::effective_frequency(&p, energy)?;
    WavefunctionSpec {
        family: Family::HermiteGaussian1D,
        gaussian_width: (frequency / p.hbar).sqrt(),
        prefactor_power: 0.0,
        poly: PolyParams::hermite(n),
        norm_constant: 1.0,
        energy,
        frequency,
        parity: Some(Parity::from_index(n)),
        weight: InnerProductWeight::DarbouxLine { lambda: p.lambda },
    }
    .with_norm()
}

fn generalized_hermite_state(
    p: &ModelParams,
    n: u32,
    e_x: Parity,
    energy: f64,
    frequency: f64,
    weight: InnerProductWeight,
) -> Result<WavefunctionSpec> {
    if Parity::from_index(n) != e_x {
        return Err(Error::SectorMismatch(format!(
            "level n = {n} has reflection eigenvalue {}, not {}",
            Parity::from_index(n).sign(),
            e_x.sign()
        )));
    }
    let q = e_x.q();
    WavefunctionSpec {
        family: Family::GeneralizedHermite1D,
        gaussian_width: (frequency / p.hbar).sqrt(),
        prefactor_power: f64::from(q),
        poly: PolyParams::generalized_hermite((n - u32::from(q)) / 2, p.mu_x(), q)?,
        norm_constant: 1.0,
        energy,
        frequency,
        parity: Some(e_x),
        weight,
    }
    .with_norm()
}

/// Dunkl oscillator state of total index `n` (energy `ħω(n+μ+1/2)`), whose
/// reflection eigenvalue `e_x` must be `(-1)^n`. The Laguerre degree is
/// `⌊n/2⌋`. Normalised under `|x|^{2μ}dx`.
pub fn build_dunkl_1d(params: &ModelParams, n: u32, e_x: Parity) -> Result<WavefunctionSpec> {
    let p = line_params(params)?;
    let energy = spectra::spectrum_dunkl_1d(&p, n);
    let weight = InnerProductWeight::DunklLine { mu: p.mu_x() };
    generalized_hermite_state(&p, n, e_x, energy, p.omega, weight)
}

/// Dunkl-Darboux III state: generalised Hermite function at the
/// energy-dependent width, normalised under `(1+λx²)|x|^{2μ}dx`.
pub fn build_dunkl_darboux_1d(
    params: &ModelParams,
    n: u32,
    e_x: Parity,
) -> Result<WavefunctionSpec> {
    let p = line_params(params)?;
    let energy = spectra::spectrum_dunkl_darboux_nd(&p, &[n])?;
    let frequency = spectra::effective_frequency(&p, energy)?;
    let weight = InnerProductWeight::DunklDarbouxLine {
        lambda: p.lambda,
        mu: p.mu_x(),
    };
    generalized_hermite_state(&p, n, e_x, energy, frequency, weight)
}

/// `Ψ(x) = Π ψ_i(x_i)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductWavefunction {
    pub factors: Vec<WavefunctionSpec>,
}

impl ProductWavefunction {
    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.factors.len() {
            return Err(Error::DimensionMismatch {
                expected: self.factors.len(),
                got: x.len(),
            });
        }
        Ok(self
            .factors
            .iter()
            .zip(x)
            .map(|(f, &xi)| f.eval(xi))
            .product())
    }

    pub fn norm_constant(&self) -> f64 {
        self.factors.iter().map(|f| f.norm_constant).product()
    }
}

/// Product state for the separable flat models. The per-axis factors must
/// be one-dimensional states sharing ħ and ω with `params`.
pub fn build_product_nd(
    params: &ModelParams,
    factors: Vec<WavefunctionSpec>,
) -> Result<ProductWavefunction> {
    params.validate()?;
    if factors.len() != params.dim {
        return Err(Error::DimensionMismatch {
            expected: params.dim,
            got: factors.len(),
        });
    }
    if factors.iter().any(|f| f.family == Family::RadialLaguerre2D) {
        return Err(invalid("product states are built from line factors"));
    }
    Ok(ProductWavefunction { factors })
}

/// Angular part of a planar eigenstate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum AngularEigenfunction {
    /// `e^{imθ}/sqrt(2π)`.
    PlaneWave { m: i32 },
    /// `(X_even + i·s·X_odd)/sqrt(2)` with unit-norm Jacobi components, or
    /// the bare singlet `X^{++}_0`.
    Dunkl(DunklAngular),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DunklAngular {
    pub mu_x: f64,
    pub mu_y: f64,
    pub m_prime: AngularIndex,
    pub branch: Branch,
    pub sigma: f64,
    /// `X^{++}` (ε = +1) or `X^{-+}` (ε = -1).
    pub even_poly: PolyParams,
    pub even_norm: f64,
    /// `X^{--}` (ε = +1) or `X^{+-}` (ε = -1); absent for the singlet.
    pub odd_poly: Option<PolyParams>,
    pub odd_norm: f64,
    /// Relative phase `s = ±1` of the odd component.
    pub phase: f64,
}

/// `t = -cos 2θ` with derivatives in θ.
fn t_jet(theta: f64) -> Jet {
    let (s2, c2) = (2.0 * theta).sin_cos();
    Jet::new(-c2, 2.0 * s2, 4.0 * c2)
}

fn trig_jet(theta: f64, f: fn(f64) -> f64, df: fn(f64) -> f64) -> Jet {
    Jet::new(f(theta), df(theta), -f(theta))
}

impl DunklAngular {
    fn sector(&self) -> Sector {
        self.m_prime.sector()
    }

    fn even_raw(&self, theta: f64) -> Jet {
        let t = t_jet(theta);
        let p = t.compose(self.even_poly.jet(t.value));
        match self.sector() {
            Sector::Plus => p,
            Sector::Minus => trig_jet(theta, f64::cos, |x| -x.sin()) * p,
        }
    }

    fn odd_raw(&self, theta: f64) -> Option<Jet> {
        let poly = self.odd_poly?;
        let t = t_jet(theta);
        let p = t.compose(poly.jet(t.value));
        Some(match self.sector() {
            Sector::Plus => {
                let (s2, c2) = (2.0 * theta).sin_cos();
                Jet::new(0.5 * s2, c2, -2.0 * s2) * p
            }
            Sector::Minus => trig_jet(theta, f64::sin, f64::cos) * p,
        })
    }
}

impl AngularFunction for AngularEigenfunction {
    fn jet(&self, theta: f64) -> ComplexJet {
        match self {
            AngularEigenfunction::PlaneWave { m } => {
                let k = f64::from(*m);
                let e =
                    Complex64::from_polar((2.0 * std::f64::consts::PI).sqrt().recip(), k * theta);
                let ik = Complex64::new(0.0, k);
                ComplexJet::new(e, ik * e, -k * k * e)
            }
            AngularEigenfunction::Dunkl(d) => {
                let even = d.even_raw(theta).scale(d.even_norm).into_complex();
                match d.odd_raw(theta) {
                    None => even,
                    Some(odd) => {
                        let odd = odd.scale(d.odd_norm).into_complex();
                        let mix = even + odd.scale(Complex64::new(0.0, d.phase));
                        mix.scale(Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0))
                    }
                }
            }
        }
    }

    fn reflection_parity(&self, _axis: ReflectionAxis) -> Option<f64> {
        match self {
            AngularEigenfunction::PlaneWave { m: 0 } => Some(1.0),
            AngularEigenfunction::Dunkl(d) if d.odd_poly.is_none() => Some(1.0),
            _ => None,
        }
    }
}

impl AngularEigenfunction {
    /// Eigenvalue of 𝒥.
    pub fn sigma(&self) -> f64 {
        match self {
            AngularEigenfunction::PlaneWave { m } => -f64::from(*m),
            AngularEigenfunction::Dunkl(d) => d.sigma,
        }
    }
}

fn angular_rule(mu_x: f64, mu_y: f64, degree: u32) -> Result<crate::oracle::QuadratureRule> {
    make_scaled_quadrature(
        InnerProductWeight::Angular { mu_x, mu_y },
        degree as usize + 10,
        1.0,
    )
}

/// Eigenfunction `F_ε` of 𝒥 with eigenvalue `σ_ε` of the requested branch.
///
/// The Jacobi components are normalised by Gauss-Jacobi quadrature under
/// `|cosθ|^{2μ_x}|sinθ|^{2μ_y}dθ`, and the relative phase is chosen from the
/// sign of `⟨X_odd, 𝒥X_even⟩` so that the branch matches the sign of σ.
pub fn build_angular(
    mu_x: f64,
    mu_y: f64,
    m_prime: AngularIndex,
    epsilon: Sector,
    branch: Branch,
) -> Result<AngularEigenfunction> {
    let sigma = spectra::sigma_eigenvalue(mu_x, mu_y, m_prime, epsilon, branch)?;
    let j = m_prime.jacobi_degree();
    let (even_poly, odd_poly) = match epsilon {
        Sector::Plus => (
            PolyParams::jacobi(j, mu_x - 0.5, mu_y - 0.5, false)?,
            if j == 0 {
                None
            } else {
                Some(PolyParams::jacobi(j - 1, mu_x + 0.5, mu_y + 0.5, false)?)
            },
        ),
        Sector::Minus => (
            PolyParams::jacobi(j, mu_x + 0.5, mu_y - 0.5, true)?,
            Some(PolyParams::jacobi(j, mu_x - 0.5, mu_y + 0.5, true)?),
        ),
    };
    let mut d = DunklAngular {
        mu_x,
        mu_y,
        m_prime,
        branch,
        sigma,
        even_poly,
        even_norm: 1.0,
        odd_poly,
        odd_norm: 1.0,
        phase: 1.0,
    };
    let rule = angular_rule(mu_x, mu_y, j + 2)?;
    d.even_norm = rule
        .integrate(|t| d.even_raw(t).value.powi(2))
        .sqrt()
        .recip();
    if d.odd_poly.is_some() {
        d.odd_norm = rule
            .integrate(|t| d.odd_raw(t).expect("odd part present").value.powi(2))
            .sqrt()
            .recip();
        // 𝒥 = iK with K real; K X_even = c X_odd and F = X_even + i s X_odd
        // then has eigenvalue s·c.
        let k_even = |t: f64| {
            let e = d.even_raw(t);
            let reflect = match epsilon {
                Sector::Plus => 0.0,
                Sector::Minus => -2.0 * mu_x * t.tan() * e.value,
            };
            d.even_norm * (e.d1 + reflect)
        };
        let c = rule
            .integrate(|t| d.odd_norm * d.odd_raw(t).expect("odd part present").value * k_even(t));
        d.phase = if (c >= 0.0) == (sigma >= 0.0) {
            1.0
        } else {
            -1.0
        };
    }
    Ok(AngularEigenfunction::Dunkl(d))
}

/// A planar eigenstate `R(r) F(θ)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanarEigenstate {
    pub model: PlaneModel,
    pub radial: WavefunctionSpec,
    pub angular: AngularEigenfunction,
}

impl PlanarEigenstate {
    pub fn energy(&self) -> f64 {
        self.radial.energy
    }

    pub fn eval(&self, r: f64, theta: f64) -> Complex64 {
        self.radial.eval(r) * self.angular.value_at(theta)
    }
}

/// Radial Laguerre state of a planar model, paired with its angular part.
///
/// Landau labels `(n, m)` select the Darboux III family
/// (`r^{|m|} L_n^{|m|}`); angular labels `(k, m', branch)` select the Dunkl
/// families with `r^{ν-μ_x-μ_y} L_k^{ν}`, `ν = sqrt((μ_x+εμ_y)² + σ²)`.
pub fn build_radial_2d(
    model: PlaneModel,
    params: &ModelParams,
    qn: &QuantumNumbers,
) -> Result<PlanarEigenstate> {
    params.validate()?;
    let (energy, degree, nu, a, angular) = match (model, qn) {
        (PlaneModel::DarbouxIIIField, QuantumNumbers::Landau { n, m }) => {
            let e = spectra::spectrum_landau_darboux_2d(params, *n, *m)?;
            let nu = f64::from(m.unsigned_abs());
            (e, *n, nu, 0.0, AngularEigenfunction::PlaneWave { m: *m })
        }
        (
            PlaneModel::DunklField | PlaneModel::DunklDarbouxIIIField,
            QuantumNumbers::Angular { k, m_prime, branch },
        ) => {
            let e = if model == PlaneModel::DunklField {
                spectra::spectrum_landau_dunkl_2d(params, *k, *m_prime, *branch)?
            } else {
                spectra::spectrum_landau_dunkl_darboux_2d(params, *k, *m_prime, *branch)?
            };
            let (mx, my) = (params.mu_x(), params.mu_y());
            let sector = m_prime.sector();
            let angular = build_angular(mx, my, *m_prime, sector, *branch)?;
            let nu = spectra::radial_laguerre_parameter(mx, my, angular.sigma(), sector);
            (e, *k, nu, mx + my, angular)
        }
        _ => return Err(invalid(format!("labels {qn:?} do not fit model {model:?}"))),
    };
    let lambda = if model == PlaneModel::DunklField {
        0.0
    } else {
        params.lambda
    };
    let w2 = params.omega_tilde().powi(2) - 2.0 * lambda * energy;
    if w2 <= 0.0 {
        return Err(Error::Domain(format!(
            "level energy {energy} exceeds the bound spectrum"
        )));
    }
    let frequency = w2.sqrt();
    let (mu_x, mu_y) = if model == PlaneModel::DarbouxIIIField {
        (0.0, 0.0)
    } else {
        (params.mu_x(), params.mu_y())
    };
    let radial = WavefunctionSpec {
        family: Family::RadialLaguerre2D,
        gaussian_width: (frequency / params.hbar).sqrt(),
        prefactor_power: nu - a,
        poly: PolyParams::laguerre(degree, nu)?,
        norm_constant: 1.0,
        energy,
        frequency,
        parity: None,
        weight: InnerProductWeight::Radial2D { lambda, mu_x, mu_y },
    }
    .with_norm()?;
    Ok(PlanarEigenstate {
        model,
        radial,
        angular,
    })
}

/// `∫ f g ρ` with ρ the density of `weight`, by a Gauss rule tuned to the
/// product's Gaussian `exp(-(β_f² + β_g²)x²/2)`.
pub fn inner_product(
    f: &WavefunctionSpec,
    g: &WavefunctionSpec,
    weight: InnerProductWeight,
) -> Result<f64> {
    let line_family = |s: &WavefunctionSpec| s.family != Family::RadialLaguerre2D;
    if line_family(f) != line_family(g) || line_family(f) != weight.is_line() {
        return Err(invalid(
            "weight domain does not match the functions' domain",
        ));
    }
    let scale = (0.5 * (f.gaussian_width.powi(2) + g.gaussian_width.powi(2))).sqrt();
    let size = f.u_degree() + g.u_degree() + 12;
    let rule = make_scaled_quadrature(weight, size, scale)?;
    Ok(rule.integrate(|x| f.eval(x) * g.eval(x)))
}

/// `∫ conj(F) G |cosθ|^{2μ_x}|sinθ|^{2μ_y} dθ`.
pub fn angular_inner_product(
    f: &AngularEigenfunction,
    g: &AngularEigenfunction,
    mu_x: f64,
    mu_y: f64,
    size: usize,
) -> Result<Complex64> {
    let rule = make_scaled_quadrature(InnerProductWeight::Angular { mu_x, mu_y }, size, 1.0)?;
    Ok(rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .map(|(&t, &w)| w * f.value_at(t).conj() * g.value_at(t))
        .sum())
}

/// A constructed eigenstate together with the Hamiltonian it solves.
#[derive(Debug, Clone, PartialEq)]
pub enum Eigenstate {
    Line {
        model: LineModel,
        state: WavefunctionSpec,
    },
    Planar(PlanarEigenstate),
}

impl Eigenstate {
    pub fn energy(&self) -> f64 {
        match self {
            Eigenstate::Line { state, .. } => state.energy,
            Eigenstate::Planar(p) => p.energy(),
        }
    }

    /// Gaussian width β of the (radial) factor.
    pub fn gaussian_width(&self) -> f64 {
        match self {
            Eigenstate::Line { state, .. } => state.gaussian_width,
            Eigenstate::Planar(p) => p.radial.gaussian_width,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_ground_state_is_the_oscillator_ground_state() {
        let psi = build_darboux_1d(&ModelParams::new(1), 0).unwrap();
        let expected = std::f64::consts::PI.powf(-0.25);
        assert!((psi.eval(0.0) - expected).abs() < 1e-14);
        assert!((psi.eval(1.2) - expected * (-0.72_f64).exp()).abs() < 1e-14);
    }

    #[test]
    fn widths_follow_the_level_energy() {
        let p = ModelParams::new(1).with_lambda(0.02);
        let a = build_darboux_1d(&p, 0).unwrap();
        let b = build_darboux_1d(&p, 1).unwrap();
        assert!(a.gaussian_width > b.gaussian_width);
        for s in [&a, &b] {
            let omega = spectra::effective_frequency(&p, s.energy).unwrap();
            assert!((s.gaussian_width.powi(2) * p.hbar - omega).abs() < 1e-12);
        }
    }

    #[test]
    fn dunkl_parity_and_norm() {
        let p = ModelParams::new(1).with_uniform_mu(0.3);
        let f = build_dunkl_1d(&p, 3, Parity::Odd).unwrap();
        for x in [0.1, 0.7, 2.3] {
            assert_eq!(f.eval(-x), -f.eval(x));
        }
        assert!(build_dunkl_1d(&p, 3, Parity::Even).is_err());
        let g = build_dunkl_1d(&p, 0, Parity::Even).unwrap();
        assert!((inner_product(&g, &g, g.weight).unwrap() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn flat_angular_functions_are_doubled_plane_waves() {
        let one = AngularIndex::from_doubled(2);
        for branch in [Branch::Plus, Branch::Minus] {
            let f = build_angular(0.0, 0.0, one, Sector::Plus, branch).unwrap();
            // 𝒥 e^{imθ} = -m e^{imθ}, so σ = +2 is e^{-2iθ}
            let m = if branch == Branch::Plus { -2 } else { 2 };
            let ratio = f.value_at(0.3) / Complex64::from_polar(1.0, f64::from(m) * 0.3);
            for t in [0.9, 2.0, 4.4] {
                let r = f.value_at(t) / Complex64::from_polar(1.0, f64::from(m) * t);
                assert!((r - ratio).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn product_of_ground_states() {
        let p1 = ModelParams::new(1);
        let g = build_darboux_1d(&p1, 0).unwrap();
        let prod = build_product_nd(&ModelParams::new(2), vec![g.clone(), g.clone()]).unwrap();
        assert!((prod.eval(&[0.3, -0.5]).unwrap() - g.eval(0.3) * g.eval(-0.5)).abs() < 1e-15);
        assert!(prod.eval(&[0.3]).is_err());
        assert!(build_product_nd(&ModelParams::new(3), vec![g]).is_err());
    }
}
