//! Closed-form spectra of the oscillator family, the implicit
//! energy-dependent-frequency equation, level enumeration and the
//! background geometry of the Darboux III space.
//!
//! All deformed spectra share one structure: the energy solves
//! `E - shift = ħ Ω(E) T` with `Ω(E)² = ω̃² - 2λE`, where `T` is the
//! oscillator multiplier of the level and `shift` the Larmor term. The
//! closed forms are the positive root of the resulting quadratic and are
//! evaluated in rationalised form, which keeps them free of cancellation
//! as λ → 0.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::model::{AngularIndex, Branch, Model, ModelParams, QuantumNumbers, Sector};

/// Conformal factor `1 + λ|x|²` of the Darboux III metric.
pub fn metric_factor(params: &ModelParams, x_sq: f64) -> Result<f64> {
    if !(x_sq >= 0.0) {
        return Err(invalid(format!("|x|^2 must be non-negative, got {x_sq}")));
    }
    Ok(1.0 + params.lambda * x_sq)
}

/// Scalar curvature `-λ(N-1)(2N + 3(N-2)λ|x|²) / (1+λ|x|²)³`.
pub fn scalar_curvature(params: &ModelParams, x_sq: f64) -> Result<f64> {
    let factor = metric_factor(params, x_sq)?;
    let n = params.dim as f64;
    let l = params.lambda;
    Ok(-l * (n - 1.0) * (2.0 * n + 3.0 * (n - 2.0) * l * x_sq) / factor.powi(3))
}

/// `Ω(E) = sqrt(ω̃² - 2λE)`; ω̃ = ω whenever no field is applied.
pub fn effective_frequency(params: &ModelParams, energy: f64) -> Result<f64> {
    let w2 = params.omega_tilde().powi(2);
    let arg = w2 - 2.0 * params.lambda * energy;
    if arg <= 0.0 {
        return Err(Error::Domain(format!(
            "omega^2 - 2 lambda E = {arg} is not positive (E = {energy})"
        )));
    }
    Ok(arg.sqrt())
}

/// Energy solving `E = ħc + ħΩ(E)T`, i.e. `ħ(sqrt(D) - B)` with
/// `B = ħλT² - c` and `D = B² + ω̃²T² - c²`. For `B > 0` the difference is
/// rationalised to `ħ(ω̃²T² - c²)/(sqrt(D) + B)`.
fn deformed_root(hbar: f64, freq: f64, lambda: f64, multiplier: f64, larmor: f64) -> f64 {
    let t2 = multiplier * multiplier;
    let b = hbar * lambda * t2 - larmor;
    let numer = freq * freq * t2 - larmor * larmor;
    let root = (b * b + numer).sqrt();
    if b > 0.0 {
        hbar * numer / (root + b)
    } else {
        hbar * (root - b)
    }
}

/// [`deformed_root`] for levels that exist: a bound state needs the shift
/// `ħc` below the continuum threshold `ω̃²/2λ`.
fn deformed_energy(hbar: f64, freq: f64, lambda: f64, multiplier: f64, larmor: f64) -> Result<f64> {
    if lambda > 0.0 && hbar * larmor >= freq * freq / (2.0 * lambda) {
        return Err(Error::Domain(format!(
            "no bound state: Larmor shift {} reaches the continuum threshold {}",
            hbar * larmor,
            freq * freq / (2.0 * lambda)
        )));
    }
    Ok(deformed_root(hbar, freq, lambda, multiplier, larmor))
}

/// Spectrum of the N-dimensional Darboux III oscillator for `n = Σ n_i`.
pub fn spectrum_darboux_nd(params: &ModelParams, n_total: u32) -> f64 {
    let s = f64::from(n_total) + params.dim as f64 / 2.0;
    deformed_root(params.hbar, params.omega, params.lambda, s, 0.0)
}

/// Unique root of `E = shift + ħ sqrt(freq² - 2λE) · multiplier` on
/// `[shift, freq²/2λ)`, found by bisection.
pub fn solve_implicit_shifted(
    hbar: f64,
    freq: f64,
    lambda: f64,
    multiplier: f64,
    shift: f64,
) -> Result<f64> {
    if !(multiplier > 0.0) {
        return Err(invalid(format!(
            "multiplier must be positive, got {multiplier}"
        )));
    }
    if lambda == 0.0 {
        return Ok(shift + hbar * freq * multiplier);
    }
    let ceiling = freq * freq / (2.0 * lambda);
    if shift >= ceiling {
        return Err(Error::Domain(format!(
            "shift {shift} lies above the continuum threshold {ceiling}"
        )));
    }
    let residual = |e: f64| {
        let arg = (freq * freq - 2.0 * lambda * e).max(0.0);
        e - shift - hbar * arg.sqrt() * multiplier
    };
    // residual(shift) <= 0 < residual(ceiling) and the residual is increasing
    let (mut lo, mut hi) = (shift, ceiling);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= 1e-15 * hi.abs().max(1.0) {
            break;
        }
        if residual(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Root of `E = ħ Ω(E) · multiplier` with `Ω(E) = sqrt(ω² - 2λE)`.
pub fn solve_energy_implicit(params: &ModelParams, multiplier: f64) -> Result<f64> {
    solve_implicit_shifted(params.hbar, params.omega, params.lambda, multiplier, 0.0)
}

/// Planar Darboux III levels in a constant field, with
/// `M = 2n + |m| + 1`.
pub fn spectrum_landau_darboux_2d(params: &ModelParams, n: u32, m: i32) -> Result<f64> {
    if params.dim != 2 {
        return Err(invalid("the Landau spectrum is planar; dim must be 2"));
    }
    let big_m = f64::from(2 * n + m.unsigned_abs() + 1);
    let larmor = -params.omega_c * f64::from(m);
    deformed_energy(
        params.hbar,
        params.omega_tilde(),
        params.lambda,
        big_m,
        larmor,
    )
}

/// One-dimensional Dunkl oscillator, `ħω(n + μ + 1/2)` with `n` the total
/// index (parity `(-1)^n`).
pub fn spectrum_dunkl_1d(params: &ModelParams, n: u32) -> f64 {
    params.hbar * params.omega * (f64::from(n) + params.mu_x() + 0.5)
}

fn cartesian_multiplier(params: &ModelParams, n: &[u32]) -> Result<f64> {
    if n.len() != params.dim {
        return Err(Error::DimensionMismatch {
            expected: params.dim,
            got: n.len(),
        });
    }
    let total: u32 = n.iter().sum();
    Ok(f64::from(total) + params.mu_sum() + params.dim as f64 / 2.0)
}

/// N-dimensional Dunkl oscillator, `ħω(Σn_i + Σμ_i + N/2)`.
pub fn spectrum_dunkl_nd(params: &ModelParams, n: &[u32]) -> Result<f64> {
    Ok(params.hbar * params.omega * cartesian_multiplier(params, n)?)
}

/// Eigenvalue σ_ε of the planar Dunkl angular operator 𝒥.
pub fn sigma_eigenvalue(
    mu_x: f64,
    mu_y: f64,
    m_prime: AngularIndex,
    epsilon: Sector,
    branch: Branch,
) -> Result<f64> {
    if m_prime.sector() != epsilon {
        return Err(Error::SectorMismatch(format!(
            "m' = {m_prime} does not belong to the epsilon = {} sector",
            epsilon.label()
        )));
    }
    let m = m_prime.value();
    let magnitude = match epsilon {
        Sector::Plus => 2.0 * (m * (m + mu_x + mu_y)).sqrt(),
        Sector::Minus => 2.0 * ((m + mu_x) * (m + mu_y)).sqrt(),
    };
    Ok(branch.sign() * magnitude)
}

/// Laguerre parameter `sqrt((μ_x + ε μ_y)² + σ_ε²)` of a planar Dunkl sector.
pub fn radial_laguerre_parameter(mu_x: f64, mu_y: f64, sigma: f64, epsilon: Sector) -> f64 {
    (mu_x + epsilon.sign() * mu_y).hypot(sigma)
}

/// `(σ, T)` for a planar Dunkl level, `T = 2k + ν + 1`.
pub fn angular_multiplier(
    params: &ModelParams,
    k: u32,
    m_prime: AngularIndex,
    branch: Branch,
) -> Result<(f64, f64)> {
    if params.dim != 2 {
        return Err(invalid("planar Dunkl levels need dim = 2"));
    }
    let sector = m_prime.sector();
    let sigma = sigma_eigenvalue(params.mu_x(), params.mu_y(), m_prime, sector, branch)?;
    let nu = radial_laguerre_parameter(params.mu_x(), params.mu_y(), sigma, sector);
    Ok((sigma, 2.0 * f64::from(k) + nu + 1.0))
}

/// Planar Dunkl oscillator in a field (flat space only).
pub fn spectrum_landau_dunkl_2d(
    params: &ModelParams,
    k: u32,
    m_prime: AngularIndex,
    branch: Branch,
) -> Result<f64> {
    if params.lambda != 0.0 {
        return Err(invalid(
            "the flat Dunkl-Landau spectrum needs lambda = 0; use the Dunkl-Darboux variant",
        ));
    }
    let (sigma, t) = angular_multiplier(params, k, m_prime, branch)?;
    Ok(params.hbar * params.omega_tilde() * t + params.hbar * params.omega_c * sigma)
}

/// N-dimensional Dunkl-Darboux III oscillator with
/// `S = Σn_i + Σμ_i + N/2`.
pub fn spectrum_dunkl_darboux_nd(params: &ModelParams, n: &[u32]) -> Result<f64> {
    let s = cartesian_multiplier(params, n)?;
    Ok(deformed_root(
        params.hbar,
        params.omega,
        params.lambda,
        s,
        0.0,
    ))
}

/// Planar Dunkl-Darboux III oscillator in a field.
pub fn spectrum_landau_dunkl_darboux_2d(
    params: &ModelParams,
    k: u32,
    m_prime: AngularIndex,
    branch: Branch,
) -> Result<f64> {
    let (sigma, t) = angular_multiplier(params, k, m_prime, branch)?;
    deformed_energy(
        params.hbar,
        params.omega_tilde(),
        params.lambda,
        t,
        params.omega_c * sigma,
    )
}

/// `(multiplier, Larmor shift)` such that `E = shift + ħΩ(E)·multiplier`.
pub fn implicit_form(
    model: Model,
    params: &ModelParams,
    qn: &QuantumNumbers,
) -> Result<(f64, f64)> {
    match (model, qn) {
        (Model::Darboux, QuantumNumbers::Cartesian { n }) => {
            let zero_mu = ModelParams {
                mu: vec![0.0; params.dim],
                ..params.clone()
            };
            Ok((cartesian_multiplier(&zero_mu, n)?, 0.0))
        }
        (Model::Dunkl | Model::DunklDarboux, QuantumNumbers::Cartesian { n }) => {
            Ok((cartesian_multiplier(params, n)?, 0.0))
        }
        (Model::DarbouxLandau, QuantumNumbers::Landau { n, m }) => Ok((
            f64::from(2 * n + m.unsigned_abs() + 1),
            -params.hbar * params.omega_c * f64::from(*m),
        )),
        (
            Model::DunklLandau | Model::DunklDarbouxLandau,
            QuantumNumbers::Angular { k, m_prime, branch },
        ) => {
            let (sigma, t) = angular_multiplier(params, *k, *m_prime, *branch)?;
            Ok((t, params.hbar * params.omega_c * sigma))
        }
        _ => Err(invalid(format!(
            "quantum numbers {qn:?} do not label model {model}"
        ))),
    }
}

/// Closed-form energy of any level.
pub fn level_energy(model: Model, params: &ModelParams, qn: &QuantumNumbers) -> Result<f64> {
    params.validate_for(model)?;
    match (model, qn) {
        (Model::Darboux, QuantumNumbers::Cartesian { n }) => {
            if n.len() != params.dim {
                return Err(Error::DimensionMismatch {
                    expected: params.dim,
                    got: n.len(),
                });
            }
            Ok(spectrum_darboux_nd(params, n.iter().sum()))
        }
        (Model::Dunkl, QuantumNumbers::Cartesian { n }) => spectrum_dunkl_nd(params, n),
        (Model::DunklDarboux, QuantumNumbers::Cartesian { n }) => {
            spectrum_dunkl_darboux_nd(params, n)
        }
        (Model::DarbouxLandau, QuantumNumbers::Landau { n, m }) => {
            spectrum_landau_darboux_2d(params, *n, *m)
        }
        (Model::DunklLandau, QuantumNumbers::Angular { k, m_prime, branch }) => {
            spectrum_landau_dunkl_2d(params, *k, *m_prime, *branch)
        }
        (Model::DunklDarbouxLandau, QuantumNumbers::Angular { k, m_prime, branch }) => {
            spectrum_landau_dunkl_darboux_2d(params, *k, *m_prime, *branch)
        }
        _ => Err(invalid(format!(
            "quantum numbers {qn:?} do not label model {model}"
        ))),
    }
}

/// One row of spectrum output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelRecord {
    pub model: Model,
    pub params: ModelParams,
    pub quantum_numbers: QuantumNumbers,
    pub energy: f64,
    /// Effective frequency Ω(E) at this level.
    pub frequency: f64,
}

impl LevelRecord {
    pub fn new(model: Model, params: &ModelParams, qn: QuantumNumbers) -> Result<Self> {
        let energy = level_energy(model, params, &qn)?;
        let frequency = if model.uses_lambda() {
            effective_frequency(params, energy)?
        } else {
            params.omega_tilde()
        };
        Ok(Self {
            model,
            params: params.clone(),
            quantum_numbers: qn,
            energy,
            frequency,
        })
    }
}

fn cartesian_tuples(dim: usize, max_total: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, remaining_axes: usize, budget: u32, out: &mut Vec<Vec<u32>>) {
        if remaining_axes == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in 0..=budget {
            prefix.push(k);
            rec(prefix, remaining_axes - 1, budget - k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(dim), dim, max_total, &mut out);
    out
}

/// Quantum numbers of every level with total index ≤ `max_index`.
pub fn enumerate_quantum_numbers(
    model: Model,
    params: &ModelParams,
    max_index: u32,
) -> Vec<QuantumNumbers> {
    match model {
        Model::Darboux | Model::Dunkl | Model::DunklDarboux => {
            cartesian_tuples(params.dim, max_index)
                .into_iter()
                .map(|n| QuantumNumbers::Cartesian { n })
                .collect()
        }
        Model::DarbouxLandau => {
            let mut out = Vec::new();
            for n in 0..=max_index / 2 {
                let room = (max_index - 2 * n) as i32;
                for m in -room..=room {
                    out.push(QuantumNumbers::Landau { n, m });
                }
            }
            out
        }
        Model::DunklLandau | Model::DunklDarbouxLandau => {
            let mut out = Vec::new();
            for k in 0..=max_index / 2 {
                for doubled in 0..=(max_index - 2 * k) {
                    let m_prime = AngularIndex::from_doubled(doubled);
                    out.push(QuantumNumbers::angular(k, m_prime, Branch::Plus));
                    if doubled > 0 {
                        out.push(QuantumNumbers::angular(k, m_prime, Branch::Minus));
                    }
                }
            }
            out
        }
    }
}

/// All levels with total index ≤ `max_index`, sorted by energy and then by
/// quantum numbers. Labels without a bound state are left out.
pub fn enumerate_levels(
    model: Model,
    params: &ModelParams,
    max_index: i64,
) -> Result<Vec<LevelRecord>> {
    if max_index < 0 {
        return Err(invalid(format!("max_index must be >= 0, got {max_index}")));
    }
    let max_index = u32::try_from(max_index).map_err(|_| invalid("max_index too large"))?;
    params.validate_for(model)?;
    let mut levels = enumerate_quantum_numbers(model, params, max_index)
        .into_iter()
        .map(|qn| LevelRecord::new(model, params, qn))
        .filter(|r| !matches!(r, Err(Error::Domain(_))))
        .collect::<Result<Vec<_>>>()?;
    levels.sort_by(|a, b| {
        a.energy
            .total_cmp(&b.energy)
            .then_with(|| a.quantum_numbers.cmp(&b.quantum_numbers))
    });
    Ok(levels)
}

/// Relative tolerance used to decide that two closed-form energies coincide.
pub const DEGENERACY_TOLERANCE: f64 = 1e-10;

/// A set of levels sharing one energy.
#[derive(Debug, Clone, PartialEq)]
pub struct DegenerateLevel {
    pub energy: f64,
    /// Indices into the sorted level list.
    pub members: Vec<usize>,
}

impl DegenerateLevel {
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }
}

/// Groups an energy-sorted level list into degenerate multiplets.
pub fn group_degenerate(levels: &[LevelRecord]) -> Vec<DegenerateLevel> {
    let mut groups: Vec<DegenerateLevel> = Vec::new();
    for (i, level) in levels.iter().enumerate() {
        match groups.last_mut() {
            Some(g)
                if (level.energy - g.energy).abs()
                    <= DEGENERACY_TOLERANCE * g.energy.abs().max(1.0) =>
            {
                g.members.push(i)
            }
            _ => groups.push(DegenerateLevel {
                energy: level.energy,
                members: vec![i],
            }),
        }
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(lambda: f64) -> ModelParams {
        ModelParams::new(2).with_lambda(lambda)
    }

    #[test]
    fn geometry() {
        assert_eq!(metric_factor(&ModelParams::new(1), 7.0).unwrap(), 1.0);
        assert!((metric_factor(&p2(0.02), 4.0).unwrap() - 1.08).abs() < 1e-15);
        assert_eq!(
            metric_factor(&ModelParams::new(3).with_lambda(1.0), 0.0).unwrap(),
            1.0
        );
        assert!(metric_factor(&p2(0.02), -1.0).is_err());
        assert_eq!(
            scalar_curvature(&ModelParams::new(1).with_lambda(0.3), 2.0).unwrap(),
            0.0
        );
        assert_eq!(scalar_curvature(&p2(0.0), 2.0).unwrap(), 0.0);
        assert!((scalar_curvature(&p2(0.02), 0.0).unwrap() + 0.08).abs() < 1e-15);
    }

    #[test]
    fn darboux_examples() {
        let flat = p2(0.0);
        for n in 0..10 {
            assert!((spectrum_darboux_nd(&flat, n) - (f64::from(n) + 1.0)).abs() < 1e-14);
        }
        // frozen with 40-digit arithmetic
        assert!((spectrum_darboux_nd(&p2(0.02), 0) - 0.980_199_980_003_999).abs() < 1e-14);
        assert!((spectrum_darboux_nd(&p2(0.02), 5) - 5.323_045_589_766_802).abs() < 1e-13);
    }

    #[test]
    fn effective_frequency_examples() {
        let p = p2(0.02);
        assert_eq!(effective_frequency(&p2(0.0), 3.3).unwrap(), 1.0);
        assert_eq!(effective_frequency(&p, 0.0).unwrap(), 1.0);
        let e0 = spectrum_darboux_nd(&p, 0);
        // E = ħΩ·1 at the ground level
        assert!((effective_frequency(&p, e0).unwrap() - e0).abs() < 1e-14);
        assert!(effective_frequency(&p, 25.0).is_err());
    }

    #[test]
    fn implicit_solver_limits() {
        let flat = ModelParams::new(1);
        assert_eq!(solve_energy_implicit(&flat, 1.5).unwrap(), 1.5);
        let p = ModelParams::new(1).with_lambda(0.06);
        assert!(solve_energy_implicit(&p, 1e-9).unwrap() < 1e-8);
        assert!(solve_energy_implicit(&p, 0.0).is_err());
        assert!(solve_implicit_shifted(1.0, 1.0, 0.5, 1.0, 2.0).is_err());
    }

    #[test]
    fn strong_field_levels_without_bound_state() {
        let p = ModelParams::new(2).with_lambda(0.2).with_omega_c(0.4);
        let threshold = p.omega_tilde().powi(2) / 0.4;
        assert!(matches!(
            spectrum_landau_darboux_2d(&p, 0, -20),
            Err(Error::Domain(_))
        ));
        assert!(spectrum_landau_darboux_2d(&p, 0, 20).unwrap() < threshold);
        let levels = enumerate_levels(Model::DarbouxLandau, &p, 20).unwrap();
        assert!(levels.len() < enumerate_quantum_numbers(Model::DarbouxLandau, &p, 20).len());
        assert!(levels.iter().all(|l| l.energy < threshold));
    }

    #[test]
    fn landau_examples() {
        let p = p2(0.0).with_omega_c(0.1);
        let e = spectrum_landau_darboux_2d(&p, 0, 1).unwrap();
        assert!((e - 1.909_975_124_224_178).abs() < 1e-14);
        assert!(spectrum_landau_darboux_2d(&ModelParams::new(3), 0, 0).is_err());
    }

    #[test]
    fn dunkl_examples() {
        let p = ModelParams::new(1).with_uniform_mu(0.02);
        assert!((spectrum_dunkl_1d(&p, 0) - 0.52).abs() < 1e-15);
        let p = ModelParams::new(1).with_uniform_mu(0.3);
        assert!((spectrum_dunkl_1d(&p, 3) - 3.8).abs() < 1e-15);
        let p = ModelParams::new(2).with_uniform_mu(0.02);
        assert!((spectrum_dunkl_nd(&p, &[0, 0]).unwrap() - 1.04).abs() < 1e-15);
        assert!(spectrum_dunkl_nd(&p, &[0]).is_err());
        let p = ModelParams::new(1).with_uniform_mu(0.02).with_lambda(0.02);
        assert!(
            (spectrum_dunkl_darboux_nd(&p, &[0]).unwrap() - 0.514_620_120_839_633).abs() < 1e-14
        );
    }

    #[test]
    fn sigma_examples() {
        let three = AngularIndex::from_value(3.0).unwrap();
        assert_eq!(
            sigma_eigenvalue(0.0, 0.0, three, Sector::Plus, Branch::Plus).unwrap(),
            6.0
        );
        let zero = AngularIndex::from_value(0.0).unwrap();
        assert_eq!(
            sigma_eigenvalue(0.4, 0.1, zero, Sector::Plus, Branch::Minus).unwrap(),
            0.0
        );
        let half = AngularIndex::from_value(0.5).unwrap();
        let s = sigma_eigenvalue(0.02, 0.02, half, Sector::Minus, Branch::Plus).unwrap();
        assert!((s - 1.04).abs() < 1e-15);
        assert!(sigma_eigenvalue(0.02, 0.02, half, Sector::Plus, Branch::Plus).is_err());
    }

    #[test]
    fn landau_dunkl_examples() {
        let p = ModelParams::new(2).with_uniform_mu(0.02);
        let zero = AngularIndex::from_doubled(0);
        let e = spectrum_landau_dunkl_2d(&p, 0, zero, Branch::Plus).unwrap();
        assert!((e - 1.04).abs() < 1e-15);
        assert!(
            spectrum_landau_dunkl_2d(&p.clone().with_lambda(0.1), 0, zero, Branch::Plus).is_err()
        );
        // ε = -1 with μ_x = μ_y: the Laguerre parameter is |σ_-|
        let half = AngularIndex::from_doubled(1);
        let (sigma, t) = angular_multiplier(&p, 0, half, Branch::Minus).unwrap();
        assert!((t - (sigma.abs() + 1.0)).abs() < 1e-15);
    }

    #[test]
    fn enumeration_of_the_planar_darboux_oscillator() {
        let levels = enumerate_levels(Model::Darboux, &p2(0.02), 5).unwrap();
        let groups = group_degenerate(&levels);
        let mult: Vec<usize> = groups.iter().map(DegenerateLevel::multiplicity).collect();
        assert_eq!(mult, vec![1, 2, 3, 4, 5, 6]);
        assert!(enumerate_levels(Model::Darboux, &p2(0.02), -1).is_err());
    }

    #[test]
    fn flat_planar_enumerations_have_oscillator_degeneracy() {
        let p = p2(0.0);
        for model in [
            Model::DarbouxLandau,
            Model::DunklLandau,
            Model::DunklDarbouxLandau,
        ] {
            let levels = enumerate_levels(model, &p, 4).unwrap();
            let mult: Vec<usize> = group_degenerate(&levels)
                .iter()
                .map(DegenerateLevel::multiplicity)
                .collect();
            assert_eq!(mult, vec![1, 2, 3, 4, 5], "{model}");
        }
    }
}
