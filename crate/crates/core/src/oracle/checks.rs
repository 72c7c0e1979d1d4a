//! Named verification suites comparing closed forms with the oracle.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::angular::{discretize_angular_j, nearest_distance};
use super::assembly::{
    assemble_1d, assemble_2d, assemble_radial_nd, solve_generalized, PlaneSector,
};
use super::integrals::integral_commutator_residual;
use super::residual::residual_report;
use crate::eigenfunctions::{self, inner_product, Eigenstate, WavefunctionSpec};
use crate::error::{invalid, Result};
use crate::jet::{ComplexJet, Jet};
use crate::model::{AngularIndex, Branch, Model, ModelParams, Parity, QuantumNumbers, Sector};
use crate::operators::{
    angular_operator_htheta, angular_operator_j, dunkl_derivative_1d, AngularFunction, FnJet,
    LineModel, PlaneModel, TrigPolynomial,
};
use crate::spectra;

/// Outcome of one check: `passed` iff `observed <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub tolerance: f64,
    pub observed: f64,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, tolerance: f64, observed: f64) -> Self {
        Self {
            name: name.into(),
            tolerance,
            observed,
            passed: observed <= tolerance,
            detail: String::new(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Oracle,
    Residual,
    Gram,
    Limits,
    Angular,
    Algebra,
    Implicit,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::Oracle,
        CheckKind::Residual,
        CheckKind::Gram,
        CheckKind::Limits,
        CheckKind::Angular,
        CheckKind::Algebra,
        CheckKind::Implicit,
    ];

    pub fn id(self) -> &'static str {
        match self {
            CheckKind::Oracle => "oracle",
            CheckKind::Residual => "residual",
            CheckKind::Gram => "gram",
            CheckKind::Limits => "limits",
            CheckKind::Angular => "angular",
            CheckKind::Algebra => "algebra",
            CheckKind::Implicit => "implicit",
        }
    }
}

impl std::str::FromStr for CheckKind {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.id() == s)
            .ok_or_else(|| invalid(format!("unknown check '{s}'")))
    }
}

/// Inputs shared by every suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub model: Model,
    pub params: ModelParams,
    pub basis_size: usize,
    pub seed: u64,
    /// Restricts planar Dunkl checks to one ε sector.
    pub epsilon: Option<Sector>,
    /// Replaces every suite's default tolerance.
    pub tolerance: Option<f64>,
}

impl VerifyConfig {
    pub fn new(model: Model, params: ModelParams) -> Self {
        Self {
            model,
            params,
            basis_size: 96,
            seed: 7,
            epsilon: None,
            tolerance: None,
        }
    }

    fn tol(&self, default: f64) -> f64 {
        self.tolerance.unwrap_or(default)
    }

    fn sectors(&self) -> Vec<Sector> {
        match self.epsilon {
            Some(e) => vec![e],
            None => vec![Sector::Plus, Sector::Minus],
        }
    }
}

/// Runs the requested suites (all of them when `kinds` is empty).
pub fn run_checks(config: &VerifyConfig, kinds: &[CheckKind]) -> Result<Vec<CheckResult>> {
    config.params.validate_for(config.model)?;
    let kinds: Vec<CheckKind> = if kinds.is_empty() {
        CheckKind::ALL.to_vec()
    } else {
        kinds.to_vec()
    };
    let mut out = Vec::new();
    for kind in kinds {
        out.extend(match kind {
            CheckKind::Oracle => oracle_checks(config)?,
            CheckKind::Residual => residual_checks(config)?,
            CheckKind::Gram => gram_checks(config)?,
            CheckKind::Limits => limit_checks(config)?,
            CheckKind::Angular => angular_checks(config)?,
            CheckKind::Algebra => algebra_checks(config)?,
            CheckKind::Implicit => implicit_checks(config)?,
        });
    }
    Ok(out)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn line_model(model: Model) -> Option<LineModel> {
    match model {
        Model::Darboux => Some(LineModel::DarbouxIII),
        Model::Dunkl => Some(LineModel::Dunkl),
        Model::DunklDarboux => Some(LineModel::DunklDarbouxIII),
        _ => None,
    }
}

fn plane_model(model: Model) -> Option<PlaneModel> {
    match model {
        Model::DarbouxLandau => Some(PlaneModel::DarbouxIIIField),
        Model::DunklLandau => Some(PlaneModel::DunklField),
        Model::DunklDarbouxLandau => Some(PlaneModel::DunklDarbouxIIIField),
        _ => None,
    }
}

fn dunkl_sectors(sectors: &[Sector], max_doubled: u32) -> Vec<(AngularIndex, Branch)> {
    let mut out = Vec::new();
    for doubled in 0..=max_doubled {
        let m = AngularIndex::from_doubled(doubled);
        if !sectors.contains(&m.sector()) {
            continue;
        }
        out.push((m, Branch::Plus));
        if doubled > 0 {
            out.push((m, Branch::Minus));
        }
    }
    out
}

/// Oracle eigenvalues against the closed forms: lowest six levels for
/// Cartesian models, lowest four per angular sector for planar ones.
pub fn oracle_checks(config: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let p = &config.params;
    let n = config.basis_size;
    let mut out = Vec::new();
    if let Some(line) = line_model(config.model) {
        if p.dim == 1 {
            let mut oracle = Vec::new();
            for parity in [Parity::Even, Parity::Odd] {
                let prob = assemble_1d(line, p, n, Some(parity))?;
                let v = solve_generalized(&prob, 6)?;
                oracle.extend(v.into_iter().zip(prob.indices.iter().copied()));
            }
            oracle.sort_by(|a, b| a.0.total_cmp(&b.0));
            let mut worst: f64 = 0.0;
            for &(e, idx) in oracle.iter().take(6) {
                let exact =
                    spectra::level_energy(config.model, p, &QuantumNumbers::cartesian(&[idx]))?;
                worst = worst.max(rel(e, exact));
            }
            out.push(CheckResult::new(
                format!("oracle/{}-1d lowest 6", config.model),
                config.tol(1e-8),
                worst,
            ));
        } else {
            let mut worst: f64 = 0.0;
            for l in 0..4u32 {
                let radial_params = match config.model {
                    Model::Darboux => ModelParams {
                        mu: vec![0.0; p.dim],
                        ..p.clone()
                    },
                    Model::Dunkl => p.clone().with_lambda(0.0),
                    _ => p.clone(),
                };
                let prob = assemble_radial_nd(&radial_params, l, n)?;
                for (k, e) in solve_generalized(&prob, 3)?.into_iter().enumerate() {
                    let mut idx = vec![0; p.dim];
                    idx[0] = 2 * k as u32 + l;
                    let exact =
                        spectra::level_energy(config.model, p, &QuantumNumbers::cartesian(&idx))?;
                    worst = worst.max(rel(e, exact));
                }
            }
            out.push(CheckResult::new(
                format!("oracle/{}-{}d radial sectors l<=3", config.model, p.dim),
                config.tol(1e-7),
                worst,
            ));
        }
    }
    if let Some(plane) = plane_model(config.model) {
        let sectors: Vec<PlaneSector> = if plane == PlaneModel::DarbouxIIIField {
            (-3..=3).map(|m| PlaneSector::Landau { m }).collect()
        } else {
            dunkl_sectors(&config.sectors(), 4)
                .into_iter()
                .map(|(m_prime, branch)| PlaneSector::Dunkl { m_prime, branch })
                .collect()
        };
        for sector in sectors {
            let prob = assemble_2d(plane, p, n, sector)?;
            let mut worst: f64 = 0.0;
            for (k, e) in solve_generalized(&prob, 4)?.into_iter().enumerate() {
                let qn = match sector {
                    PlaneSector::Landau { m } => QuantumNumbers::Landau { n: k as u32, m },
                    PlaneSector::Dunkl { m_prime, branch } => {
                        QuantumNumbers::angular(k as u32, m_prime, branch)
                    }
                };
                worst = worst.max(rel(e, spectra::level_energy(config.model, p, &qn)?));
            }
            let label = match sector {
                PlaneSector::Landau { m } => format!("m={m}"),
                PlaneSector::Dunkl { m_prime, branch } => {
                    format!(
                        "eps={} m'={m_prime} branch={}",
                        m_prime.sector().label(),
                        branch.label()
                    )
                }
            };
            out.push(CheckResult::new(
                format!("oracle/{} {label}", config.model),
                config.tol(1e-7),
                worst,
            ));
        }
    }
    Ok(out)
}

/// Line eigenstates of a Cartesian model in one dimension.
pub fn line_state(model: Model, params: &ModelParams, n: u32) -> Result<WavefunctionSpec> {
    match model {
        Model::Darboux => eigenfunctions::build_darboux_1d(params, n),
        Model::Dunkl => eigenfunctions::build_dunkl_1d(params, n, Parity::from_index(n)),
        Model::DunklDarboux => {
            eigenfunctions::build_dunkl_darboux_1d(params, n, Parity::from_index(n))
        }
        _ => Err(invalid(format!("{model} has no line eigenstates"))),
    }
}

fn planar_labels(model: Model, sectors: &[Sector]) -> Vec<QuantumNumbers> {
    let mut out = Vec::new();
    for k in 0..=3u32 {
        if model == Model::DarbouxLandau {
            for m in -2..=2 {
                out.push(QuantumNumbers::Landau { n: k, m });
            }
        } else {
            for (m_prime, branch) in dunkl_sectors(sectors, 4) {
                out.push(QuantumNumbers::angular(k, m_prime, branch));
            }
        }
    }
    out
}

/// Pointwise eigen-residuals at 200 seeded bulk points per state.
pub fn residual_checks(config: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let p = &config.params;
    let tol = config.tol(1e-8);
    let mut out = Vec::new();
    if let Some(line) = line_model(config.model) {
        if p.dim != 1 {
            return Ok(out);
        }
        let mut worst: f64 = 0.0;
        for n in 0..=6 {
            let state = Eigenstate::Line {
                model: line,
                state: line_state(config.model, p, n)?,
            };
            let r = residual_report(&state, state.energy(), p, 200, config.seed + u64::from(n))?;
            worst = worst.max(r.max);
        }
        out.push(CheckResult::new(
            format!("residual/{} n<=6", config.model),
            tol,
            worst,
        ));
    }
    if let Some(plane) = plane_model(config.model) {
        let mut worst: f64 = 0.0;
        for (i, qn) in planar_labels(config.model, &config.sectors())
            .into_iter()
            .enumerate()
        {
            let state = Eigenstate::Planar(eigenfunctions::build_radial_2d(plane, p, &qn)?);
            let r = residual_report(&state, state.energy(), p, 200, config.seed + i as u64)?;
            worst = worst.max(r.max);
        }
        out.push(CheckResult::new(
            format!("residual/{} k<=3", config.model),
            tol,
            worst,
        ));
    }
    Ok(out)
}

fn gram_offdiag(states: &[WavefunctionSpec]) -> Result<(f64, f64)> {
    let mut off: f64 = 0.0;
    let mut diag: f64 = 0.0;
    for (i, f) in states.iter().enumerate() {
        for (j, g) in states.iter().enumerate().skip(i) {
            let v = inner_product(f, g, f.weight)?;
            if i == j {
                diag = diag.max((v - 1.0).abs());
            } else {
                off = off.max(v.abs());
            }
        }
    }
    Ok((off, diag))
}

/// 10×10 Gram matrices under each family's own measure.
pub fn gram_checks(config: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let p = &config.params;
    let tol = config.tol(1e-8);
    let mut out = Vec::new();
    if line_model(config.model).is_some() && p.dim == 1 {
        let states = (0..10)
            .map(|n| line_state(config.model, p, n))
            .collect::<Result<Vec<_>>>()?;
        let (off, diag) = gram_offdiag(&states)?;
        out.push(CheckResult::new(
            format!("gram/{} off-diagonal", config.model),
            tol,
            off,
        ));
        out.push(CheckResult::new(
            format!("gram/{} diagonal", config.model),
            tol,
            diag,
        ));
    }
    if let Some(plane) = plane_model(config.model) {
        let sector_labels: Vec<Box<dyn Fn(u32) -> QuantumNumbers>> =
            if config.model == Model::DarbouxLandau {
                vec![Box::new(|k| QuantumNumbers::Landau { n: k, m: 1 })]
            } else {
                config
                    .sectors()
                    .into_iter()
                    .map(|e| {
                        let m = AngularIndex::from_doubled(if e == Sector::Plus { 2 } else { 1 });
                        Box::new(move |k| QuantumNumbers::angular(k, m, Branch::Plus))
                            as Box<dyn Fn(u32) -> QuantumNumbers>
                    })
                    .collect()
            };
        for label in sector_labels {
            let states = (0..10)
                .map(|k| eigenfunctions::build_radial_2d(plane, p, &label(k)).map(|s| s.radial))
                .collect::<Result<Vec<_>>>()?;
            let (off, _) = gram_offdiag(&states)?;
            out.push(CheckResult::new(
                format!("gram/{} radial {:?}", config.model, label(0)),
                tol,
                off,
            ));
        }
    }
    Ok(out)
}

/// Reductions between neighbouring models as λ, μ or ω_c vanish.
pub fn limit_checks(config: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let tol = config.tol(1e-12);
    let base = &config.params;
    let mut worst_lambda: f64 = 0.0;
    let mut worst_mu: f64 = 0.0;
    let mut worst_field: f64 = 0.0;
    if config.model.is_magnetic() {
        let p = base.clone();
        let flat = p.clone().with_lambda(0.0);
        let no_mu = ModelParams {
            mu: vec![0.0; 2],
            ..p.clone()
        };
        for k in 0..=4u32 {
            for (m_prime, branch) in dunkl_sectors(&[Sector::Plus, Sector::Minus], 8) {
                let a = spectra::spectrum_landau_dunkl_darboux_2d(&flat, k, m_prime, branch)?;
                let b = spectra::spectrum_landau_dunkl_2d(&flat, k, m_prime, branch)?;
                worst_lambda = worst_lambda.max(rel(a, b));
                if m_prime.sector() == Sector::Plus {
                    // σ = ±2m' plays the role of -m
                    let m = -(branch.sign() as i32) * m_prime.doubled() as i32;
                    let c = spectra::spectrum_landau_dunkl_darboux_2d(&no_mu, k, m_prime, branch)?;
                    let d = spectra::spectrum_landau_darboux_2d(&no_mu, k, m)?;
                    worst_mu = worst_mu.max(rel(c, d));
                }
            }
            for m in -4..=4 {
                let off = p.clone().with_omega_c(0.0);
                let e = spectra::spectrum_landau_darboux_2d(&off, k, m)?;
                let n_total = 2 * k + m.unsigned_abs();
                let nd = spectra::spectrum_darboux_nd(
                    &ModelParams::new(2)
                        .with_lambda(p.lambda)
                        .with_hbar(p.hbar)
                        .with_omega(p.omega),
                    n_total,
                );
                worst_field = worst_field.max(rel(e, nd));
            }
        }
    } else {
        let p = ModelParams {
            omega_c: 0.0,
            ..base.clone()
        };
        let flat = p.clone().with_lambda(0.0);
        let no_mu = ModelParams {
            mu: vec![0.0; p.dim],
            ..p.clone()
        };
        for n in 0..=20u32 {
            let mut idx = vec![0; p.dim];
            idx[0] = n;
            let a = spectra::spectrum_dunkl_darboux_nd(&flat, &idx)?;
            let b = spectra::spectrum_dunkl_nd(&flat, &idx)?;
            worst_lambda = worst_lambda.max(rel(a, b));
            let c = spectra::spectrum_dunkl_darboux_nd(&no_mu, &idx)?;
            let d = spectra::spectrum_darboux_nd(&no_mu, n);
            worst_mu = worst_mu.max(rel(c, d));
        }
    }
    let mut out = vec![
        CheckResult::new("limits/lambda->0", tol, worst_lambda),
        CheckResult::new("limits/mu->0", tol, worst_mu),
    ];
    if config.model.is_magnetic() {
        out.push(CheckResult::new(
            "limits/omega_c->0 (M = 2n+|m|+1)",
            tol,
            worst_field,
        ));
    }
    Ok(out)
}

/// Dense 𝒥 spectrum against σ_ε for m' ≤ 4 in each sector.
pub fn angular_checks(config: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let p = &config.params;
    let (mx, my) = (p.mu_x(), p.mu.get(1).copied().unwrap_or(p.mu_x()));
    let disc = discretize_angular_j(mx, my, 256)?;
    let tol = config.tol(1e-6);
    let mut out = Vec::new();
    for eps in config.sectors() {
        let values = disc.sector_eigenvalues(eps);
        let mut worst: f64 = 0.0;
        for (m_prime, branch) in dunkl_sectors(&[eps], 8) {
            let sigma = spectra::sigma_eigenvalue(mx, my, m_prime, eps, branch)?;
            worst = worst.max(nearest_distance(&values, sigma));
        }
        out.push(
            CheckResult::new(
                format!("angular/sigma eps={} m'<=4", eps.label()),
                tol,
                worst,
            )
            .with_detail(format!("mu=({mx}, {my}), grid 256, factor 2 in sigma")),
        );
    }
    out.push(CheckResult::new(
        "angular/R_xR_y block leak",
        config.tol(1e-10),
        disc.block_leak(),
    ));
    Ok(out)
}

/// `∂_θ` of `𝒥g/i`, used to apply 𝒥 twice. Second derivatives would need
/// `g'''` and are reported as NaN.
pub struct JApplied<'a> {
    pub inner: &'a dyn AngularFunction,
    pub mu_x: f64,
    pub mu_y: f64,
}

impl AngularFunction for JApplied<'_> {
    fn jet(&self, theta: f64) -> ComplexJet {
        let g = self.inner.jet(theta);
        let gy = self.inner.jet(-theta);
        let gx = self.inner.jet(std::f64::consts::PI - theta);
        let (s, c) = theta.sin_cos();
        let (cot, tan) = (c / s, s / c);
        let i = Complex64::i();
        let value =
            g.d1 + self.mu_y * cot * (g.value - gy.value) - self.mu_x * tan * (g.value - gx.value);
        let d1 = g.d2 + self.mu_y * (-(g.value - gy.value) / (s * s) + cot * (g.d1 + gy.d1))
            - self.mu_x * ((g.value - gx.value) / (c * c) + tan * (g.d1 + gx.d1));
        let nan = Complex64::new(f64::NAN, f64::NAN);
        ComplexJet::new(i * value, i * d1, nan)
    }
}

fn random_trig(rng: &mut ChaCha8Rng) -> TrigPolynomial {
    TrigPolynomial::new(
        (-4..=4)
            .map(|k| {
                (
                    k,
                    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                )
            })
            .collect(),
    )
}

fn off_axis_angle(rng: &mut ChaCha8Rng) -> f64 {
    let q: u32 = rng.random_range(0..4);
    f64::from(q) * std::f64::consts::FRAC_PI_2
        + rng.random_range(0.05..std::f64::consts::FRAC_PI_2 - 0.05)
}

/// `[x, P̂] = iħ(1 + 2μR)` and `𝒥² = H_θ + 2μ_xμ_y(1 - R_xR_y)` on 30 random
/// test functions, plus the Darboux III integrals of motion.
pub fn algebra_checks(config: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let p = &config.params;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mu = p.mu_x();
    let mut worst_comm: f64 = 0.0;
    for _ in 0..30 {
        let coeffs: Vec<f64> = (0..5).map(|_| rng.random_range(-1.0..1.0)).collect();
        let width: f64 = rng.random_range(0.3..1.5);
        let f = move |x: f64| {
            let v = Jet::variable(x);
            let mut poly = Jet::constant(0.0);
            for &c in coeffs.iter().rev() {
                poly = poly * v + Jet::constant(c);
            }
            poly * (v * v).scale(-width).exp()
        };
        let g = f.clone();
        let xf = move |x: f64| Jet::variable(x) * g(x);
        let (f, xf) = (FnJet::new(f), FnJet::new(xf));
        let x: f64 = rng.random_range(0.1..2.5) * if rng.random_bool(0.5) { 1.0 } else { -1.0 };
        use crate::operators::SmoothFunction1D;
        // x·Df - D(xf) = -(f + 2μ R f); multiply by -iħ for the momentum form
        let lhs = x * dunkl_derivative_1d(&f, mu, x)? - dunkl_derivative_1d(&xf, mu, x)?;
        let rhs = -(f.value_at(x) + 2.0 * mu * f.value_at(-x));
        worst_comm = worst_comm.max((lhs - rhs).abs() * p.hbar);
    }
    let (mx, my) = (p.mu_x(), p.mu.get(1).copied().unwrap_or(p.mu_x()));
    let mut worst_j: f64 = 0.0;
    for _ in 0..30 {
        let g = random_trig(&mut rng);
        let theta = off_axis_angle(&mut rng);
        let jg = JApplied {
            inner: &g,
            mu_x: mx,
            mu_y: my,
        };
        let jj = angular_operator_j(&jg, mx, my, theta)?;
        let h = angular_operator_htheta(&g, mx, my, theta)?;
        let shift = g.value_at(theta - std::f64::consts::PI);
        let rhs = h + 2.0 * mx * my * (g.value_at(theta) - shift);
        worst_j = worst_j.max((jj - rhs).norm());
    }
    let mut out = vec![
        CheckResult::new(
            "algebra/[x,P] = i hbar (1 + 2 mu R)",
            config.tol(1e-10),
            worst_comm,
        ),
        CheckResult::new(
            "algebra/J^2 = H_theta + 2 mu_x mu_y (1 - R_xR_y)",
            config.tol(1e-10),
            worst_j,
        ),
    ];
    if matches!(config.model, Model::Darboux | Model::DarbouxLandau) || p.dim == 2 {
        let planar = ModelParams::new(2)
            .with_lambda(p.lambda)
            .with_hbar(p.hbar)
            .with_omega(p.omega);
        let c = integral_commutator_residual(&planar, 30, 10)?;
        out.push(CheckResult::new(
            "algebra/[I_1, H] interior block",
            config.tol(1e-6),
            c,
        ));
    }
    Ok(out)
}

/// Implicit-equation root against the closed form for every level with
/// total index ≤ 20.
pub fn implicit_checks(config: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let p = &config.params;
    let levels = spectra::enumerate_levels(config.model, p, 20)?;
    let mut worst: f64 = 0.0;
    for level in &levels {
        let (mult, shift) = spectra::implicit_form(config.model, p, &level.quantum_numbers)?;
        let lambda = if config.model.uses_lambda() {
            p.lambda
        } else {
            0.0
        };
        let e = spectra::solve_implicit_shifted(p.hbar, p.omega_tilde(), lambda, mult, shift)?;
        worst = worst.max((e - level.energy).abs());
    }
    Ok(vec![CheckResult::new(
        format!("implicit/{} {} levels", config.model, levels.len()),
        config.tol(1e-11),
        worst,
    )])
}
