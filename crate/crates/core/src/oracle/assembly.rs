//! Basis expansions of the deformed Hamiltonians as `A v = E S v`.
//!
//! The basis is the eigenbasis of the flat numerator Hamiltonian at the
//! reference frequency, so `A` is diagonal and every λ-dependence sits in
//! the mass matrix `S = ⟨φ_j|(1 + λr²)|φ_k⟩`, computed by quadrature.

use nalgebra::{Cholesky, DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use super::quadrature::{make_scaled_quadrature, InnerProductWeight, QuadratureRule};
use crate::error::{invalid, Error, Result};
use crate::model::{AngularIndex, Branch, ModelParams, Parity};
use crate::operators::{LineModel, PlaneModel};
use crate::specfun::laguerre_functions;
use crate::spectra;

/// Truncation guard band: eigenvalues within this many of the basis size
/// are never reported.
pub const GUARD_BAND: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedEigenproblem {
    /// Numerator Hamiltonian in the basis.
    pub stiffness: DMatrix<f64>,
    /// Darboux weight `1 + λr²` in the basis.
    pub mass: DMatrix<f64>,
    pub label: String,
    /// Physical index of each basis function (total oscillator index for
    /// line bases, radial index for radial bases).
    pub indices: Vec<u32>,
}

impl GeneralizedEigenproblem {
    pub fn size(&self) -> usize {
        self.stiffness.nrows()
    }

    /// Largest relative asymmetry of `A` and `S`.
    pub fn asymmetry(&self) -> f64 {
        let rel = |m: &DMatrix<f64>| {
            let scale = m.amax().max(f64::MIN_POSITIVE);
            (m - m.transpose()).amax() / scale
        };
        rel(&self.stiffness).max(rel(&self.mass))
    }
}

/// The `count` smallest eigenvalues of `A v = E S v`, ascending, via the
/// Cholesky factor `S = LLᵀ` and a symmetric eigensolve of `L⁻¹AL⁻ᵀ`.
pub fn solve_generalized(problem: &GeneralizedEigenproblem, count: usize) -> Result<Vec<f64>> {
    let n = problem.size();
    if problem.mass.nrows() != n || problem.mass.ncols() != n || problem.stiffness.ncols() != n {
        return Err(invalid(
            "stiffness and mass must be square and of equal size",
        ));
    }
    if count + GUARD_BAND > n {
        return Err(invalid(format!(
            "requested {count} eigenvalues from a basis of {n}; at most {} are reliable",
            n.saturating_sub(GUARD_BAND)
        )));
    }
    let chol = Cholesky::new(problem.mass.clone()).ok_or(Error::NotPositiveDefinite)?;
    let l = chol.l();
    let y = l
        .solve_lower_triangular(&problem.stiffness)
        .ok_or(Error::NotPositiveDefinite)?;
    let c = l
        .solve_lower_triangular(&y.transpose())
        .ok_or(Error::NotPositiveDefinite)?;
    let c = (&c + c.transpose()) * 0.5;
    let mut values: Vec<f64> = SymmetricEigen::new(c).eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values.truncate(count);
    Ok(values)
}

/// Orthonormal eigenfunctions of the flat 1D Dunkl oscillator under
/// `|x|^{2μ}dx`: `f_n(x) = β^{μ+1/2} sgn(x)^q u^{(1/2-μ)/2} φ_k^{(μ+q-1/2)}(u)`,
/// `u = β²x²`, `n = 2k + q`.
#[derive(Debug, Clone, PartialEq)]
pub struct LineBasis {
    pub mu: f64,
    pub beta: f64,
    pub indices: Vec<u32>,
}

impl LineBasis {
    pub fn new(mu: f64, beta: f64, size: usize, sector: Option<Parity>) -> Self {
        let indices = (0..size as u32)
            .map(|i| match sector {
                Some(p) => 2 * i + u32::from(p.q()),
                None => i,
            })
            .collect();
        Self { mu, beta, indices }
    }

    /// All basis functions at `x ≠ 0`.
    pub fn values(&self, x: f64) -> Result<Vec<f64>> {
        let u = self.beta * self.beta * x * x;
        let max_k = self.indices.iter().max().map_or(0, |n| n / 2) as usize + 1;
        let even = laguerre_functions(self.mu - 0.5, u, max_k)?;
        let odd = laguerre_functions(self.mu + 0.5, u, max_k)?;
        let pre = self.beta.powf(self.mu + 0.5) * u.powf(0.25 - 0.5 * self.mu);
        Ok(self
            .indices
            .iter()
            .map(|&n| {
                let k = (n / 2) as usize;
                if n % 2 == 0 {
                    pre * even[k]
                } else {
                    pre * x.signum() * odd[k]
                }
            })
            .collect())
    }
}

/// Orthonormal radial functions under `r^{1+2a}dr`:
/// `R_k(r) = sqrt(2) β^{1+a} u^{-a/2} φ_k^{(ν)}(u)`, `u = β²r²`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialBasis {
    pub a: f64,
    pub nu: f64,
    pub beta: f64,
    pub size: usize,
}

impl RadialBasis {
    pub fn values(&self, r: f64) -> Result<Vec<f64>> {
        let u = self.beta * self.beta * r * r;
        let pre = std::f64::consts::SQRT_2 * self.beta.powf(1.0 + self.a) * u.powf(-0.5 * self.a);
        Ok(laguerre_functions(self.nu, u, self.size)?
            .into_iter()
            .map(|p| pre * p)
            .collect())
    }
}

/// `M_jk = Σ_i w_i b_j(x_i) b_k(x_i)`.
fn gram(
    rule: &QuadratureRule,
    size: usize,
    values: impl Fn(f64) -> Result<Vec<f64>>,
) -> Result<DMatrix<f64>> {
    let mut m = DMatrix::<f64>::zeros(size, size);
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let v = values(x)?;
        for j in 0..size {
            let wj = w * v[j];
            for k in j..size {
                m[(j, k)] += wj * v[k];
            }
        }
    }
    for j in 0..size {
        for k in 0..j {
            m[(j, k)] = m[(k, j)];
        }
    }
    Ok(m)
}

/// Matrix of `x²` (or `r²`) in the basis, by quadrature of the bare measure.
pub fn position_squared_1d(basis: &LineBasis) -> Result<DMatrix<f64>> {
    let rule = make_scaled_quadrature(
        InnerProductWeight::DunklLine { mu: basis.mu },
        basis.indices.len() + 8,
        basis.beta,
    )?;
    let size = basis.indices.len();
    let weighted = QuadratureRule {
        weights: rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(x, w)| w * x * x)
            .collect(),
        ..rule
    };
    gram(&weighted, size, |x| basis.values(x))
}

fn line_flavour(model: LineModel, params: &ModelParams) -> (f64, f64) {
    match model {
        LineModel::DarbouxIII => (0.0, params.lambda),
        LineModel::Dunkl => (params.mu_x(), 0.0),
        LineModel::DunklDarbouxIII => (params.mu_x(), params.lambda),
    }
}

/// One-dimensional problem in the flat Dunkl eigenbasis at frequency ω:
/// `A = diag ħω(n+μ+1/2)`, `S = ⟨f_j|1+λx²|f_k⟩`. A parity sector keeps only
/// indices of that parity; `None` keeps both, ordered by `n`.
pub fn assemble_1d(
    model: LineModel,
    params: &ModelParams,
    basis_size: usize,
    sector: Option<Parity>,
) -> Result<GeneralizedEigenproblem> {
    params.validate()?;
    if basis_size < 16 {
        return Err(invalid(format!(
            "basis_size must be at least 16, got {basis_size}"
        )));
    }
    let (mu, lambda) = line_flavour(model, params);
    let beta = (params.omega / params.hbar).sqrt();
    let basis = LineBasis::new(mu, beta, basis_size, sector);
    let weight = InnerProductWeight::DunklDarbouxLine { lambda, mu };
    let rule = make_scaled_quadrature(weight, basis_size + 8, beta)?;
    let mass = gram(&rule, basis_size, |x| basis.values(x))?;
    let stiffness = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        basis_size,
        basis
            .indices
            .iter()
            .map(|&n| params.hbar * params.omega * (f64::from(n) + mu + 0.5)),
    ));
    Ok(GeneralizedEigenproblem {
        stiffness,
        mass,
        label: format!("{model:?} line, sector {sector:?}"),
        indices: basis.indices,
    })
}

/// Radial problem in the Laguerre basis with exponent `a`, Laguerre
/// parameter `ν`, reference frequency `freq` and diagonal shift:
/// `A = diag(ħ·freq·(2k+ν+1) + shift)`, `S = ⟨R_j|1+λr²|R_k⟩`.
pub fn assemble_radial(
    hbar: f64,
    freq: f64,
    lambda: f64,
    a: f64,
    nu: f64,
    shift: f64,
    basis_size: usize,
) -> Result<GeneralizedEigenproblem> {
    if basis_size < 16 {
        return Err(invalid(format!(
            "basis_size must be at least 16, got {basis_size}"
        )));
    }
    if !(nu > -1.0) {
        return Err(invalid(format!(
            "Laguerre parameter must exceed -1, got {nu}"
        )));
    }
    let beta = (freq / hbar).sqrt();
    let basis = RadialBasis {
        a,
        nu,
        beta,
        size: basis_size,
    };
    let weight = InnerProductWeight::Radial2D {
        lambda,
        mu_x: a,
        mu_y: 0.0,
    };
    let extra = (nu - a).max(0.0).ceil() as usize;
    let rule = make_scaled_quadrature(weight, basis_size + extra + 8, beta)?;
    let mass = gram(&rule, basis_size, |r| basis.values(r))?;
    let stiffness = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        basis_size,
        (0..basis_size).map(|k| hbar * freq * (2.0 * k as f64 + nu + 1.0) + shift),
    ));
    Ok(GeneralizedEigenproblem {
        stiffness,
        mass,
        label: format!("radial a={a} nu={nu} shift={shift}"),
        indices: (0..basis_size as u32).collect(),
    })
}

/// Angular sector of a planar problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PlaneSector {
    /// Angular momentum `m` of the Darboux III family.
    Landau { m: i32 },
    /// `(m', branch)` of the Dunkl families; ε follows from m'.
    Dunkl {
        m_prime: AngularIndex,
        branch: Branch,
    },
}

/// Planar problem for one angular sector. The radial index `k` of the
/// returned eigenvalues is `0, 1, 2, …`.
pub fn assemble_2d(
    model: PlaneModel,
    params: &ModelParams,
    basis_size: usize,
    sector: PlaneSector,
) -> Result<GeneralizedEigenproblem> {
    params.validate()?;
    if params.dim != 2 {
        return Err(invalid("planar problems need dim = 2"));
    }
    let hbar = params.hbar;
    let freq = params.omega_tilde();
    let lambda = if model == PlaneModel::DunklField {
        0.0
    } else {
        params.lambda
    };
    match (model, sector) {
        (PlaneModel::DarbouxIIIField, PlaneSector::Landau { m }) => {
            let nu = f64::from(m.unsigned_abs());
            let shift = -hbar * params.omega_c * f64::from(m);
            assemble_radial(hbar, freq, lambda, 0.0, nu, shift, basis_size)
        }
        (
            PlaneModel::DunklField | PlaneModel::DunklDarbouxIIIField,
            PlaneSector::Dunkl { m_prime, branch },
        ) => {
            let (mx, my) = (params.mu_x(), params.mu_y());
            let eps = m_prime.sector();
            let sigma = spectra::sigma_eigenvalue(mx, my, m_prime, eps, branch)?;
            let nu = spectra::radial_laguerre_parameter(mx, my, sigma, eps);
            let shift = hbar * params.omega_c * sigma;
            assemble_radial(hbar, freq, lambda, mx + my, nu, shift, basis_size)
        }
        _ => Err(invalid(format!(
            "sector {sector:?} does not belong to {model:?}"
        ))),
    }
}

/// N-dimensional radial problem for hyperspherical degree `l`; levels are
/// `n = 2k + l`. With μ = 0 this is the Darboux III oscillator.
pub fn assemble_radial_nd(
    params: &ModelParams,
    l: u32,
    basis_size: usize,
) -> Result<GeneralizedEigenproblem> {
    params.validate()?;
    if params.omega_c != 0.0 {
        return Err(invalid("the N-dimensional problem takes no field"));
    }
    let a = params.dim as f64 / 2.0 - 1.0 + params.mu_sum();
    assemble_radial(
        params.hbar,
        params.omega,
        params.lambda,
        a,
        f64::from(l) + a,
        0.0,
        basis_size,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_problem() {
        let p = GeneralizedEigenproblem {
            stiffness: DMatrix::from_diagonal(&nalgebra::DVector::from_vec(
                (1..=13).map(f64::from).collect(),
            )),
            mass: DMatrix::identity(13, 13),
            label: "diag".into(),
            indices: (0..13).collect(),
        };
        assert_eq!(solve_generalized(&p, 3).unwrap(), vec![1.0, 2.0, 3.0]);
        assert!(solve_generalized(&p, 4).is_err());
        let scaled = GeneralizedEigenproblem {
            mass: DMatrix::identity(13, 13) * 4.0,
            ..p.clone()
        };
        let v = solve_generalized(&scaled, 3).unwrap();
        assert!((v[2] - 0.75).abs() < 1e-15);
        let bad = GeneralizedEigenproblem {
            mass: -DMatrix::identity(13, 13),
            ..p
        };
        assert!(matches!(
            solve_generalized(&bad, 1),
            Err(Error::NotPositiveDefinite)
        ));
    }

    #[test]
    fn flat_line_problem_has_identity_mass() {
        let p = ModelParams::new(1).with_uniform_mu(0.3);
        let prob = assemble_1d(LineModel::Dunkl, &p, 24, None).unwrap();
        assert!((prob.mass.clone() - DMatrix::identity(24, 24)).amax() < 1e-12);
        let v = solve_generalized(&prob, 7).unwrap();
        assert!((v[3] - 3.8).abs() < 1e-12);
    }

    #[test]
    fn hermite_x_squared_matches_the_ladder_formula() {
        let basis = LineBasis::new(0.0, 1.0, 20, None);
        let x2 = position_squared_1d(&basis).unwrap();
        for n in 0..18usize {
            let nf = n as f64;
            assert!((x2[(n, n)] - (nf + 0.5)).abs() < 1e-12);
            assert!((x2[(n, n + 2)].abs() - 0.5 * ((nf + 1.0) * (nf + 2.0)).sqrt()).abs() < 1e-12);
            assert!(x2[(n, n + 1)].abs() < 1e-12);
        }
    }
}

#[cfg(test)]
mod agreement {
    use super::*;

    #[test]
    fn darboux_line_oracle() {
        for lambda in [0.02, 0.06] {
            let p = ModelParams::new(1).with_lambda(lambda);
            for parity in [Parity::Even, Parity::Odd] {
                let prob = assemble_1d(LineModel::DarbouxIII, &p, 64, Some(parity)).unwrap();
                let v = solve_generalized(&prob, 3).unwrap();
                for (k, e) in v.iter().enumerate() {
                    let exact = spectra::spectrum_darboux_nd(&p, prob.indices[k]);
                    assert!(
                        ((e - exact) / exact).abs() < 1e-10,
                        "{lambda} {parity:?} {k}: {e} vs {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn planar_dunkl_darboux_oracle() {
        let p = ModelParams::new(2)
            .with_uniform_mu(0.02)
            .with_lambda(0.02)
            .with_omega_c(0.1);
        for doubled in [1u32, 2, 3] {
            for branch in [Branch::Plus, Branch::Minus] {
                let m_prime = AngularIndex::from_doubled(doubled);
                let prob = assemble_2d(
                    PlaneModel::DunklDarbouxIIIField,
                    &p,
                    96,
                    PlaneSector::Dunkl { m_prime, branch },
                )
                .unwrap();
                let v = solve_generalized(&prob, 4).unwrap();
                for (k, e) in v.iter().enumerate() {
                    let exact =
                        spectra::spectrum_landau_dunkl_darboux_2d(&p, k as u32, m_prime, branch)
                            .unwrap();
                    assert!(
                        ((e - exact) / exact).abs() < 1e-9,
                        "{doubled} {branch:?} {k}: {e} vs {exact}"
                    );
                }
            }
        }
    }
}
