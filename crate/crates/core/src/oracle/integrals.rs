//! Commutators of the planar Darboux III integrals of motion with the
//! Hamiltonian on truncated Hermite-product matrices.
//!
//! With `A_i = (p_i² + ω²q_i²)/2`, `S = 1 + λ(q_1² + q_2²)` and `T = S⁻¹`,
//! the Hamiltonian is `H = T(A_1 + A_2)` and `I_i = 2A_i - 2λ q_i² H`.

use nalgebra::DMatrix;

use super::assembly::{position_squared_1d, LineBasis};
use crate::error::{invalid, Error, Result};
use crate::model::ModelParams;

fn kron(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    let (n, m) = (a.nrows(), b.nrows());
    DMatrix::from_fn(n * m, n * m, |i, j| a[(i / m, j / m)] * b[(i % m, j % m)])
}

/// Largest entry of `[I_1, H]` over the block of basis pairs whose per-axis
/// indices are all below `size - margin`. `params` must be planar and flat
/// in μ; the basis is `size × size` Hermite functions at frequency ω.
pub fn integral_commutator_residual(
    params: &ModelParams,
    size: usize,
    margin: usize,
) -> Result<f64> {
    params.validate()?;
    if params.dim != 2 || params.mu_sum() != 0.0 || params.omega_c != 0.0 {
        return Err(invalid(
            "the commutator check is for the planar Darboux III oscillator",
        ));
    }
    if margin >= size {
        return Err(invalid("margin must be smaller than the basis size"));
    }
    let beta = (params.omega / params.hbar).sqrt();
    // a slightly larger basis makes q² exact on the retained block
    let wide = LineBasis::new(0.0, beta, size + 2, None);
    let q2 = position_squared_1d(&wide)?
        .view((0, 0), (size, size))
        .into_owned();
    let a1 = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        size,
        (0..size).map(|n| params.hbar * params.omega * (n as f64 + 0.5)),
    ));
    let id = DMatrix::<f64>::identity(size, size);
    let q1s = kron(&q2, &id);
    let q2s = kron(&id, &q2);
    let a1s = kron(&a1, &id);
    let a = &a1s + kron(&id, &a1);
    let s = DMatrix::identity(size * size, size * size) + (&q1s + &q2s) * params.lambda;
    let t = s.try_inverse().ok_or(Error::NotPositiveDefinite)?;
    let h = &t * &a;
    let i1 = &a1s * 2.0 - &q1s * &h * (2.0 * params.lambda);
    let c = &i1 * &h - &h * &i1;
    let keep = size - margin;
    let mut worst: f64 = 0.0;
    for i in 0..size * size {
        if i / size >= keep || i % size >= keep {
            continue;
        }
        for j in 0..size * size {
            if j / size >= keep || j % size >= keep {
                continue;
            }
            worst = worst.max(c[(i, j)].abs());
        }
    }
    Ok(worst)
}
