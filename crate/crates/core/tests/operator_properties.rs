use std::f64::consts::{FRAC_PI_2, PI};

use dunkl_darboux::jet::Jet;
use dunkl_darboux::operators::*;
use dunkl_darboux::{ModelParams, Parity};
use num_complex::Complex64;
use proptest::prelude::*;

fn poly_gauss(coeffs: Vec<f64>, width: f64) -> impl Fn(f64) -> Jet + Clone {
    move |x| {
        let v = Jet::variable(x);
        let p = coeffs
            .iter()
            .rev()
            .fold(Jet::constant(0.0), |acc, &c| acc * v + Jet::constant(c));
        p * (v * v).scale(-width).exp()
    }
}

/// Even or odd part of a polynomial, times a Gaussian.
fn definite_parity(coeffs: &[f64], parity: Parity) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == parity.q() as usize { c } else { 0.0 })
        .collect()
}

fn trig(coeffs: &[(f64, f64)]) -> TrigPolynomial {
    TrigPolynomial::new(
        coeffs
            .iter()
            .enumerate()
            .map(|(i, &(re, im))| (i as i32 - 4, Complex64::new(re, im)))
            .collect(),
    )
}

fn off_axis(quadrant: u32, t: f64) -> f64 {
    f64::from(quadrant) * FRAC_PI_2 + t
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn position_momentum_commutator(
        coeffs in prop::collection::vec(-1.0f64..1.0, 5),
        width in 0.3f64..1.5,
        mu in 0.0f64..1.0,
        x in 0.05f64..3.0,
        flip in any::<bool>(),
        hbar in 0.5f64..2.0,
    ) {
        let x = if flip { -x } else { x };
        let f = poly_gauss(coeffs, width);
        let g = f.clone();
        let xf = FnJet::new(move |t: f64| Jet::variable(t) * g(t));
        let f = FnJet::new(f);
        // with P = -iħD: (xP - Px) f = -iħ (x Df - D(xf)), compared with iħ(f + 2μRf)
        let lhs = -hbar * (x * dunkl_derivative_1d(&f, mu, x).unwrap() - dunkl_derivative_1d(&xf, mu, x).unwrap());
        let rhs = hbar * (f.value_at(x) + 2.0 * mu * f.value_at(-x));
        prop_assert!((lhs - rhs).abs() < 1e-10, "{lhs} vs {rhs}");
    }

    #[test]
    fn dunkl_hamiltonian_preserves_parity(
        coeffs in prop::collection::vec(-1.0f64..1.0, 6),
        width in 0.3f64..1.5,
        mu in 0.0f64..1.0,
        lambda in 0.0f64..0.1,
        x in 0.05f64..3.0,
        odd in any::<bool>(),
    ) {
        let parity = if odd { Parity::Odd } else { Parity::Even };
        let f = FnJet::with_parity(poly_gauss(definite_parity(&coeffs, parity), width), parity);
        let params = ModelParams::new(1).with_mu(&[mu]).with_lambda(lambda);
        for model in [LineModel::Dunkl, LineModel::DunklDarbouxIII] {
            let plus = apply_hamiltonian_1d(model, &params, &f, x).unwrap();
            let minus = apply_hamiltonian_1d(model, &params, &f, -x).unwrap();
            prop_assert!((minus - parity.sign() * plus).abs() <= 1e-12 * plus.abs().max(1.0));
        }
    }

    #[test]
    fn zero_mu_is_the_plain_derivative(
        coeffs in prop::collection::vec(-1.0f64..1.0, 5),
        width in 0.3f64..1.5,
        x in -3.0f64..3.0,
    ) {
        let f = FnJet::new(poly_gauss(coeffs, width));
        prop_assert_eq!(dunkl_derivative_1d(&f, 0.0, x).unwrap(), f.jet(x).d1);
        prop_assert_eq!(dunkl_laplacian_1d(&f, 0.0, x).unwrap(), f.jet(x).d2);
    }

    #[test]
    fn angular_operator_commutes_with_the_double_reflection(
        coeffs in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 9),
        mu_x in 0.0f64..1.0,
        mu_y in 0.0f64..1.0,
        quadrant in 0u32..4,
        t in 0.05f64..(FRAC_PI_2 - 0.05),
    ) {
        let theta = off_axis(quadrant, t);
        let g = trig(&coeffs);
        // g(θ - π) has Fourier coefficients c_k (-1)^k
        let shifted: Vec<(f64, f64)> = coeffs
            .iter()
            .enumerate()
            .map(|(i, &(re, im))| if (i as i32 - 4) % 2 == 0 { (re, im) } else { (-re, -im) })
            .collect();
        let lhs = angular_operator_j(&trig(&shifted), mu_x, mu_y, theta).unwrap();
        let rhs = angular_operator_j(&g, mu_x, mu_y, theta - PI).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-10, "{lhs} vs {rhs}");
    }
}
