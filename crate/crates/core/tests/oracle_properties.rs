use dunkl_darboux::oracle::assembly::LineBasis;
use dunkl_darboux::oracle::*;
use dunkl_darboux::*;
use nalgebra::DMatrix;
use proptest::prelude::*;

#[test]
fn eigenvalues_decrease_as_the_basis_grows() {
    for lambda in [0.02, 0.06, 0.2] {
        let p = ModelParams::new(1).with_lambda(lambda);
        for parity in [Parity::Even, Parity::Odd] {
            let mut previous: Option<Vec<f64>> = None;
            for size in [16, 20, 24, 32, 48] {
                let values = solve_generalized(
                    &assemble_1d(LineModel::DarbouxIII, &p, size, Some(parity)).unwrap(),
                    6,
                )
                .unwrap();
                if let Some(prev) = &previous {
                    for (a, b) in values.iter().zip(prev) {
                        assert!(*a <= b + 1e-12, "lambda {lambda} size {size}: {a} > {b}");
                    }
                }
                previous = Some(values);
            }
        }
    }
}

#[test]
fn mass_matrices_are_stable_under_finer_quadrature() {
    for (mu, lambda) in [(0.0, 0.06), (0.02, 0.02), (0.3, 0.1)] {
        let p = ModelParams::new(1).with_lambda(lambda).with_mu(&[mu]);
        let size = 40;
        let prob = assemble_1d(LineModel::DunklDarbouxIII, &p, size, None).unwrap();
        let basis = LineBasis::new(mu, 1.0, size, None);
        let rule = make_scaled_quadrature(
            InnerProductWeight::DunklDarbouxLine { lambda, mu },
            2 * (size + 8),
            1.0,
        )
        .unwrap();
        let mut fine = DMatrix::<f64>::zeros(size, size);
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            let v = basis.values(x).unwrap();
            fine += DMatrix::from_fn(size, size, |j, k| w * v[j] * v[k]);
        }
        let diff = (&prob.mass - &fine).amax();
        assert!(diff < 1e-11, "mu {mu} lambda {lambda}: {diff:e}");
    }
}

#[test]
fn angular_spectrum_is_grid_independent() {
    for (mx, my) in [(0.02, 0.02), (0.05, 0.1), (0.1, 0.4)] {
        let coarse = discretize_angular_j(mx, my, 128).unwrap();
        let fine = discretize_angular_j(mx, my, 256).unwrap();
        for eps in [Sector::Plus, Sector::Minus] {
            let a = coarse.sector_eigenvalues(eps);
            let b = fine.sector_eigenvalues(eps);
            for v in a.iter().take(9) {
                assert!(
                    nearest_distance(&b, *v) < 1e-8,
                    "mu ({mx}, {my}) eps {eps:?}: {v}"
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn line_oracle_matches_closed_forms(
        lambda in 0.0f64..0.1,
        mu in 0.0f64..0.8,
        hbar in 0.5f64..2.0,
        omega in 0.5f64..2.0,
    ) {
        let p = ModelParams::new(1).with_lambda(lambda).with_mu(&[mu]).with_hbar(hbar).with_omega(omega);
        for parity in [Parity::Even, Parity::Odd] {
            let prob = assemble_1d(LineModel::DunklDarbouxIII, &p, 96, Some(parity)).unwrap();
            for (e, &n) in solve_generalized(&prob, 3).unwrap().iter().zip(&prob.indices) {
                let exact = level_energy(Model::DunklDarboux, &p, &QuantumNumbers::cartesian(&[n])).unwrap();
                prop_assert!((e - exact).abs() < 1e-8 * exact.max(1.0), "{e} vs {exact}");
            }
        }
    }

    #[test]
    fn planar_oracle_matches_closed_forms(
        lambda in 0.0f64..0.06,
        mu_x in 0.0f64..0.5,
        mu_y in 0.0f64..0.5,
        omega_c in 0.0f64..0.4,
        doubled in 0u32..6,
        minus in any::<bool>(),
    ) {
        let p = ModelParams::new(2).with_lambda(lambda).with_mu(&[mu_x, mu_y]).with_omega_c(omega_c);
        let m_prime = AngularIndex::from_doubled(doubled);
        let branch = if minus && doubled > 0 { Branch::Minus } else { Branch::Plus };
        let prob = assemble_2d(PlaneModel::DunklDarbouxIIIField, &p, 64, PlaneSector::Dunkl { m_prime, branch }).unwrap();
        for (k, e) in solve_generalized(&prob, 4).unwrap().into_iter().enumerate() {
            let exact = spectrum_landau_dunkl_darboux_2d(&p, k as u32, m_prime, branch).unwrap();
            prop_assert!((e - exact).abs() < 1e-7 * exact.abs().max(1.0), "{e} vs {exact}");
        }
    }
}
