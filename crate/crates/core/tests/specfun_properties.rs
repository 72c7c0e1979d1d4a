use dunkl_darboux::oracle::quadrature::gauss_laguerre_bare;
use dunkl_darboux::specfun::*;
use proptest::prelude::*;
use statrs::function::gamma::ln_gamma;

fn binom(a: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (a - f64::from(j)) / f64::from(j + 1))
}

fn explicit_laguerre(n: u32, alpha: f64, u: f64) -> f64 {
    (0..=n)
        .map(|k| {
            let fact: f64 = (1..=k).map(f64::from).product();
            (-1.0f64).powi(k as i32) * binom(f64::from(n) + alpha, n - k) * u.powi(k as i32) / fact
        })
        .sum()
}

/// Sum and largest term magnitude.
fn explicit_jacobi(n: u32, a: f64, b: f64, x: f64) -> (f64, f64) {
    let nf = f64::from(n);
    let terms: Vec<f64> = (0..=n)
        .map(|s| {
            binom(nf + a, n - s)
                * binom(nf + b, s)
                * ((x - 1.0) / 2.0).powi(s as i32)
                * ((x + 1.0) / 2.0).powi((n - s) as i32)
        })
        .collect();
    (
        terms.iter().sum(),
        terms.iter().fold(1.0, |m, t| m.max(t.abs())),
    )
}

/// Explicit sum and the magnitude of its largest term.
fn explicit_hermite(n: u32, u: f64) -> (f64, f64) {
    (0..=n / 2)
        .map(|m| {
            let fm: f64 = (1..=m).map(f64::from).product();
            let fr: f64 = (1..=n - 2 * m).map(f64::from).product();
            let fn_: f64 = (1..=n).map(f64::from).product();
            (-1.0f64).powi(m as i32) * fn_ / (fm * fr) * (2.0 * u).powi((n - 2 * m) as i32)
        })
        .fold((0.0, 1.0), |(sum, scale), t| {
            (sum + t, f64::max(scale, t.abs()))
        })
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

#[test]
fn laguerre_orthogonality_under_its_weight() {
    for alpha in [-0.48, 0.0, 0.52, 1.5] {
        let (nodes, bare) = gauss_laguerre_bare(alpha, 20).unwrap();
        let w: Vec<f64> = nodes
            .iter()
            .zip(&bare)
            .map(|(u, l)| l * u.powf(alpha) * (-u).exp())
            .collect();
        for n in 0..=12u32 {
            let norm = (ln_gamma(f64::from(n) + alpha + 1.0) - ln_gamma(f64::from(n) + 1.0)).exp();
            for k in 0..=12u32 {
                let integral: f64 = nodes
                    .iter()
                    .zip(&w)
                    .map(|(&u, wi)| {
                        wi * eval_generalized_laguerre(n, alpha, u).unwrap()
                            * eval_generalized_laguerre(k, alpha, u).unwrap()
                    })
                    .sum();
                let expected = if n == k { norm } else { 0.0 };
                assert!(
                    (integral - expected).abs() < 1e-10 * norm,
                    "alpha {alpha} n {n} k {k}: {integral}"
                );
            }
        }
    }
}

#[test]
fn generalized_hermite_orthonormality() {
    for mu in [0.0, 0.02, 0.3] {
        for q in [0u8, 1] {
            // x = sqrt(u) folds the even integrand onto u^{μ-1/2} e^{-u} du
            let (nodes, bare) = gauss_laguerre_bare(mu - 0.5, 24).unwrap();
            for n in 0..=10u32 {
                for k in 0..=10u32 {
                    let direct: f64 = nodes
                        .iter()
                        .zip(&bare)
                        .map(|(&u, l)| {
                            let x = u.sqrt();
                            let h = |d| eval_generalized_hermite(d, mu, q, 1.0, x).unwrap();
                            l * (-u).exp() * x.powf(2.0 * mu) * h(n) * h(k) / u.sqrt()
                        })
                        .sum();
                    let expected = if n == k { 1.0 } else { 0.0 };
                    assert!(
                        (direct - expected).abs() < 1e-8,
                        "mu {mu} q {q} n {n} k {k}: {direct}"
                    );
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn jacobi_reflection_symmetry(
        n in 0u32..=20,
        a in -0.9f64..4.0,
        b in -0.9f64..4.0,
        x in -1.0f64..1.0,
    ) {
        let lhs = eval_jacobi(n, a, b, -x).unwrap();
        let rhs = if n % 2 == 0 { 1.0 } else { -1.0 } * eval_jacobi(n, b, a, x).unwrap();
        prop_assert!(close(lhs, rhs, 1e-12), "{lhs} vs {rhs}");
    }

    #[test]
    fn recurrences_match_explicit_sums(
        n in 0u32..=15,
        alpha in -0.9f64..3.0,
        beta in -0.9f64..3.0,
        u in 0.0f64..6.0,
        x in -1.0f64..1.0,
    ) {
        let l = eval_generalized_laguerre(n, alpha, u).unwrap();
        let le = explicit_laguerre(n, alpha, u);
        // explicit sums cancel badly; compare on the scale of their largest term
        let lscale: f64 = (0..=n).map(|k| {
            let fact: f64 = (1..=k).map(f64::from).product();
            (binom(f64::from(n) + alpha, n - k) * u.powi(k as i32) / fact).abs()
        }).fold(1.0, f64::max);
        prop_assert!((l - le).abs() <= 1e-12 * lscale, "laguerre {l} vs {le}");
        let j = eval_jacobi(n, alpha, beta, x).unwrap();
        let (je, jscale) = explicit_jacobi(n, alpha, beta, x);
        prop_assert!((j - je).abs() <= 1e-12 * jscale, "jacobi {j} vs {je}");
        let h = eval_hermite(n, x * 3.0);
        let (he, hscale) = explicit_hermite(n, x * 3.0);
        prop_assert!((h - he).abs() <= 1e-12 * hscale, "hermite {h} vs {he}");
    }
}
