//! Browser bindings for the level-diagram, wavefunction and curvature views.
//!
//! Every export returns a JSON string; the page in `www/` draws it on a canvas.

use std::collections::BTreeMap;

use dunkl_darboux::oracle::line_state;
use dunkl_darboux::{
    enumerate_levels, metric_factor, scalar_curvature, Model, ModelParams, QuantumNumbers,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Errors reach JavaScript as thrown strings.
type Out = Result<String, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn grid(start: f64, end: f64, points: u32) -> Vec<f64> {
    let n = points.max(2);
    (0..n)
        .map(|i| start + (end - start) * f64::from(i) / f64::from(n - 1))
        .collect()
}

/// Cartesian levels are grouped by total index since they are degenerate.
fn label(qn: &QuantumNumbers) -> String {
    match qn {
        QuantumNumbers::Cartesian { n } => format!("M={}", n.iter().sum::<u32>()),
        QuantumNumbers::Landau { n, m } => format!("n={n}, m={m}"),
        QuantumNumbers::Angular { k, m_prime, branch } => {
            format!("k={k}, m'={m_prime}, {}", branch.label())
        }
    }
}

fn base_params(model: Model, dim: usize, lambda: f64, mu_x: f64, mu_y: f64) -> ModelParams {
    let mut p = ModelParams::new(if model.is_magnetic() { 2 } else { dim.max(1) });
    if model.uses_lambda() {
        p = p.with_lambda(lambda);
    }
    if model.uses_mu() {
        let mut mu = vec![mu_x; p.dim];
        if p.dim > 1 {
            mu[1] = mu_y;
        }
        p = p.with_mu(&mu);
    }
    p
}

/// Energies of every level up to `max_index` oscillator quanta while
/// `sweep` ("lambda" or "B", with ω_c = B/2) runs over `[start, end]`.
/// Levels that have no bound state at some sweep value are `null` there.
#[allow(clippy::too_many_arguments)]
#[wasm_bindgen]
pub fn level_diagram(
    model: &str,
    dim: u32,
    sweep: &str,
    start: f64,
    end: f64,
    steps: u32,
    lambda: f64,
    mu_x: f64,
    mu_y: f64,
    field: f64,
    max_index: u32,
) -> Out {
    let model: Model = model.parse().map_err(err)?;
    if sweep == "lambda" && !model.uses_lambda() {
        return Err(err(format!("{model} has no curvature to sweep")));
    }
    let values = grid(start, end, steps);
    let mut series: BTreeMap<String, Vec<Option<f64>>> = BTreeMap::new();
    for (i, &v) in values.iter().enumerate() {
        let mut p = base_params(model, dim as usize, lambda, mu_x, mu_y);
        match sweep {
            "lambda" => p.lambda = v,
            "B" => p.omega_c = v / 2.0,
            other => return Err(err(format!("unknown sweep '{other}'"))),
        }
        if sweep != "B" && model.is_magnetic() {
            p.omega_c = field / 2.0;
        }
        p.validate_for(model).map_err(err)?;
        for level in enumerate_levels(model, &p, i64::from(max_index)).map_err(err)? {
            let slot = series
                .entry(label(&level.quantum_numbers))
                .or_insert_with(|| vec![None; values.len()]);
            slot[i] = Some(level.energy);
        }
    }
    let series: Vec<Value> = series
        .into_iter()
        .map(|(label, energies)| json!({ "label": label, "energies": energies }))
        .collect();
    Ok(
        json!({ "model": model.id(), "sweep": sweep, "values": values, "series": series })
            .to_string(),
    )
}

/// ψ_n(x) of a line model on `[-x_max, x_max]`, normalised under its own
/// inner product.
#[wasm_bindgen]
pub fn wavefunction_profile(
    model: &str,
    n: u32,
    lambda: f64,
    mu: f64,
    x_max: f64,
    points: u32,
) -> Out {
    let model: Model = model.parse().map_err(err)?;
    let p = base_params(model, 1, lambda, mu, 0.0);
    let state = line_state(model, &p, n).map_err(err)?;
    let xs = grid(-x_max, x_max, points);
    let psi: Vec<f64> = xs.iter().map(|&x| state.eval(x)).collect();
    Ok(
        json!({ "x": xs, "psi": psi, "energy": state.energy, "frequency": state.frequency })
            .to_string(),
    )
}

/// Metric factor and scalar curvature of the Darboux III space against r² on `[0, r_sq_max]`.
#[wasm_bindgen]
pub fn curvature_profile(dim: u32, lambda: f64, r_sq_max: f64, points: u32) -> Out {
    let p = ModelParams::new(dim.max(1) as usize).with_lambda(lambda);
    p.validate().map_err(err)?;
    let xs = grid(0.0, r_sq_max, points);
    let metric = xs
        .iter()
        .map(|&x| metric_factor(&p, x))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let curvature = xs
        .iter()
        .map(|&x| scalar_curvature(&p, x))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    Ok(json!({ "x_sq": xs, "metric": metric, "curvature": curvature }).to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: Out) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn flat_diagram_is_integer() {
        let v = parse(level_diagram(
            "darboux", 2, "lambda", 0.0, 0.1, 3, 0.0, 0.0, 0.0, 0.0, 2,
        ));
        assert_eq!(v["values"].as_array().unwrap().len(), 3);
        let first: Vec<f64> = v["series"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s["energies"][0].as_f64().unwrap())
            .collect();
        assert_eq!(first, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn field_sweep_has_every_label() {
        let v = parse(level_diagram(
            "dunkl-darboux-landau",
            2,
            "B",
            0.0,
            0.4,
            5,
            0.02,
            0.02,
            0.3,
            0.0,
            3,
        ));
        for s in v["series"].as_array().unwrap() {
            assert_eq!(s["energies"].as_array().unwrap().len(), 5);
        }
    }

    #[test]
    fn flat_models_reject_lambda_sweep() {
        assert!(level_diagram("dunkl", 1, "lambda", 0.0, 0.1, 3, 0.0, 0.3, 0.0, 0.0, 2).is_err());
    }

    #[test]
    fn profiles_have_requested_length() {
        let v = parse(wavefunction_profile(
            "dunkl-darboux",
            3,
            0.05,
            0.3,
            4.0,
            101,
        ));
        assert_eq!(v["psi"].as_array().unwrap().len(), 101);
        assert!(v["psi"][50].as_f64().unwrap().abs() < 1e-12);
        let v = parse(curvature_profile(2, 0.02, 4.0, 5));
        assert!((v["curvature"][0].as_f64().unwrap() + 0.08).abs() < 1e-15);
    }
}
