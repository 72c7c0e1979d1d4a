//! CSV and JSON emitters.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use dunkl_darboux::{LevelRecord, QuantumNumbers};
use serde::{Deserialize, Serialize};

pub const LEVEL_HEADER: &str =
    "model,N,lambda,mu_x,mu_y,omega,omega_c,hbar,sector,branch,n,m,mprime,energy,Omega";

/// 17 significant digits, enough to round-trip any double.
pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn level_row(record: &LevelRecord) -> String {
    let p = &record.params;
    let mut row = String::new();
    let mu_y = if p.dim >= 2 {
        float(p.mu_y())
    } else {
        String::new()
    };
    write!(
        row,
        "{},{},{},{},{},{},{},{},",
        record.model,
        p.dim,
        float(p.lambda),
        float(p.mu_x()),
        mu_y,
        float(p.omega),
        float(p.omega_c),
        float(p.hbar)
    )
    .unwrap();
    let (sector, branch, n, m, mprime) = match &record.quantum_numbers {
        QuantumNumbers::Cartesian { n } => {
            let joined = n.iter().map(u32::to_string).collect::<Vec<_>>().join(";");
            (
                String::new(),
                String::new(),
                joined,
                String::new(),
                String::new(),
            )
        }
        QuantumNumbers::Landau { n, m } => (
            String::new(),
            String::new(),
            n.to_string(),
            m.to_string(),
            String::new(),
        ),
        QuantumNumbers::Angular { k, m_prime, branch } => (
            m_prime.sector().label().to_string(),
            branch.label().to_string(),
            k.to_string(),
            String::new(),
            m_prime.to_string(),
        ),
    };
    write!(
        row,
        "{sector},{branch},{n},{m},{mprime},{},{}",
        float(record.energy),
        float(record.frequency)
    )
    .unwrap();
    row
}

/// One row of a parameter sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub sweep: String,
    pub value: f64,
    pub level: LevelRecord,
}

pub fn levels_csv(records: &[LevelRecord]) -> String {
    let mut out = String::from(LEVEL_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&level_row(r));
        out.push('\n');
    }
    out
}

pub fn sweep_csv(records: &[SweepRecord]) -> String {
    let mut out = format!("sweep,value,{LEVEL_HEADER}\n");
    for r in records {
        writeln!(
            out,
            "{},{},{}",
            r.sweep,
            float(r.value),
            level_row(&r.level)
        )
        .unwrap();
    }
    out
}

/// Writes to `path`, or to stdout when absent.
pub fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dunkl_darboux::{enumerate_levels, Model, ModelParams};

    #[test]
    fn rows_have_one_field_per_column() {
        let columns = LEVEL_HEADER.split(',').count();
        for (model, p) in [
            (Model::Darboux, ModelParams::new(3).with_lambda(0.02)),
            (Model::DarbouxLandau, ModelParams::new(2).with_omega_c(0.1)),
            (
                Model::DunklLandau,
                ModelParams::new(2).with_uniform_mu(0.02),
            ),
        ] {
            for level in enumerate_levels(model, &p, 3).unwrap() {
                assert_eq!(level_row(&level).split(',').count(), columns);
            }
        }
    }

    #[test]
    fn floats_round_trip() {
        for x in [0.1, 1.0 / 3.0, 6.02e23, -2.5e-300, 0.0] {
            assert_eq!(float(x).parse::<f64>().unwrap(), x);
        }
    }
}
