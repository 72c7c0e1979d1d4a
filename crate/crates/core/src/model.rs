//! Model identifiers, physical parameters and level labels.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

/// The six Hamiltonian families. The Cartesian ones work in any dimension;
/// the `*Landau` ones are planar and carry the Larmor coupling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    Darboux,
    Dunkl,
    DunklDarboux,
    DarbouxLandau,
    DunklLandau,
    DunklDarbouxLandau,
}

impl Model {
    pub const ALL: [Model; 6] = [
        Model::Darboux,
        Model::Dunkl,
        Model::DunklDarboux,
        Model::DarbouxLandau,
        Model::DunklLandau,
        Model::DunklDarbouxLandau,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Model::Darboux => "darboux",
            Model::Dunkl => "dunkl",
            Model::DunklDarboux => "dunkl-darboux",
            Model::DarbouxLandau => "darboux-landau",
            Model::DunklLandau => "dunkl-landau",
            Model::DunklDarbouxLandau => "dunkl-darboux-landau",
        }
    }

    pub fn is_magnetic(self) -> bool {
        matches!(
            self,
            Model::DarbouxLandau | Model::DunklLandau | Model::DunklDarbouxLandau
        )
    }

    /// Whether λ enters the Hamiltonian.
    pub fn uses_lambda(self) -> bool {
        !matches!(self, Model::Dunkl | Model::DunklLandau)
    }

    /// Whether the Dunkl parameters enter the Hamiltonian.
    pub fn uses_mu(self) -> bool {
        !matches!(self, Model::Darboux | Model::DarbouxLandau)
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Model {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Model::ALL
            .into_iter()
            .find(|m| m.id() == s)
            .ok_or_else(|| invalid(format!("unknown model '{s}'")))
    }
}

/// Physical constants and deformation parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub hbar: f64,
    /// Oscillator frequency ω.
    pub omega: f64,
    /// Curvature / position-dependent-mass parameter λ.
    pub lambda: f64,
    /// Per-axis Dunkl parameters μ_i.
    pub mu: Vec<f64>,
    /// Larmor frequency ω_c = eB/2c.
    pub omega_c: f64,
    pub dim: usize,
}

impl ModelParams {
    /// Flat isotropic oscillator with ħ = ω = 1.
    pub fn new(dim: usize) -> Self {
        Self {
            hbar: 1.0,
            omega: 1.0,
            lambda: 0.0,
            mu: vec![0.0; dim],
            omega_c: 0.0,
            dim,
        }
    }

    pub fn with_lambda(mut self, lambda: f64) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn with_mu(mut self, mu: &[f64]) -> Self {
        self.mu = mu.to_vec();
        self
    }

    /// Sets every μ_i to the same value.
    pub fn with_uniform_mu(mut self, mu: f64) -> Self {
        self.mu = vec![mu; self.dim];
        self
    }

    pub fn with_omega_c(mut self, omega_c: f64) -> Self {
        self.omega_c = omega_c;
        self
    }

    pub fn with_hbar(mut self, hbar: f64) -> Self {
        self.hbar = hbar;
        self
    }

    pub fn with_omega(mut self, omega: f64) -> Self {
        self.omega = omega;
        self
    }

    pub fn mu_x(&self) -> f64 {
        self.mu.first().copied().unwrap_or(0.0)
    }

    pub fn mu_y(&self) -> f64 {
        self.mu.get(1).copied().unwrap_or(0.0)
    }

    pub fn mu_sum(&self) -> f64 {
        self.mu.iter().sum()
    }

    /// Modulation frequency ω̃ = sqrt(ω² + ω_c²).
    pub fn omega_tilde(&self) -> f64 {
        self.omega.hypot(self.omega_c)
    }

    /// Checks the parameter domain shared by all models.
    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(invalid("dimension must be at least 1"));
        }
        if !(self.hbar > 0.0 && self.hbar.is_finite()) {
            return Err(invalid(format!("hbar must be positive, got {}", self.hbar)));
        }
        if !(self.omega > 0.0 && self.omega.is_finite()) {
            return Err(invalid(format!(
                "omega must be positive, got {}",
                self.omega
            )));
        }
        if !(self.lambda >= 0.0 && self.lambda.is_finite()) {
            return Err(invalid(format!("lambda must be >= 0, got {}", self.lambda)));
        }
        if !(self.omega_c >= 0.0 && self.omega_c.is_finite()) {
            return Err(invalid(format!(
                "omega_c must be >= 0, got {}",
                self.omega_c
            )));
        }
        if self.mu.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: self.mu.len(),
            });
        }
        if let Some(bad) = self.mu.iter().find(|m| !(**m > -0.5 && m.is_finite())) {
            return Err(invalid(format!("each mu must be > -1/2, got {bad}")));
        }
        Ok(())
    }

    /// Checks the domain and the model-specific restrictions
    /// (planar magnetic models, no field on Cartesian models, λ = 0 for the
    /// flat Dunkl-Landau family).
    pub fn validate_for(&self, model: Model) -> Result<()> {
        self.validate()?;
        if model.is_magnetic() {
            if self.dim != 2 {
                return Err(invalid(format!("model {model} is planar; dim must be 2")));
            }
        } else if self.omega_c != 0.0 {
            return Err(invalid(format!(
                "omega_c is only meaningful for the planar magnetic models, not {model}"
            )));
        }
        if model == Model::DunklLandau && self.lambda != 0.0 {
            return Err(invalid(
                "dunkl-landau requires lambda = 0; use dunkl-darboux-landau",
            ));
        }
        Ok(())
    }
}

/// Eigenvalue of a single reflection `R_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_index(n: u32) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `e = ±1`.
    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }

    /// `q = (1 - e)/2`.
    pub fn q(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_sign(e: i32) -> Result<Self> {
        match e {
            1 => Ok(Parity::Even),
            -1 => Ok(Parity::Odd),
            _ => Err(invalid(format!(
                "reflection eigenvalue must be ±1, got {e}"
            ))),
        }
    }
}

/// The planar sector ε = e_x e_y.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sector {
    Plus,
    Minus,
}

impl Sector {
    pub fn sign(self) -> f64 {
        match self {
            Sector::Plus => 1.0,
            Sector::Minus => -1.0,
        }
    }

    pub fn from_sign(e: i32) -> Result<Self> {
        match e {
            1 => Ok(Sector::Plus),
            -1 => Ok(Sector::Minus),
            _ => Err(invalid(format!("sector must be +1 or -1, got {e}"))),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Sector::Plus => "+1",
            Sector::Minus => "-1",
        }
    }
}

impl Serialize for Sector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(if *self == Sector::Plus { 1 } else { -1 })
    }
}

impl<'de> Deserialize<'de> for Sector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = i32::deserialize(d)?;
        Sector::from_sign(v).map_err(serde::de::Error::custom)
    }
}

/// Sign of the 𝒥 eigenvalue σ_ε.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        }
    }
}

/// Angular label m' stored as the integer 2m'.
///
/// Even values are the integers of the ε = +1 sector, odd values the
/// half-odd integers of the ε = -1 sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AngularIndex(u32);

impl AngularIndex {
    pub fn from_doubled(doubled: u32) -> Self {
        Self(doubled)
    }

    pub fn from_value(m_prime: f64) -> Result<Self> {
        let d = 2.0 * m_prime;
        if !(m_prime >= 0.0) || d.fract() != 0.0 || d > f64::from(u32::MAX) {
            return Err(invalid(format!(
                "m' must be a non-negative integer or half-integer, got {m_prime}"
            )));
        }
        Ok(Self(d as u32))
    }

    pub fn doubled(self) -> u32 {
        self.0
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    pub fn sector(self) -> Sector {
        if self.0.is_multiple_of(2) {
            Sector::Plus
        } else {
            Sector::Minus
        }
    }

    /// Degree of the leading Jacobi polynomial: m' itself for ε = +1,
    /// m' - 1/2 for ε = -1.
    pub fn jacobi_degree(self) -> u32 {
        self.0 / 2
    }
}

impl fmt::Display for AngularIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}.5", self.0 / 2)
        }
    }
}

impl Serialize for AngularIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(self.value())
    }
}

impl<'de> Deserialize<'de> for AngularIndex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = f64::deserialize(d)?;
        AngularIndex::from_value(v).map_err(serde::de::Error::custom)
    }
}

/// Level labels for each family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuantumNumbers {
    /// Per-axis occupation numbers; the reflection eigenvalue on axis i is
    /// `(-1)^{n_i}`.
    Cartesian { n: Vec<u32> },
    /// Planar Darboux III levels in a field: radial n, angular momentum m.
    Landau { n: u32, m: i32 },
    /// Planar Dunkl levels: radial k, angular m', sign of σ_ε.
    Angular {
        k: u32,
        m_prime: AngularIndex,
        branch: Branch,
    },
}

impl QuantumNumbers {
    pub fn cartesian(n: &[u32]) -> Self {
        QuantumNumbers::Cartesian { n: n.to_vec() }
    }

    pub fn angular(k: u32, m_prime: AngularIndex, branch: Branch) -> Self {
        QuantumNumbers::Angular { k, m_prime, branch }
    }

    /// Number of oscillator quanta: Σn_i, 2n+|m| or 2k+2m'.
    pub fn total_index(&self) -> u32 {
        match self {
            QuantumNumbers::Cartesian { n } => n.iter().sum(),
            QuantumNumbers::Landau { n, m } => 2 * n + m.unsigned_abs(),
            QuantumNumbers::Angular { k, m_prime, .. } => 2 * k + m_prime.doubled(),
        }
    }

    /// Reflection eigenvalues per axis for Cartesian labels.
    pub fn parities(&self) -> Option<Vec<Parity>> {
        match self {
            QuantumNumbers::Cartesian { n } => {
                Some(n.iter().map(|&k| Parity::from_index(k)).collect())
            }
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_ids_round_trip() {
        for m in Model::ALL {
            assert_eq!(m.id().parse::<Model>().unwrap(), m);
            assert_eq!(m.to_string(), m.id());
        }
        assert!("landau".parse::<Model>().is_err());
    }

    #[test]
    fn params_validation() {
        assert!(ModelParams::new(2).validate().is_ok());
        assert!(ModelParams::new(2).with_lambda(-0.1).validate().is_err());
        assert!(ModelParams::new(2).with_mu(&[0.1]).validate().is_err());
        assert!(ModelParams::new(1)
            .with_uniform_mu(-0.5)
            .validate()
            .is_err());
        assert!(ModelParams::new(1)
            .with_omega_c(0.1)
            .validate_for(Model::Darboux)
            .is_err());
        assert!(ModelParams::new(3)
            .validate_for(Model::DarbouxLandau)
            .is_err());
        assert!(ModelParams::new(2)
            .with_lambda(0.02)
            .validate_for(Model::DunklLandau)
            .is_err());
        assert!((ModelParams::new(2).with_omega_c(0.75).omega_tilde() - 1.25).abs() < 1e-15);
    }

    #[test]
    fn angular_index_sectors() {
        let half = AngularIndex::from_value(1.5).unwrap();
        assert_eq!(half.sector(), Sector::Minus);
        assert_eq!(half.jacobi_degree(), 1);
        assert_eq!(half.to_string(), "1.5");
        let whole = AngularIndex::from_value(2.0).unwrap();
        assert_eq!(whole.sector(), Sector::Plus);
        assert_eq!(whole.jacobi_degree(), 2);
        assert!(AngularIndex::from_value(0.25).is_err());
        assert!(AngularIndex::from_value(-1.0).is_err());
    }

    #[test]
    fn total_index() {
        assert_eq!(QuantumNumbers::cartesian(&[2, 1, 0]).total_index(), 3);
        assert_eq!(QuantumNumbers::Landau { n: 1, m: -3 }.total_index(), 5);
        let qn = QuantumNumbers::angular(1, AngularIndex::from_doubled(3), Branch::Minus);
        assert_eq!(qn.total_index(), 5);
    }
}
