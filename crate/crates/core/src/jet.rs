//! Second-order forward-mode derivatives.
//!
//! A [`Jet`] carries `(f, f', f'')` at a point. Products and compositions
//! follow the Leibniz and Faà di Bruno rules truncated at order two, which is
//! all the Hamiltonians in this crate need.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet<T = f64> {
    pub value: T,
    pub d1: T,
    pub d2: T,
}

pub type ComplexJet = Jet<Complex64>;

impl<T> Jet<T> {
    pub const fn new(value: T, d1: T, d2: T) -> Self {
        Self { value, d1, d2 }
    }
}

impl<T: Copy> Jet<T> {
    /// Derivative of the requested order (0, 1 or 2).
    pub fn order(&self, order: u8) -> Option<T> {
        match order {
            0 => Some(self.value),
            1 => Some(self.d1),
            2 => Some(self.d2),
            _ => None,
        }
    }
}

impl Jet<f64> {
    pub fn constant(c: f64) -> Self {
        Self::new(c, 0.0, 0.0)
    }

    /// The identity map `x ↦ x` evaluated at `x`.
    pub fn variable(x: f64) -> Self {
        Self::new(x, 1.0, 0.0)
    }

    pub fn scale(self, c: f64) -> Self {
        Self::new(c * self.value, c * self.d1, c * self.d2)
    }

    /// `outer ∘ self`, where `outer` holds `(g, g', g'')` evaluated at `self.value`.
    pub fn compose(self, outer: Jet) -> Self {
        Self::new(
            outer.value,
            outer.d1 * self.d1,
            outer.d2 * self.d1 * self.d1 + outer.d1 * self.d2,
        )
    }

    pub fn exp(self) -> Self {
        let e = self.value.exp();
        self.compose(Jet::new(e, e, e))
    }

    pub fn into_complex(self) -> ComplexJet {
        Jet::new(self.value.into(), self.d1.into(), self.d2.into())
    }
}

impl ComplexJet {
    pub fn scale(self, c: Complex64) -> Self {
        Self::new(c * self.value, c * self.d1, c * self.d2)
    }
}

impl<T: Copy + Add<Output = T>> Add for Jet<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.value + rhs.value, self.d1 + rhs.d1, self.d2 + rhs.d2)
    }
}

impl<T: Copy + Sub<Output = T>> Sub for Jet<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.value - rhs.value, self.d1 - rhs.d1, self.d2 - rhs.d2)
    }
}

impl<T: Copy + Neg<Output = T>> Neg for Jet<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.value, -self.d1, -self.d2)
    }
}

impl<T: Copy + Add<Output = T> + Mul<Output = T>> Mul for Jet<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let cross = self.d1 * rhs.d1;
        Self::new(
            self.value * rhs.value,
            self.d1 * rhs.value + self.value * rhs.d1,
            self.d2 * rhs.value + cross + cross + self.value * rhs.d2,
        )
    }
}

/// `x^p` for `x > 0` and real `p`.
pub fn power(x: f64, p: f64) -> Jet {
    if p == 0.0 {
        return Jet::constant(1.0);
    }
    let v = x.powf(p);
    Jet::new(v, p * v / x, p * (p - 1.0) * v / (x * x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_composition_match_closed_forms() {
        // f(x) = x^2 * exp(-x^2 / 2)
        let x = 0.7;
        let v = Jet::variable(x);
        let f = (v * v) * (v * v).scale(-0.5).exp();
        let e = (-x * x / 2.0_f64).exp();
        assert!((f.value - x * x * e).abs() < 1e-15);
        assert!((f.d1 - (2.0 * x - x.powi(3)) * e).abs() < 1e-15);
        assert!((f.d2 - (2.0 - 5.0 * x * x + x.powi(4)) * e).abs() < 1e-14);
    }

    #[test]
    fn power_jet() {
        let j = power(2.0, 2.5);
        assert!((j.value - 2.0_f64.powf(2.5)).abs() < 1e-14);
        assert!((j.d1 - 2.5 * 2.0_f64.powf(1.5)).abs() < 1e-14);
        assert!((j.d2 - 2.5 * 1.5 * 2.0_f64.powf(0.5)).abs() < 1e-14);
        assert_eq!(power(3.0, 0.0), Jet::constant(1.0));
    }
}
