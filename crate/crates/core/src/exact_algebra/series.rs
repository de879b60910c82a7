use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Coefficient ring of a [`PowerSeries`].
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse when it exists in the ring.
    fn try_inverse(&self) -> Option<Self>;
}

impl Coefficient for Rational {
    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Coefficient for BigInt {
    fn try_inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }
}

impl Coefficient for Polynomial {
    fn try_inverse(&self) -> Option<Self> {
        match self.coeffs() {
            [c] if c.abs().is_one() => Some(self.clone()),
            _ => None,
        }
    }
}

/// Truncated formal power series `c_0 + c_1 t + ... + c_{order-1} t^{order-1} + O(t^order)`.
///
/// Exactly `order` coefficients are stored. Binary operations on series of
/// different orders truncate to the smaller order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> PowerSeries<C> {
    /// Pads with zeros or truncates `coeffs` to exactly `order` entries.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order, C::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![C::one()], order)
    }

    pub fn monomial(c: C, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree < order {
            s.coeffs[degree] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&C> {
        self.coeffs.get(i)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(
            self.coeffs[..order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, k: &C) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone())
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        PowerSeries { coeffs }
    }

    /// `1 / self` to the same order. The constant term must be a unit.
    pub fn reciprocal(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let inv0 = self.coeffs[0].try_inverse().ok_or_else(|| {
            Error::domain("reciprocal of a power series whose constant term is not a unit")
        })?;
        let mut out = vec![C::zero(); n];
        out[0] = inv0.clone();
        for k in 1..n {
            let mut acc = C::zero();
            for i in 1..=k {
                acc = acc + self.coeffs[i].clone() * out[k - i].clone();
            }
            out[k] = -(acc * inv0.clone());
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Length of the initial run on which `self` and `other` coincide.
    pub fn agreement(&self, other: &Self) -> usize {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .take_while(|(a, b)| a == b)
            .count()
    }
}

impl PowerSeries<Rational> {
    /// Series of a polynomial truncated to `order`.
    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .take(order)
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
            order,
        )
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl<C: fmt::Debug> fmt::Debug for PowerSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PowerSeries{:?} + O(t^{})",
            self.coeffs,
            self.coeffs.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{int, rat};

    fn s(c: &[i64], order: usize) -> PowerSeries<Rational> {
        PowerSeries::new(c.iter().map(|&v| int(v)).collect(), order)
    }

    #[test]
    fn geometric_series() {
        assert_eq!(s(&[1, -1], 4).reciprocal().unwrap(), s(&[1, 1, 1, 1], 4));
    }

    #[test]
    fn multiply_by_one() {
        let a = s(&[2, 0, 5, -1], 4);
        assert_eq!(a.mul(&PowerSeries::one(4)), a);
    }

    #[test]
    fn reciprocal_by_long_division() {
        // Long division of 1 by 1 - 3t + t^2: 1, 3, 3*3 - 1 = 8.
        let mut q = Vec::new();
        let den = [1i64, -3, 1];
        let mut rem = [1i64, 0, 0];
        for k in 0..3 {
            let c = rem[k];
            q.push(c);
            for (i, d) in den.iter().enumerate() {
                if k + i < 3 {
                    rem[k + i] -= c * d;
                }
            }
        }
        assert_eq!(q, vec![1, 3, 8]);
        assert_eq!(s(&[1, -3, 1], 3).reciprocal().unwrap(), s(&q, 3));
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        assert!(matches!(s(&[0, 1], 3).reciprocal(), Err(Error::Domain(_))));
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = s(&[1, 1, 1, 1, 1], 5);
        let b = s(&[1, 1], 3);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.mul(&b), s(&[1, 2, 2], 3));
    }

    #[test]
    fn rational_coefficients() {
        let a = PowerSeries::new(vec![rat(1, 2), rat(1, 3)], 3);
        let inv = a.reciprocal().unwrap();
        assert!(a.mul(&inv).sub(&PowerSeries::one(3)).is_zero());
    }

    #[test]
    fn polynomial_coefficients() {
        // (1 - x t)^{-1} = 1 + x t + x^2 t^2 over Z[x]
        let a = PowerSeries::new(vec![Polynomial::one(), -Polynomial::x()], 3);
        let inv = a.reciprocal().unwrap();
        assert_eq!(inv.coeffs()[2], Polynomial::monomial(1, 2));
    }
}
