use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Element `a + b sqrt(d)` of the field `Q(sqrt d)`.
///
/// Binary operations require both operands to carry the same `d` and return
/// a domain error otherwise. `d` is not checked for squarefreeness; when it
/// is a perfect square the "field" degenerates and [`QuadExt::inv`] may fail.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: BigInt,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Self {
        QuadExt { a, b, d }
    }

    pub fn rational(a: Rational, d: BigInt) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            d,
        }
    }

    pub fn integer(n: impl Into<BigInt>, d: BigInt) -> Self {
        Self::rational(Rational::from_integer(n.into()), d)
    }

    /// `sqrt(d)` itself.
    pub fn root(d: BigInt) -> Self {
        QuadExt {
            a: Rational::zero(),
            b: Rational::one(),
            d,
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }
    pub fn b(&self) -> &Rational {
        &self.b
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::domain(format!(
                "mixing Q(sqrt {}) with Q(sqrt {})",
                self.d, other.d
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d: self.d.clone(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(QuadExt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            d: self.d.clone(),
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        let d = Rational::from_integer(self.d.clone());
        Ok(QuadExt {
            a: &self.a * &rhs.a + &self.b * &rhs.b * d,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            d: self.d.clone(),
        })
    }

    pub fn neg(&self) -> Self {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    pub fn conj(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    /// `a^2 - d b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::domain("inverse of an element of norm zero"));
        }
        let c = self.conj();
        Ok(QuadExt {
            a: c.a / &n,
            b: c.b / &n,
            d: self.d.clone(),
        })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        self.mul(&rhs.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = QuadExt::integer(1, self.d.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({}) sqrt({})", self.a, self.b, self.d)
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt({self})")
    }
}
