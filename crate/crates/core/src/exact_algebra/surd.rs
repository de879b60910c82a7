use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{is_perfect_square, BigFloat, QuadExt, Rational};
use crate::error::{Error, Result};

/// Quadratic irrational `(p + sqrt(d)) / q`.
///
/// Invariants: `d > 0` is not a perfect square, `q != 0`, and `q` divides
/// `d - p^2`. The last condition is what keeps the simple continued fraction
/// step in integers; [`QuadraticSurd::new`] establishes it by scaling
/// `(p, q, d)` to `(p|q|, q|q|, d q^2)` when needed.
///
/// For a fixed `d` the pair `(p, q)` determines the value uniquely, which is
/// what period detection keys on.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    p: BigInt,
    q: BigInt,
    d: BigInt,
}

impl QuadraticSurd {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let (p, q, d) = (p.into(), q.into(), d.into());
        if q.is_zero() {
            return Err(Error::domain("surd denominator is zero"));
        }
        if !d.is_positive() || is_perfect_square(&d) {
            return Err(Error::domain(format!(
                "radicand {d} must be a positive non-square"
            )));
        }
        let rem = (&d - &p * &p).mod_floor(&q.abs());
        if rem.is_zero() {
            return Ok(QuadraticSurd { p, q, d });
        }
        let aq = q.abs();
        Ok(QuadraticSurd {
            p: &p * &aq,
            d: &d * &q * &q,
            q: &q * &aq,
        })
    }

    /// `sqrt(n)` for a non-square `n > 0`.
    pub fn sqrt(n: impl Into<BigInt>) -> Result<Self> {
        Self::new(0, 1, n)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }
    pub fn q(&self) -> &BigInt {
        &self.q
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// `(p, q)`, the state used for period detection.
    pub fn state(&self) -> (BigInt, BigInt) {
        (self.p.clone(), self.q.clone())
    }

    pub fn negate(&self) -> Self {
        // -(p + sqrt d)/q = (p + sqrt d)/(-q); q | d - p^2 is sign-blind.
        QuadraticSurd {
            p: self.p.clone(),
            q: -&self.q,
            d: self.d.clone(),
        }
    }

    pub fn add_integer(&self, n: &BigInt) -> Self {
        QuadraticSurd {
            p: &self.p + n * &self.q,
            q: self.q.clone(),
            d: self.d.clone(),
        }
    }

    /// `1 / (self - a)`, which is again of the form `(p' + sqrt d)/q'` with
    /// `p' = a q - p` and `q' = (d - p'^2)/q`.
    pub fn invert_shifted(&self, a: &BigInt) -> Self {
        let p = a * &self.q - &self.p;
        let num = &self.d - &p * &p;
        let (q, r) = num.div_rem(&self.q);
        debug_assert!(r.is_zero(), "normalized surd lost q | d - p^2");
        QuadraticSurd {
            p,
            q,
            d: self.d.clone(),
        }
    }

    /// Errors unless `other` has the same radicand.
    pub fn require_same_radicand(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::domain(format!(
                "surds over different radicands {} and {}",
                self.d, other.d
            )));
        }
        Ok(())
    }

    /// Exact floor, using `isqrt(d)`.
    pub fn floor(&self) -> BigInt {
        let s = self.d.sqrt();
        if self.q.is_positive() {
            (&self.p + &s).div_floor(&self.q)
        } else {
            (-&self.p - &s - BigInt::one()).div_floor(&(-&self.q))
        }
    }

    /// Exact comparison of `self` with a rational `r`.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        // sign of (t + sqrt d)/q with t = p - r q
        let t = Rational::from_integer(self.p.clone()) - r * Rational::from_integer(self.q.clone());
        let num_sign = if !t.is_negative() || Rational::from_integer(self.d.clone()) > &t * &t {
            Ordering::Greater
        } else {
            Ordering::Less
        };
        if self.q.is_positive() {
            num_sign
        } else {
            num_sign.reverse()
        }
    }

    /// Value equality across representations (possibly different radicands).
    pub fn value_eq(&self, other: &Self) -> bool {
        // (p1 + sqrt d1)/q1 == (p2 + sqrt d2)/q2 iff p1/q1 == p2/q2 and d1/q1^2 == d2/q2^2 with matching signs.
        &self.p * &other.q == &other.p * &self.q
            && &self.d * &other.q * &other.q == &other.d * &self.q * &self.q
            && self.q.is_positive() == other.q.is_positive()
    }

    pub fn to_quad_ext(&self) -> QuadExt {
        QuadExt::new(
            Rational::new(self.p.clone(), self.q.clone()),
            Rational::new(BigInt::one(), self.q.clone()),
            self.d.clone(),
        )
    }

    pub fn to_bigfloat(&self, prec: u32) -> BigFloat {
        let work = prec + 16;
        let root = BigFloat::from_bigint(&self.d, work).sqrt();
        let num = &BigFloat::from_bigint(&self.p, work) + &root;
        (&num / &BigFloat::from_bigint(&self.q, work)).with_precision(prec)
    }

    /// `P(z) = a z^2 + b z + c` evaluated at `self`, as an element of `Q(sqrt d)`.
    pub fn eval_quadratic(&self, a: &BigInt, b: &BigInt, c: &BigInt) -> QuadExt {
        let z = self.to_quad_ext();
        let r = |n: &BigInt| QuadExt::rational(Rational::from_integer(n.clone()), self.d.clone());
        let z2 = z.mul(&z).expect("same radicand");
        r(a).mul(&z2)
            .and_then(|t| t.add(&r(b).mul(&z)?))
            .and_then(|t| t.add(&r(c)))
            .expect("same radicand")
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + sqrt({}))/{}", self.p, self.d, self.q)
    }
}

impl fmt::Debug for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "QuadraticSurd{{P: {}, Q: {}, D: {}}}",
            self.p, self.q, self.d
        )
    }
}
