use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Binary floating-point number `mantissa * 2^exponent` with a fixed working
/// precision in bits.
///
/// Every result is rounded to nearest (ties away from zero) at the precision
/// of its operands. Arithmetic between values of different precisions panics:
/// callers convert explicitly with [`BigFloat::with_precision`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

fn bit_len(n: &BigInt) -> i64 {
    n.bits() as i64
}

impl BigFloat {
    pub fn zero(prec: u32) -> Self {
        assert!(prec >= 2, "precision must be at least 2 bits");
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
            prec,
        }
    }

    fn from_parts(mant: BigInt, exp: i64, prec: u32) -> Self {
        let mut f = BigFloat { mant, exp, prec };
        f.round();
        f
    }

    fn round(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        let excess = bit_len(&self.mant) - self.prec as i64;
        if excess <= 0 {
            return;
        }
        let neg = self.mant.is_negative();
        let mag = self.mant.magnitude();
        let half = num_bigint::BigUint::one() << (excess as u64 - 1);
        let mut m = (mag + half) >> excess as u64;
        let mut e = self.exp + excess;
        if m.bits() as i64 > self.prec as i64 {
            m >>= 1u32;
            e += 1;
        }
        self.mant = BigInt::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, m);
        self.exp = e;
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> Self {
        assert!(prec >= 2, "precision must be at least 2 bits");
        Self::from_parts(n.clone(), 0, prec)
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::from_bigint(&BigInt::from(n), prec)
    }

    /// Nearest representable value to `r`, within one unit in the last place.
    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        let (num, den) = (r.numer(), r.denom());
        if num.is_zero() {
            return Self::zero(prec);
        }
        let k = prec as i64 + 2 + bit_len(den) - bit_len(num);
        if k >= 0 {
            Self::from_parts((num << k as u64) / den, -k, prec)
        } else {
            Self::from_parts(num / den, 0, prec)
        }
    }

    /// `2^e`.
    pub fn pow2(e: i64, prec: u32) -> Self {
        BigFloat {
            mant: BigInt::one(),
            exp: e,
            prec,
        }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        Self::from_parts(self.mant.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mant: self.mant.abs(),
            exp: self.exp,
            prec: self.prec,
        }
    }

    /// Exponent `t` with `2^(t-1) <= |self| < 2^t`; `None` for zero.
    pub fn magnitude_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.exp + bit_len(&self.mant))
    }

    /// Whether `|self| < 2^e`.
    pub fn abs_below_pow2(&self, e: i64) -> bool {
        self.magnitude_exponent().is_none_or(|t| t <= e)
    }

    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.mant << self.exp as u64)
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            self.mant.div_floor(&(BigInt::one() << (-self.exp) as u64))
        }
    }

    /// Approximate value; saturates to infinity for huge exponents.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let shift = (bit_len(&self.mant) - 60).max(0);
        let m = (&self.mant >> shift as u64).to_f64().unwrap_or(f64::NAN);
        let e = self.exp + shift;
        m * 2f64.powi(e.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    }

    /// Division returning `None` for a zero divisor.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        self.check_prec(rhs);
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.prec));
        }
        let k = self.prec as i64 + 2 + bit_len(&rhs.mant) - bit_len(&self.mant);
        let k = k.max(0);
        let q = (&self.mant << k as u64) / &rhs.mant;
        Some(Self::from_parts(q, self.exp - rhs.exp - k, self.prec))
    }

    pub fn recip(&self) -> Option<Self> {
        BigFloat::from_i64(1, self.prec).checked_div(self)
    }

    /// Square root of a nonnegative value.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative BigFloat");
        if self.is_zero() {
            return self.clone();
        }
        // Scale so the integer square root carries prec + 2 bits.
        let mut shift = (2 * (self.prec as i64 + 2) - bit_len(&self.mant)).max(0);
        if (self.exp - shift).is_odd() {
            shift += 1;
        }
        let m = (&self.mant << shift as u64).sqrt();
        Self::from_parts(m, (self.exp - shift) / 2, self.prec)
    }

    fn check_prec(&self, rhs: &Self) {
        assert_eq!(
            self.prec, rhs.prec,
            "BigFloat precision mismatch ({} vs {} bits); convert explicitly",
            self.prec, rhs.prec
        );
    }

    fn add_impl(&self, rhs: &Self, negate_rhs: bool) -> Self {
        self.check_prec(rhs);
        let rm = if negate_rhs {
            -&rhs.mant
        } else {
            rhs.mant.clone()
        };
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return BigFloat {
                mant: rm,
                exp: rhs.exp,
                prec: self.prec,
            };
        }
        let ta = self.exp + bit_len(&self.mant);
        let tb = rhs.exp + bit_len(&rhs.mant);
        let gap_limit = self.prec as i64 + 3;
        if ta - tb > gap_limit {
            return self.clone();
        }
        if tb - ta > gap_limit {
            return BigFloat {
                mant: rm,
                exp: rhs.exp,
                prec: self.prec,
            };
        }
        let e = self.exp.min(rhs.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = rm << (rhs.exp - e) as u64;
        Self::from_parts(a + b, e, self.prec)
    }

    /// Decimal string with `digits` digits after the point, truncated toward zero.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        let r = self.to_rational().abs();
        let scaled = r * Rational::from_integer(BigInt::from(10u32).pow(digits as u32));
        let s = scaled.to_integer().to_string();
        let s = if s.len() <= digits {
            format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
        } else {
            s
        };
        let (int_part, frac) = s.split_at(s.len() - digits);
        let sign = if self.is_negative() { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    }
}

impl Add for &BigFloat {
    type Output = BigFloat;
    fn add(self, rhs: &BigFloat) -> BigFloat {
        self.add_impl(rhs, false)
    }
}

impl Sub for &BigFloat {
    type Output = BigFloat;
    fn sub(self, rhs: &BigFloat) -> BigFloat {
        self.add_impl(rhs, true)
    }
}

impl Mul for &BigFloat {
    type Output = BigFloat;
    fn mul(self, rhs: &BigFloat) -> BigFloat {
        self.check_prec(rhs);
        BigFloat::from_parts(&self.mant * &rhs.mant, self.exp + rhs.exp, self.prec)
    }
}

impl Div for &BigFloat {
    type Output = BigFloat;
    /// Panics on division by zero; see [`BigFloat::checked_div`].
    fn div(self, rhs: &BigFloat) -> BigFloat {
        self.checked_div(rhs).expect("BigFloat division by zero")
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat {
            mant: -&self.mant,
            exp: self.exp,
            prec: self.prec,
        }
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.to_rational().cmp(&other.to_rational()))
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        write!(f, "{}", self.to_decimal_string(digits))
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BigFloat({} * 2^{} @{}b)",
            self.mant, self.exp, self.prec
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rat;

    #[test]
    fn rational_round_trip_within_ulp() {
        let r = rat(1, 3);
        let f = BigFloat::from_rational(&r, 64);
        let err = (f.to_rational() - &r).abs();
        assert!(err < Rational::new(BigInt::one(), BigInt::one() << 65u32));
    }

    #[test]
    fn arithmetic() {
        let p = 128;
        let a = BigFloat::from_i64(3, p);
        let b = BigFloat::from_i64(7, p);
        assert_eq!((&a + &b).to_rational(), rat(10, 1));
        assert_eq!((&a - &b).to_rational(), rat(-4, 1));
        assert_eq!((&a * &b).to_rational(), rat(21, 1));
        let q = &a / &b;
        assert!(
            (q.to_rational() - rat(3, 7)).abs()
                < Rational::new(BigInt::one(), BigInt::one() << 128u32)
        );
        assert!(a.checked_div(&BigFloat::zero(p)).is_none());
    }

    #[test]
    fn sqrt_of_two() {
        let two = BigFloat::from_i64(2, 200);
        let r = two.sqrt();
        let sq = &r * &r;
        assert!((&sq - &two).abs_below_pow2(-195));
        assert!(r.to_decimal_string(10).starts_with("1.4142135623"));
    }

    #[test]
    fn floor_of_negatives() {
        let f = BigFloat::from_rational(&rat(-7, 2), 32);
        assert_eq!(f.floor(), BigInt::from(-4));
        assert_eq!(
            BigFloat::from_rational(&rat(7, 2), 32).floor(),
            BigInt::from(3)
        );
    }

    #[test]
    fn far_apart_addition_keeps_larger() {
        let big = BigFloat::from_i64(1, 64);
        let tiny = BigFloat::pow2(-1000, 64);
        assert_eq!(&big + &tiny, big);
        assert_eq!((&tiny - &big).to_rational(), rat(-1, 1));
    }

    #[test]
    #[should_panic(expected = "precision mismatch")]
    fn mixed_precision_panics() {
        let _ = &BigFloat::from_i64(1, 64) + &BigFloat::from_i64(1, 128);
    }

    #[test]
    fn decimal_display() {
        let f = BigFloat::from_rational(&rat(-5, 4), 64);
        assert_eq!(f.to_decimal_string(3), "-1.250");
        assert_eq!(
            BigFloat::from_rational(&rat(1, 8), 64).to_decimal_string(2),
            "0.12"
        );
    }
}
