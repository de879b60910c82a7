use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. The vector never carries trailing
/// zeros, so the zero polynomial is the empty vector and
/// `degree == len - 1` otherwise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `c * x^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exponent of the lowest nonzero term.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiply by `x^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Divide by `x^n` when the division is exact.
    pub fn unshift(&self, n: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.iter().take(n).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Polynomial {
            coeffs: self.coeffs[n.min(self.coeffs.len())..].to_vec(),
        })
    }

    /// Divide every coefficient by `k` when all divisions are exact.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Option<Self> {
        if k.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Polynomial { coeffs: out })
    }

    pub fn eval(&self, v: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, v: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    /// Reverse the coefficient sequence `c_0..c_d` to `c_d..c_0`.
    ///
    /// Low-order zeros of `self` become high-order zeros and are dropped, so
    /// `p.reverse().reverse()` equals `p / x^valuation(p)`.
    pub fn reverse(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Strip the `x^valuation` factor.
    pub fn trim_low(&self) -> Self {
        match self.valuation() {
            None => Self::zero(),
            Some(v) => Polynomial {
                coeffs: self.coeffs[v..].to_vec(),
            },
        }
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, with a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar_exact(&c)
            .expect("content divides every coefficient")
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) * a mod d`.
    fn pseudo_rem(a: &Self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo division by zero");
        let lc = d.leading().unwrap().clone();
        let mut r = a.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = &r.scale(&lc) - &d.scale(&lr).shift(rd - dd);
        }
        r
    }

    /// Greatest common divisor over `Z[x]`: primitive Euclid on the primitive
    /// parts, times the gcd of the contents. The result has a positive
    /// leading coefficient; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let content = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = Self::pseudo_rem(&a, &b);
            a = b;
            b = r.primitive_part();
        }
        a.scale(&content)
    }

    fn normalize_sign(&self) -> Self {
        if self.leading().is_some_and(Signed::is_negative) {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact quotient `self / d` over `Z[x]`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let lc = d.leading().unwrap();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                return None;
            }
            let (c, rem) = r.leading().unwrap().div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            r = &r - &d.scale(&c).shift(rd - dd);
            q[rd - dd] = c;
        }
        Some(Self::new(q))
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl From<BigInt> for Polynomial {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::new(coeffs)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Polynomial::new(coeffs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{int, rat};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn binomial_square() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
    }

    #[test]
    fn multiply_by_one() {
        let a = p(&[3, 0, -2, 7]);
        assert_eq!(&a * &Polynomial::one(), a);
    }

    #[test]
    fn square_of_a2() {
        // A_2 = 2x^2 + x
        let a2 = p(&[0, 1, 2]);
        assert_eq!(&a2 * &a2, p(&[0, 0, 1, 4, 4]));
    }

    #[test]
    fn evaluation() {
        // B_4 = 2x^2 + 2x + 1 at x = 1
        assert_eq!(p(&[1, 2, 2]).eval(&int(1)), int(5));
        assert_eq!(Polynomial::zero().eval(&rat(7, 3)), int(0));
        // A_3 = x(4x + 1) at x = 3
        assert_eq!(p(&[0, 1, 4]).eval(&int(3)), int(39));
        assert_eq!(p(&[0, 1, 4]).eval_int(&BigInt::from(3)), BigInt::from(39));
        assert_eq!(p(&[1, 2]).eval(&rat(1, 2)), int(2));
    }

    #[test]
    fn reversal() {
        assert_eq!(p(&[3, 2, 1]).reverse(), p(&[1, 2, 3]));
        assert_eq!(p(&[5]).reverse(), p(&[5]));
        // D_3 = x^3 + x^2 + x: the zero constant term falls off the top.
        let d3 = p(&[0, 1, 1, 1]);
        assert_eq!(d3.reverse(), p(&[1, 1, 1]));
        assert_eq!(d3.reverse().reverse(), d3.trim_low());
    }

    #[test]
    fn normalization() {
        let a = &p(&[1, 2, 3]) - &p(&[1, 2, 3]);
        assert!(a.is_zero());
        assert_eq!(a.degree(), None);
        assert_eq!((&p(&[1, 0, 5]) + &p(&[0, 0, -5])).degree(), Some(0));
    }

    #[test]
    fn gcd_and_exact_division() {
        // (x + 1)(2x - 3) and (x + 1)(x + 4) share x + 1.
        let f = &p(&[1, 1]) * &p(&[-3, 2]);
        let g = &p(&[1, 1]) * &p(&[4, 1]);
        assert_eq!(f.gcd(&g), p(&[1, 1]));
        assert_eq!(f.div_exact(&p(&[1, 1])), Some(p(&[-3, 2])));
        assert_eq!(f.div_exact(&p(&[4, 1])), None);
        // contents multiply through
        assert_eq!(p(&[6, 6]).gcd(&p(&[4, 4])), p(&[2, 2]));
        assert_eq!(p(&[0, 1, 1, 1]).gcd(&p(&[1, 2, 1, 1])), Polynomial::one());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -3, 1]).to_string(), "x^3 - 3x^2 + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn shifts() {
        let a = p(&[1, 2]);
        assert_eq!(a.shift(2), p(&[0, 0, 1, 2]));
        assert_eq!(a.shift(2).unshift(2), Some(a.clone()));
        assert_eq!(a.unshift(1), None);
        assert_eq!(p(&[0, 4, 2]).valuation(), Some(1));
    }
}
