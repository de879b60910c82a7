use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Polynomial, Rational};

/// Quotient of two integer polynomials, kept in lowest terms with a
/// denominator whose leading coefficient is positive.
///
/// Used where continued-fraction terms are not polynomial, e.g. the `1/x^k`
/// quotients of `[x, 1/x, x^2, 1/x^2, ...]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Panics when `den` is zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        if den.leading().is_some_and(Signed::is_negative) {
            num = -num;
            den = -den;
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// `x^e` for any integer exponent.
    pub fn x_pow(e: i64) -> Self {
        let m = Polynomial::monomial(1, e.unsigned_abs() as usize);
        if e >= 0 {
            Self::from_poly(m)
        } else {
            RationalFunction {
                num: Polynomial::one(),
                den: m,
            }
        }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    /// `None` if the denominator vanishes at `v`.
    pub fn eval(&self, v: &Rational) -> Option<Rational> {
        let d = self.den.eval(v);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(v) / d)
    }

    pub fn recip(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::new(&self.num + &rhs.num, self.den);
        }
        Self::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for RationalFunction {
    type Output = Self;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip().expect("division by zero rational function")
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
