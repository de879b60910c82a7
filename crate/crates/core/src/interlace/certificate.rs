use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use super::ab::{ab_values, limit_root};
use crate::cf_engine::{convergents, GcfSpec};
use crate::error::{Error, Result};
use crate::exact_algebra::{BigFloat, Polynomial, QuadExt, QuadraticSurd, Rational};
use crate::par::{self, Execution};

/// Which convergents: `F_k = A_{2k-1}/B_{2k-1}` or `F*_k = A_{2k-2}/B_{2k-2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Odd,
    Even,
}

impl Side {
    pub fn index(self, k: usize) -> usize {
        match self {
            Side::Odd => 2 * k - 1,
            Side::Even => 2 * k - 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Odd => "odd",
            Side::Even => "even",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(v: &str) -> Result<Self> {
        match v {
            "odd" => Ok(Side::Odd),
            "even" => Ok(Side::Even),
            _ => Err(Error::domain(format!(
                "side must be odd or even, got `{v}`"
            ))),
        }
    }
}

/// `P(x, A/B, s) B^2` at one convergent, with `P(x,z,s) = s z^2 - ((s+1)x-1) z - x`
/// and `B` the unreduced denominator `B_j(x,s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub x: BigInt,
    pub s: BigInt,
    pub k: usize,
    pub side: Side,
    pub numerator: BigInt,
    pub denominator: BigInt,
    pub residual: Rational,
    /// `s x^k` on the odd side, `-x^{k+1}` on the even side.
    pub predicted: Rational,
    /// Sign of `P` at the convergent.
    pub p_sign: Ordering,
    /// Position of the convergent relative to the limit.
    pub versus_root: Ordering,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.residual == self.predicted
    }

    /// Odd convergents lie above the limit with `P > 0`, even ones below with `P < 0`.
    pub fn brackets(&self) -> bool {
        match self.side {
            Side::Odd => self.p_sign == Ordering::Greater && self.versus_root == Ordering::Greater,
            Side::Even => self.p_sign == Ordering::Less && self.versus_root == Ordering::Less,
        }
    }
}

fn p_times_b2(x: &BigInt, s: &BigInt, a: &BigInt, b: &BigInt) -> Rational {
    let z = Rational::new(a.clone(), b.clone());
    let r = |v: &BigInt| Rational::from_integer(v.clone());
    let p = r(s) * &z * &z - r(&((s + 1u32) * x - 1u32)) * &z - r(x);
    p * r(&(b * b))
}

fn predicted(x: &BigInt, s: &BigInt, k: usize, side: Side) -> Rational {
    Rational::from_integer(match side {
        Side::Odd => s * Pow::pow(x, k),
        Side::Even => -Pow::pow(x, k + 1),
    })
}

fn build(
    x: &BigInt,
    s: &BigInt,
    k: usize,
    side: Side,
    a: &BigInt,
    b: &BigInt,
    z1: &QuadraticSurd,
) -> Certificate {
    let residual = p_times_b2(x, s, a, b);
    let z = Rational::new(a.clone(), b.clone());
    Certificate {
        x: x.clone(),
        s: s.clone(),
        k,
        side,
        numerator: a.clone(),
        denominator: b.clone(),
        p_sign: residual.cmp(&Rational::zero()),
        versus_root: z1.cmp_rational(&z).reverse(),
        predicted: predicted(x, s, k, side),
        residual,
    }
}

fn check_args(x: &BigInt, s: &BigInt, k: usize) -> Result<()> {
    if !x.is_positive() || !s.is_positive() || k == 0 {
        return Err(Error::domain(format!(
            "need x, s, k >= 1, got x = {x}, s = {s}, k = {k}"
        )));
    }
    Ok(())
}

/// Exact certificate at the `k`-th convergent of the given side. Errors with
/// an identity violation if the residual is not the predicted monomial.
pub fn convergence_certificate(
    x: &BigInt,
    s: &BigInt,
    k: usize,
    side: Side,
) -> Result<Certificate> {
    check_args(x, s, k)?;
    let j = side.index(k);
    let (a, b) = ab_values(x, s, j.max(3));
    let z1 = limit_root(x, s)?;
    let c = build(x, s, k, side, &a[j], &b[j], &z1);
    if !c.holds() {
        return Err(Error::IdentityViolation(format!(
            "certificate at x = {x}, s = {s}, k = {k}, {side}: {} != {}",
            c.residual, c.predicted
        )));
    }
    Ok(c)
}

/// Certificates for every `x` in `xs`, `s` in `ss`, `1 <= k <= kmax` and both
/// sides, ordered by `(x, s, k, side)`. Failures are returned, not raised.
pub fn certificate_sweep(
    xs: &[BigInt],
    ss: &[BigInt],
    kmax: usize,
    exec: Execution,
) -> Result<Vec<Certificate>> {
    let grid: Vec<(BigInt, BigInt)> = xs
        .iter()
        .flat_map(|x| ss.iter().map(move |s| (x.clone(), s.clone())))
        .collect();
    for (x, s) in &grid {
        check_args(x, s, kmax.max(1))?;
    }
    let rows = par::map_slice(exec, &grid, |(x, s)| -> Result<Vec<Certificate>> {
        let (a, b) = ab_values(x, s, (2 * kmax).max(3));
        let z1 = limit_root(x, s)?;
        Ok((1..=kmax)
            .flat_map(|k| [Side::Odd, Side::Even].map(|side| (k, side)))
            .map(|(k, side)| {
                let j = side.index(k);
                build(x, s, k, side, &a[j], &b[j], &z1)
            })
            .collect())
    });
    Ok(rows
        .into_iter()
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect())
}

/// `|A_j/B_j - z_1|` at the `k`-th convergent of `side`, at `prec` bits.
pub fn convergent_error(
    x: &BigInt,
    s: &BigInt,
    k: usize,
    side: Side,
    prec: u32,
) -> Result<BigFloat> {
    check_args(x, s, k)?;
    let j = side.index(k);
    let (a, b) = ab_values(x, s, j.max(3));
    let z = BigFloat::from_rational(&Rational::new(a[j].clone(), b[j].clone()), prec + 64);
    let z1 = limit_root(x, s)?.to_bigfloat(prec + 64);
    Ok((&z - &z1).abs().with_precision(prec))
}

/// Fibonacci polynomial: `F_0 = 0`, `F_1 = 1`, `F_{n+1} = x F_n + F_{n-1}`.
pub fn fibonacci_polynomial(n: usize) -> Polynomial {
    let (mut prev, mut cur) = (Polynomial::zero(), Polynomial::one());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &cur.shift(1) + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibonacciCheck {
    pub x: BigInt,
    pub n: usize,
    /// `[x, ..., x]` with `n` partial quotients.
    pub value: Rational,
    /// `u^2 - x u - 1` at `value`.
    pub lhs: Rational,
    /// `(-1)^n / F_n(x)^2`.
    pub rhs: Rational,
}

impl FibonacciCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn fibonacci_analogy_check(x: &BigInt, n: usize) -> Result<FibonacciCheck> {
    if n == 0 || !x.is_positive() {
        return Err(Error::domain("need n >= 1 and x >= 1"));
    }
    let xr = Rational::from_integer(x.clone());
    let q = xr.clone();
    let cf = GcfSpec::simple(xr.clone(), move |_| q.clone());
    let value = convergents(&cf, n)[n - 1]
        .value()
        .expect("positive denominators");
    let lhs = &value * &value - &xr * &value - Rational::one();
    let f = fibonacci_polynomial(n).eval_int(x);
    let sign = if n.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    Ok(FibonacciCheck {
        x: x.clone(),
        n,
        value,
        lhs,
        rhs: Rational::new(sign, &f * &f),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    /// `a_k = A_{2k}`, `b_k = B_{2k}`
    Even,
    /// `a_k = A_{2k-1}`, `b_k = B_{2k-1}`
    Odd,
}

impl FromStr for Parity {
    type Err = Error;
    fn from_str(v: &str) -> Result<Self> {
        match v {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            _ => Err(Error::domain(format!(
                "parity must be even or odd, got `{v}`"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicValue {
    pub x: BigInt,
    pub parity: Parity,
    pub k: usize,
    pub a: Rational,
    pub b: Rational,
}

struct Roots {
    l1: QuadExt,
    l2: QuadExt,
    int: Box<dyn Fn(i64) -> QuadExt>,
    x: QuadExt,
}

/// `lambda_{1,2} = (2x + 1 +- sqrt(4x^2 + 1)) / 2`, roots of
/// `lambda^2 - (2x+1) lambda + x`.
fn roots(x: &BigInt) -> Roots {
    let d: BigInt = 4u32 * x * x + 1u32;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let base = Rational::new(2u32 * x + 1u32, BigInt::from(2));
    let dd = d.clone();
    Roots {
        l1: QuadExt::new(base.clone(), half.clone(), d.clone()),
        l2: QuadExt::new(base, -half, d.clone()),
        int: Box::new(move |n| QuadExt::integer(n, dd.clone())),
        x: QuadExt::integer(x.clone(), d),
    }
}

/// Coefficients `(c1, c2, c1', c2')` of `a_k = c1 l1^k + c2 l2^k`,
/// `b_k = c1' l1^k + c2' l2^k`.
fn coefficients(r: &Roots, parity: Parity) -> Result<[QuadExt; 4]> {
    let (l1, l2, x) = (&r.l1, &r.l2, &r.x);
    let two = (r.int)(2);
    let four = (r.int)(4);
    let one = (r.int)(1);
    let xx = x.mul(x)?;
    Ok(match parity {
        Parity::Even => {
            let c = two.mul(&xx)?.add(x)?;
            let diff = l1.sub(l2)?;
            [
                l2.mul(x)?.sub(&c)?.div(&diff.neg())?,
                l1.mul(x)?.sub(&c)?.div(&diff)?,
                l2.sub(x)?.sub(&one)?.div(&diff.neg())?,
                l1.sub(x)?.sub(&one)?.div(&diff)?,
            ]
        }
        Parity::Odd => {
            let c = four.mul(&xx)?.add(x)?;
            let t = two.mul(x)?;
            let d1 = l1.mul(l2)?.sub(&l1.mul(l1)?)?;
            let d2 = l1.mul(l2)?.sub(&l2.mul(l2)?)?;
            let m = t.add(&one)?;
            [
                t.mul(l2)?.sub(&c)?.div(&d1)?,
                t.mul(l1)?.sub(&c)?.div(&d2)?,
                l2.sub(&m)?.div(&d1)?,
                l1.sub(&m)?.div(&d2)?,
            ]
        }
    })
}

/// `a_k`, `b_k` at `s = 1` from the characteristic-root solution of the
/// recurrence, cross-checked against the recurrence itself.
pub fn characteristic_form(x: &BigInt, parity: Parity, k: usize) -> Result<CharacteristicValue> {
    if !x.is_positive() || k == 0 {
        return Err(Error::domain("need x >= 1 and k >= 1"));
    }
    let r = roots(x);
    let [c1, c2, e1, e2] = coefficients(&r, parity)?;
    let (p1, p2) = (r.l1.pow(k as u64), r.l2.pow(k as u64));
    let a = c1.mul(&p1)?.add(&c2.mul(&p2)?)?;
    let b = e1.mul(&p1)?.add(&e2.mul(&p2)?)?;
    let j = match parity {
        Parity::Even => 2 * k,
        Parity::Odd => 2 * k - 1,
    };
    let (av, bv) = ab_values(x, &BigInt::one(), j.max(3));
    let (ra, rb) = (
        Rational::from_integer(av[j].clone()),
        Rational::from_integer(bv[j].clone()),
    );
    if a.as_rational() != Some(&ra) || b.as_rational() != Some(&rb) {
        return Err(Error::TheoremViolation(format!(
            "closed form gives a = {a}, b = {b} at x = {x}, k = {k}; recurrence gives {ra}, {rb}"
        )));
    }
    Ok(CharacteristicValue {
        x: x.clone(),
        parity,
        k,
        a: ra,
        b: rb,
    })
}

/// Limit of `a_k/b_k` from the dominant root:
/// `(l2 x - 2x^2 - x)/(l2 - x - 1)` for even, `(2x l2 - 4x^2 - x)/(l2 - 2x - 1)` for odd.
pub fn characteristic_limit(x: &BigInt, parity: Parity) -> Result<QuadExt> {
    let r = roots(x);
    let (l2, xv) = (&r.l2, &r.x);
    let xx = xv.mul(xv)?;
    let one = (r.int)(1);
    match parity {
        Parity::Even => {
            let n = l2.mul(xv)?.sub(&(r.int)(2).mul(&xx)?)?.sub(xv)?;
            n.div(&l2.sub(xv)?.sub(&one)?)
        }
        Parity::Odd => {
            let t = (r.int)(2).mul(xv)?;
            let n = t.mul(l2)?.sub(&(r.int)(4).mul(&xx)?)?.sub(xv)?;
            n.div(&l2.sub(&t)?.sub(&one)?)
        }
    }
}
