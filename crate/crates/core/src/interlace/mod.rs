//! Interlaced geometric continued fractions
//! `F(x,s) = [x, s/x, x^2, s/x^2, x^3, ...]` and their relatives.
//!
//! Numeric constructors work over [`Rational`] for concrete positive
//! integers; the `*_symbolic` constructors keep `x` as an indeterminate.

mod ab;
mod certificate;
mod gf;
mod identities;

pub use ab::{ab_polynomials, ab_values, limit_root, ABSequence, REFERENCE_ROWS};
pub use certificate::{
    certificate_sweep, characteristic_form, characteristic_limit, convergence_certificate,
    convergent_error, fibonacci_analogy_check, fibonacci_polynomial, Certificate,
    CharacteristicValue, FibonacciCheck, Parity, Side,
};
pub use gf::{gf_check, GfKind, GfReport};
pub use identities::{
    check_identity, run_suite, Identity, IdentityReport, PairResolution, Suite, SuiteReport,
};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed};

use crate::cf_engine::GcfSpec;
use crate::error::{Error, Result};
use crate::exact_algebra::{Polynomial, Rational, RationalFunction};

/// Parameters of `F(x,s)`, or of the `m`-interlaced family
/// `[x_1, ..., x_m, x_1^2, ..., x_m^2, ...]` when `family` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlaceParams {
    pub x: BigInt,
    pub s: BigInt,
    pub family: Option<Vec<BigInt>>,
}

impl InterlaceParams {
    pub fn new(x: impl Into<BigInt>, s: impl Into<BigInt>) -> Result<Self> {
        let (x, s) = (x.into(), s.into());
        if !x.is_positive() || !s.is_positive() {
            return Err(Error::domain(format!(
                "need x >= 1 and s >= 1, got x = {x}, s = {s}"
            )));
        }
        Ok(InterlaceParams { x, s, family: None })
    }

    pub fn family(xs: Vec<BigInt>) -> Result<Self> {
        if xs.is_empty() || xs.iter().any(|v| !v.is_positive()) {
            return Err(Error::domain("the m-family needs m >= 1 entries, all >= 1"));
        }
        Ok(InterlaceParams {
            x: xs[0].clone(),
            s: BigInt::one(),
            family: Some(xs),
        })
    }
}

fn pow(x: &BigInt, e: usize) -> BigInt {
    Pow::pow(x, e)
}

/// Partial quotient `j >= 0` of `F(x,s)`.
pub fn interlaced_quotient(x: &BigInt, s: &BigInt, j: usize) -> Rational {
    if j.is_multiple_of(2) {
        Rational::from_integer(pow(x, j / 2 + 1))
    } else {
        Rational::new(s.clone(), pow(x, j.div_ceil(2)))
    }
}

/// The spec of `F(x,s)` (or the `m`-family) as a simple continued fraction.
pub fn make_interlaced(params: &InterlaceParams) -> Result<GcfSpec<Rational>> {
    if let Some(xs) = &params.family {
        let xs = xs.clone();
        let m = xs.len();
        let q = move |j: usize| Rational::from_integer(pow(&xs[j % m], j / m + 1));
        return Ok(GcfSpec::simple(q(0), q));
    }
    let (x, s) = (params.x.clone(), params.s.clone());
    Ok(GcfSpec::simple(interlaced_quotient(&x, &s, 0), move |j| {
        interlaced_quotient(&x, &s, j)
    }))
}

/// `F(x,s)` with `x` symbolic: quotients `x^k` and `s / x^k`.
pub fn make_interlaced_symbolic(s: &BigInt) -> GcfSpec<RationalFunction> {
    let s = s.clone();
    GcfSpec::simple(RationalFunction::x_pow(1), move |j| {
        if j % 2 == 0 {
            RationalFunction::x_pow(j as i64 / 2 + 1)
        } else {
            RationalFunction::constant(s.clone()) * RationalFunction::x_pow(-(j.div_ceil(2) as i64))
        }
    })
}

/// `[1, x, 1, x^2, 1, x^3, ...]` with `x` symbolic.
pub fn make_one_x_symbolic() -> GcfSpec<Polynomial> {
    let q = |j: usize| {
        if j.is_multiple_of(2) {
            Polynomial::one()
        } else {
            Polynomial::monomial(1, j.div_ceil(2))
        }
    };
    GcfSpec::simple(q(0), q)
}

/// `x + x/s + 1/x + x/s + 1/x + ...`, the periodic presentation of `F(x,s)`.
pub fn make_tilde(params: &InterlaceParams) -> Result<GcfSpec<Rational>> {
    if params.family.is_some() {
        return Err(Error::Unsupported(
            "the periodic presentation exists only for the two-series family".into(),
        ));
    }
    let x = Rational::from_integer(params.x.clone());
    let s = Rational::from_integer(params.s.clone());
    let b0 = x.clone();
    Ok(GcfSpec::new(b0, move |j| {
        if j % 2 == 1 {
            (x.clone(), s.clone())
        } else {
            (Rational::one(), x.clone())
        }
    }))
}

/// The periodic presentation with `x` symbolic.
pub fn make_tilde_symbolic(s: &BigInt) -> GcfSpec<Polynomial> {
    let s = Polynomial::constant(s.clone());
    GcfSpec::new(Polynomial::x(), move |j| {
        if j % 2 == 1 {
            (Polynomial::x(), s.clone())
        } else {
            (Polynomial::one(), Polynomial::x())
        }
    })
}

/// Scaling `r_j = x^{(j+1)/2}` (odd `j`), `x^{-j/2}` (even `j`) that maps
/// `F(x,s)` to its periodic presentation.
pub fn tilde_scaling(j: usize) -> i64 {
    if j % 2 == 1 {
        (j as i64 + 1) / 2
    } else {
        -(j as i64) / 2
    }
}
