use num_bigint::BigInt;
use num_traits::Pow;

use crate::cf_engine::{eval_gcf_numeric, GcfSpec};
use crate::error::{Error, Result};
use crate::exact_algebra::{BigFloat, Rational};

/// Largest number of `(x^k, y^-k)` pairs [`f_value`] will evaluate.
pub const DEFAULT_MAX_PAIRS: usize = 1 << 16;

const START_PAIRS: usize = 8;

#[derive(Clone, Debug)]
pub struct FValue {
    pub x: u64,
    pub y: u64,
    pub precision: u32,
    pub value: BigFloat,
    /// Distance to the next odd depth plus one unit of `2^-precision`.
    pub error_bound: BigFloat,
    /// Index of the last partial quotient used; always odd.
    pub depth: usize,
}

/// `[x, 1/y, x^2, 1/y^2, ...]`: `b_{2k} = x^{k+1}`, `b_{2k-1} = y^{-k}`.
pub fn f_spec(x: u64, y: u64) -> GcfSpec<Rational> {
    let (bx, by) = (BigInt::from(x), BigInt::from(y));
    GcfSpec::simple(Rational::from_integer(bx.clone()), move |j| {
        if j % 2 == 0 {
            Rational::from_integer(Pow::pow(&bx, (j / 2 + 1) as u32))
        } else {
            Rational::new(BigInt::from(1), Pow::pow(&by, j.div_ceil(2) as u32))
        }
    })
}

/// `F(x,y)` to `precision` bits with [`DEFAULT_MAX_PAIRS`].
pub fn f_value(x: u64, y: u64, precision: u32) -> Result<FValue> {
    f_value_with_budget(x, y, precision, DEFAULT_MAX_PAIRS)
}

/// Evaluates the fraction tail first, always stopping on a `y^-K` quotient,
/// and doubles `K` until the values at depths `2K-1` and `2K+1` differ by
/// less than `2^-precision`.
///
/// Only odd depths are compared: when `x < y` the even-depth convergents
/// approach the limit far more slowly than the odd ones.
pub fn f_value_with_budget(x: u64, y: u64, precision: u32, max_pairs: usize) -> Result<FValue> {
    if x == 0 || y == 0 {
        return Err(Error::domain(format!(
            "need x, y >= 1, got x = {x}, y = {y}"
        )));
    }
    if precision < 64 {
        return Err(Error::domain(format!(
            "precision {precision} is below 64 bits"
        )));
    }
    let spec = f_spec(x, y);
    let mut pairs = START_PAIRS.min(max_pairs.max(1));
    loop {
        let nv = eval_gcf_numeric(&spec, 2 * pairs - 1, precision)?;
        if nv.error_bound.abs_below_pow2(-(precision as i64)) {
            return Ok(FValue {
                x,
                y,
                precision,
                error_bound: &nv.error_bound + &BigFloat::pow2(-(precision as i64), precision),
                value: nv.value,
                depth: nv.depth,
            });
        }
        if pairs >= max_pairs {
            let e = nv.error_bound.magnitude_exponent().unwrap_or(0);
            return Err(Error::Budget(format!(
                "F({x},{y}) not settled after {pairs} pairs at {precision} bits; last bound < 2^{e}"
            )));
        }
        pairs = (2 * pairs).min(max_pairs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::QuadraticSurd;
    use crate::interlace::limit_root;

    #[test]
    fn first_quotients() {
        let s = f_spec(2, 3);
        assert_eq!(s.b0(), &Rational::from_integer(2.into()));
        assert_eq!(s.term(1).1, Rational::new(1.into(), 3.into()));
        assert_eq!(s.term(2).1, Rational::from_integer(4.into()));
        assert_eq!(s.term(5).1, Rational::new(1.into(), 27.into()));
    }

    #[test]
    fn diagonal_matches_limit_root() {
        for x in 1..=10u64 {
            let v = f_value(x, x, 256).unwrap();
            let z = limit_root(&x.into(), &1.into()).unwrap().to_bigfloat(256);
            assert!((&v.value - &z).abs_below_pow2(-200), "x = {x}");
            assert!(v.depth % 2 == 1);
        }
    }

    #[test]
    fn golden_ratio() {
        let v = f_value(1, 1, 128).unwrap();
        let phi = QuadraticSurd::new(1, 2, 5).unwrap().to_bigfloat(128);
        assert!((&v.value - &phi).abs_below_pow2(-120));
    }

    #[test]
    fn slow_pair_converges_on_odd_depths() {
        let v = f_value(1, 2, 128).unwrap();
        assert!((v.value.to_f64() - 2.242_481_092_860_144_6).abs() < 1e-12);
    }

    #[test]
    fn budget_and_domain_errors() {
        assert!(matches!(
            f_value_with_budget(1, 2, 4096, 8),
            Err(Error::Budget(_))
        ));
        assert!(matches!(f_value(0, 2, 128), Err(Error::Domain(_))));
        assert!(matches!(f_value(2, 2, 32), Err(Error::Domain(_))));
    }
}
