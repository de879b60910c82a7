use num_bigint::BigInt;
use num_traits::One;

use crate::cf_engine::{eval_gcf_numeric, surd_simple_cf, GcfSpec, SimpleCfExpansion};
use crate::error::{Error, Result};
use crate::exact_algebra::{is_perfect_square, BigFloat, QuadExt, QuadraticSurd, Rational};
use crate::interlace::{interlaced_quotient, limit_root};

/// Expansions for the roots `x0` (near `-1`) and `x1` (near `-3a`) of
/// `P(a,x) = x^2 + (3a+3)x + (3a+5)`.
///
/// `r` is defined by `x1 = -3a - r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPatternReport {
    pub a: BigInt,
    pub terms: usize,
    /// `9a^2 + 6a - 11`
    pub discriminant: BigInt,
    pub neg_x0: QuadraticSurd,
    pub r: QuadraticSurd,
    pub neg_x0_cf: SimpleCfExpansion,
    pub r_cf: SimpleCfExpansion,
}

pub fn quadratic_pattern(a: &BigInt, terms: usize) -> Result<QuadraticPatternReport> {
    if a < &BigInt::from(2) {
        return Err(Error::domain(format!("need a >= 2, got {a}")));
    }
    let b = a * 3 + 3;
    let d = &b * &b - (a * 3 + 5) * 4;
    if is_perfect_square(&d) {
        return Err(Error::DegenerateRoot(d.to_string()));
    }
    // -x0 = (b - sqrt d)/2 = (-b + sqrt d)/(-2);  r = -x1 - 3a = (3 - 3a + sqrt d)/2
    let neg_x0 = QuadraticSurd::new(-&b, -2, d.clone())?;
    let r = QuadraticSurd::new(3 - a * 3, 2, d.clone())?;
    Ok(QuadraticPatternReport {
        a: a.clone(),
        terms,
        neg_x0_cf: surd_simple_cf(&neg_x0, terms),
        r_cf: surd_simple_cf(&r, terms),
        discriminant: d,
        neg_x0,
        r,
    })
}

/// `[1, a, 3, (a-1)/3, 9, (a-1)/9, ...]`, that is `[1, a, F(3, a-1)]`.
pub fn inadmissible_spec(a: &BigInt) -> GcfSpec<Rational> {
    let a = a.clone();
    let (x, s) = (BigInt::from(3), &a - 1);
    GcfSpec::simple(Rational::one(), move |j| match j {
        1 => Rational::from_integer(a.clone()),
        _ => interlaced_quotient(&x, &s, j - 2),
    })
}

#[derive(Clone, Debug)]
pub struct InadmissibleReport {
    pub a: BigInt,
    pub precision: u32,
    pub depth: usize,
    pub value: BigFloat,
    pub difference: BigFloat,
    /// `1 + 1/(a + 1/z)` with `z = limit_root(3, a-1)` is exactly a root
    /// of `P(a, -w)`, and numerically the one equal to `-x0`.
    pub exact: bool,
}

impl InadmissibleReport {
    pub fn agrees(&self) -> bool {
        self.difference.abs_below_pow2(-(self.precision as i64) + 8)
    }
}

/// Numeric value of [`inadmissible_spec`] against `-x0`, plus the exact check.
pub fn inadmissible_agreement(a: &BigInt, precision: u32) -> Result<InadmissibleReport> {
    let pattern = quadratic_pattern(a, 1)?;
    let target = pattern.neg_x0.to_bigfloat(precision);
    let spec = inadmissible_spec(a);
    let mut depth = 9;
    let nv = loop {
        let nv = eval_gcf_numeric(&spec, depth, precision)?;
        if nv.error_bound.abs_below_pow2(-(precision as i64)) {
            break nv;
        }
        if depth > 1 << 14 {
            return Err(Error::Budget(format!(
                "inadmissible form not settled at depth {depth}"
            )));
        }
        depth = 2 * depth + 1;
    };

    let z = limit_root(&BigInt::from(3), &(a - 1))?.to_quad_ext();
    let rad = z.d().clone();
    let k = |n: BigInt| QuadExt::integer(n, rad.clone());
    let w = k(a.clone()).add(&z.inv()?)?.inv()?.add(&k(BigInt::one()))?;
    let p_at = w.mul(&w)?.sub(&w.mul(&k(a * 3 + 3))?)?.add(&k(a * 3 + 5))?;
    let close = {
        let wf = &BigFloat::from_rational(w.a(), precision)
            + &(&BigFloat::from_rational(w.b(), precision)
                * &BigFloat::from_bigint(&rad, precision).sqrt());
        (&wf - &target).abs().to_f64() < 0.5
    };

    Ok(InadmissibleReport {
        a: a.clone(),
        precision,
        depth: nv.depth,
        difference: (&nv.value - &target).abs(),
        value: nv.value,
        exact: p_at.is_zero() && close,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn million() {
        let a = BigInt::from(1_000_000);
        let r = quadratic_pattern(&a, 18).unwrap();
        assert_eq!(
            r.neg_x0_cf.quotients,
            ints(&[
                1, 1000000, 3, 333333, 9, 111111, 27, 37037, 81, 12345, 1, 2, 26, 1, 2, 4114, 1, 8
            ])
        );
        assert_eq!(
            r.r_cf.expand(11),
            ints(&[1, 1, 999999, 3, 333333, 9, 111111, 27, 37037, 81, 12345])
        );
    }

    #[test]
    fn larger_budget_extends() {
        let a = BigInt::from(10);
        let short = quadratic_pattern(&a, 10).unwrap();
        let long = quadratic_pattern(&a, 200).unwrap();
        assert_eq!(long.neg_x0_cf.expand(10), short.neg_x0_cf.expand(10));
        assert!(long.neg_x0_cf.period.is_some());
        assert_eq!(long.discriminant, BigInt::from(949));
    }

    #[test]
    fn inadmissible_form_agrees() {
        for a in [7, 10, 1_000_000] {
            let r = inadmissible_agreement(&BigInt::from(a), 256).unwrap();
            assert!(
                r.agrees(),
                "a = {a}: {:?}",
                r.difference.magnitude_exponent()
            );
            assert!(r.exact, "a = {a}");
        }
    }

    #[test]
    fn small_a_rejected() {
        assert!(matches!(
            quadratic_pattern(&BigInt::from(1), 5),
            Err(Error::Domain(_))
        ));
    }
}
