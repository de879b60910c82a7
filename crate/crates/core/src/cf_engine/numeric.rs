use super::GcfSpec;
use crate::error::{Error, Result};
use crate::exact_algebra::{BigFloat, Rational};

/// A floating value together with a heuristic error bound.
#[derive(Clone, Debug)]
pub struct NumericValue {
    pub value: BigFloat,
    pub error_bound: BigFloat,
    pub depth: usize,
}

const GUARD_BITS: u32 = 32;

fn backward(cf: &GcfSpec<Rational>, depth: usize, prec: u32) -> Result<BigFloat> {
    let (_, bd) = cf.term(depth);
    let mut t = BigFloat::from_rational(&bd, prec);
    for j in (1..=depth).rev() {
        if t.is_zero() {
            return Err(Error::SingularEvaluation { level: j });
        }
        let (aj, _) = cf.term(j);
        let prev = if j == 1 {
            cf.b0().clone()
        } else {
            cf.term(j - 1).1
        };
        let q = &BigFloat::from_rational(&aj, prec) / &t;
        t = &BigFloat::from_rational(&prev, prec) + &q;
    }
    Ok(t)
}

/// Tail-first evaluation of `b0 + K_{j=1..depth}(a_j/b_j)` at `precision`
/// bits. The error bound is the distance to the depth `depth + 2` value.
pub fn eval_gcf_numeric(
    cf: &GcfSpec<Rational>,
    depth: usize,
    precision: u32,
) -> Result<NumericValue> {
    if depth == 0 {
        return Err(Error::domain("evaluation depth must be at least 1"));
    }
    let work = precision + GUARD_BITS;
    let v = backward(cf, depth, work)?;
    let w = backward(cf, depth + 2, work)?;
    Ok(NumericValue {
        error_bound: (&v - &w).abs().with_precision(precision),
        value: v.with_precision(precision),
        depth,
    })
}
