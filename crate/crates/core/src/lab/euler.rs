use num_bigint::BigInt;
use num_traits::One;

use crate::cf_engine::{real_simple_cf, RealSource};
use crate::error::{Error, Result};
use crate::exact_algebra::{BigFloat, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerReport {
    pub x: u64,
    pub terms: usize,
    pub precision: u32,
    pub expected: Vec<BigInt>,
    pub observed: Vec<BigInt>,
    pub first_mismatch: Option<usize>,
}

impl EulerReport {
    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// `[1, x-1, 1, 1, 3x-1, 1, 1, 5x-1, ...]`, the first `terms` quotients.
pub fn euler_pattern(x: u64, terms: usize) -> Vec<BigInt> {
    (0..terms)
        .map(|i| {
            if i >= 1 && (i - 1) % 3 == 0 {
                let m = (i - 1) / 3;
                BigInt::from(2 * m as u64 + 1) * x - 1
            } else {
                BigInt::one()
            }
        })
        .collect()
}

/// `sum_k x^-k / k!` to `bits` bits, summed exactly until the next term is
/// below `2^-(bits+8)`.
pub fn exp_inverse(x: u64, bits: u32) -> BigFloat {
    let bound = BigInt::one() << (bits as u64 + 8);
    let mut sum = Rational::one();
    let mut den = BigInt::one();
    for k in 1u64.. {
        den *= BigInt::from(k) * x;
        if den > bound {
            break;
        }
        sum += Rational::new(BigInt::one(), den.clone());
    }
    BigFloat::from_rational(&sum, bits)
}

/// Validated digits of `exp(1/x)` compared with [`euler_pattern`].
pub fn euler_check(x: u64, terms: usize, precision: u32) -> Result<EulerReport> {
    if x < 2 {
        return Err(Error::domain(format!("need x >= 2, got {x}")));
    }
    let producer = move |p: u32| -> Result<BigFloat> { Ok(exp_inverse(x, p)) };
    let e = real_simple_cf(&RealSource::Producer(&producer), precision, terms)?;
    if e.validated < terms {
        return Err(Error::PrecisionInsufficient(format!(
            "only {} of {terms} quotients of exp(1/{x}) validated at {precision} bits",
            e.validated
        )));
    }
    let expected = euler_pattern(x, terms);
    let first_mismatch = (0..terms).find(|&i| e.quotients[i] != expected[i]);
    Ok(EulerReport {
        x,
        terms,
        precision,
        expected,
        observed: e.quotients,
        first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn pattern_instances() {
        assert_eq!(
            euler_pattern(2, 12),
            ints(&[1, 1, 1, 1, 5, 1, 1, 9, 1, 1, 13, 1])
        );
        assert_eq!(euler_pattern(3, 8), ints(&[1, 2, 1, 1, 8, 1, 1, 14]));
        assert_eq!(euler_pattern(5, 1), ints(&[1]));
    }

    #[test]
    fn exp_half() {
        let r = euler_check(2, 12, 1024).unwrap();
        assert!(r.matches());
        assert_eq!(r.observed.len(), 12);
        assert!((exp_inverse(2, 64).to_f64() - 0.5f64.exp()).abs() < 1e-15);
    }

    #[test]
    fn small_x_range() {
        for x in 2..=6 {
            assert!(euler_check(x, 20, 512).unwrap().matches(), "x = {x}");
        }
        assert!(euler_check(3, 1, 64).unwrap().matches());
    }

    #[test]
    fn errors() {
        assert!(matches!(euler_check(1, 4, 256), Err(Error::Domain(_))));
        assert!(matches!(
            euler_check(2, 500, 64),
            Err(Error::PrecisionInsufficient(_))
        ));
    }
}
