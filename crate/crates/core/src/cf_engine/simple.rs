//! Simple continued fraction expansions.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::{BigFloat, QuadraticSurd, Rational};

/// Partial quotients `[q0; q1, q2, ...]` of a real number.
///
/// `quotients` holds only trusted quotients, so `validated == quotients.len()`.
/// `period = Some((pre, len))` means `q[i + len] = q[i]` for all `i >= pre`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleCfExpansion {
    pub quotients: Vec<BigInt>,
    pub period: Option<(usize, usize)>,
    pub validated: usize,
    /// The expansion ended because the value is rational.
    pub terminated: bool,
}

impl SimpleCfExpansion {
    /// Quotient `i`, continuing through the period when one is known.
    pub fn quotient(&self, i: usize) -> Option<&BigInt> {
        if let Some(q) = self.quotients.get(i) {
            return Some(q);
        }
        let (pre, len) = self.period?;
        self.quotients.get(pre + (i - pre) % len)
    }

    /// First `n` quotients, or fewer if the expansion is not long enough and
    /// has no period.
    pub fn expand(&self, n: usize) -> Vec<BigInt> {
        (0..n).map_while(|i| self.quotient(i).cloned()).collect()
    }

    /// Whether every quotient after the first is at least one.
    pub fn is_admissible(&self) -> bool {
        self.quotients.iter().skip(1).all(Signed::is_positive)
    }
}

/// Exact expansion of a quadratic surd with period detection on the
/// `(P, Q)` state. Stops at the first repeated state or after `max_terms`
/// quotients, whichever comes first.
pub fn surd_simple_cf(u: &QuadraticSurd, max_terms: usize) -> SimpleCfExpansion {
    let mut seen = HashMap::new();
    let mut quotients = Vec::new();
    let mut cur = u.clone();
    let mut period = None;
    while quotients.len() < max_terms {
        if let Some(&i0) = seen.get(&cur.state()) {
            period = Some((i0, quotients.len() - i0));
            break;
        }
        seen.insert(cur.state(), quotients.len());
        let a = cur.floor();
        cur = cur.invert_shifted(&a);
        quotients.push(a);
    }
    if period.is_none() && seen.contains_key(&cur.state()) {
        let i0 = seen[&cur.state()];
        period = Some((i0, quotients.len() - i0));
    }
    SimpleCfExpansion {
        validated: quotients.len(),
        quotients,
        period,
        terminated: false,
    }
}

/// Re-expands `u` from the declared periodic state and checks that the
/// state recurs after one period with the same quotients.
pub fn verify_surd_period(u: &QuadraticSurd, exp: &SimpleCfExpansion) -> bool {
    let Some((pre, len)) = exp.period else {
        return false;
    };
    let mut cur = u.clone();
    for _ in 0..pre {
        let a = cur.floor();
        cur = cur.invert_shifted(&a);
    }
    let start = cur.state();
    for i in 0..len {
        let a = cur.floor();
        if exp.quotients.get(pre + i) != Some(&a) {
            return false;
        }
        cur = cur.invert_shifted(&a);
    }
    cur.state() == start
}

fn euclid(r: &Rational, max_terms: usize) -> (Vec<BigInt>, bool) {
    let (mut n, mut d) = (r.numer().clone(), r.denom().clone());
    let mut out = Vec::new();
    while !d.is_zero() && out.len() < max_terms {
        let (q, rem) = n.div_mod_floor(&d);
        out.push(q);
        n = std::mem::replace(&mut d, rem);
    }
    (out, d.is_zero())
}

/// A real number to expand.
pub enum RealSource<'a> {
    Exact(Rational),
    /// Returns an approximation good to about the requested number of bits.
    Producer(&'a (dyn Fn(u32) -> Result<BigFloat> + Sync)),
}

/// Simple continued fraction of a real value.
///
/// Exact rationals are expanded by Euclid's algorithm. Producers are sampled
/// at `precision` and `2 * precision` bits, each sample is expanded exactly,
/// and only the common prefix (minus a final quotient of a sample that ran
/// out) is kept. This is a heuristic: two independent roundings would have
/// to agree on a wrong quotient.
pub fn real_simple_cf(
    source: &RealSource<'_>,
    precision: u32,
    max_terms: usize,
) -> Result<SimpleCfExpansion> {
    match source {
        RealSource::Exact(r) => {
            let (quotients, terminated) = euclid(r, max_terms);
            Ok(SimpleCfExpansion {
                validated: quotients.len(),
                quotients,
                period: None,
                terminated,
            })
        }
        RealSource::Producer(f) => {
            let lo = f(precision)?.to_rational();
            let hi = f(precision.saturating_mul(2))?.to_rational();
            let (c1, t1) = euclid(&lo, max_terms + 1);
            let (c2, t2) = euclid(&hi, max_terms + 1);
            let usable = |c: &Vec<BigInt>, t: bool| {
                if t {
                    c.len().saturating_sub(1)
                } else {
                    c.len()
                }
            };
            let limit = usable(&c1, t1).min(usable(&c2, t2)).min(max_terms);
            let n = (0..limit).take_while(|&i| c1[i] == c2[i]).count();
            if n == 0 {
                return Err(Error::PrecisionInsufficient(format!(
                    "no partial quotient agrees between {precision} and {} bits",
                    precision.saturating_mul(2)
                )));
            }
            let mut quotients = c1;
            quotients.truncate(n);
            Ok(SimpleCfExpansion {
                validated: n,
                quotients,
                period: None,
                terminated: false,
            })
        }
    }
}

/// Smallest `(pre, len)` such that `q[pre..]` repeats with period `len`,
/// holds at least `min_reps` full periods, and covers at least half of `q`.
pub fn find_suffix_period<T: PartialEq>(q: &[T], min_reps: usize) -> Option<(usize, usize)> {
    let n = q.len();
    let min_reps = min_reps.max(1);
    (1..=n / min_reps).find_map(|len| {
        let mut pre = n - len;
        while pre > 0 && q[pre - 1] == q[pre - 1 + len] {
            pre -= 1;
        }
        let tail = n - pre;
        (tail >= min_reps * len && 2 * tail >= n).then_some((pre, len))
    })
}

/// Whether `q[i] == q[i - len]` for every `i >= pre + len`.
pub fn replay_period<T: PartialEq>(q: &[T], pre: usize, len: usize) -> bool {
    len > 0 && pre <= q.len() && (pre + len..q.len()).all(|i| q[i] == q[i - len])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rat;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn sqrt2() {
        let u = QuadraticSurd::sqrt(2).unwrap();
        let e = surd_simple_cf(&u, 50);
        assert_eq!(e.quotients, ints(&[1, 2]));
        assert_eq!(e.period, Some((1, 1)));
        assert_eq!(e.expand(5), ints(&[1, 2, 2, 2, 2]));
        assert!(verify_surd_period(&u, &e));
    }

    #[test]
    fn golden_ratio() {
        let u = QuadraticSurd::new(1, 2, 5).unwrap();
        let e = surd_simple_cf(&u, 50);
        assert_eq!(e.period, Some((0, 1)));
        assert_eq!(e.expand(6), ints(&[1; 6]));
        assert!(verify_surd_period(&u, &e));
    }

    #[test]
    fn longer_period() {
        // sqrt(19) = [4; 2, 1, 3, 1, 2, 8]
        let u = QuadraticSurd::sqrt(19).unwrap();
        let e = surd_simple_cf(&u, 50);
        assert_eq!(e.quotients, ints(&[4, 2, 1, 3, 1, 2, 8]));
        assert_eq!(e.period, Some((1, 6)));
        assert!(verify_surd_period(&u, &e));
    }

    #[test]
    fn negative_surd() {
        // -sqrt(2) = [-2; 1, 1, 2, 2, ...]
        let u = QuadraticSurd::sqrt(2).unwrap().negate();
        let e = surd_simple_cf(&u, 50);
        assert_eq!(e.expand(5), ints(&[-2, 1, 1, 2, 2]));
        assert!(e.is_admissible());
    }

    #[test]
    fn budget_without_period() {
        let u = QuadraticSurd::sqrt(19).unwrap();
        let e = surd_simple_cf(&u, 3);
        assert_eq!(e.quotients.len(), 3);
        assert_eq!(e.period, None);
    }

    #[test]
    fn rational_terminates() {
        let e = real_simple_cf(&RealSource::Exact(rat(7, 3)), 64, 10).unwrap();
        assert_eq!(e.quotients, ints(&[2, 3]));
        assert!(e.terminated);
    }

    #[test]
    fn producer_prefix_is_validated() {
        let f = |p: u32| Ok(QuadraticSurd::sqrt(7).unwrap().to_bigfloat(p));
        let e = real_simple_cf(&RealSource::Producer(&f), 256, 40).unwrap();
        assert_eq!(e.quotients.len(), 40);
        assert_eq!(e.expand(5), ints(&[2, 1, 1, 1, 4]));
    }

    #[test]
    fn producer_too_coarse() {
        let f = |_: u32| Err(Error::Budget("never".into()));
        assert!(real_simple_cf(&RealSource::Producer(&f), 64, 5).is_err());
    }

    #[test]
    fn suffix_period_heuristic() {
        let q = [5, 1, 2, 3, 1, 2, 3, 1, 2, 3];
        assert_eq!(find_suffix_period(&q, 2), Some((1, 3)));
        assert!(replay_period(&q, 1, 3));
        assert_eq!(find_suffix_period(&[1, 2, 3, 4, 5, 6], 2), None);
        // A repeat that covers too little of the prefix does not count.
        assert_eq!(find_suffix_period(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 1], 2), None);
    }
}
