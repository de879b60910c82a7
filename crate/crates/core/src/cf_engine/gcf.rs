use std::fmt;
use std::sync::Arc;

use super::CfDomain;
use crate::error::{Error, Result};

/// Term rule `j -> (a_j, b_j)` for `j >= 1`.
pub type TermRule<T> = Arc<dyn Fn(usize) -> (T, T) + Send + Sync>;

/// `b0 + K_{j>=1}(a_j / b_j)` over the domain `T`.
#[derive(Clone)]
pub struct GcfSpec<T> {
    b0: T,
    rule: TermRule<T>,
}

impl<T: CfDomain> GcfSpec<T> {
    pub fn new(b0: T, rule: impl Fn(usize) -> (T, T) + Send + Sync + 'static) -> Self {
        GcfSpec {
            b0,
            rule: Arc::new(rule),
        }
    }

    /// Simple continued fraction `[b0; b1, b2, ...]`, i.e. every `a_j = 1`.
    pub fn simple(b0: T, quotient: impl Fn(usize) -> T + Send + Sync + 'static) -> Self {
        Self::new(b0, move |j| (T::one(), quotient(j)))
    }

    pub fn b0(&self) -> &T {
        &self.b0
    }

    /// `(a_j, b_j)`; `j` must be at least 1.
    pub fn term(&self, j: usize) -> (T, T) {
        debug_assert!(j >= 1);
        (self.rule)(j)
    }

    pub fn with_b0(&self, b0: T) -> Self {
        GcfSpec {
            b0,
            rule: self.rule.clone(),
        }
    }

    /// Apply `f` to `b0` and every term.
    pub fn map<U: CfDomain>(&self, f: impl Fn(&T) -> U + Send + Sync + 'static) -> GcfSpec<U> {
        let rule = self.rule.clone();
        let f = Arc::new(f);
        let g = f.clone();
        GcfSpec {
            b0: f(&self.b0),
            rule: Arc::new(move |j| {
                let (a, b) = rule(j);
                (g(&a), g(&b))
            }),
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for GcfSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GcfSpec")
            .field("b0", &self.b0)
            .finish_non_exhaustive()
    }
}

/// `A_j / B_j`, the value of the fraction cut after the `j`-th term.
#[derive(Clone, Debug, PartialEq)]
pub struct Convergent<T> {
    pub index: usize,
    pub numerator: T,
    pub denominator: T,
}

impl<T: CfDomain> Convergent<T> {
    /// Equality of `A/B` as fractions, by cross multiplication.
    pub fn value_eq(&self, other: &Self) -> bool {
        self.numerator.mul(&other.denominator) == other.numerator.mul(&self.denominator)
    }
}

impl Convergent<crate::exact_algebra::Rational> {
    pub fn value(&self) -> Option<crate::exact_algebra::Rational> {
        (!CfDomain::is_zero(&self.denominator)).then(|| &self.numerator / &self.denominator)
    }
}

/// Convergents `0..n` by
/// `A_j = b_j A_{j-1} + a_j A_{j-2}`, `B_j = b_j B_{j-1} + a_j B_{j-2}`,
/// seeded with `A_{-1} = 1`, `B_{-1} = 0`, `A_0 = b0`, `B_0 = 1`.
///
/// Zero denominators are kept as they are.
pub fn convergents<T: CfDomain>(cf: &GcfSpec<T>, n: usize) -> Vec<Convergent<T>> {
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    let (mut a_prev, mut b_prev) = (T::one(), T::zero());
    let (mut a_cur, mut b_cur) = (cf.b0.clone(), T::one());
    out.push(Convergent {
        index: 0,
        numerator: a_cur.clone(),
        denominator: b_cur.clone(),
    });
    for j in 1..n {
        let (aj, bj) = cf.term(j);
        let a_next = bj.mul(&a_cur).add(&aj.mul(&a_prev));
        let b_next = bj.mul(&b_cur).add(&aj.mul(&b_prev));
        a_prev = std::mem::replace(&mut a_cur, a_next);
        b_prev = std::mem::replace(&mut b_cur, b_next);
        out.push(Convergent {
            index: j,
            numerator: a_cur.clone(),
            denominator: b_cur.clone(),
        });
    }
    out
}

/// Checks `A_j B_{j-1} - A_{j-1} B_j = (-1)^{j-1} a_1 ... a_j` for each
/// consecutive pair of `convs`, which must start at index 0.
pub fn check_determinant<T: CfDomain>(cf: &GcfSpec<T>, convs: &[Convergent<T>]) -> Result<()> {
    let mut prod = T::one();
    for j in 1..convs.len() {
        prod = prod.mul(&cf.term(j).0);
        let (p, c) = (&convs[j - 1], &convs[j]);
        let lhs = c
            .numerator
            .mul(&p.denominator)
            .sub(&p.numerator.mul(&c.denominator));
        let rhs = if j % 2 == 1 { prod.clone() } else { prod.neg() };
        if lhs != rhs {
            return Err(Error::IdentityViolation(format!(
                "determinant relation fails at j = {j}: {lhs:?} != {rhs:?}"
            )));
        }
    }
    Ok(())
}

/// Rescaled fraction with `c_j = r_{j-1} r_j a_j`, `d_j = r_j b_j`.
///
/// `r(0)` must be one, and `r(j)` is checked to be nonzero for
/// `1 <= j <= validate_upto`. The returned rule panics if it is later asked
/// for a term whose `r_j` vanishes.
pub fn equivalence_transform<T: CfDomain>(
    cf: &GcfSpec<T>,
    r: impl Fn(usize) -> T + Send + Sync + 'static,
    validate_upto: usize,
) -> Result<GcfSpec<T>> {
    if r(0) != T::one() {
        return Err(Error::domain("equivalence transform needs r_0 = 1"));
    }
    if let Some(j) = (1..=validate_upto).find(|&j| r(j).is_zero()) {
        return Err(Error::domain(format!(
            "equivalence transform with r_{j} = 0"
        )));
    }
    let rule = cf.rule.clone();
    Ok(GcfSpec {
        b0: cf.b0.clone(),
        rule: Arc::new(move |j| {
            let (a, b) = rule(j);
            let (rp, rj) = (r(j - 1), r(j));
            assert!(!rj.is_zero(), "equivalence transform with r_{j} = 0");
            (rp.mul(&rj).mul(&a), rj.mul(&b))
        }),
    })
}
