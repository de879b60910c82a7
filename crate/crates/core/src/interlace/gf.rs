use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::ab::ab_polynomials;
use crate::error::{Error, Result};
use crate::exact_algebra::{Polynomial, PowerSeries};

/// Which of the four generating functions `sum_j C_j t^j` to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GfKind {
    /// `C_j = A_{2j}`, numerator `x`
    AEven,
    /// `C_j = A_{2j+1}`, numerator `x((s+1) - t)`
    AOdd,
    /// `C_j = B_{2j}`, numerator `1 - x t`
    BEven,
    /// `C_j = B_{2j+1}`, numerator `s`
    BOdd,
}

impl GfKind {
    pub const ALL: [GfKind; 4] = [GfKind::AEven, GfKind::AOdd, GfKind::BEven, GfKind::BOdd];

    pub fn name(self) -> &'static str {
        match self {
            GfKind::AEven => "A-even",
            GfKind::AOdd => "A-odd",
            GfKind::BEven => "B-even",
            GfKind::BOdd => "B-odd",
        }
    }

    fn numerator(self, s: &BigInt, order: usize) -> PowerSeries<Polynomial> {
        let x = Polynomial::x();
        let c = match self {
            GfKind::AEven => vec![x],
            GfKind::AOdd => vec![x.scale(&(s + 1u32)), -x],
            GfKind::BEven => vec![Polynomial::one(), -x],
            GfKind::BOdd => vec![Polynomial::constant(s.clone())],
        };
        PowerSeries::new(c, order)
    }

    fn offset(self) -> usize {
        match self {
            GfKind::AEven | GfKind::BEven => 0,
            GfKind::AOdd | GfKind::BOdd => 1,
        }
    }
}

impl fmt::Display for GfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GfKind {
    type Err = Error;
    fn from_str(v: &str) -> Result<Self> {
        GfKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(v))
            .ok_or_else(|| Error::domain(format!("unknown generating function `{v}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfReport {
    pub kind: GfKind,
    pub s: BigInt,
    pub order: usize,
    /// `(1 - ((s+1)x+1) t + x t^2) * sum_{j<order} C_j t^j - numerator`, mod `t^order`.
    pub residual: PowerSeries<Polynomial>,
}

impl GfReport {
    /// Largest `n` such that the residual vanishes through `t^n`.
    pub fn vanishes_through(&self) -> Option<usize> {
        match self.residual.first_nonzero() {
            Some(0) => None,
            Some(n) => Some(n - 1),
            None => self.order.checked_sub(1),
        }
    }

    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Multiplies the coefficient series by the common denominator and
/// subtracts the claimed numerator. Every coefficient below `t^order` is
/// exact, so a correct generating function leaves an identically zero residual.
pub fn gf_check(kind: GfKind, s: &BigInt, order: usize) -> GfReport {
    let ab = ab_polynomials(s, 2 * order + 1);
    let coeffs: Vec<Polynomial> = (0..order)
        .map(|j| {
            let i = 2 * j + kind.offset();
            match kind {
                GfKind::AEven | GfKind::AOdd => ab.a(i).clone(),
                GfKind::BEven | GfKind::BOdd => ab.b(i).clone(),
            }
        })
        .collect();
    let series = PowerSeries::new(coeffs, order);
    let den = PowerSeries::new(
        vec![
            Polynomial::one(),
            -Polynomial::new(vec![BigInt::one(), s + 1u32]),
            Polynomial::x(),
        ],
        order,
    );
    let residual = den.mul(&series).sub(&kind.numerator(s, order));
    GfReport {
        kind,
        s: s.clone(),
        order,
        residual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_kinds_vanish() {
        for s in 1..4 {
            for kind in GfKind::ALL {
                let r = gf_check(kind, &BigInt::from(s), 8);
                assert!(r.holds(), "{kind} at s = {s}: {:?}", r.residual);
                assert_eq!(r.vanishes_through(), Some(7));
            }
        }
    }

    #[test]
    fn order_one_is_trivial() {
        let r = gf_check(GfKind::BOdd, &BigInt::from(3), 1);
        assert!(r.holds());
        assert_eq!(r.residual.order(), 1);
    }

    #[test]
    fn wrong_numerator_is_detected() {
        let mut r = gf_check(GfKind::AEven, &BigInt::from(1), 5);
        r.residual = r
            .residual
            .add(&PowerSeries::monomial(Polynomial::one(), 2, 5));
        assert!(!r.holds());
        assert_eq!(r.vanishes_through(), Some(1));
    }

    #[test]
    fn kind_names_parse() {
        assert_eq!("b-odd".parse::<GfKind>().unwrap(), GfKind::BOdd);
        assert!("c-odd".parse::<GfKind>().is_err());
    }
}
