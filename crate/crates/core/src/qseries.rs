//! Reduced truncations `N_k/D_k` of `[1, x, 1, x^2, 1, x^3, ...]` and the
//! q-series their coefficients appear to settle on.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cf_engine::convergents;
use crate::error::{Error, Result};
use crate::exact_algebra::{Polynomial, PowerSeries, Rational};
use crate::interlace::make_one_x_symbolic;
use crate::par::{self, Execution};

/// `N/D` in lowest terms, the value of the first `k` partial quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedTruncation {
    pub k: usize,
    pub n: Polynomial,
    pub d: Polynomial,
}

fn reduce(k: usize, n: &Polynomial, d: &Polynomial) -> ReducedTruncation {
    let g = n.gcd(d);
    let (mut n, mut d) = (
        n.div_exact(&g).expect("gcd divides"),
        d.div_exact(&g).expect("gcd divides"),
    );
    if d.leading().is_some_and(Signed::is_negative) {
        n = -n;
        d = -d;
    }
    ReducedTruncation { k, n, d }
}

/// Truncations `k = 1..=kmax`.
pub fn truncations(kmax: usize, exec: Execution) -> Vec<ReducedTruncation> {
    let conv = convergents(&make_one_x_symbolic(), kmax);
    par::map_slice(exec, &conv, |c| {
        reduce(c.index + 1, &c.numerator, &c.denominator)
    })
}

/// The `k`-th truncation, `k >= 1`.
pub fn truncation_rational(k: usize) -> Result<ReducedTruncation> {
    if k == 0 {
        return Err(Error::domain("truncation length must be at least 1"));
    }
    Ok(truncations(k, Execution::Sequential).pop().expect("k >= 1"))
}

fn pochhammer_product(from: usize, to: usize) -> Polynomial {
    // (1 - x^from) ... (1 - x^to)
    (from..=to).fold(Polynomial::one(), |acc, i| {
        &acc * &(&Polynomial::one() - &Polynomial::monomial(1, i))
    })
}

fn series_sum(order: usize, k0: usize, den: impl Fn(usize) -> Polynomial) -> PowerSeries<Rational> {
    let mut acc = PowerSeries::zero(order);
    for k in k0.. {
        let e = k * (k + 1) / 2;
        if e >= order {
            break;
        }
        let inv = PowerSeries::from_polynomial(&den(k), order)
            .reciprocal()
            .expect("constant term 1");
        acc = acc.add(&PowerSeries::monomial(Rational::one(), e, order).mul(&inv));
    }
    acc
}

/// `sum_{k>=1} x^{k(k+1)/2} / (((1-x)...(1-x^{k-1}))^2 (1-x^k))`.
pub fn auluck_series(order: usize) -> PowerSeries<Rational> {
    series_sum(order, 1, |k| {
        let p = pochhammer_product(1, k - 1);
        &(&p * &p) * &pochhammer_product(k, k)
    })
}

/// `sum_{k>=1} x^{k(k+1)/2} / ((1-x)...(1-x^k))^2`.
pub fn ramanujan_series(order: usize) -> PowerSeries<Rational> {
    ramanujan_from(order, 1)
}

/// The same sum including its `k = 0` term `1`.
pub fn ramanujan_series_from_zero(order: usize) -> PowerSeries<Rational> {
    ramanujan_from(order, 0)
}

fn ramanujan_from(order: usize, k0: usize) -> PowerSeries<Rational> {
    series_sum(order, k0, |k| {
        let p = pochhammer_product(1, k);
        &p * &p
    })
}

/// Which polynomial sequence to compare, and against what.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Selector {
    /// `D_k` against the Auluck series, `k = 1..=kmax`.
    DAll,
    /// `D_{2k}` against the Auluck series.
    DEven,
    /// Reversed `D_{2k-1}` against reversed `D_{2k+1}`; no target series.
    DOddReversed,
    /// `N_{2k-1}` against the Ramanujan series.
    NOdd,
    /// `N_{2k}` against the Ramanujan series with its constant term.
    NEven,
}

impl Selector {
    pub const ALL: [Selector; 5] = [
        Selector::DAll,
        Selector::DEven,
        Selector::DOddReversed,
        Selector::NOdd,
        Selector::NEven,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Selector::DAll => "D-all",
            Selector::DEven => "D-even",
            Selector::DOddReversed => "D-odd-reversed",
            Selector::NOdd => "N-odd",
            Selector::NEven => "N-even",
        }
    }

    /// Truncation index used for row `k`.
    pub fn index(self, k: usize) -> usize {
        match self {
            Selector::DAll => k,
            Selector::DEven | Selector::NEven => 2 * k,
            Selector::DOddReversed | Selector::NOdd => 2 * k - 1,
        }
    }

    pub fn target(self) -> &'static str {
        match self {
            Selector::DAll | Selector::DEven => "auluck",
            Selector::NOdd => "ramanujan",
            Selector::NEven => "1 + ramanujan",
            Selector::DOddReversed => "next reversed entry",
        }
    }

    /// OEIS identifier of the associated coefficient sequence (metadata only).
    pub fn oeis(self) -> &'static str {
        match self {
            Selector::DAll | Selector::DEven => "A001524",
            Selector::DOddReversed => "A005576",
            Selector::NOdd | Selector::NEven => "A143184",
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Selector {
    type Err = Error;
    fn from_str(v: &str) -> Result<Self> {
        Selector::ALL
            .into_iter()
            .find(|s| s.name().eq_ignore_ascii_case(v))
            .ok_or_else(|| Error::domain(format!("unknown selector `{v}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationRow {
    pub k: usize,
    pub index: usize,
    pub poly: Polynomial,
    /// Length of the initial run of coefficients shared with the target.
    pub agreement: usize,
    /// Only for reversals: agreement of the untrimmed reversal.
    pub agreement_untrimmed: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationReport {
    pub selector: Selector,
    pub kmax: usize,
    pub order: usize,
    pub target: Option<PowerSeries<Rational>>,
    pub rows: Vec<StabilizationRow>,
}

impl StabilizationReport {
    pub fn nondecreasing(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[0].agreement <= w[1].agreement)
    }

    pub fn final_agreement(&self) -> usize {
        self.rows.last().map_or(0, |r| r.agreement)
    }

    /// Agreement never drops as `k` grows.
    pub fn consistent(&self) -> bool {
        self.nondecreasing()
    }
}

fn series_of(p: &Polynomial, order: usize) -> PowerSeries<Rational> {
    PowerSeries::from_polynomial(p, order)
}

/// Coefficient agreement of the selected polynomials with their target,
/// for `k = 1..=kmax`.
pub fn stabilization_report(
    selector: Selector,
    kmax: usize,
    order: usize,
    exec: Execution,
) -> StabilizationReport {
    let last = selector.index(kmax + 1);
    let tr = truncations(last, exec);
    let get = |i: usize| &tr[i - 1];
    let target = match selector {
        Selector::DAll | Selector::DEven => Some(auluck_series(order)),
        Selector::NOdd => Some(ramanujan_series(order)),
        Selector::NEven => Some(ramanujan_series_from_zero(order)),
        Selector::DOddReversed => None,
    };
    let rows = par::map_range(exec, 1..kmax + 1, |k| {
        let i = selector.index(k);
        match selector {
            Selector::DOddReversed => {
                let cur = &get(i).d;
                let next = &get(selector.index(k + 1)).d;
                let trimmed = |p: &Polynomial| series_of(&p.trim_low().reverse(), order);
                let untrimmed = |p: &Polynomial| series_of(&p.reverse(), order);
                StabilizationRow {
                    k,
                    index: i,
                    poly: cur.trim_low().reverse(),
                    agreement: trimmed(cur).agreement(&trimmed(next)),
                    agreement_untrimmed: Some(untrimmed(cur).agreement(&untrimmed(next))),
                }
            }
            _ => {
                let t = get(i);
                let p = match selector {
                    Selector::NOdd | Selector::NEven => &t.n,
                    _ => &t.d,
                };
                StabilizationRow {
                    k,
                    index: i,
                    poly: p.clone(),
                    agreement: series_of(p, order).agreement(target.as_ref().expect("has target")),
                    agreement_untrimmed: None,
                }
            }
        }
    });
    StabilizationReport {
        selector,
        kmax,
        order,
        target,
        rows,
    }
}

/// Integer coefficients of a rational series, if they all are integers.
pub fn integer_coefficients(s: &PowerSeries<Rational>) -> Option<Vec<BigInt>> {
    s.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

/// `gcd(N, D)` is a unit.
pub fn is_reduced(t: &ReducedTruncation) -> bool {
    let g = t.n.gcd(&t.d);
    g.degree() == Some(0) && g.coeff(0).abs().is_one() || t.n.is_zero() && t.d.is_one()
}
