use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::fvalue::f_value;
use crate::cf_engine::{
    find_suffix_period, real_simple_cf, replay_period, surd_simple_cf, RealSource,
};
use crate::error::{Error, Result};
use crate::exact_algebra::{BigFloat, QuadraticSurd};
use crate::interlace::limit_root;
use crate::par::{self, Execution};

/// Periodicity verdict over the validated prefix. Heuristic: it needs two
/// full repetitions covering at least half the prefix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    PeriodFound { preperiod: usize, period: usize },
    NoPeriodWithinBudget,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::PeriodFound { preperiod, period } => {
                write!(f, "period-found({preperiod}, {period})")
            }
            Verdict::NoPeriodWithinBudget => f.write_str("no-period-within-budget"),
        }
    }
}

/// Exact comparison for a diagonal row, whose value is `limit_root(x, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ControlCheck {
    pub root: QuadraticSurd,
    pub exact_period: Option<(usize, usize)>,
    /// The validated prefix equals the exact expansion.
    pub prefix_agrees: bool,
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub x: u64,
    pub y: u64,
    pub precision: u32,
    pub max_terms: usize,
    pub quotients: Vec<BigInt>,
    pub verdict: Verdict,
    pub max_quotient: Option<BigInt>,
    pub geometric_mean: Option<f64>,
    pub control: Option<ControlCheck>,
    /// Set when the value could not be produced or no digit validated.
    pub flag: Option<String>,
}

impl ScanReport {
    pub fn is_control(&self) -> bool {
        self.x == self.y
    }

    pub fn validated(&self) -> usize {
        self.quotients.len()
    }

    /// Replays a reported period over the quotients.
    pub fn replay(&self) -> bool {
        match self.verdict {
            Verdict::PeriodFound { preperiod, period } => {
                replay_period(&self.quotients, preperiod, period)
            }
            Verdict::NoPeriodWithinBudget => true,
        }
    }
}

fn ln_bigint(n: &BigInt) -> f64 {
    match n.to_f64() {
        Some(v) if v.is_finite() => v.ln(),
        _ => {
            let shift = n.bits() - 64;
            (n >> shift).to_f64().unwrap_or(f64::MAX).ln() + shift as f64 * std::f64::consts::LN_2
        }
    }
}

fn geometric_mean(q: &[BigInt]) -> Option<f64> {
    (!q.is_empty() && q.iter().all(|c| c.sign() == num_bigint::Sign::Plus))
        .then(|| (q.iter().map(ln_bigint).sum::<f64>() / q.len() as f64).exp())
}

/// One grid point.
pub fn scan_pair(x: u64, y: u64, precision: u32, max_terms: usize) -> ScanReport {
    let producer = move |p: u32| -> Result<BigFloat> { Ok(f_value(x, y, p)?.value) };
    let (quotients, flag) =
        match real_simple_cf(&RealSource::Producer(&producer), precision, max_terms) {
            Ok(e) => (e.quotients, None),
            Err(e) => (Vec::new(), Some(e.to_string())),
        };
    let verdict = match find_suffix_period(&quotients, 2) {
        Some((preperiod, period)) => Verdict::PeriodFound { preperiod, period },
        None => Verdict::NoPeriodWithinBudget,
    };
    let control = (x == y)
        .then(|| limit_root(&x.into(), &1.into()).ok())
        .flatten()
        .map(|root| {
            let exact = surd_simple_cf(&root, quotients.len().max(1));
            ControlCheck {
                prefix_agrees: exact.expand(quotients.len()) == quotients,
                exact_period: exact.period,
                root,
            }
        });
    ScanReport {
        x,
        y,
        precision,
        max_terms,
        max_quotient: quotients.iter().max().cloned(),
        geometric_mean: geometric_mean(&quotients),
        quotients,
        verdict,
        control,
        flag,
    }
}

/// Every `(x, y)` with `x` in `xs` and `y` in `ys`, row-major.
pub fn conjecture_scan(
    xs: &[u64],
    ys: &[u64],
    precision: u32,
    max_terms: usize,
    exec: Execution,
) -> Result<Vec<ScanReport>> {
    if xs.is_empty() || ys.is_empty() {
        return Err(Error::domain("scan ranges must be nonempty"));
    }
    if xs.iter().chain(ys).any(|&v| v == 0) {
        return Err(Error::domain("scan values must be at least 1"));
    }
    let grid: Vec<(u64, u64)> = xs
        .iter()
        .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
        .collect();
    Ok(par::map_slice(exec, &grid, |&(x, y)| {
        scan_pair(x, y, precision, max_terms)
    }))
}
