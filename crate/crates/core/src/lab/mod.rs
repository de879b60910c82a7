//! Numerical experiments.
//!
//! - [`f_value`]: high-precision values of `F(x,y) = [x, 1/y, x^2, 1/y^2, ...]`.
//! - [`conjecture_scan`]: validated simple-CF prefixes of `F(x,y)` over a grid,
//!   with a heuristic periodicity verdict. Rows with `x = y` are controls whose
//!   value is a known quadratic irrational.
//! - [`euler_check`]: validated digits of `exp(1/x)` against its classical pattern.
//! - [`quadratic_pattern`]: exact expansions of the roots of
//!   `3a(x+1) + x^2 + 3x + 5`, and [`inadmissible_agreement`] for the fraction
//!   `[1, a, 3, (a-1)/3, 9, (a-1)/9, ...]`.

mod euler;
mod fvalue;
mod pattern;
mod scan;

pub use euler::{euler_check, euler_pattern, exp_inverse, EulerReport};
pub use fvalue::{f_spec, f_value, f_value_with_budget, FValue, DEFAULT_MAX_PAIRS};
pub use pattern::{
    inadmissible_agreement, inadmissible_spec, quadratic_pattern, InadmissibleReport,
    QuadraticPatternReport,
};
pub use scan::{conjecture_scan, scan_pair, ControlCheck, ScanReport, Verdict};
