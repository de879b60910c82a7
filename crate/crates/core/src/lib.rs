//! Exact and high-precision arithmetic for interlaced geometric continued
//! fractions.
//!
//! The crate is organised bottom-up:
//!
//! - [`exact_algebra`]: big rationals, dense integer polynomials, rational
//!   functions, truncated power series, quadratic surds and a binary
//!   floating-point type with explicit precision.
//! - [`cf_engine`]: generalized continued fractions, convergents by forward
//!   recurrence, equivalence transforms, exact simple-CF expansion of surds
//!   with period detection, and two-precision validated digits of reals.
//! - [`interlace`]: the `[x, s/x, x^2, s/x^2, ...]` family, its convergent
//!   polynomials `A_j(x,s)`, `B_j(x,s)`, closed-form limits, polynomial
//!   identities and exact convergence certificates.
//! - [`qseries`]: reduced truncations of `[1, x, 1, x^2, ...]` and the
//!   q-series they stabilise towards.
//! - [`lab`]: numerical experiments (conjecture scanner, `exp(1/x)` check,
//!   the large partial quotient pattern of `3a(x+1) + x^2 + 3x + 5`).
//!
//! Sweeps over independent work items (identity ranges, certificate grids,
//! scan grids) go through [`par`], which uses rayon when the `parallel`
//! feature is enabled and plain iterators otherwise.

pub mod cf_engine;
pub mod error;
pub mod exact_algebra;
pub mod interlace;
pub mod lab;
pub mod par;
pub mod qseries;

#[cfg(test)]
mod properties;

pub use error::{Error, Result};
