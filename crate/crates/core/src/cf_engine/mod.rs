//! Generalized continued fractions `b0 + a1/(b1 + a2/(b2 + ...))`.
//!
//! [`GcfSpec`] describes a fraction by a term rule over any [`CfDomain`],
//! [`convergents`] runs the forward recurrence, [`equivalence_transform`]
//! rescales terms without changing the convergents, and the [`simple`]
//! submodule expands quadratic surds and high-precision reals into simple
//! continued fractions.

mod domain;
mod gcf;
mod numeric;
pub mod simple;

pub use domain::CfDomain;
pub use gcf::{
    check_determinant, convergents, equivalence_transform, Convergent, GcfSpec, TermRule,
};
pub use numeric::{eval_gcf_numeric, NumericValue};
pub use simple::{
    find_suffix_period, real_simple_cf, replay_period, surd_simple_cf, verify_surd_period,
    RealSource, SimpleCfExpansion,
};
