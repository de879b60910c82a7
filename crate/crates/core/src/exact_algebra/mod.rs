//! Exact arithmetic substrate.
//!
//! Every value here is immutable once built and every operation is pure, so
//! values can be shared freely between threads.

mod bigfloat;
mod polynomial;
mod quad_ext;
mod ratfunc;
mod rational;
mod series;
mod surd;

pub use bigfloat::BigFloat;
pub use polynomial::Polynomial;
pub use quad_ext::QuadExt;
pub use ratfunc::RationalFunction;
pub use rational::{int, is_perfect_square, rat, Rational};
pub use series::{Coefficient, PowerSeries};
pub use surd::QuadraticSurd;
