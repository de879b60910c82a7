use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact_algebra::{Polynomial, Rational, RationalFunction};

/// Commutative ring in which continued fraction terms and convergents live.
pub trait CfDomain: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;

    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }
}

macro_rules! by_ref_ops {
    ($t:ty) => {
        impl CfDomain for $t {
            fn zero() -> Self {
                Zero::zero()
            }
            fn one() -> Self {
                One::one()
            }
            fn add(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn sub(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn mul(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn is_zero(&self) -> bool {
                Zero::is_zero(self)
            }
        }
    };
}

by_ref_ops!(BigInt);
by_ref_ops!(Rational);
by_ref_ops!(Polynomial);

impl CfDomain for RationalFunction {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}
