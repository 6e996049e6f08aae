//! Minimal field abstraction shared by the generic polynomial, series and
//! partial-fraction machinery.

use super::Rat;
use num_traits::{One, Zero};
use std::fmt::Debug;

/// An exact field. Implemented by [`Rat`], by univariate rational functions
/// and by bivariate rational functions, which lets the series and
/// partial-fraction code run over any of them.
pub trait Field: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Exact division. Panics on a zero divisor; use `is_zero` first.
    fn div(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn from_i64(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn inv(&self) -> Self {
        Self::one().div(self)
    }
}

impl Field for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        assert!(!<Rat as Zero>::is_zero(other), "division by zero rational");
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        Rat::from_integer(n.into())
    }
}
