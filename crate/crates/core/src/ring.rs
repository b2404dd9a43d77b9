//! Minimal commutative-ring abstraction used by the division-free
//! determinant and characteristic-polynomial routines.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A commutative ring with identity. Implemented for `BigInt`,
/// Gaussian integers and Laurent polynomials.
pub trait Ring: Clone + PartialEq {
    fn zero_elt() -> Self;
    fn one_elt() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero_elt(&self) -> bool;
}

impl Ring for BigInt {
    fn zero_elt() -> Self {
        Zero::zero()
    }
    fn one_elt() -> Self {
        One::one()
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
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero_elt(&self) -> bool {
        Zero::is_zero(self)
    }
}
