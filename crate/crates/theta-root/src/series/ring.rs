//! Coefficient rings for truncated power series.
//!
//! Every series in this crate is a series in `q` over some commutative ring
//! of coefficients: plain arbitrary-precision integers for [`crate::QSeries`],
//! integer polynomials in `t` for [`crate::TQSeries`]. The [`Ring`] trait is
//! the small set of operations the series algebra needs from its coefficients.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact arithmetic.
///
/// `try_recip` returns the multiplicative inverse when the element is a unit
/// of the ring, and `None` otherwise. For the rings used here the only units
/// are `1` and `-1`, which keeps all series arithmetic inside the integers.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn try_recip(&self) -> Option<Self>;

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }

    /// `self += a * b`, the inner kernel of every convolution in this crate.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        self.add_assign(&a.mul(b));
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn try_recip(&self) -> Option<Self> {
        if self.is_one() || (-self).is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

/// True iff the integer is `1` or `-1`.
pub fn is_unit(n: &BigInt) -> bool {
    n.abs().is_one()
}
