//! The coefficient ring abstraction.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, Mul, SubAssign};
use std::str::FromStr;

use num_traits::{FromPrimitive, Signed};

/// An exact commutative ring with unit that polynomial coefficients live in.
///
/// Implemented for every type with the required arithmetic, so `BigInt`,
/// `i64`, `i128` and `BigRational` all qualify. Fixed-width integers wrap or
/// panic on overflow like any other integer arithmetic; the crate-root
/// aliases use `BigInt` so that no input in range can overflow.
pub trait Coeff:
    Signed
    + Clone
    + Debug
    + Display
    + FromStr
    + FromPrimitive
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    /// `self * rhs` without consuming either operand.
    fn mul_ref(&self, rhs: &Self) -> Self;

    fn from_u64_exact(v: u64) -> Self {
        Self::from_u64(v).expect("coefficient ring cannot represent a small integer")
    }
}

impl<T> Coeff for T
where
    T: Signed
        + Clone
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + Send
        + Sync
        + 'static,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// Ordinary binomial coefficient as an element of the ring, zero outside
/// `0 ≤ r ≤ n`.
pub fn binomial<C: Coeff>(n: i64, r: i64) -> C {
    if r < 0 || n < 0 || r > n {
        return C::zero();
    }
    let r = r.min(n - r);
    // exact integer product; each prefix is itself a binomial coefficient
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    C::from_u128(acc).expect("binomial coefficient out of range for coefficient ring")
}

/// Ordinary multinomial coefficient `k! / ∏ parts_i!`, zero if the parts do
/// not sum to `k`.
pub fn multinomial<C: Coeff>(k: u64, parts: &[u64]) -> C {
    if parts.iter().sum::<u64>() != k {
        return C::zero();
    }
    let mut acc = C::one();
    let mut running = 0i64;
    for &p in parts {
        running += p as i64;
        acc = acc.mul_ref(&binomial::<C>(running, p as i64));
    }
    acc
}
