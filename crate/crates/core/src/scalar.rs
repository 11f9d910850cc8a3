//! Scalar abstractions for the numeric parts of the oracle.
//!
//! Closed forms are exact and always use [`BigInt`]. The eigensolver is
//! generic over the float type, and walk counting over the integer
//! accumulator, so the cheapest type that cannot overflow can be chosen.

use std::ops::{AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Floating-point types usable by the symmetric eigensolver.
pub trait EigenScalar: nalgebra::RealField + num_traits::Float + Copy {
    /// Absolute rounding tolerance per unit of degree.
    fn integrality_tolerance() -> Self;
}

impl EigenScalar for f64 {
    fn integrality_tolerance() -> Self {
        1e-6
    }
}

impl EigenScalar for f32 {
    // single precision cannot reach 1e-6 on matrices of a few hundred rows
    fn integrality_tolerance() -> Self {
        f32::EPSILON.sqrt()
    }
}

/// Integer accumulators for closed-walk counts.
pub trait WalkCount:
    Clone + Zero + One + for<'a> AddAssign<&'a Self> + Mul<Output = Self> + Into<BigInt>
{
    /// Largest representable value, or `None` if unbounded.
    fn max_value() -> Option<BigInt>;
}

impl WalkCount for u64 {
    fn max_value() -> Option<BigInt> {
        Some(BigInt::from(u64::MAX))
    }
}

impl WalkCount for u128 {
    fn max_value() -> Option<BigInt> {
        Some(BigInt::from(u128::MAX))
    }
}

impl WalkCount for BigInt {
    fn max_value() -> Option<BigInt> {
        None
    }
}
