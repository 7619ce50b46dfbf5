//! Scalar abstractions for the generic matrix and polynomial types.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num};

/// A commutative ring element usable in dense linear algebra.
///
/// `Div` is only ever applied where the quotient is exact (Bareiss pivots,
/// field elimination), so truncating integer division is fine.
pub trait Scalar: Num + Clone + Debug + Neg<Output = Self> + FromPrimitive {}

impl<T> Scalar for T where T: Num + Clone + Debug + Neg<Output = T> + FromPrimitive {}

/// Scalars whose nonzero elements are invertible.
pub trait Field: Scalar {}

impl Field for f32 {}
impl Field for f64 {}
impl Field for BigRational {}
impl Field for Ratio<i64> {}

/// Integer scalars embed into the exact rationals.
pub fn to_rational(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(numer.into(), denom.into())
}

pub fn int(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

/// `p/q` for non-integers, plain integer otherwise.
pub fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Lossy decimal rendering, truncated toward zero after rounding half away.
pub fn decimal_string(q: &BigRational, digits: usize) -> String {
    use num_traits::{Signed, Zero};
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = q * BigRational::from_integer(scale.clone());
    let half = BigRational::new(1.into(), 2.into());
    let rounded = if scaled.is_negative() {
        -((-scaled) + half).floor()
    } else {
        (scaled + half).floor()
    }
    .to_integer();
    let negative = rounded.is_negative() && !rounded.is_zero();
    let magnitude = rounded.abs();
    let int_part = &magnitude / &scale;
    let frac_part = &magnitude % &scale;
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
    }
}

pub fn to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_round_half_away() {
        assert_eq!(decimal_string(&rational(-3, 4), 1), "-0.8");
        assert_eq!(decimal_string(&rational(1, 3), 4), "0.3333");
        assert_eq!(decimal_string(&rational(-1, 1000), 2), "0.00");
        assert_eq!(decimal_string(&int(7), 0), "7");
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(fmt_rational(&rational(-3, 4)), "-3/4");
        assert_eq!(fmt_rational(&rational(4, 2)), "2");
    }
}
