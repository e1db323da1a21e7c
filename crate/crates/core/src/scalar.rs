//! The scalar field K, realized as exact arbitrary-precision rationals.
//!
//! `Scalar` values are always in lowest terms with a positive denominator,
//! so equality is canonical-form equality.

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Scalar = BigRational;

/// Integer as a scalar.
pub fn integer(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduced fraction n/d. Panics if d = 0.
pub fn rational(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
