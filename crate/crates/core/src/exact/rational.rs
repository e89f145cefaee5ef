//! Arbitrary-precision rational numbers.
//!
//! `Rational` is `num_rational::BigRational`: always stored in lowest terms
//! with a positive denominator, and every operation is exact. The helpers
//! here cover the construction and parsing patterns the rest of the crate
//! needs; arithmetic comes from the `num` operator impls.

use num_bigint::BigInt;
use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// `p/q` as an exact rational.
///
/// ```
/// use spherecode::exact::{rat, rat_i};
/// assert_eq!(rat(2, 8), rat(1, 4));
/// assert_eq!(rat(3, -6), rat(-1, 2));
/// assert_eq!(rat_i(5), rat(10, 2));
/// ```
pub fn rat(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `n` as a rational.
pub fn rat_i(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A `BigInt` from a machine integer.
pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid rational literal `{0}` (expected `p` or `p/q`)")]
pub struct ParseRationalError(pub String);

/// Parses `p` or `p/q` with optional sign. No floating-point forms.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    let err = || ParseRationalError(s.to_string());
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| err())?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| err())?;
            let q: BigInt = q.trim().parse().map_err(|_| err())?;
            if q == BigInt::from(0) {
                return Err(err());
            }
            Ok(Rational::new(p, q))
        }
    }
}
