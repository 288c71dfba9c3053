//! Arbitrary-precision rational scalars and their `p/q` text form.
//!
//! All file formats and CLI output serialize rationals as `p/q`, with the
//! `/q` suffix omitted when the denominator is 1.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::str::FromStr;
use thiserror::Error;

/// Exact rational scalar. Always reduced, denominator always positive.
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer '{0}' in rational literal")]
    BadInteger(String),
    #[error("zero denominator in rational literal '{0}'")]
    ZeroDenominator(String),
    #[error("rational literal '{0}' has more than one '/'")]
    TooManySlashes(String),
}

/// Parses `p` or `p/q` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let mut parts = s.split('/');
    let num_part = parts.next().ok_or(ParseRationalError::Empty)?;
    let numer = BigInt::from_str(num_part.trim())
        .map_err(|_| ParseRationalError::BadInteger(num_part.to_string()))?;
    match parts.next() {
        None => Ok(Rational::from_integer(numer)),
        Some(den_part) => {
            if parts.next().is_some() {
                return Err(ParseRationalError::TooManySlashes(s.to_string()));
            }
            let denom = BigInt::from_str(den_part.trim())
                .map_err(|_| ParseRationalError::BadInteger(den_part.to_string()))?;
            if denom.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Formats a rational as `p/q`, or just `p` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Shorthand for small constant rationals.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for integer-valued rationals.
pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Least `d > 0` such that `d * r` is an integer for every entry.
pub fn common_denominator<'a>(values: impl Iterator<Item = &'a Rational>) -> BigInt {
    let mut lcm = BigInt::one();
    for v in values {
        lcm = num::integer::lcm(lcm, v.denom().abs());
    }
    lcm
}
