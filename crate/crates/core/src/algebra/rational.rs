//! Exact rational scalars.
//!
//! The base field is `num_rational::BigRational`, which already keeps every
//! value reduced with a positive denominator. This module adds the small
//! helpers the rest of the crate needs: construction from machine integers,
//! strict literal parsing, and integer powers with negative exponents.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"n"` or `"n/d"` with `d > 0`. Anything else (`"1//2"`, `"1/-2"`,
/// `"1/0"`, whitespace, decimals) is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse(s.to_string());
    let is_int = |t: &str| {
        let digits = t.strip_prefix('-').unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    match s.split_once('/') {
        None => {
            if !is_int(s) {
                return Err(err());
            }
            Ok(Rational::from_integer(s.parse::<BigInt>().map_err(|_| err())?))
        }
        Some((n, d)) => {
            if !is_int(n) || d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let n: BigInt = n.parse().map_err(|_| err())?;
            let d: BigInt = d.parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// `x^k` for any integer `k`; `x` must be nonzero when `k < 0`.
pub fn pow(x: &Rational, k: i64) -> Rational {
    let mut base = if k < 0 {
        assert!(!x.is_zero(), "negative power of zero");
        x.recip()
    } else {
        x.clone()
    };
    let mut e = k.unsigned_abs();
    let mut acc = Rational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Bit height of a rational, `max(bits(|num|), bits(den))`.
pub fn height(x: &Rational) -> u64 {
    x.numer().abs().bits().max(x.denom().bits())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_strict_literals() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("0/5").unwrap(), int(0));
        for bad in ["1//2", "1/-2", "1/0", "", "/2", "1/", " 1", "1.5", "a/b", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn integer_powers() {
        assert_eq!(pow(&rat(1, 2), 3), rat(1, 8));
        assert_eq!(pow(&rat(1, 2), -2), int(4));
        assert_eq!(pow(&rat(-2, 3), 0), int(1));
        assert_eq!(pow(&int(0), 2), int(0));
    }

    #[test]
    fn zero_is_canonical() {
        let z = rat(0, -7);
        assert_eq!(z, Rational::zero());
        assert_eq!(z.denom(), &BigInt::one());
        assert!(is_integer(&rat(6, 3)));
        assert!(!is_integer(&rat(1, 3)));
    }
}
