//! The coefficient-field abstraction.
//!
//! Everything downstream of the structure constants (module elements,
//! annihilator matrices, Gram matrices, nullspaces) is generic over an exact
//! field `F`. Two instantiations are used:
//!
//! * [`Rational`] — arbitrary-precision `ℚ`, for computations at a
//!   specialized parameter point `(θ, d, r)`;
//! * [`crate::RationalFunction`] — the rational-function field `ℚ(θ, d, r)`,
//!   for fully symbolic computations.
//!
//! There is deliberately no floating-point instantiation: every advertised
//! result of this crate is an exact identity.

use std::fmt;
use std::ops::{Div, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// An exact field of characteristic zero.
///
/// `Div` is total division by a *nonzero* element; dividing by zero panics
/// (internal callers check the divisor first, public entry points go through
/// checked variants).
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
    /// Embeds `ℚ` into the field.
    fn from_rational(q: &Rational) -> Self;

    fn from_integer(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    /// Multiplicative inverse; errors on zero.
    fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::one() / self.clone())
    }

    /// Division with an explicit zero-divisor error.
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.clone() / rhs.clone())
    }
}

impl Field for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

/// Convenience constructor used all over the test suites.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses the `num/den` grammar (the `/den` part optional) into a reduced
/// rational, rejecting zero denominators instead of panicking.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("`{s}` is not a rational number")))?;
    let den: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("`{s}` is not a rational number")))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("`{s}` has a zero denominator")));
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_addition() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["5/6", "-7/3", "4", "0", "-12"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(q.to_string(), s);
        }
        // Non-canonical input parses to the reduced form.
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("3/-6").unwrap(), rat(-1, 2));
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert!(matches!(parse_rational("1/0"), Err(Error::Parse(_))));
        assert!(matches!(parse_rational("x"), Err(Error::Parse(_))));
    }

    #[test]
    fn checked_division() {
        assert_eq!(rat(1, 2).checked_div(&rat(3, 1)).unwrap(), rat(1, 6));
        assert_eq!(
            rat(1, 2).checked_div(&Rational::zero()),
            Err(Error::DivisionByZero)
        );
    }
}
