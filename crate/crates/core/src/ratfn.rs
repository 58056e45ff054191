//! The rational-function field `ℚ(θ, d, r)`.
//!
//! A [`RationalFunction`] is a reduced fraction of two [`Polynomial`]s with a
//! monic denominator. Normalization happens in the constructor, so equality
//! is syntactic: two arithmetic routes to the same value produce identical
//! representations.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::poly::{self, Polynomial, Var};

/// Element of `ℚ(θ, d, r)` in canonical form: `gcd(num, den) = 1`, `den`
/// monic under the graded-lex term order, zero stored as `0/1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds `num/den`, reducing to canonical form. Errors when `den = 0`.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = poly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides the numerator"),
                den.div_exact(&g).expect("gcd divides the denominator"),
            )
        };
        let lc = den.leading_coefficient();
        if !lc.is_one() {
            let inv = Rational::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_polynomial(Polynomial::constant(q))
    }

    pub fn variable(v: Var) -> Self {
        Self::from_polynomial(Polynomial::variable(v))
    }

    pub fn theta() -> Self {
        Self::variable(Var::Theta)
    }

    pub fn d() -> Self {
        Self::variable(Var::D)
    }

    pub fn r() -> Self {
        Self::variable(Var::R)
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // num and den are already coprime; swapping only needs the monic
        // renormalization of the new denominator.
        let inv = Rational::one() / self.num.leading_coefficient();
        Ok(RationalFunction {
            num: self.den.scale(&inv),
            den: self.num.scale(&inv),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.clone() / rhs.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out * self.clone();
        }
        out
    }

    /// Evaluates exactly at a parameter point. Errors when the denominator
    /// vanishes there, naming the offending factor.
    pub fn specialize(&self, at: &SpecPoint) -> Result<Rational> {
        let den = self.den.eval(&at.theta, &at.d, &at.r);
        if den.is_zero() {
            return Err(Error::Pole {
                factor: self.den.to_string(),
            });
        }
        Ok(self.num.eval(&at.theta, &at.d, &at.r) / den)
    }

    /// Substitutes a single variable, keeping the rest symbolic.
    pub fn eval_var(&self, v: Var, value: &Rational) -> Result<Self> {
        let den = self.den.eval_var(v, value);
        if den.is_zero() {
            return Err(Error::Pole {
                factor: self.den.to_string(),
            });
        }
        Self::new(self.num.eval_var(v, value), den)
    }
}

/// A rational parameter point `(θ, d, r)` with `θ ≠ 0`.
///
/// The nonzero-θ restriction is structural: the module theory degenerates at
/// vanishing central charge and every specialized formula divides by `θ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecPoint {
    pub theta: Rational,
    pub d: Rational,
    pub r: Rational,
}

impl SpecPoint {
    pub fn new(theta: Rational, d: Rational, r: Rational) -> Result<Self> {
        if theta.is_zero() {
            return Err(Error::ZeroTheta);
        }
        Ok(SpecPoint { theta, d, r })
    }
}

// Arithmetic keeps fractions reduced without ever running a GCD on a full
// product: multiplication cancels crosswise first, and addition follows the
// classic two-GCD scheme — with the operands already reduced, the results
// below are reduced by construction.

fn divide_out(p: &Polynomial, g: &Polynomial) -> Polynomial {
    if g.is_one() {
        p.clone()
    } else {
        p.div_exact(g).expect("gcd divides exactly")
    }
}

fn mul_reduced(an: &Polynomial, ad: &Polynomial, bn: &Polynomial, bd: &Polynomial) -> RationalFunction {
    if an.is_zero() || bn.is_zero() {
        return RationalFunction::zero();
    }
    let g1 = poly::gcd(an, bd);
    let g2 = poly::gcd(bn, ad);
    let num = divide_out(an, &g1).mul(&divide_out(bn, &g2));
    let den = divide_out(ad, &g2).mul(&divide_out(bd, &g1));
    // Monic denominators are closed under this: leading coefficients are
    // multiplicative under the graded-lex order.
    let lc = den.leading_coefficient();
    if lc.is_one() {
        RationalFunction { num, den }
    } else {
        let inv = Rational::one() / lc;
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }
}

impl Add for RationalFunction {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let d1 = poly::gcd(&self.den, &rhs.den);
        if d1.is_one() {
            let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
            if num.is_zero() {
                return Self::zero();
            }
            return RationalFunction {
                num,
                den: self.den.mul(&rhs.den),
            };
        }
        let t = self
            .num
            .mul(&divide_out(&rhs.den, &d1))
            .add(&rhs.num.mul(&divide_out(&self.den, &d1)));
        if t.is_zero() {
            return Self::zero();
        }
        let d2 = poly::gcd(&t, &d1);
        let num = divide_out(&t, &d2);
        let den = divide_out(&self.den, &d1).mul(&divide_out(&rhs.den, &d2));
        let lc = den.leading_coefficient();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

impl Sub for RationalFunction {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for RationalFunction {
    type Output = Self;

    fn neg(self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Mul for RationalFunction {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        mul_reduced(&self.num, &self.den, &rhs.num, &rhs.den)
    }
}

impl Div for RationalFunction {
    type Output = Self;

    /// Panics on a zero divisor; use [`RationalFunction::checked_div`] when
    /// the divisor is not known to be nonzero.
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        let flipped = rhs.inverse().expect("divisor is nonzero");
        mul_reduced(&self.num, &self.den, &flipped.num, &flipped.den)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }
}

impl Field for RationalFunction {
    fn from_rational(q: &Rational) -> Self {
        RationalFunction::from_rational(q.clone())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for RationalFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let (num, den) = rest
                .split_once(")/(")
                .and_then(|(n, d)| Some((n, d.strip_suffix(')')?)))
                .ok_or_else(|| Error::Parse(format!("malformed scalar `{s}`")))?;
            Self::new(num.parse()?, den.parse()?)
        } else {
            Ok(Self::from_polynomial(s.parse()?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn theta() -> RationalFunction {
        RationalFunction::theta()
    }

    fn d() -> RationalFunction {
        RationalFunction::d()
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let a = theta() / d();
        let b = d() / theta();
        assert!((a * b).is_one());
    }

    #[test]
    fn difference_of_squares_reduces() {
        // (θ² - d²)/(θ - d) normalizes to θ + d.
        let num = theta().pow(2) - d().pow(2);
        let f = RationalFunction::new(
            num.numerator().clone(),
            theta().numerator().sub(d().numerator()),
        )
        .unwrap();
        assert_eq!(f, theta() + d());
    }

    #[test]
    fn canonical_form_is_route_independent() {
        // θ/2 via two different routes.
        let a = theta() / RationalFunction::from_rational(rat(2, 1));
        let b = RationalFunction::from_rational(rat(1, 2)) * theta();
        assert_eq!(a, b);
        assert_eq!(a.denominator(), b.denominator());
    }

    #[test]
    fn specialize_examples() {
        // -1/(2θ) at θ = 1 is -1/2.
        let f = -(RationalFunction::one()
            / (RationalFunction::from_rational(rat(2, 1)) * theta()));
        let at = SpecPoint::new(rat(1, 1), rat(0, 1), rat(0, 1)).unwrap();
        assert_eq!(f.specialize(&at).unwrap(), rat(-1, 2));

        // (d+1)/θ at θ = 2, d = -1 is 0.
        let g = (d() + RationalFunction::one()) / theta();
        let at = SpecPoint::new(rat(2, 1), rat(-1, 1), rat(0, 1)).unwrap();
        assert_eq!(g.specialize(&at).unwrap(), rat(0, 1));

        // 1/(d+1) at d = -1 is a pole naming the factor.
        let h = RationalFunction::one() / (d() + RationalFunction::one());
        let at = SpecPoint::new(rat(1, 1), rat(-1, 1), rat(0, 1)).unwrap();
        match h.specialize(&at) {
            Err(Error::Pole { factor }) => assert_eq!(factor, "d+1"),
            other => panic!("expected pole, got {other:?}"),
        }
    }

    #[test]
    fn spec_point_rejects_zero_theta() {
        assert_eq!(
            SpecPoint::new(rat(0, 1), rat(1, 1), rat(0, 1)),
            Err(Error::ZeroTheta)
        );
    }

    #[test]
    fn division_by_zero_is_checked() {
        assert_eq!(
            theta().checked_div(&RationalFunction::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(RationalFunction::zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_parse_round_trip() {
        let samples = [
            RationalFunction::zero(),
            RationalFunction::from_rational(rat(-5, 3)),
            theta() + d(),
            (theta() + RationalFunction::one()) / (d() * d()),
            -(RationalFunction::one() / (RationalFunction::from_rational(rat(2, 1)) * theta())),
        ];
        for f in samples {
            let s = f.to_string();
            let back: RationalFunction = s.parse().unwrap();
            assert_eq!(back, f, "round-trip failed for `{s}`");
        }
    }
}
