//! Scalar layer: exact rationals and dual numbers.
//!
//! `Rational` is an arbitrary-precision fraction kept in canonical form
//! (fully reduced, denominator positive, sign on the numerator). Values
//! display as `p/q`, or just `p` when the denominator is 1, and parse back
//! from the same forms.
//!
//! A [`DualScalar`] is `a + eps b` where `eps^2 = 0`. The real part `a`
//! determines invertibility: `a + eps b` has an inverse exactly when
//! `a != 0`, and the dual part never affects that.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

pub type Rational = num_rational::BigRational;

/// Builds the canonical rational `num/den`.
///
/// # Errors
///
/// Returns [`Error::ZeroDenominator`] when `den == 0`.
pub fn rat(num: i64, den: i64) -> Result<Rational, Error> {
    if den == 0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(BigInt::from(num), BigInt::from(den)))
}

/// Embeds an integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A dual number `real + eps * dual` with `eps^2 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualScalar {
    pub real: Rational,
    pub dual: Rational,
}

impl DualScalar {
    pub fn new(real: Rational, dual: Rational) -> Self {
        DualScalar { real, dual }
    }

    /// Embeds a rational as a dual number with zero dual part.
    pub fn from_real(real: Rational) -> Self {
        DualScalar { real, dual: Rational::zero() }
    }

    pub fn zero() -> Self {
        DualScalar::from_real(Rational::zero())
    }

    pub fn one() -> Self {
        DualScalar::from_real(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.real.is_zero() && self.dual.is_zero()
    }

    /// Multiplicative inverse: `(a + eps b)^-1 = 1/a - eps b/a^2`.
    ///
    /// Returns `None` exactly when the real part is zero; such duals are
    /// zero divisors and have no inverse regardless of the dual part.
    pub fn inverse(&self) -> Option<DualScalar> {
        if self.real.is_zero() {
            return None;
        }
        let inv = self.real.recip();
        let dual = -(&self.dual * (&inv * &inv));
        Some(DualScalar { real: inv, dual })
    }
}

impl Add for DualScalar {
    type Output = DualScalar;
    fn add(self, rhs: DualScalar) -> DualScalar {
        DualScalar { real: self.real + rhs.real, dual: self.dual + rhs.dual }
    }
}

impl Sub for DualScalar {
    type Output = DualScalar;
    fn sub(self, rhs: DualScalar) -> DualScalar {
        DualScalar { real: self.real - rhs.real, dual: self.dual - rhs.dual }
    }
}

impl Mul for DualScalar {
    type Output = DualScalar;
    fn mul(self, rhs: DualScalar) -> DualScalar {
        // (a + eps b)(c + eps d) = ac + eps (ad + bc); the bd term carries
        // eps^2 and vanishes.
        let real = &self.real * &rhs.real;
        let dual = &self.real * &rhs.dual + &self.dual * &rhs.real;
        DualScalar { real, dual }
    }
}

impl Neg for DualScalar {
    type Output = DualScalar;
    fn neg(self) -> DualScalar {
        DualScalar { real: -self.real, dual: -self.dual }
    }
}
