//! The scalar abstraction shared by every generic routine in the crate.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{Num, Signed, ToPrimitive, Zero};

use super::{format_gaussian, Rational};

/// A field element the recurrence, series and hypergeometric engines can run over.
///
/// Implemented for exact rationals, Gaussian rationals and (for the redundancy
/// checks only) `f64` and `Complex<f64>`.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync + Num + Neg<Output = Self> + 'static {
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    /// `Some(m)` when the value equals the integer `-m` for some `m >= 0`.
    fn nonpositive_integer(&self) -> Option<u64>;

    /// Canonical text form used in reports and on the command line.
    fn render(&self) -> String;

    /// `self += a * b`.
    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.clone() * b.clone();
        let cur = std::mem::replace(self, Self::zero());
        *self = cur + prod;
    }
}

impl Scalar for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn nonpositive_integer(&self) -> Option<u64> {
        if self.is_integer() && !self.is_positive() {
            (-self.numer()).to_u64()
        } else {
            None
        }
    }

    fn render(&self) -> String {
        self.to_string()
    }

    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

impl Scalar for Complex<Rational> {
    fn from_rational(q: &Rational) -> Self {
        Complex::new(q.clone(), Rational::zero())
    }

    fn nonpositive_integer(&self) -> Option<u64> {
        if self.im.is_zero() {
            self.re.nonpositive_integer()
        } else {
            None
        }
    }

    fn render(&self) -> String {
        format_gaussian(self)
    }

    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        // (ar + i ai)(br + i bi)
        self.re += &a.re * &b.re - &a.im * &b.im;
        self.im += &a.re * &b.im + &a.im * &b.re;
    }
}

impl Scalar for f64 {
    fn from_rational(q: &Rational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }

    fn nonpositive_integer(&self) -> Option<u64> {
        if *self <= 0.0 && self.fract() == 0.0 && self.is_finite() {
            Some((-*self) as u64)
        } else {
            None
        }
    }

    fn render(&self) -> String {
        format!("{self:e}")
    }

    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

impl Scalar for Complex<f64> {
    fn from_rational(q: &Rational) -> Self {
        Complex::new(f64::from_rational(q), 0.0)
    }

    fn nonpositive_integer(&self) -> Option<u64> {
        if self.im == 0.0 {
            self.re.nonpositive_integer()
        } else {
            None
        }
    }

    fn render(&self) -> String {
        format!("{:e}{:+e}*i", self.re, self.im)
    }
}

/// Shorthand for the exact rational `n`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the exact rational `p/q`. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `true` for rationals that are nonnegative integers.
pub fn is_natural(q: &Rational) -> bool {
    q.is_integer() && !q.is_negative()
}
