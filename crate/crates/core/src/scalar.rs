// SPDX-License-Identifier: MIT OR Apache-2.0

//! Ordered-field abstraction shared by every solver in the crate.
//!
//! Two backends are provided: `f64` and [`Rational`] (arbitrary precision).
//! Code that is generic over [`Scalar`] runs unchanged on both; the handful
//! of places where floating point needs slack (tie detection, parallel-line
//! guards, verification tolerances) go through the trait so that the exact
//! backend can answer with strict equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision rational scalar.
pub type Rational = BigRational;

pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic is exact (field axioms hold without rounding).
    const EXACT: bool;
    /// Short backend name, as used on the command line.
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Converts a finite float. The rational backend keeps the exact binary value.
    fn from_f64(v: f64) -> Self;
    fn to_f64(&self) -> f64;
    /// Parses `"p/q"`, integers and decimal literals (with optional exponent).
    fn parse_text(s: &str) -> Result<Self, Error>;
    /// Lossless text form: `"p/q"` for rationals, shortest round-trip for floats.
    fn to_text(&self) -> String;

    /// Equality used to group simultaneous candidate events.
    fn tie_eq(&self, other: &Self) -> bool;
    /// Whether `diff`, a difference of quantities of magnitude `scale`, is
    /// indistinguishable from zero.
    fn negligible(diff: &Self, scale: &Self) -> bool;
    /// Absolute slack allowed by verification checks on values of magnitude `scale`.
    fn check_tolerance(scale: f64) -> f64;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min_of(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    fn from_usize(v: usize) -> Self {
        Self::from_int(v as i64)
    }

    /// Total order for values known to be finite.
    fn total_cmp(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;
    const NAME: &'static str = "f64";

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn from_f64(v: f64) -> Self {
        v
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn parse_text(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let value = match s.split_once('/') {
            Some((p, q)) => {
                let p: f64 = p.trim().parse().map_err(|_| Error::parse(s))?;
                let q: f64 = q.trim().parse().map_err(|_| Error::parse(s))?;
                if q == 0.0 {
                    return Err(Error::parse(s));
                }
                p / q
            }
            None => s.parse().map_err(|_| Error::parse(s))?,
        };
        if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::parse(s))
        }
    }

    fn to_text(&self) -> String {
        format!("{self:?}")
    }

    fn tie_eq(&self, other: &Self) -> bool {
        f64::abs(self - other) <= 1e-12 * f64::abs(*self).max(f64::abs(*other))
    }

    fn negligible(diff: &Self, scale: &Self) -> bool {
        f64::abs(*diff) <= 1e-15 * f64::abs(*scale)
    }

    fn check_tolerance(scale: f64) -> f64 {
        1e-9 * scale.abs().max(1.0)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;
    const NAME: &'static str = "rational";

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_f64(v: f64) -> Self {
        <BigRational as num_traits::FromPrimitive>::from_f64(v).expect("finite float")
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn parse_text(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.contains('/') {
            let r = BigRational::from_str(s).map_err(|_| Error::parse(s))?;
            return Ok(r);
        }
        parse_decimal(s).ok_or_else(|| Error::parse(s))
    }

    fn to_text(&self) -> String {
        self.to_string()
    }

    fn tie_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn negligible(diff: &Self, _scale: &Self) -> bool {
        Zero::is_zero(diff)
    }

    fn check_tolerance(_scale: f64) -> f64 {
        0.0
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }
}

/// Exact value of a decimal literal such as `-12.5e-3`.
fn parse_decimal(s: &str) -> Option<Rational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut numer = BigInt::from_str(&all_digits).ok()?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Some(value)
}

/// Formats a scalar slice as `[a, b, ...]` using [`Scalar::to_text`].
pub fn format_vector<S: Scalar>(values: &[S]) -> String {
    let parts: Vec<String> = values.iter().map(Scalar::to_text).collect();
    format!("[{}]", parts.join(", "))
}

/// Largest absolute entry, as `f64`.
pub fn sup_norm<S: Scalar>(values: &[S]) -> f64 {
    values.iter().map(|v| v.to_f64().abs()).fold(0.0, f64::max)
}

/// Largest absolute entrywise difference, as `f64`.
pub fn sup_distance<S: Scalar>(a: &[S], b: &[S]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(u, v)| (u.clone() - v.clone()).to_f64().abs())
        .fold(0.0, f64::max)
}
