//! Scalar arithmetic in two modes: exact rationals and binary floating point.
//!
//! Polytopal norms run entirely on [`Rational`], so every predicate they feed
//! is decided without tolerances. Smooth p-norms run on `f64` with a relative
//! tolerance of [`EPS_REL`] and an absolute floor of [`EPS_ABS`].
//!
//! The two modes never mix: all geometry types are generic over one
//! [`Scalar`] and there are no implicit conversions between them.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always kept in canonical (reduced,
/// positive-denominator) form by `num-rational`.
pub type Rational = BigRational;

/// Relative tolerance for float-mode comparisons.
pub const EPS_REL: f64 = 1e-9;
/// Absolute floor for float-mode comparisons.
pub const EPS_ABS: f64 = 1e-12;
/// Relative tolerance for numeric verdicts in equivalence reports.
pub const VERDICT_REL: f64 = 1e-7;

/// Arithmetic mode tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => f.write_str("exact"),
            Mode::Float => f.write_str("float"),
        }
    }
}

/// An ordered field used for coordinates.
///
/// Comparisons named `tol_*` are exact for [`Rational`] and tolerance-based for
/// `f64`. Plain `PartialOrd` is always the raw comparison.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    const MODE: Mode;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Exact conversion for rationals (every finite float is rational).
    fn from_f64(x: f64) -> Option<Self>;
    fn to_f64(&self) -> f64;
    fn abs(&self) -> Self;

    /// `|self| <= EPS_ABS` in float mode, `== 0` in exact mode.
    fn is_zero(&self) -> bool;
    /// Equality up to [`EPS_REL`] / [`EPS_ABS`] in float mode.
    fn tol_eq(&self, other: &Self) -> bool;
    /// Equality up to a caller-chosen relative tolerance in float mode.
    fn near(&self, other: &Self, rel: f64) -> bool;

    fn is_exact() -> bool {
        Self::MODE == Mode::Exact
    }

    /// Sign with the mode's zero test: -1, 0 or 1.
    fn sign(&self) -> i8 {
        if self.is_zero() {
            0
        } else if *self > Self::zero() {
            1
        } else {
            -1
        }
    }

    fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    /// Strictly less, beyond tolerance.
    fn tol_lt(&self, other: &Self) -> bool {
        !self.tol_eq(other) && self < other
    }

    /// Less or equal, up to tolerance.
    fn tol_le(&self, other: &Self) -> bool {
        self.tol_eq(other) || self < other
    }

    fn max_of(a: Self, b: Self) -> Self {
        if a >= b {
            a
        } else {
            b
        }
    }

    fn min_of(a: Self, b: Self) -> Self {
        if a <= b {
            a
        } else {
            b
        }
    }

    fn half(&self) -> Self {
        self.clone() / Self::from_i64(2)
    }
}

impl Scalar for Rational {
    const MODE: Mode = Mode::Exact;

    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn tol_eq(&self, other: &Self) -> bool {
        self == other
    }
    fn near(&self, other: &Self, _rel: f64) -> bool {
        self == other
    }
    fn sign(&self) -> i8 {
        if Zero::is_zero(self) {
            0
        } else if Signed::is_positive(self) {
            1
        } else {
            -1
        }
    }
}

impl Scalar for f64 {
    const MODE: Mode = Mode::Float;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }
    fn from_f64(x: f64) -> Option<Self> {
        x.is_finite().then_some(x)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn is_zero(&self) -> bool {
        f64::abs(*self) <= EPS_ABS
    }
    fn tol_eq(&self, other: &Self) -> bool {
        self.near(other, EPS_REL)
    }
    fn near(&self, other: &Self, rel: f64) -> bool {
        let scale = f64::abs(*self).max(f64::abs(*other));
        f64::abs(self - other) <= (rel * scale).max(EPS_ABS)
    }
}

/// Parses `"p/q"`, `"p"` or a decimal literal such as `"0.25"` into an exact
/// rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    if let Some((num, den)) = t.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| Error::Parse(format!("bad numerator in {t:?}")))?;
        let d = BigInt::from_str(den.trim()).map_err(|_| Error::Parse(format!("bad denominator in {t:?}")))?;
        if Zero::is_zero(&d) {
            return Err(Error::Parse(format!("zero denominator in {t:?}")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Ok(n) = BigInt::from_str(t) {
        return Ok(BigRational::from_integer(n));
    }
    parse_decimal(t).ok_or_else(|| Error::Parse(format!("not a rational literal: {t:?}")))
}

fn parse_decimal(t: &str) -> Option<Rational> {
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int_part, frac_part) = body.split_once('.')?;
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let num = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).ok()?;
    let den = num_traits::pow(BigInt::from(10), frac_part.len());
    let r = BigRational::new(num, den);
    Some(if neg { -r } else { r })
}

/// The rational square root of a nonnegative rational, when there is one.
pub fn sqrt_exact(x: &Rational) -> Option<Rational> {
    if x.numer().is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(BigRational::new(root(x.numer())?, root(x.denom())?))
}

/// Shorthand for building a rational from small integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::from_ratio(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_square_roots() {
        assert_eq!(sqrt_exact(&rat(25, 16)), Some(rat(5, 4)));
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
        assert_eq!(sqrt_exact(&rat(-4, 1)), None);
        assert_eq!(sqrt_exact(&rat(0, 1)), Some(rat(0, 1)));
    }

    #[test]
    fn canonical_form_is_reduced_with_positive_denominator() {
        let r = rat(6, -8);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(4));
        assert_eq!(r.to_string(), "-3/4");
    }

    #[test]
    fn parse_accepts_fraction_integer_and_decimal() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational(" -7 ").unwrap(), rat(-7, 1));
        assert_eq!(parse_rational("0.125").unwrap(), rat(1, 8));
        assert_eq!(parse_rational("-.5").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn float_tolerances() {
        assert!(1.0f64.tol_eq(&(1.0 + 1e-12)));
        assert!(!1.0f64.tol_eq(&(1.0 + 1e-6)));
        assert!(Scalar::is_zero(&1e-13f64));
        assert!(1.0f64.tol_lt(&1.1));
        assert!(!1.0f64.tol_lt(&(1.0 + 1e-13)));
        assert!(1.0f64.near(&(1.0 + 1e-8), VERDICT_REL));
    }

    #[test]
    fn exact_sign_and_comparisons() {
        let tiny = rat(1, 1_000_000_000_000) * rat(1, 1_000_000_000_000);
        assert_eq!(Scalar::sign(&tiny), 1);
        assert!(!Scalar::is_zero(&tiny));
        assert!(<Rational as Scalar>::zero().tol_lt(&tiny));
    }

    #[test]
    fn from_f64_is_exact_for_rationals() {
        assert_eq!(<Rational as Scalar>::from_f64(0.375).unwrap(), rat(3, 8));
        assert!(<Rational as Scalar>::from_f64(f64::NAN).is_none());
    }
}
