//! Exact rational arithmetic for edge weights and budgets.
//!
//! All solver logic compares weights exactly; no floating point is involved
//! anywhere. Weights are parsed from decimal strings ("3.25" becomes 13/4)
//! or from fraction strings ("1/3"), and printed back as a finite decimal
//! whenever the reduced denominator has only the prime factors 2 and 5,
//! otherwise as "numerator/denominator".

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Sub};
use std::str::FromStr;

use crate::error::ParseError;

/// An arbitrary-precision rational number, always kept in lowest terms with
/// a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `numerator / denominator`. Panics if `denominator` is zero.
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "zero denominator");
        Rational(BigRational::new(
            BigInt::from(numerator),
            BigInt::from(denominator),
        ))
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Largest integer not exceeding the value.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// True when the value has a finite decimal expansion, i.e. the reduced
    /// denominator is of the form 2^a * 5^b.
    fn has_finite_decimal(&self) -> bool {
        let mut d = self.0.denom().clone();
        for p in [2u32, 5u32] {
            let p = BigInt::from(p);
            while (&d % &p).is_zero() {
                d /= &p;
            }
        }
        d.is_one()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            return write!(f, "{}", self.0.numer());
        }
        if !self.has_finite_decimal() {
            return write!(f, "{}/{}", self.0.numer(), self.0.denom());
        }
        // Scale to an integer over a power of ten and place the point.
        let mut d = self.0.denom().clone();
        let (mut twos, mut fives) = (0u32, 0u32);
        let two = BigInt::from(2);
        let five = BigInt::from(5);
        while (&d % &two).is_zero() {
            d /= &two;
            twos += 1;
        }
        while (&d % &five).is_zero() {
            d /= &five;
            fives += 1;
        }
        let k = twos.max(fives);
        let scale = BigInt::from(10).pow(k) / self.0.denom();
        let scaled = (self.0.numer() * scale).abs();
        let digits = scaled.to_string();
        let digits = if digits.len() <= k as usize {
            format!("{}{}", "0".repeat(k as usize + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (whole, frac) = digits.split_at(digits.len() - k as usize);
        let sign = if self.0.is_negative() { "-" } else { "" };
        write!(f, "{sign}{whole}.{frac}")
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseError;

    /// Accepts decimal ("3.25", "7", "-0.5") and fraction ("13/4") forms.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let bad = || ParseError::number(s);
        if s.is_empty() {
            return Err(bad());
        }
        if let Some((num, den)) = s.split_once('/') {
            let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            return Ok(Rational(BigRational::new(num, den)));
        }
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, s.strip_prefix('+').unwrap_or(s)),
        };
        let (whole, frac) = match body.split_once('.') {
            Some((w, fr)) => (w, fr),
            None => (body, ""),
        };
        if whole.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(whole) || !all_digits(frac) {
            return Err(bad());
        }
        let joined = format!("{whole}{frac}");
        let num =
            BigInt::from_str(if joined.is_empty() { "0" } else { &joined }).map_err(|_| bad())?;
        let den = BigInt::from(10).pow(frac.len() as u32);
        Ok(Rational(BigRational::new(num * sign, den)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        let mut acc = Rational::zero();
        for r in iter {
            acc += r;
        }
        acc
    }
}

/// The weight budget `b`: either a finite positive rational or unbounded
/// (the "inf" sentinel of the instance format).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Budget {
    Finite(Rational),
    Infinite,
}

impl Budget {
    pub fn allows(&self, weight: &Rational) -> bool {
        match self {
            Budget::Finite(b) => weight <= b,
            Budget::Infinite => true,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Budget::Finite(_))
    }

    /// floor(b) as a usize, clamped below at 0; None when unbounded.
    /// Used to fold the weight budget into the edge budget on unit weights.
    pub fn floor_usize(&self) -> Option<usize> {
        match self {
            Budget::Infinite => None,
            Budget::Finite(b) => {
                let f = b.floor_int();
                if f.is_negative() {
                    Some(0)
                } else {
                    Some(usize::try_from(f).unwrap_or(usize::MAX))
                }
            }
        }
    }
}

impl PartialOrd for Budget {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Budget::Infinite, Budget::Infinite) => Some(Ordering::Equal),
            (Budget::Infinite, Budget::Finite(_)) => Some(Ordering::Greater),
            (Budget::Finite(_), Budget::Infinite) => Some(Ordering::Less),
            (Budget::Finite(a), Budget::Finite(b)) => a.partial_cmp(b),
        }
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Budget::Finite(r) => write!(f, "{r}"),
            Budget::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for Budget {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        if s.trim() == "inf" {
            Ok(Budget::Infinite)
        } else {
            Ok(Budget::Finite(s.parse()?))
        }
    }
}
