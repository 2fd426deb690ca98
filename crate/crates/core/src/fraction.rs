//! Exact reduced fractions, including the two formal boundary values.

use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A non-negative fraction `p/q` with `gcd(p, q) = 1`. The formal boundary
/// values `0/1` and `1/0` are admitted; they bracket the positive rationals
/// in the value maps and arise as parent values, never as operands of
/// ordinary arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: BigUint,
    den: BigUint,
}

impl Fraction {
    pub fn new(num: BigUint, den: BigUint) -> Result<Fraction> {
        if num.is_zero() && den.is_zero() {
            return Err(Error::domain("0/0 is not a fraction"));
        }
        let g = num.gcd(&den);
        Ok(Fraction {
            num: num / &g,
            den: den / &g,
        })
    }

    pub fn from_integer(n: BigUint) -> Fraction {
        Fraction {
            num: n,
            den: BigUint::one(),
        }
    }

    /// The formal boundary value `0/1`.
    pub fn zero() -> Fraction {
        Fraction {
            num: BigUint::zero(),
            den: BigUint::one(),
        }
    }

    /// The formal boundary value `1/0`.
    pub fn infinity() -> Fraction {
        Fraction {
            num: BigUint::one(),
            den: BigUint::zero(),
        }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    pub fn denominator(&self) -> &BigUint {
        &self.den
    }

    pub fn is_finite(&self) -> bool {
        !self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Finite and strictly positive: a tree vertex value.
    pub fn is_positive_finite(&self) -> bool {
        !self.num.is_zero() && !self.den.is_zero()
    }

    /// The mediant `(p + p') / (q + q')`. Intended for unimodular
    /// neighbours, where the raw sum is already reduced.
    pub fn mediant(a: &Fraction, b: &Fraction) -> Fraction {
        Fraction::new(&a.num + &b.num, &a.den + &b.den)
            .expect("mediant operands are never both zero")
    }

    /// Exact absolute difference of two finite fractions.
    pub fn abs_diff(a: &Fraction, b: &Fraction) -> Fraction {
        debug_assert!(a.is_finite() && b.is_finite());
        let left = &a.num * &b.den;
        let right = &b.num * &a.den;
        let num = if left >= right {
            left - right
        } else {
            right - left
        };
        Fraction::new(num, &a.den * &b.den).expect("denominators are nonzero")
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    /// Cross-multiplication order; total on the domain of this type, with
    /// `0/1` least and `1/0` greatest.
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `"p/q"` (reduced on the way in) and a bare integer `"p"`.
    fn from_str(text: &str) -> Result<Fraction> {
        let (num_text, den_text) = match text.split_once('/') {
            Some((n, d)) => (n, d),
            None => (text, "1"),
        };
        let parse_part = |part: &str, offset: usize| -> Result<BigUint> {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(offset, "expected a non-negative integer"));
            }
            BigUint::from_str(part).map_err(|_| Error::parse(offset, "invalid integer"))
        };
        let num = parse_part(num_text, 0)?;
        let den = parse_part(den_text, num_text.len() + 1)?;
        Fraction::new(num, den)
    }
}
