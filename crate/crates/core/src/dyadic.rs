//! Exact dyadic rationals `a / 2^e`.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Sub};
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A non-negative dyadic rational in canonical form: the exponent is zero
/// or the numerator is odd, so equal values are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigUint,
    exp: u64,
}

impl Dyadic {
    pub fn new(num: BigUint, exp: u64) -> Dyadic {
        let mut d = Dyadic { num, exp };
        d.canonicalize();
        d
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0);
        let shift = tz.min(self.exp);
        if shift > 0 {
            self.num >>= shift;
            self.exp -= shift;
        }
    }

    pub fn zero() -> Dyadic {
        Dyadic::new(BigUint::zero(), 0)
    }

    pub fn one() -> Dyadic {
        Dyadic::new(BigUint::one(), 0)
    }

    pub fn two() -> Dyadic {
        Dyadic::new(BigUint::from(2u32), 0)
    }

    /// `1 / 2^e`.
    pub fn pow2_neg(e: u64) -> Dyadic {
        Dyadic {
            num: BigUint::one(),
            exp: e,
        }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    pub fn exponent(&self) -> u64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Both values brought to the common exponent `max(e, f)`.
    fn aligned(&self, other: &Dyadic) -> (BigUint, BigUint, u64) {
        let exp = self.exp.max(other.exp);
        let a = &self.num << (exp - self.exp);
        let b = &other.num << (exp - other.exp);
        (a, b, exp)
    }

    /// Binary-point rendering, e.g. `9/2^3` prints as `"1.001"` and `1`
    /// prints as `"1.0"`. The integer part is written in binary too.
    pub fn to_binary_string(&self) -> String {
        let int = &self.num >> self.exp;
        let mut out = int.to_str_radix(2);
        out.push('.');
        if self.exp == 0 {
            out.push('0');
        } else {
            for i in (0..self.exp).rev() {
                out.push(if self.num.bit(i) { '1' } else { '0' });
            }
        }
        out
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, exp) = self.aligned(rhs);
        Dyadic::new(a + b, exp)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;

    /// Exact difference; the calculus only ever subtracts a smaller value
    /// from a larger one, so underflow is a caller bug and panics.
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, exp) = self.aligned(rhs);
        Dyadic::new(a - b, exp)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.num, self.exp)
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts the canonical form `"a/2^e"` (decimal) and the binary-point
    /// form `"1.001"` (both sides binary).
    fn from_str(text: &str) -> Result<Dyadic> {
        if let Some((num_text, den_text)) = text.split_once('/') {
            let num = parse_decimal(num_text, 0)?;
            let exp_text = den_text.strip_prefix("2^").ok_or_else(|| {
                Error::parse(num_text.len() + 1, "expected a power of two, e.g. \"2^3\"")
            })?;
            let exp_offset = num_text.len() + 3;
            if exp_text.is_empty() || !exp_text.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(exp_offset, "invalid exponent"));
            }
            let exp: u64 = exp_text
                .parse()
                .map_err(|_| Error::parse(exp_offset, "exponent out of range"))?;
            return Ok(Dyadic::new(num, exp));
        }
        if let Some((int_text, frac_text)) = text.split_once('.') {
            let int = parse_binary(int_text, 0)?;
            let frac = parse_binary(frac_text, int_text.len() + 1)?;
            let exp = frac_text.len() as u64;
            return Ok(Dyadic::new((int << exp) + frac, exp));
        }
        Err(Error::parse(
            0,
            "expected a dyadic rational, \"a/2^e\" or binary \"1.001\"",
        ))
    }
}

fn parse_decimal(text: &str, offset: usize) -> Result<BigUint> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(offset, "expected a non-negative integer"));
    }
    BigUint::from_str(text).map_err(|_| Error::parse(offset, "invalid integer"))
}

fn parse_binary(text: &str, offset: usize) -> Result<BigUint> {
    if text.is_empty() || !text.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(Error::parse(offset, "expected binary digits"));
    }
    Ok(BigUint::parse_bytes(text.as_bytes(), 2).expect("validated binary digits"))
}
