//! Text formats and conversions between them.
//!
//! Every format is a different coordinate for the same tree vertex, so a
//! conversion parses into a generalized string pivot and formats back out.
//! Formats: `string` (letters, `e`, sentinels, or `S(k0,k1,...)` runs),
//! `runs` (always the `S(...)` form), `position` (breadth-first index),
//! `r` (the dyadic order value), `cf` (`[q0,q1,...]`), and `fraction`
//! (the Stern-Brocot value `p/q`).

use std::str::FromStr;

use lrtree::cf::ContinuedFraction;
use lrtree::fraction::Fraction;
use lrtree::metrics::{order_value, position, string_at_position, ExtPosition};
use lrtree::string::GenString;
use lrtree::trees::{stern_brocot_locate, stern_brocot_value};
use lrtree::{BigUint, Dyadic, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    String,
    Runs,
    Position,
    R,
    Cf,
    Fraction,
}

impl Format {
    pub fn from_name(name: &str) -> Result<Format> {
        Ok(match name {
            "string" => Format::String,
            "runs" => Format::Runs,
            "position" => Format::Position,
            "r" => Format::R,
            "cf" => Format::Cf,
            "fraction" => Format::Fraction,
            _ => {
                return Err(Error::domain(format!(
                "unknown format \"{name}\" (expected string, runs, position, r, cf, or fraction)"
            )))
            }
        })
    }
}

/// Letter expansion and metric materialization are refused past this many
/// letters; run-form words can be far deeper than anything printable.
const MATERIALIZE_LIMIT: u64 = 1 << 24;

fn check_materializable(s: &GenString, what: &str) -> Result<()> {
    if let GenString::Word(w) = s {
        if w.level() > BigUint::from(MATERIALIZE_LIMIT) {
            return Err(Error::domain(format!(
                "the word is too deep to render as {what}; use the runs, cf, or fraction form"
            )));
        }
    }
    Ok(())
}

/// The word at a given order value; inverse of the order-value map.
fn string_at_order_value(d: &Dyadic) -> Result<GenString> {
    if d.is_zero() {
        return Ok(GenString::RInv);
    }
    if *d == Dyadic::two() {
        return Ok(GenString::LInv);
    }
    // a word of level e has order value (2k-1)/2^e, so the canonical
    // numerator picks the level and the offset within it
    let exp = d.exponent();
    let num = d.numerator();
    if *d > Dyadic::two() {
        return Err(Error::domain(format!(
            "{d} is outside the order-value range (0, 2)"
        )));
    }
    if exp == 0 && num != &BigUint::from(1u32) {
        return Err(Error::domain(format!("{d} is not an order value")));
    }
    let offset = (num - 1u32) / 2u32;
    let n = (BigUint::from(1u32) << exp) - 1u32 + offset;
    Ok(GenString::Word(string_at_position(&n)))
}

pub fn parse_value(format: Format, text: &str) -> Result<GenString> {
    match format {
        Format::String | Format::Runs => GenString::from_str(text),
        Format::Position => Ok(match ExtPosition::from_str(text)? {
            ExtPosition::Nat(n) => GenString::Word(string_at_position(&n)),
            ExtPosition::NegOne => GenString::RInv,
            ExtPosition::NegHalf => GenString::LInv,
        }),
        Format::R => string_at_order_value(&Dyadic::from_str(text)?),
        Format::Cf => Ok(GenString::Word(
            ContinuedFraction::from_str(text)?.to_word(),
        )),
        Format::Fraction => {
            let x = Fraction::from_str(text)?;
            if x == Fraction::zero() {
                Ok(GenString::RInv)
            } else if x == Fraction::infinity() {
                Ok(GenString::LInv)
            } else {
                Ok(GenString::Word(stern_brocot_locate(&x)?))
            }
        }
    }
}

pub fn format_value(format: Format, s: &GenString) -> Result<String> {
    Ok(match format {
        Format::String => {
            check_materializable(s, "letters")?;
            s.to_string()
        }
        Format::Runs => s.word()?.runs_notation(),
        Format::Position => {
            check_materializable(s, "a position")?;
            position(s).to_string()
        }
        Format::R => {
            check_materializable(s, "an order value")?;
            order_value(s).to_string()
        }
        Format::Cf => ContinuedFraction::from_word(s.word()?).to_string(),
        Format::Fraction => stern_brocot_value(s).to_string(),
    })
}

/// `digits` decimal places of an exact non-negative rational, by long
/// division, truncated towards zero; `"inf"` for the formal value 1/0.
pub fn decimal_digits(num: &BigUint, den: &BigUint, digits: u32) -> String {
    use std::fmt::Write as _;
    if den == &BigUint::from(0u32) {
        return "inf".to_string();
    }
    let (int, mut rem) = num_integer::Integer::div_rem(num, den);
    let mut out = int.to_string();
    if digits == 0 {
        return out;
    }
    out.push('.');
    for _ in 0..digits {
        rem *= 10u32;
        let (digit, next) = num_integer::Integer::div_rem(&rem, den);
        let _ = write!(out, "{digit}");
        rem = next;
    }
    out
}

/// Decimal rendering of a fraction.
pub fn fraction_decimal(x: &Fraction, digits: u32) -> String {
    decimal_digits(x.numerator(), x.denominator(), digits)
}

/// Decimal rendering of a dyadic value.
pub fn dyadic_decimal(d: &Dyadic, digits: u32) -> String {
    let den = BigUint::from(1u32) << d.exponent();
    decimal_digits(d.numerator(), &den, digits)
}
