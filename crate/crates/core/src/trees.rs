//! Stern-Brocot and Calkin-Wilf value maps and level enumeration.
//!
//! Walking the Stern-Brocot tree assigns every word the mediant of its
//! bracketing bounds, starting from the formal fractions 0/1 and 1/0;
//! this lists every positive rational in reduced form exactly once, in
//! tree order. Relabelling each vertex by its reversed word gives the
//! Calkin-Wilf tree, which this module computes independently through its
//! own children rule so the two routes can be checked against each other.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::cf::ContinuedFraction;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::metrics::{order_value_closed, position_closed};
use crate::string::{words_at_level, GenString, Letter, Word};

/// The Stern-Brocot fraction at the position named by a generalized
/// string; the sentinels map to the boundary fractions 0/1 and 1/0.
/// Runs of equal letters are applied in one batch, so words given in run
/// form with huge runs never expand.
pub fn stern_brocot_value(s: &GenString) -> Fraction {
    let w = match s {
        GenString::RInv => return Fraction::zero(),
        GenString::LInv => return Fraction::infinity(),
        GenString::Word(w) => w,
    };
    let (mut ln, mut ld) = (BigUint::from(0u32), BigUint::from(1u32));
    let (mut hn, mut hd) = (BigUint::from(1u32), BigUint::from(0u32));
    for (letter, k) in w.letter_runs() {
        match letter {
            // k right steps: the lower bound advances by k mediants
            Letter::R => {
                ln += k * &hn;
                ld += k * &hd;
            }
            Letter::L => {
                hn += k * &ln;
                hd += k * &ld;
            }
        }
    }
    Fraction::new(ln + hn, ld + hd).expect("mediants are positive")
}

/// The Calkin-Wilf fraction at a word position, by the tree's own rule:
/// the vertex `a/b` has children `a/(a+b)` and `(a+b)/b`. Equals the
/// Stern-Brocot value of the reversed word.
pub fn calkin_wilf_value(w: &Word) -> Fraction {
    let (mut a, mut b) = (BigUint::from(1u32), BigUint::from(1u32));
    for (letter, k) in w.letter_runs() {
        match letter {
            Letter::L => b += k * &a,
            Letter::R => a += k * &b,
        }
    }
    Fraction::new(a, b).expect("tree values are positive")
}

/// The unique word whose Stern-Brocot value is `x`.
pub fn stern_brocot_locate(x: &Fraction) -> Result<Word> {
    Ok(ContinuedFraction::from_fraction(x)?.to_word())
}

/// Vertices of continued-fraction level `m`, left to right, generated by
/// the children rules.
pub fn cf_row(m: u32) -> Vec<ContinuedFraction> {
    let mut row = alloc::vec![ContinuedFraction::root()];
    for _ in 0..m {
        let mut next = Vec::with_capacity(row.len() * 2);
        for c in &row {
            let (left, right) = c.children();
            next.push(left);
            next.push(right);
        }
        row = next;
    }
    row
}

pub fn string_row(m: u32) -> Vec<Word> {
    words_at_level(m)
}

pub fn stern_brocot_row(m: u32) -> Vec<Fraction> {
    words_at_level(m)
        .iter()
        .map(|w| stern_brocot_value(&GenString::Word(w.clone())))
        .collect()
}

pub fn calkin_wilf_row(m: u32) -> Vec<Fraction> {
    words_at_level(m).iter().map(calkin_wilf_value).collect()
}

pub fn order_value_row(m: u32) -> Vec<Dyadic> {
    words_at_level(m).iter().map(order_value_closed).collect()
}

pub fn position_row(m: u32) -> Vec<BigUint> {
    words_at_level(m).iter().map(position_closed).collect()
}

/// Which labelled tree a row or rendering is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeKind {
    Strings,
    OrderValues,
    Positions,
    Cf,
    SternBrocot,
    CalkinWilf,
}

impl TreeKind {
    pub fn from_name(name: &str) -> Result<TreeKind> {
        Ok(match name {
            "string" => TreeKind::Strings,
            "r" | "r_metric" => TreeKind::OrderValues,
            "position" => TreeKind::Positions,
            "cf" => TreeKind::Cf,
            "stern_brocot" => TreeKind::SternBrocot,
            "calkin_wilf" => TreeKind::CalkinWilf,
            _ => {
                return Err(Error::domain(alloc::format!(
                    "unknown tree \"{name}\" (expected string, r_metric, position, cf, stern_brocot, or calkin_wilf)"
                )))
            }
        })
    }

    /// The level-`m` row of this tree rendered in its text form, left to
    /// right.
    pub fn row_text(&self, m: u32) -> Vec<String> {
        match self {
            TreeKind::Strings => string_row(m).iter().map(|w| w.to_string()).collect(),
            TreeKind::OrderValues => order_value_row(m).iter().map(|d| d.to_string()).collect(),
            TreeKind::Positions => position_row(m).iter().map(|n| n.to_string()).collect(),
            TreeKind::Cf => cf_row(m).iter().map(|c| c.to_string()).collect(),
            TreeKind::SternBrocot => stern_brocot_row(m).iter().map(|x| x.to_string()).collect(),
            TreeKind::CalkinWilf => calkin_wilf_row(m).iter().map(|x| x.to_string()).collect(),
        }
    }
}
