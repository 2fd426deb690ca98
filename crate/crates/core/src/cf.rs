//! The companion tree of continued fractions.
//!
//! Vertices are canonical continued fractions `[q0, ..., qm]` with
//! `q0 >= 0`, interior quotients at least 1, the final quotient at least 2
//! when `m > 0`, and `q0 >= 1` when the expansion is a single quotient.
//! The root is `[1]`. A vertex with `m` even has children
//! `[q0.., qm - 1, 2]` (left) and `[q0.., qm + 1]` (right); the two swap
//! when `m` is odd. Under these constraints evaluation never divides by
//! zero and every positive rational appears exactly once.
//!
//! The map sending `[q0, ..., qm]` to the word with run lengths
//! `(q0, ..., q_{m-1}, qm - 1)` is an order-, level- and child-preserving
//! bijection onto LR-words, so parents of a continued fraction are computed
//! by conjugating the word parent operators through it. The dashed boundary
//! vertices `[0]` (value 0/1) and `[]` (value 1/0) absorb the sentinel
//! parents.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::string::{GenString, Word};

/// A canonical continued fraction vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    quotients: Vec<BigUint>,
}

impl ContinuedFraction {
    /// Validates and canonicalizes a quotient sequence. A trailing
    /// quotient 1 merges into its predecessor (`[.., a, 1]` equals
    /// `[.., a + 1]`), which makes the expansion of a rational unique.
    pub fn new(mut quotients: Vec<BigUint>) -> Result<ContinuedFraction> {
        if quotients.is_empty() {
            return Err(Error::domain(
                "the empty continued fraction is a boundary vertex, not an operand",
            ));
        }
        if quotients.len() > 1 && quotients.last().expect("nonempty").is_one() {
            quotients.pop();
            let last = quotients.last_mut().expect("nonempty");
            *last += 1u32;
        }
        let m = quotients.len() - 1;
        if m == 0 {
            if quotients[0].is_zero() {
                return Err(Error::domain("[0] is a boundary vertex, not an operand"));
            }
        } else {
            for (i, q) in quotients.iter().enumerate().skip(1) {
                if i < m && q.is_zero() {
                    return Err(Error::domain("interior quotients must be at least 1"));
                }
                if i == m && *q < BigUint::from(2u32) {
                    return Err(Error::domain("the final quotient must be at least 2"));
                }
            }
        }
        Ok(ContinuedFraction { quotients })
    }

    /// The root vertex `[1]`.
    pub fn root() -> ContinuedFraction {
        ContinuedFraction {
            quotients: alloc::vec![BigUint::one()],
        }
    }

    pub fn is_root(&self) -> bool {
        self.quotients.len() == 1 && self.quotients[0].is_one()
    }

    pub fn quotients(&self) -> &[BigUint] {
        &self.quotients
    }

    /// Tree depth: `q0 + ... + qm - 1`.
    pub fn level(&self) -> BigUint {
        self.quotients
            .iter()
            .fold(BigUint::zero(), |acc, q| acc + q)
            - 1u32
    }

    /// Exact value by the standard convergent recurrence.
    pub fn eval(&self) -> Fraction {
        // (h_prev, h) seeded with (h_{-1}, h_{-2}); same for k
        let (mut h_prev, mut h) = (BigUint::one(), BigUint::zero());
        let (mut k_prev, mut k) = (BigUint::zero(), BigUint::one());
        for q in &self.quotients {
            let h_next = q * &h_prev + &h;
            let k_next = q * &k_prev + &k;
            h = core::mem::replace(&mut h_prev, h_next);
            k = core::mem::replace(&mut k_prev, k_next);
        }
        Fraction::new(h_prev, k_prev).expect("valid quotients never yield 0/0")
    }

    /// Exact value by folding the tail: `[.., q_{m-1}, qm]` equals
    /// `[.., q_{m-1} + 1/qm]`, evaluated right to left with fraction
    /// arithmetic. Kept as an independent route to [`Self::eval`].
    pub fn eval_folded(&self) -> Fraction {
        let m = self.quotients.len() - 1;
        let mut acc = Fraction::from_integer(self.quotients[m].clone());
        for q in self.quotients[..m].iter().rev() {
            // acc <- q + 1/acc
            let num = q * acc.numerator() + acc.denominator();
            let den = acc.numerator().clone();
            acc = Fraction::new(num, den).expect("tail values stay positive");
        }
        acc
    }

    /// The canonical expansion of a positive finite rational (Euclidean
    /// algorithm); inverse of [`Self::eval`] on tree vertices.
    pub fn from_fraction(x: &Fraction) -> Result<ContinuedFraction> {
        if !x.is_positive_finite() {
            return Err(Error::domain(
                "only positive finite rationals have a tree expansion",
            ));
        }
        let mut p = x.numerator().clone();
        let mut q = x.denominator().clone();
        let mut quotients = Vec::new();
        while !q.is_zero() {
            let (d, r) = num_integer::Integer::div_rem(&p, &q);
            quotients.push(d);
            p = core::mem::replace(&mut q, r);
        }
        ContinuedFraction::new(quotients)
    }

    /// The two children, left then right.
    pub fn children(&self) -> (ContinuedFraction, ContinuedFraction) {
        let m = self.quotients.len() - 1;
        let mut shorter = self.quotients.clone();
        let last = shorter.last_mut().expect("nonempty");
        *last -= 1u32;
        shorter.push(BigUint::from(2u32));
        let mut longer = self.quotients.clone();
        let last = longer.last_mut().expect("nonempty");
        *last += 1u32;
        let split = ContinuedFraction { quotients: shorter };
        let grown = ContinuedFraction { quotients: longer };
        if m % 2 == 0 {
            (split, grown)
        } else {
            (grown, split)
        }
    }

    /// The word at the same tree position: run lengths
    /// `(q0, ..., q_{m-1}, qm - 1)`.
    pub fn to_word(&self) -> Word {
        let m = self.quotients.len() - 1;
        let runs = self
            .quotients
            .iter()
            .enumerate()
            .map(|(i, q)| if i == m { q - 1u32 } else { q.clone() });
        Word::from_runs(runs)
    }

    /// Inverse of [`Self::to_word`]: run lengths `(k0, ..., km)` become
    /// quotients `(k0, ..., k_{m-1}, km + 1)`.
    pub fn from_word(w: &Word) -> ContinuedFraction {
        let m = w.runs().len() - 1;
        let quotients: Vec<BigUint> = w
            .runs()
            .iter()
            .enumerate()
            .map(|(i, k)| if i == m { k + 1u32 } else { k.clone() })
            .collect();
        ContinuedFraction { quotients }
    }

    /// The close and distant parents, conjugated through the word map.
    /// The root has the two boundary vertices as parents (its left parent
    /// `[0]` reported in the close slot, `[]` in the distant slot).
    pub fn parents(&self) -> (CfParent, CfParent) {
        let w = self.to_word();
        if w.is_empty() {
            return (
                CfParent::Boundary(Boundary::Zero),
                CfParent::Boundary(Boundary::Infinity),
            );
        }
        let close = w.parent_close().expect("not the root");
        let distant = w.parent_distant().expect("not the root");
        (
            CfParent::Vertex(ContinuedFraction::from_word(&close)),
            CfParent::from_gen_string(&distant),
        )
    }

    /// Values of the close and distant parents: among all vertices of
    /// strictly smaller level these are the nearest neighbour on each side
    /// of this vertex, the sense in which the expansion's truncations are
    /// best approximations.
    pub fn best_lower_level(&self) -> Result<(Fraction, Fraction)> {
        if self.is_root() {
            return Err(Error::domain(
                "the root has only boundary parents, no finite approximation pair",
            ));
        }
        let (close, distant) = self.parents();
        Ok((close.value(), distant.value()))
    }
}

/// The dashed boundary vertices of the tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Boundary {
    /// `[0]`, the value 0/1 left of every vertex.
    Zero,
    /// `[]`, the value 1/0 right of every vertex.
    Infinity,
}

impl Boundary {
    pub fn value(&self) -> Fraction {
        match self {
            Boundary::Zero => Fraction::zero(),
            Boundary::Infinity => Fraction::infinity(),
        }
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Boundary::Zero => f.write_str("[0]"),
            Boundary::Infinity => f.write_str("[]"),
        }
    }
}

/// A parent of a tree vertex: either another vertex or a boundary.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CfParent {
    Vertex(ContinuedFraction),
    Boundary(Boundary),
}

impl CfParent {
    fn from_gen_string(s: &GenString) -> CfParent {
        match s {
            GenString::Word(w) => CfParent::Vertex(ContinuedFraction::from_word(w)),
            GenString::RInv => CfParent::Boundary(Boundary::Zero),
            GenString::LInv => CfParent::Boundary(Boundary::Infinity),
        }
    }

    pub fn value(&self) -> Fraction {
        match self {
            CfParent::Vertex(c) => c.eval(),
            CfParent::Boundary(b) => b.value(),
        }
    }

    pub fn level(&self) -> BigInt {
        match self {
            CfParent::Vertex(c) => BigInt::from(c.level()),
            CfParent::Boundary(_) => BigInt::from(-1),
        }
    }

    pub fn as_vertex(&self) -> Option<&ContinuedFraction> {
        match self {
            CfParent::Vertex(c) => Some(c),
            CfParent::Boundary(_) => None,
        }
    }
}

impl fmt::Display for CfParent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CfParent::Vertex(c) => c.fmt(f),
            CfParent::Boundary(b) => b.fmt(f),
        }
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, q) in self.quotients.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            q.fmt(f)?;
        }
        f.write_str("]")
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    /// Parses `"[q0,q1,...]"` with decimal quotients; the sequence is
    /// canonicalized (a trailing 1 merges) and validated.
    fn from_str(text: &str) -> Result<ContinuedFraction> {
        let inner = text
            .strip_prefix('[')
            .ok_or_else(|| Error::parse(0, "expected '['"))?
            .strip_suffix(']')
            .ok_or_else(|| Error::parse(text.len(), "expected closing ']'"))?;
        if inner.trim().is_empty() {
            return Err(Error::domain(
                "the empty continued fraction is a boundary vertex, not an operand",
            ));
        }
        let mut quotients = Vec::new();
        let mut offset = 1usize;
        for piece in inner.split(',') {
            let item = piece.trim();
            let item_offset = offset + (piece.len() - piece.trim_start().len());
            if item.is_empty() || !item.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(
                    item_offset,
                    "quotients must be non-negative integers",
                ));
            }
            let q = BigUint::from_str(item)
                .map_err(|_| Error::parse(item_offset, "invalid quotient"))?;
            quotients.push(q);
            offset += piece.len() + 1;
        }
        ContinuedFraction::new(quotients)
    }
}

/// The unique rational strictly inside the open interval `(x, y)` with the
/// smallest denominator (and, among those, the smallest numerator).
///
/// Walks the Stern-Brocot tree from the root, stepping towards the
/// interval while the current vertex lies outside it; equal-length runs of
/// steps in one direction are taken in a single batch. Every rational in
/// the interval is a descendant of the first vertex the walk meets inside,
/// and descendants only grow componentwise, which gives minimality.
pub fn simplest_between(x: &Fraction, y: &Fraction) -> Result<Fraction> {
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::domain("interval endpoints must be finite"));
    }
    if x.is_zero() {
        return Err(Error::domain("the left endpoint must be positive"));
    }
    if x >= y {
        return Err(Error::domain("need a nonempty open interval with x < y"));
    }
    let (px, qx) = (x.numerator(), x.denominator());
    let (py, qy) = (y.numerator(), y.denominator());
    // bounds (lo, hi) start at 0/1 and 1/0; invariant lo <= x < y <= hi
    let (mut ln, mut ld) = (BigUint::zero(), BigUint::one());
    let (mut hn, mut hd) = (BigUint::one(), BigUint::zero());
    loop {
        let mn = &ln + &hn;
        let md = &ld + &hd;
        if &mn * qx <= px * &md {
            // mediant <= x: batch all right steps that stay <= x
            let k = (px * &ld - qx * &ln) / (&hn * qx - &hd * px);
            ln += &k * &hn;
            ld += &k * &hd;
        } else if &mn * qy >= py * &md {
            // mediant >= y: batch all left steps that stay >= y
            let k = (&hn * qy - py * &hd) / (py * &ld - qy * &ln);
            hn += &k * &ln;
            hd += &k * &ld;
        } else {
            return Fraction::new(mn, md);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn cf(text: &str) -> ContinuedFraction {
        text.parse().unwrap()
    }

    fn frac(text: &str) -> Fraction {
        text.parse().unwrap()
    }

    fn word(text: &str) -> Word {
        text.parse().unwrap()
    }

    #[test]
    fn evaluation() {
        assert_eq!(cf("[1]").eval(), frac("1/1"));
        assert_eq!(cf("[1,3]").eval(), frac("4/3"));
        assert_eq!(cf("[2,2]").eval(), frac("5/2"));
        assert_eq!(cf("[0,1,2]").eval(), frac("2/3"));
        for text in ["[1]", "[0,2]", "[1,3]", "[0,1,2]", "[2,1,1,3]", "[0,4]"] {
            let c = cf(text);
            assert_eq!(c.eval(), c.eval_folded());
        }
    }

    #[test]
    fn expansion_of_rationals() {
        assert_eq!(
            ContinuedFraction::from_fraction(&frac("4/3")).unwrap(),
            cf("[1,3]")
        );
        assert_eq!(
            ContinuedFraction::from_fraction(&frac("2/3")).unwrap(),
            cf("[0,1,2]")
        );
        assert_eq!(
            ContinuedFraction::from_fraction(&frac("1/1")).unwrap(),
            cf("[1]")
        );
        assert!(ContinuedFraction::from_fraction(&Fraction::zero()).is_err());
        assert!(ContinuedFraction::from_fraction(&Fraction::infinity()).is_err());
    }

    #[test]
    fn canonicalization_merges_trailing_one() {
        assert_eq!(cf("[1,2,1]"), cf("[1,3]"));
        assert_eq!(cf("[0,1]"), cf("[1]"));
        assert!("[0]".parse::<ContinuedFraction>().is_err());
        assert!("[]".parse::<ContinuedFraction>().is_err());
        assert!("[1,0,2]".parse::<ContinuedFraction>().is_err());
        assert!("[1,x]".parse::<ContinuedFraction>().is_err());
        assert_eq!(cf("[1,3]").to_string(), "[1,3]");
    }

    #[test]
    fn children_rules() {
        assert_eq!(cf("[1]").children(), (cf("[0,2]"), cf("[2]")));
        assert_eq!(cf("[0,2]").children(), (cf("[0,3]"), cf("[0,1,2]")));
        assert_eq!(cf("[2]").children(), (cf("[1,2]"), cf("[3]")));
        assert_eq!(cf("[0,1,2]").children(), (cf("[0,1,1,2]"), cf("[0,1,3]")));
    }

    #[test]
    fn word_bijection() {
        assert_eq!(cf("[1]").to_word(), Word::empty());
        assert_eq!(cf("[1,3]").to_word(), word("RLL"));
        assert_eq!(cf("[0,1,1,2]").to_word(), word("LRL"));
        assert_eq!(ContinuedFraction::from_word(&word("RLL")), cf("[1,3]"));
        assert_eq!(ContinuedFraction::from_word(&Word::empty()), cf("[1]"));
    }

    #[test]
    fn levels() {
        assert_eq!(cf("[1]").level(), BigUint::zero());
        assert_eq!(cf("[1,3]").level(), BigUint::from(3u32));
        assert_eq!(cf("[0,2]").level(), BigUint::from(1u32));
    }

    #[test]
    fn parents_by_conjugation() {
        let (close, distant) = cf("[1,3]").parents();
        assert_eq!(close, CfParent::Vertex(cf("[1,2]")));
        assert_eq!(distant, CfParent::Vertex(cf("[1]")));

        let (close, distant) = cf("[0,1,2]").parents();
        assert_eq!(close, CfParent::Vertex(cf("[0,2]")));
        assert_eq!(distant, CfParent::Vertex(cf("[1]")));

        let (close, distant) = cf("[2]").parents();
        assert_eq!(close, CfParent::Vertex(cf("[1]")));
        assert_eq!(distant, CfParent::Boundary(Boundary::Infinity));
        assert_eq!(distant.to_string(), "[]");

        let (close, distant) = ContinuedFraction::root().parents();
        assert_eq!(close, CfParent::Boundary(Boundary::Zero));
        assert_eq!(distant, CfParent::Boundary(Boundary::Infinity));
    }

    #[test]
    fn best_lower_level_pairs() {
        assert_eq!(
            cf("[1,3]").best_lower_level().unwrap(),
            (frac("3/2"), frac("1/1"))
        );
        assert_eq!(
            cf("[0,1,2]").best_lower_level().unwrap(),
            (frac("1/2"), frac("1/1"))
        );
        assert!(ContinuedFraction::root().best_lower_level().is_err());
    }

    #[test]
    fn simplest_between_examples() {
        assert_eq!(
            simplest_between(&frac("7/5"), &frac("3/2")).unwrap(),
            frac("10/7")
        );
        assert_eq!(
            simplest_between(&frac("1/3"), &frac("2/3")).unwrap(),
            frac("1/2")
        );
        assert_eq!(
            simplest_between(&frac("1/1"), &frac("2/1")).unwrap(),
            frac("3/2")
        );
        assert!(simplest_between(&frac("2/3"), &frac("1/3")).is_err());
        assert!(simplest_between(&frac("1/2"), &frac("1/2")).is_err());
        assert!(simplest_between(&Fraction::zero(), &frac("1/2")).is_err());
        assert!(simplest_between(&frac("1/2"), &Fraction::infinity()).is_err());
    }
}
