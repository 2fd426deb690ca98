//! The two vertex metrics and their closed forms.
//!
//! The *order value* maps each word into the open interval (0, 2) so that
//! left-to-right tree order coincides with numeric order: the root has
//! value 1, stepping left subtracts `2^-level`, stepping right adds it.
//! The sentinels extend the map with the boundary values 0 (`R^-1`) and 2
//! (`L^-1`).
//!
//! The *position* is the breadth-first index: the root is 0 and the
//! children of position `n` are `2n + 1` and `2n + 2`. Substituting the
//! sentinels into the same recurrence gives `-1` for `R^-1` and `-1/2`
//! for `L^-1`.
//!
//! Both metrics also have closed forms over the run lengths of a word;
//! the recursive and closed evaluators are kept side by side so that the
//! check suites can play them against each other. Positions grow like
//! `2^(level+1)`, so everything here is arbitrary-precision.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::string::{words_at_level, words_up_to_level, GenString, Letter, Word};

/// A breadth-first position, extended to the sentinels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtPosition {
    Nat(BigUint),
    /// Position of `R^-1`.
    NegOne,
    /// Position of `L^-1`.
    NegHalf,
}

impl ExtPosition {
    pub fn as_nat(&self) -> Option<&BigUint> {
        match self {
            ExtPosition::Nat(n) => Some(n),
            _ => None,
        }
    }

    /// `2 * position + 1`: always an integer, since the sentinel positions
    /// double to -2 and -1.
    pub fn doubled_plus_one(&self) -> BigInt {
        match self {
            ExtPosition::Nat(n) => BigInt::from(n * 2u32) + 1,
            ExtPosition::NegOne => BigInt::from(-1),
            ExtPosition::NegHalf => BigInt::zero(),
        }
    }
}

impl fmt::Display for ExtPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtPosition::Nat(n) => n.fmt(f),
            ExtPosition::NegOne => f.write_str("-1"),
            ExtPosition::NegHalf => f.write_str("-1/2"),
        }
    }
}

impl FromStr for ExtPosition {
    type Err = Error;

    fn from_str(text: &str) -> Result<ExtPosition> {
        match text {
            "-1" => return Ok(ExtPosition::NegOne),
            "-1/2" => return Ok(ExtPosition::NegHalf),
            _ => {}
        }
        if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(
                0,
                "expected a non-negative integer, \"-1\", or \"-1/2\"",
            ));
        }
        let n = BigUint::from_str(text).map_err(|_| Error::parse(0, "invalid position"))?;
        Ok(ExtPosition::Nat(n))
    }
}

/// Level of a word as a machine integer, for use as a shift amount. Values
/// beyond `u64` could never be materialized as dyadics or positions anyway.
fn level_u64(w: &Word) -> u64 {
    u64::try_from(&w.level()).expect("word level too large to materialize a metric value")
}

/// Order value by its defining recurrence, one letter at a time.
pub fn order_value_recursive(s: &GenString) -> Dyadic {
    match s {
        GenString::RInv => Dyadic::zero(),
        GenString::LInv => Dyadic::two(),
        GenString::Word(w) => {
            let mut r = Dyadic::one();
            let mut depth = 0u64;
            for letter in w.letters() {
                depth += 1;
                let step = Dyadic::pow2_neg(depth);
                r = match letter {
                    Letter::L => &r - &step,
                    Letter::R => &r + &step,
                };
            }
            r
        }
    }
}

/// Order value from the run lengths:
/// `2 (1 - 2^-k0 + 2^-(k0+k1) - ... + (-1)^m 2^-(k0+...+k_{m-1}) + (-1)^(m+1) 2^-(level+1))`.
///
/// Evaluated over the common denominator `2^level` with a signed
/// accumulator; the result is non-negative because the series alternates
/// with strictly decreasing terms.
pub fn order_value_closed(w: &Word) -> Dyadic {
    let level = level_u64(w);
    let m = w.runs().len() - 1;
    // numerator of r over 2^level; each term of the series contributes
    // (+-) 2^(level + 1 - prefix_i), the tail term contributes (+-) 1
    let mut acc = BigInt::zero();
    let mut prefix = 0u64;
    for (i, k) in w.runs().iter().enumerate() {
        let term = BigInt::from(BigUint::one() << (level + 1 - prefix));
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        prefix += u64::try_from(k).expect("run fits in u64 when the level does");
    }
    if (m + 1) % 2 == 0 {
        acc += 1;
    } else {
        acc -= 1;
    }
    let num = acc
        .to_biguint()
        .expect("alternating series with decreasing terms stays non-negative");
    Dyadic::new(num, level)
}

/// The equivalent second closed form, summing `2 * (-1)^i 2^-(k0+...+k_{i-1})`
/// over `i = 0..=m+1` and correcting by `(-1)^(m+2) 2^-level`.
pub fn order_value_closed_alt(w: &Word) -> Dyadic {
    let level = level_u64(w);
    let m = w.runs().len() - 1;
    let mut acc = BigInt::zero();
    let mut prefix = 0u64;
    for i in 0..=(m + 1) {
        let term = BigInt::from(BigUint::one() << (level + 1 - prefix));
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        if i <= m {
            prefix += u64::try_from(&w.runs()[i]).expect("run fits in u64 when the level does");
        }
    }
    if (m + 2) % 2 == 0 {
        acc += 1;
    } else {
        acc -= 1;
    }
    let num = acc.to_biguint().expect("series stays non-negative");
    Dyadic::new(num, level)
}

/// Production order-value evaluator: closed form for words (cheap even for
/// run-form inputs with huge runs), boundary constants for the sentinels.
pub fn order_value(s: &GenString) -> Dyadic {
    match s {
        GenString::RInv => Dyadic::zero(),
        GenString::LInv => Dyadic::two(),
        GenString::Word(w) => order_value_closed(w),
    }
}

/// Breadth-first position of a word by its defining recurrence.
pub fn word_position(w: &Word) -> BigUint {
    let mut n = BigUint::zero();
    for letter in w.letters() {
        n <<= 1;
        n += match letter {
            Letter::L => 1u32,
            Letter::R => 2u32,
        };
    }
    n
}

/// Position by the recurrence, extended to the sentinels.
pub fn position_recursive(s: &GenString) -> ExtPosition {
    match s {
        GenString::RInv => ExtPosition::NegOne,
        GenString::LInv => ExtPosition::NegHalf,
        GenString::Word(w) => ExtPosition::Nat(word_position(w)),
    }
}

/// Position from the run lengths:
/// `2^(level+1) - 2^(k1+...+km) + 2^(k2+...+km) - ... (+-) 2^km - (2 | 1)`,
/// ending with `+2^km - 2` when `m` is even and `-2^km - 1` when odd.
pub fn position_closed(w: &Word) -> BigUint {
    let level = level_u64(w);
    let m = w.runs().len() - 1;
    let mut acc = BigInt::from(BigUint::one() << (level + 1));
    // suffix_j = k_j + ... + k_m, walking j = m, m-1, ..., 1
    let mut suffix = 0u64;
    let mut terms: Vec<(usize, u64)> = Vec::with_capacity(m);
    for j in (1..=m).rev() {
        suffix += u64::try_from(&w.runs()[j]).expect("run fits in u64 when the level does");
        terms.push((j, suffix));
    }
    for (j, suffix) in terms {
        let term = BigInt::from(BigUint::one() << suffix);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc -= if m % 2 == 0 { 2 } else { 1 };
    acc.to_biguint().expect("positions are non-negative")
}

/// Production position evaluator: closed form for words, sentinel values
/// otherwise.
pub fn position(s: &GenString) -> ExtPosition {
    match s {
        GenString::RInv => ExtPosition::NegOne,
        GenString::LInv => ExtPosition::NegHalf,
        GenString::Word(w) => ExtPosition::Nat(position_closed(w)),
    }
}

/// The unique word at breadth-first position `n`: write `n + 1` in binary,
/// drop the leading 1, and read the remaining bits as turns (0 = L, 1 = R).
pub fn string_at_position(n: &BigUint) -> Word {
    let heap = n + 1u32;
    let bits = heap.bits();
    let mut w = Word::empty();
    for i in (0..bits - 1).rev() {
        w = w.child(if heap.bit(i) { Letter::R } else { Letter::L });
    }
    w
}

/// Compares two generalized strings in tree (left-to-right) order without
/// materializing order values, so run-form words with huge runs stay cheap.
///
/// On words this is the alternating-lexicographic rule on run vectors: at
/// an even index the larger run is the greater word, at an odd index the
/// smaller one is, and a missing run counts as a single zero at the first
/// differing index. `R^-1` is the global minimum and `L^-1` the maximum.
pub fn compare_strings(a: &GenString, b: &GenString) -> Ordering {
    use GenString::{LInv, RInv, Word as W};
    match (a, b) {
        (RInv, RInv) | (LInv, LInv) => Ordering::Equal,
        (RInv, _) | (_, LInv) => Ordering::Less,
        (LInv, _) | (_, RInv) => Ordering::Greater,
        (W(wa), W(wb)) => {
            let zero = BigUint::zero();
            let (ra, rb) = (wa.runs(), wb.runs());
            for i in 0..ra.len().max(rb.len()) {
                let ka = ra.get(i).unwrap_or(&zero);
                let kb = rb.get(i).unwrap_or(&zero);
                if ka != kb {
                    let ord = ka.cmp(kb);
                    return if i % 2 == 0 { ord } else { ord.reverse() };
                }
            }
            Ordering::Equal
        }
    }
}

/// The sorted order values of level `m` (or of all levels up to `m` when
/// `cumulative`), produced by enumerating the words of those levels.
pub fn level_r_values(m: u32, cumulative: bool) -> Vec<Dyadic> {
    let mut values: Vec<Dyadic> = if cumulative {
        words_up_to_level(m)
            .map(|w| order_value_closed(&w))
            .collect()
    } else {
        words_at_level(m).iter().map(order_value_closed).collect()
    };
    values.sort();
    values
}

/// Terms `a(1..=count)` of the distant-parent sequence
/// `a(n) = 2 * position(distant_parent(word at position n)) + 1`.
pub fn distant_parent_sequence(count: usize) -> Vec<BigInt> {
    (1..=count)
        .map(|n| {
            let w = string_at_position(&BigUint::from(n));
            let parent = w.parent_distant().expect("positions >= 1 are not the root");
            position_recursive(&parent).doubled_plus_one()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn word(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn gen(text: &str) -> GenString {
        text.parse().unwrap()
    }

    fn dy(num: u64, exp: u64) -> Dyadic {
        Dyadic::new(BigUint::from(num), exp)
    }

    #[test]
    fn order_value_recurrence_base_cases() {
        assert_eq!(order_value_recursive(&GenString::empty()), Dyadic::one());
        assert_eq!(order_value_recursive(&gen("LLL")), dy(1, 3));
        assert_eq!(order_value_recursive(&gen("RL")), dy(5, 2));
        assert_eq!(order_value_recursive(&GenString::LInv), Dyadic::two());
        assert_eq!(order_value_recursive(&GenString::RInv), Dyadic::zero());
    }

    #[test]
    fn order_value_closed_matches_hand_values() {
        assert_eq!(order_value_closed(&Word::empty()), Dyadic::one());
        assert_eq!(order_value_closed(&word("RL")), dy(5, 2));
        assert_eq!(order_value_closed(&word("RRR")), dy(15, 3));
        assert_eq!(order_value_closed_alt(&word("RL")), dy(5, 2));
        assert_eq!(order_value_closed_alt(&Word::empty()), Dyadic::one());
        // the level-3 row of order values reads 1/8, 3/8, ..., 15/8
        let row: Vec<Dyadic> = words_at_level(3).iter().map(order_value_closed).collect();
        let expected: Vec<Dyadic> = (0..8u64).map(|k| dy(2 * k + 1, 3)).collect();
        assert_eq!(row, expected);
    }

    #[test]
    fn positions_by_recurrence() {
        assert_eq!(
            position_recursive(&GenString::empty()),
            ExtPosition::Nat(BigUint::zero())
        );
        assert_eq!(
            position_recursive(&gen("RRR")),
            ExtPosition::Nat(BigUint::from(14u32))
        );
        assert_eq!(position_recursive(&GenString::LInv), ExtPosition::NegHalf);
        assert_eq!(position_recursive(&GenString::RInv), ExtPosition::NegOne);
    }

    #[test]
    fn positions_by_closed_form() {
        // pure R runs: 2^(k0+1) - 2
        assert_eq!(position_closed(&Word::empty()), BigUint::zero());
        assert_eq!(position_closed(&word("RRR")), BigUint::from(14u32));
        assert_eq!(position_closed(&word("RL")), BigUint::from(5u32));
        assert_eq!(position_closed(&word("LLL")), BigUint::from(7u32));
        assert_eq!(position_closed(&word("RLR")), BigUint::from(12u32));
    }

    #[test]
    fn word_at_position_inverts() {
        assert_eq!(string_at_position(&BigUint::zero()), Word::empty());
        assert_eq!(string_at_position(&BigUint::from(5u32)), word("RL"));
        assert_eq!(string_at_position(&BigUint::from(14u32)), word("RRR"));
        for n in 0u32..64 {
            let w = string_at_position(&BigUint::from(n));
            assert_eq!(word_position(&w), BigUint::from(n));
        }
    }

    #[test]
    fn comparator_follows_tree_order() {
        assert_eq!(compare_strings(&gen("L"), &gen("R")), Ordering::Less);
        assert_eq!(compare_strings(&gen("RL"), &gen("RLR")), Ordering::Less);
        assert_eq!(compare_strings(&gen("RLL"), &gen("RL")), Ordering::Less);
        assert_eq!(compare_strings(&gen("RL"), &gen("RL")), Ordering::Equal);
        assert_eq!(
            compare_strings(&GenString::RInv, &gen("LLLL")),
            Ordering::Less
        );
        assert_eq!(
            compare_strings(&GenString::LInv, &gen("RRRR")),
            Ordering::Greater
        );
        // huge runs never materialize letters here
        assert_eq!(
            compare_strings(&gen("S(1000000000000)"), &gen("S(1000000000001)")),
            Ordering::Less
        );
    }

    #[test]
    fn level_value_sets() {
        assert_eq!(level_r_values(0, false), vec![Dyadic::one()]);
        assert_eq!(level_r_values(1, false), vec![dy(1, 1), dy(3, 1)]);
        let cumulative: Vec<Dyadic> = (1..=7u64).map(|l| dy(l, 2)).collect();
        assert_eq!(level_r_values(2, true), cumulative);
    }

    #[test]
    fn distant_parent_sequence_first_terms() {
        let seq = distant_parent_sequence(22);
        let expected: Vec<i64> = vec![
            -1, 0, -1, 1, 1, 0, -1, 3, 3, 1, 1, 5, 5, 0, -1, 7, 7, 3, 3, 9, 9, 1,
        ];
        let got: Vec<i64> = seq.iter().map(|n| i64::try_from(n).unwrap()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn position_text_forms() {
        assert_eq!("14".parse::<ExtPosition>().unwrap().to_string(), "14");
        assert_eq!("-1".parse::<ExtPosition>().unwrap(), ExtPosition::NegOne);
        assert_eq!("-1/2".parse::<ExtPosition>().unwrap(), ExtPosition::NegHalf);
        assert!("-3".parse::<ExtPosition>().is_err());
    }
}
