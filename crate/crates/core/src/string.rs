//! Words over `{L, R}` and the two generalized inverse letters.
//!
//! A word is stored as its run lengths: `R^{k0} L^{k1} R^{k2} ...` becomes
//! the vector `(k0, ..., km)`, with runs alternating letter and the run at
//! even index always an `R` run. The canonical form (`k0 >= 0`, `ki >= 1`
//! for `i >= 1`, no trailing zero run, the empty word being `(0)`) makes
//! structural equality coincide with word equality, and lets run lengths be
//! arbitrary-precision so that words like `S(1000000)` never have to be
//! spelled out letter by letter.
//!
//! Postmultiplication by an inverse letter cancels under
//! `L L^-1 = e`, `R R^-1 = e`, `L R^-1 = R^-1`, `R L^-1 = L^-1`,
//! which is how the left and right parents of a vertex are computed. The
//! two sentinels `L^-1` and `R^-1` are terminal: they arise only as parent
//! results and are rejected as operands.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// One turn on a root-to-vertex path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn flip(self) -> Letter {
        match self {
            Letter::L => Letter::R,
            Letter::R => Letter::L,
        }
    }

    /// Letter carried by the run at index `i` of a run vector.
    fn of_run_index(i: usize) -> Letter {
        if i % 2 == 0 {
            Letter::R
        } else {
            Letter::L
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char(match self {
            Letter::L => 'L',
            Letter::R => 'R',
        })
    }
}

/// A finite word over `{L, R}` in canonical run-length form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    runs: Vec<BigUint>,
}

/// Append a run of `count` copies of `letter`, keeping the vector canonical.
fn push_run(runs: &mut Vec<BigUint>, letter: Letter, count: BigUint) {
    if count.is_zero() {
        return;
    }
    let last = Letter::of_run_index(runs.len() - 1);
    if letter == last {
        let k = runs.last_mut().expect("runs are never empty");
        *k += count;
    } else {
        runs.push(count);
    }
}

/// Decrement the final run, dropping it if it reaches zero.
fn decrement_last(runs: &mut Vec<BigUint>) {
    let k = runs.last_mut().expect("runs are never empty");
    *k -= 1u32;
    if k.is_zero() && runs.len() > 1 {
        runs.pop();
    }
}

fn is_empty_runs(runs: &[BigUint]) -> bool {
    runs.len() == 1 && runs[0].is_zero()
}

impl Word {
    /// The empty word.
    pub fn empty() -> Word {
        Word {
            runs: vec![BigUint::zero()],
        }
    }

    /// Builds the word `R^{k0} L^{k1} R^{k2} ...` from raw run lengths.
    ///
    /// The input need not be canonical: zero runs merge their neighbours
    /// (they contribute no letters) and a trailing zero is dropped.
    pub fn from_runs<I>(input: I) -> Word
    where
        I: IntoIterator<Item = BigUint>,
    {
        let mut runs = vec![BigUint::zero()];
        for (i, k) in input.into_iter().enumerate() {
            push_run(&mut runs, Letter::of_run_index(i), k);
        }
        Word { runs }
    }

    pub fn from_letters<I>(input: I) -> Word
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut runs = vec![BigUint::zero()];
        for letter in input {
            push_run(&mut runs, letter, BigUint::one());
        }
        Word { runs }
    }

    /// Canonical run lengths `(k0, ..., km)`.
    pub fn runs(&self) -> &[BigUint] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        is_empty_runs(&self.runs)
    }

    /// Number of letters; also the level (tree depth) of the vertex.
    pub fn level(&self) -> BigUint {
        self.runs.iter().fold(BigUint::zero(), |acc, k| acc + k)
    }

    /// The run index `m` of the canonical form `S(k0, ..., km)`; zero for
    /// the empty word. This counts the maximal runs after the leading `R`
    /// run and is the second length metric of the calculus.
    pub fn run_count(&self) -> u64 {
        (self.runs.len() - 1) as u64
    }

    pub fn last_letter(&self) -> Option<Letter> {
        if self.is_empty() {
            None
        } else {
            Some(Letter::of_run_index(self.runs.len() - 1))
        }
    }

    /// Streams the letters without materializing them; a word given in run
    /// form with huge runs may be iterated lazily and partially.
    pub fn letters(&self) -> Letters<'_> {
        Letters {
            runs: &self.runs,
            index: 0,
            remaining: self.runs[0].clone(),
        }
    }

    /// Iterates `(letter, run length)` pairs, skipping an empty leading run.
    pub fn letter_runs(&self) -> impl Iterator<Item = (Letter, &BigUint)> + '_ {
        self.runs
            .iter()
            .enumerate()
            .filter(|(_, k)| !k.is_zero())
            .map(|(i, k)| (Letter::of_run_index(i), k))
    }

    /// The child `SL` or `SR`.
    pub fn child(&self, direction: Letter) -> Word {
        let mut runs = self.runs.clone();
        push_run(&mut runs, direction, BigUint::one());
        Word { runs }
    }

    /// Postmultiplies by the inverse of `letter`: `S . R^-1` for
    /// [`Letter::R`], `S . L^-1` for [`Letter::L`], cancelling recursively.
    /// The result is a word, or the matching sentinel when every letter of
    /// `S` cancels away.
    pub fn append_inverse(&self, letter: Letter) -> GenString {
        let mut runs = self.runs.clone();
        if let Some(last) = self.last_letter() {
            if last != letter {
                // the whole trailing run cancels one letter at a time
                if runs.len() == 1 {
                    runs[0] = BigUint::zero();
                } else {
                    runs.pop();
                }
            }
        }
        if is_empty_runs(&runs) {
            return match letter {
                Letter::R => GenString::RInv,
                Letter::L => GenString::LInv,
            };
        }
        decrement_last(&mut runs);
        GenString::Word(Word { runs })
    }

    /// The left parent `S . R^-1`: the nearest strictly-lower-level vertex
    /// to the left of `S` in tree order.
    pub fn parent_left(&self) -> GenString {
        self.append_inverse(Letter::R)
    }

    /// The right parent `S . L^-1`.
    pub fn parent_right(&self) -> GenString {
        self.append_inverse(Letter::L)
    }

    /// The conventional parent, one level up: `S(k0, ..., km - 1)`.
    pub fn parent_close(&self) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::domain(
                "the empty word has no close or distant parent",
            ));
        }
        let mut runs = self.runs.clone();
        decrement_last(&mut runs);
        Ok(Word { runs })
    }

    /// The other parent, at least two levels up:
    /// `S(k0, ..., k_{m-2}, k_{m-1} - 1)`. Degenerate cases map to the
    /// sentinels: dropping past index 0 of a pure `R` word gives `L^-1`,
    /// and decrementing the empty leading run of a pure `L` word gives
    /// `R^-1`.
    pub fn parent_distant(&self) -> Result<GenString> {
        if self.is_empty() {
            return Err(Error::domain(
                "the empty word has no close or distant parent",
            ));
        }
        let mut runs = self.runs.clone();
        if runs.len() == 1 {
            return Ok(GenString::LInv);
        }
        runs.pop();
        if is_empty_runs(&runs) {
            return Ok(GenString::RInv);
        }
        decrement_last(&mut runs);
        Ok(GenString::Word(Word { runs }))
    }

    /// The word with its letter sequence reversed; an involution.
    pub fn reverse(&self) -> Word {
        let m_is_even = (self.runs.len() - 1) % 2 == 0;
        let mut runs = Vec::with_capacity(self.runs.len() + 1);
        if !m_is_even {
            // the reversed word starts with an L, so it needs an empty
            // leading R run
            runs.push(BigUint::zero());
        }
        runs.extend(self.runs.iter().rev().cloned());
        while runs.len() > 1 && runs.last().expect("nonempty").is_zero() {
            runs.pop();
        }
        Word { runs }
    }

    /// Renders the run form `S(k0,k1,...)`.
    pub fn runs_notation(&self) -> String {
        let mut out = String::from("S(");
        for (i, k) in self.runs.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{k}");
        }
        out.push(')');
        out
    }
}

/// Streaming letter iterator over a [`Word`].
pub struct Letters<'a> {
    runs: &'a [BigUint],
    index: usize,
    remaining: BigUint,
}

impl Iterator for Letters<'_> {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        while self.remaining.is_zero() {
            self.index += 1;
            if self.index >= self.runs.len() {
                return None;
            }
            self.remaining = self.runs[self.index].clone();
        }
        self.remaining -= 1u32;
        Some(Letter::of_run_index(self.index))
    }
}

/// A word or one of the two generalized inverse letters.
///
/// `R^-1` sits just left of every word (level -1, order value 0) and
/// `L^-1` just right of every word (level -1, order value 2). They appear
/// as parents of words near the edge of the tree and support no further
/// operations of their own.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GenString {
    Word(Word),
    /// The generalized string `L^-1`.
    LInv,
    /// The generalized string `R^-1`.
    RInv,
}

impl GenString {
    pub fn empty() -> GenString {
        GenString::Word(Word::empty())
    }

    pub fn is_word(&self) -> bool {
        matches!(self, GenString::Word(_))
    }

    pub fn as_word(&self) -> Option<&Word> {
        match self {
            GenString::Word(w) => Some(w),
            _ => None,
        }
    }

    /// The contained word, or a domain error for a sentinel.
    pub fn word(&self) -> Result<&Word> {
        self.as_word().ok_or_else(|| {
            Error::domain(format_args_to_string(format_args!(
                "operation is undefined for the generalized string {self}"
            )))
        })
    }

    /// Letter count for words, -1 for both sentinels.
    pub fn level(&self) -> BigInt {
        match self {
            GenString::Word(w) => BigInt::from(w.level()),
            GenString::LInv | GenString::RInv => BigInt::from(-1),
        }
    }

    pub fn child(&self, direction: Letter) -> Result<GenString> {
        Ok(GenString::Word(self.word()?.child(direction)))
    }

    pub fn append_inverse(&self, letter: Letter) -> Result<GenString> {
        Ok(self.word()?.append_inverse(letter))
    }

    pub fn parent_left(&self) -> Result<GenString> {
        Ok(self.word()?.parent_left())
    }

    pub fn parent_right(&self) -> Result<GenString> {
        Ok(self.word()?.parent_right())
    }

    pub fn parent_close(&self) -> Result<GenString> {
        Ok(GenString::Word(self.word()?.parent_close()?))
    }

    pub fn parent_distant(&self) -> Result<GenString> {
        self.word()?.parent_distant()
    }

    pub fn reverse(&self) -> Result<GenString> {
        Ok(GenString::Word(self.word()?.reverse()))
    }

    pub fn run_count(&self) -> Result<u64> {
        Ok(self.word()?.run_count())
    }
}

impl From<Word> for GenString {
    fn from(w: Word) -> GenString {
        GenString::Word(w)
    }
}

fn format_args_to_string(args: fmt::Arguments<'_>) -> String {
    let mut s = String::new();
    let _ = s.write_fmt(args);
    s
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_char('e');
        }
        for letter in self.letters() {
            f.write_char(match letter {
                Letter::L => 'L',
                Letter::R => 'R',
            })?;
        }
        Ok(())
    }
}

impl fmt::Display for GenString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenString::Word(w) => w.fmt(f),
            GenString::LInv => f.write_str("L^-1"),
            GenString::RInv => f.write_str("R^-1"),
        }
    }
}

fn parse_run_form(text: &str) -> Result<Word> {
    let inner = text
        .strip_prefix("S(")
        .expect("caller checked the prefix")
        .strip_suffix(')')
        .ok_or_else(|| Error::parse(text.len(), "expected closing ')'"))?;
    if inner.is_empty() {
        return Err(Error::parse(2, "expected at least one run length"));
    }
    let mut runs = Vec::new();
    let mut offset = 2usize;
    for piece in inner.split(',') {
        let item = piece.trim();
        let item_offset = offset + (piece.len() - piece.trim_start().len());
        if item.is_empty() {
            return Err(Error::parse(item_offset, "empty run length"));
        }
        if !item.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(
                item_offset,
                "run lengths must be non-negative integers",
            ));
        }
        let k =
            BigUint::from_str(item).map_err(|_| Error::parse(item_offset, "invalid run length"))?;
        runs.push(k);
        offset += piece.len() + 1;
    }
    Ok(Word::from_runs(runs))
}

impl FromStr for GenString {
    type Err = Error;

    /// Accepts a letter word (`"LLRR"`), `"e"` or the empty string for the
    /// empty word, the sentinels `"L^-1"` / `"R^-1"`, and the run form
    /// `"S(k0,k1,...)"`.
    fn from_str(text: &str) -> Result<GenString> {
        match text {
            "" | "e" => return Ok(GenString::empty()),
            "L^-1" => return Ok(GenString::LInv),
            "R^-1" => return Ok(GenString::RInv),
            _ => {}
        }
        if text.starts_with("S(") {
            return Ok(GenString::Word(parse_run_form(text)?));
        }
        let mut word = Word::empty();
        for (i, ch) in text.char_indices() {
            let letter = match ch {
                'L' => Letter::L,
                'R' => Letter::R,
                _ => {
                    return Err(Error::parse(
                        i,
                        "expected 'L' or 'R' (or one of \"e\", \"L^-1\", \"R^-1\", \"S(...)\")",
                    ))
                }
            };
            word = word.child(letter);
        }
        Ok(GenString::Word(word))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Word> {
        match GenString::from_str(text)? {
            GenString::Word(w) => Ok(w),
            s => Err(Error::domain(format_args_to_string(format_args!(
                "expected a word, found the generalized string {s}"
            )))),
        }
    }
}

/// All words of level `m` in left-to-right tree order.
pub fn words_at_level(m: u32) -> Vec<Word> {
    let mut row = vec![Word::empty()];
    for _ in 0..m {
        let mut next = Vec::with_capacity(row.len() * 2);
        for w in &row {
            next.push(w.child(Letter::L));
            next.push(w.child(Letter::R));
        }
        row = next;
    }
    row
}

/// All words of level at most `max_level`, in (level, position) order.
pub fn words_up_to_level(max_level: u32) -> impl Iterator<Item = Word> {
    (0..=max_level).flat_map(words_at_level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn word(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn gen(text: &str) -> GenString {
        text.parse().unwrap()
    }

    fn runs(word: &Word) -> Vec<u64> {
        word.runs()
            .iter()
            .map(|k| u64::try_from(k).unwrap())
            .collect()
    }

    #[test]
    fn parse_letter_words() {
        assert_eq!(runs(&word("LLRR")), vec![0, 2, 2]);
        assert_eq!(runs(&word("e")), vec![0]);
        assert_eq!(runs(&word("")), vec![0]);
        assert_eq!(runs(&word("RLL")), vec![1, 2]);
        assert_eq!(gen("L^-1"), GenString::LInv);
        assert_eq!(gen("R^-1"), GenString::RInv);
    }

    #[test]
    fn parse_run_form_normalizes() {
        assert_eq!(word("S(1,2)").to_string(), "RLL");
        assert_eq!(word("S(0)"), Word::empty());
        assert_eq!(word("S(1,2,0)"), word("RLL"));
        // a zero run contributes no letters, so its neighbours merge
        assert_eq!(word("S(1,0,2)"), word("RRR"));
        assert_eq!(word("S(0,0,2)"), word("RR"));
    }

    #[test]
    fn parse_errors_name_the_position() {
        assert_eq!(
            "LXR".parse::<GenString>(),
            Err(Error::parse(
                1,
                "expected 'L' or 'R' (or one of \"e\", \"L^-1\", \"R^-1\", \"S(...)\")"
            ))
        );
        assert!(matches!(
            "S(1,-2)".parse::<GenString>(),
            Err(Error::Parse { position: 4, .. })
        ));
        assert!(matches!(
            "S(1,2".parse::<GenString>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "S()".parse::<GenString>(),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn format_round_trips() {
        for text in ["e", "L", "R", "LLRR", "RLL", "L^-1", "R^-1"] {
            let s = gen(text);
            let shown = s.to_string();
            let again: GenString = shown.parse().unwrap();
            assert_eq!(s, again);
        }
        assert_eq!(word("LLRR").runs_notation(), "S(0,2,2)");
        assert_eq!(Word::empty().runs_notation(), "S(0)");
    }

    #[test]
    fn children_append_one_letter() {
        assert_eq!(Word::empty().child(Letter::L), word("L"));
        assert_eq!(word("RL").child(Letter::R), word("RLR"));
        let w = word("RLL");
        assert_eq!(w.child(Letter::L).level(), w.level() + 1u32);
    }

    #[test]
    fn append_inverse_cancels() {
        // L^2 R^2 . R^-1 = L^2 R
        assert_eq!(word("LLRR").append_inverse(Letter::R), gen("LLR"));
        // e . R^-1 = R^-1
        assert_eq!(Word::empty().append_inverse(Letter::R), GenString::RInv);
        // RL . R^-1 = R . R^-1 = e
        assert_eq!(word("RL").append_inverse(Letter::R), GenString::empty());
        // L^2 R^2 . L^-1 = L
        assert_eq!(word("LLRR").append_inverse(Letter::L), gen("L"));
    }

    #[test]
    fn left_and_right_parents() {
        assert_eq!(word("LLRR").parent_right(), gen("L"));
        assert_eq!(Word::empty().parent_right(), GenString::LInv);
        assert_eq!(Word::empty().parent_left(), GenString::RInv);
        assert_eq!(word("LLL").parent_left(), GenString::RInv);
        assert_eq!(word("RRR").parent_right(), GenString::LInv);
        assert_eq!(word("RLRR").parent_right(), gen("R"));
    }

    #[test]
    fn close_and_distant_parents() {
        // position 4 is LR: close parent L (position 1), distant parent e
        assert_eq!(word("LR").parent_close().unwrap(), word("L"));
        assert_eq!(word("LR").parent_distant().unwrap(), GenString::empty());
        // position 12 is RLR: close parent RL (5), distant parent R (2)
        assert_eq!(word("RLR").parent_close().unwrap(), word("RL"));
        assert_eq!(word("RLR").parent_distant().unwrap(), gen("R"));
        // pure-L and pure-R words fall off the edge
        assert_eq!(word("L").parent_distant().unwrap(), GenString::RInv);
        assert_eq!(word("R").parent_distant().unwrap(), GenString::LInv);
        assert!(Word::empty().parent_close().is_err());
        assert!(Word::empty().parent_distant().is_err());
    }

    #[test]
    fn sentinels_are_terminal() {
        assert!(GenString::LInv.child(Letter::L).is_err());
        assert!(GenString::RInv.parent_left().is_err());
        assert!(GenString::LInv.reverse().is_err());
        assert!(GenString::RInv.run_count().is_err());
    }

    #[test]
    fn levels() {
        assert_eq!(word("LLRR").level(), BigUint::from(4u32));
        assert_eq!(GenString::RInv.level(), BigInt::from(-1));
        assert_eq!(word("S(1,2,1)").level(), BigUint::from(4u32));
        // run form keeps deep words cheap
        assert_eq!(word("S(1000000)").level(), BigUint::from(1_000_000u32));
    }

    #[test]
    fn run_counts() {
        assert_eq!(Word::empty().run_count(), 0);
        assert_eq!(word("LR").run_count(), 2);
        assert_eq!(word("RRL").run_count(), 1);
        assert_eq!(word("RRR").run_count(), 0);
    }

    #[test]
    fn reversal() {
        assert_eq!(word("LR").reverse(), word("RL"));
        assert_eq!(Word::empty().reverse(), Word::empty());
        assert_eq!(word("LLR").reverse(), word("RLL"));
        for text in ["L", "R", "LLRR", "RLRLL", "LRRLR"] {
            let w = word(text);
            assert_eq!(w.reverse().reverse(), w);
            assert_eq!(w.reverse().level(), w.level());
        }
    }

    #[test]
    fn letters_stream_lazily() {
        let w = word("S(1000000000000)");
        let first: Vec<Letter> = w.letters().take(3).collect();
        assert_eq!(first, vec![Letter::R, Letter::R, Letter::R]);
    }

    #[test]
    fn level_rows_double() {
        assert_eq!(words_at_level(0), vec![Word::empty()]);
        assert_eq!(words_at_level(1), vec![word("L"), word("R")]);
        assert_eq!(words_at_level(3).len(), 8);
        assert_eq!(words_up_to_level(3).count(), 15);
    }
}
