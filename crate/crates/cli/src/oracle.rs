//! Bounded-depth exhaustive verification of the calculus.
//!
//! Each suite enumerates every instance of a family of laws up to a depth,
//! re-deriving expected values by an independent route (a recurrence
//! against a closed form, a brute-force search against a fast algorithm, a
//! frozen table against live evaluation) and collects every mismatch
//! instead of stopping at the first. Reports are deterministic for a given
//! depth and seed, up to timing.

use std::fmt;
use std::time::{Duration, Instant};

use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;

use lrtree::cf::{self, ContinuedFraction};
use lrtree::fraction::Fraction;
use lrtree::metrics::{
    compare_strings, level_r_values, order_value_closed, order_value_closed_alt,
    order_value_recursive, position_closed, string_at_position, word_position,
};
use lrtree::string::{words_at_level, GenString, Letter, Word};
use lrtree::trees::{calkin_wilf_value, cf_row, stern_brocot_locate, stern_brocot_value};
use lrtree::{BigUint, Dyadic};

/// One counterexample: the offending input and the two renderings that
/// should have agreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one suite run. `failures` break the run; `notes` are
/// research findings a suite is asked to surface without failing (for
/// example distance ties in the best-approximation sweep).
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub suite: &'static str,
    pub depth: u64,
    pub cases_checked: u64,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite,
            "depth": self.depth,
            "cases_checked": self.cases_checked,
            "failures": self.failures.iter().map(|f| serde_json::json!({
                "input": f.input,
                "expected": f.expected,
                "actual": f.actual,
            })).collect::<Vec<_>>(),
            "notes": self.notes,
            "elapsed_ms": self.elapsed.as_secs_f64() * 1e3,
            "passed": self.passed(),
        })
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: depth {}, {} cases, {} failures, {} notes ({:.2?})",
            self.suite,
            self.depth,
            self.cases_checked,
            self.failures.len(),
            self.notes.len(),
            self.elapsed
        )?;
        for failure in self.failures.iter().take(20) {
            writeln!(
                f,
                "  FAIL {} expected {} got {}",
                failure.input, failure.expected, failure.actual
            )?;
        }
        if self.failures.len() > 20 {
            writeln!(f, "  ... and {} more", self.failures.len() - 20)?;
        }
        for note in self.notes.iter().take(10) {
            writeln!(f, "  note: {note}")?;
        }
        if self.notes.len() > 10 {
            writeln!(f, "  ... and {} more notes", self.notes.len() - 10)?;
        }
        Ok(())
    }
}

/// Knobs for the randomized sub-suite; everything else is exhaustive.
#[derive(Debug, Clone)]
pub struct Config {
    pub seed: u64,
    pub random_pairs: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 1729,
            random_pairs: 1000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Parent-operator laws: level sets, recurrences, level drops, order
    /// steps, and the run-arithmetic forms of the four parents.
    Thm21,
    /// Closed forms of the order value and position against their
    /// recurrences.
    Thm22,
    /// Run-count/position parity and the alternating-lexicographic
    /// comparator against exact order values.
    Cor23,
    /// The frozen table of close- and distant-parent positions.
    Table1,
    /// The word/continued-fraction bijection: round trips, level,
    /// children, order, monotonicity, unit-interval bounds, both
    /// evaluation routes.
    Thm31,
    /// Parents as the nearest lower-level neighbours on each side, by
    /// exhaustive distance sort.
    BestApprox,
    /// Stern-Brocot uniqueness, row order, reversal duality, mediants, and
    /// locate round trips.
    SternBrocot,
    /// The simplest-rational solver against brute force and the
    /// common-prefix continued-fraction formula.
    Simplest,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Thm21,
        Suite::Thm22,
        Suite::Cor23,
        Suite::Table1,
        Suite::Thm31,
        Suite::BestApprox,
        Suite::SternBrocot,
        Suite::Simplest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm21 => "thm21",
            Suite::Thm22 => "thm22",
            Suite::Cor23 => "cor23",
            Suite::Table1 => "table1",
            Suite::Thm31 => "thm31",
            Suite::BestApprox => "best_approx",
            Suite::SternBrocot => "stern_brocot",
            Suite::Simplest => "simplest",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }

    /// Default depths size the full run to about a minute on a laptop.
    /// For `simplest` the depth is the maximum endpoint denominator; for
    /// `table1` it is the number of table rows; everywhere else it is a
    /// tree level.
    pub fn default_depth(self) -> u64 {
        match self {
            Suite::Thm21 => 12,
            Suite::Thm22 => 14,
            Suite::Cor23 => 12,
            Suite::Table1 => 22,
            Suite::Thm31 => 12,
            Suite::BestApprox => 10,
            Suite::SternBrocot => 12,
            Suite::Simplest => 200,
        }
    }

    /// Hard ceilings; the sweeps grow between exponentially and quartically
    /// in the depth, so a runaway request is refused rather than attempted.
    pub fn max_depth(self) -> u64 {
        match self {
            Suite::Thm21 | Suite::Thm22 | Suite::Cor23 | Suite::SternBrocot => 18,
            Suite::Table1 => 22,
            Suite::Thm31 => 16,
            Suite::BestApprox => 12,
            Suite::Simplest => 500,
        }
    }
}

/// Runs one suite at `depth` (default when `None`). Returns an error
/// message for an out-of-range depth.
pub fn run_suite(suite: Suite, depth: Option<u64>, config: &Config) -> Result<CheckReport, String> {
    let depth = depth.unwrap_or_else(|| suite.default_depth());
    if depth > suite.max_depth() {
        return Err(format!(
            "suite {} accepts depths up to {} (requested {depth})",
            suite.name(),
            suite.max_depth()
        ));
    }
    if suite == Suite::Table1 && depth == 0 {
        return Err("suite table1 needs at least one row".to_string());
    }
    let start = Instant::now();
    let mut rec = Recorder::default();
    match suite {
        Suite::Thm21 => check_parent_laws(&mut rec, depth as u32),
        Suite::Thm22 => check_closed_forms(&mut rec, depth as u32),
        Suite::Cor23 => check_parity_and_order(&mut rec, depth as u32),
        Suite::Table1 => check_parent_table(&mut rec, depth as usize),
        Suite::Thm31 => check_cf_bijection(&mut rec, depth as u32),
        Suite::BestApprox => check_best_approximations(&mut rec, depth as u32),
        Suite::SternBrocot => check_stern_brocot(&mut rec, depth as u32),
        Suite::Simplest => check_simplest(&mut rec, depth, config),
    }
    Ok(CheckReport {
        suite: suite.name(),
        depth,
        cases_checked: rec.cases,
        failures: rec.failures,
        notes: rec.notes,
        elapsed: start.elapsed(),
    })
}

#[derive(Default)]
struct Recorder {
    cases: u64,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl Recorder {
    fn case(&mut self) {
        self.cases += 1;
    }

    fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    fn expect_eq<T: PartialEq + fmt::Display>(
        &mut self,
        input: impl fmt::Display,
        expected: T,
        actual: T,
    ) {
        if expected != actual {
            self.failures.push(Failure {
                input: input.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn expect(&mut self, input: impl fmt::Display, law: &str, holds: bool) {
        if !holds {
            self.failures.push(Failure {
                input: input.to_string(),
                expected: law.to_string(),
                actual: "violated".to_string(),
            });
        }
    }
}

// ---------------------------------------------------------------------
// thm21: parent operator laws
// ---------------------------------------------------------------------

fn check_parent_laws(rec: &mut Recorder, depth: u32) {
    // level sets of order values, plain and cumulative
    for m in 0..=depth {
        rec.case();
        let expected: Vec<Dyadic> = (1..=(1u64 << m))
            .map(|k| Dyadic::new(BigUint::from(2 * k - 1), m as u64))
            .collect();
        rec.expect(
            format!("level {m}"),
            "order values of level m are (2k-1)/2^m",
            level_r_values(m, false) == expected,
        );
        let expected: Vec<Dyadic> = (1..(1u64 << (m + 1)))
            .map(|l| Dyadic::new(BigUint::from(l), m as u64))
            .collect();
        rec.expect(
            format!("levels 0..={m}"),
            "cumulative order values are l/2^m",
            level_r_values(m, true) == expected,
        );
    }

    rec.case();
    rec.expect_eq(
        "left parent of e",
        GenString::RInv,
        Word::empty().parent_left(),
    );
    rec.expect_eq(
        "right parent of e",
        GenString::LInv,
        Word::empty().parent_right(),
    );

    for m in 0..=depth {
        for w in words_at_level(m) {
            rec.case();
            let s = GenString::Word(w.clone());

            // parent recurrences through both children
            let left_child = w.child(Letter::L);
            let right_child = w.child(Letter::R);
            rec.expect_eq(
                format!("left parent of {left_child}"),
                w.parent_left(),
                left_child.parent_left(),
            );
            rec.expect_eq(
                format!("left parent of {right_child}"),
                s.clone(),
                right_child.parent_left(),
            );
            rec.expect_eq(
                format!("right parent of {left_child}"),
                s.clone(),
                left_child.parent_right(),
            );
            rec.expect_eq(
                format!("right parent of {right_child}"),
                w.parent_right(),
                right_child.parent_right(),
            );

            let left = w.parent_left();
            let right = w.parent_right();

            // order value steps by exactly 2^-level towards each parent
            let r = order_value_recursive(&s);
            let step = Dyadic::pow2_neg(m as u64);
            rec.expect_eq(
                format!("order value left of {w}"),
                &r - &step,
                order_value_recursive(&left),
            );
            rec.expect_eq(
                format!("order value right of {w}"),
                &r + &step,
                order_value_recursive(&right),
            );

            if w.is_empty() {
                continue;
            }

            // both parents sit strictly higher, on different levels
            rec.expect(
                format!("levels of parents of {w}"),
                "parents lie above on distinct levels",
                left.level() < s.level()
                    && right.level() < s.level()
                    && left.level() != right.level(),
            );

            // run arithmetic gives the same two parents, split by the
            // parity of the run count and of the position
            let close = GenString::Word(w.parent_close().expect("not the root"));
            let distant = w.parent_distant().expect("not the root");
            let (expect_left, expect_right) = if w.run_count() % 2 == 0 {
                (&close, &distant)
            } else {
                (&distant, &close)
            };
            rec.expect_eq(
                format!("run form of left parent of {w}"),
                expect_left.clone(),
                left.clone(),
            );
            rec.expect_eq(
                format!("run form of right parent of {w}"),
                expect_right.clone(),
                right.clone(),
            );
            rec.expect_eq(
                format!("close parent level of {w}"),
                s.level() - 1,
                close.level(),
            );

            let n = word_position(&w);
            let by_position = if (&n % 2u32) == BigUint::from(0u32) {
                &left
            } else {
                &right
            };
            rec.expect_eq(
                format!("close parent of position {n}"),
                by_position.clone(),
                close.clone(),
            );

            // the close parent halves the position
            let close_word = w.parent_close().expect("not the root");
            rec.expect_eq(
                format!("close parent position of {n}"),
                (&n - 1u32) / 2u32,
                word_position(&close_word),
            );
        }
    }
}

// ---------------------------------------------------------------------
// thm22: closed forms against recurrences
// ---------------------------------------------------------------------

fn check_closed_forms(rec: &mut Recorder, depth: u32) {
    let mut expected_position = BigUint::from(0u32);
    for m in 0..=depth {
        for w in words_at_level(m) {
            rec.case();
            let s = GenString::Word(w.clone());
            let r = order_value_recursive(&s);
            rec.expect_eq(
                format!("order value of {w}"),
                r.clone(),
                order_value_closed(&w),
            );
            rec.expect_eq(
                format!("alternate order value of {w}"),
                r,
                order_value_closed_alt(&w),
            );
            let n = word_position(&w);
            rec.expect_eq(format!("position of {w}"), n.clone(), position_closed(&w));
            // breadth-first enumeration meets the positions 0, 1, 2, ...
            // exactly once each, and the heap decoding inverts them
            rec.expect_eq(
                format!("enumeration position of {w}"),
                expected_position.clone(),
                n.clone(),
            );
            rec.expect_eq(
                format!("word at position {n}"),
                w.clone(),
                string_at_position(&n),
            );
            expected_position += 1u32;
        }
    }
}

// ---------------------------------------------------------------------
// cor23: parity and the alternating-lexicographic order
// ---------------------------------------------------------------------

fn check_parity_and_order(rec: &mut Recorder, depth: u32) {
    for m in 0..=depth {
        for w in words_at_level(m) {
            rec.case();
            rec.expect_eq(
                format!("parity of {w}"),
                BigUint::from(w.run_count() % 2),
                word_position(&w) % 2u32,
            );
        }
    }

    // all ordered pairs at the quadratic depth
    let pair_depth = depth.min(8);
    let words: Vec<(GenString, Dyadic)> = (0..=pair_depth)
        .flat_map(words_at_level)
        .map(|w| {
            let s = GenString::Word(w);
            let r = order_value_recursive(&s);
            (s, r)
        })
        .collect();
    for (a, ra) in &words {
        for (b, rb) in &words {
            if a == b {
                continue;
            }
            rec.case();
            rec.expect(
                format!("{a} vs {b}"),
                "run comparison agrees with exact order values",
                compare_strings(a, b) == ra.cmp(rb),
            );
        }
    }

    // order values are injective over all generalized strings of the
    // injectivity depth, sentinels included
    let inj_depth = depth.min(10);
    let mut values: Vec<(GenString, Dyadic)> = lrtree::string::words_up_to_level(inj_depth)
        .map(|w| {
            let s = GenString::Word(w);
            let r = order_value_recursive(&s);
            (s, r)
        })
        .collect();
    values.push((GenString::RInv, Dyadic::zero()));
    values.push((GenString::LInv, Dyadic::two()));
    values.sort_by(|a, b| a.1.cmp(&b.1));
    for pair in values.windows(2) {
        rec.case();
        rec.expect(
            format!("{} vs {}", pair[0].0, pair[1].0),
            "distinct generalized strings have distinct order values",
            pair[0].1 != pair[1].1,
        );
    }
}

// ---------------------------------------------------------------------
// table1: frozen close/distant parent positions
// ---------------------------------------------------------------------

const CLOSE_POSITIONS: [u64; 22] = [
    0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10, 10,
];
const DISTANT_POSITIONS: [&str; 22] = [
    "-1", "-1/2", "-1", "0", "0", "-1/2", "-1", "1", "1", "0", "0", "2", "2", "-1/2", "-1", "3",
    "3", "1", "1", "4", "4", "0",
];

fn check_parent_table(rec: &mut Recorder, rows: usize) {
    for n in 1..=rows {
        rec.case();
        let w = string_at_position(&BigUint::from(n));
        let close = w.parent_close().expect("n >= 1");
        rec.expect_eq(
            format!("close parent position of n={n}"),
            CLOSE_POSITIONS[n - 1].to_string(),
            word_position(&close).to_string(),
        );
        let distant = w.parent_distant().expect("n >= 1");
        rec.expect_eq(
            format!("distant parent position of n={n}"),
            DISTANT_POSITIONS[n - 1].to_string(),
            lrtree::metrics::position_recursive(&distant).to_string(),
        );
    }
}

// ---------------------------------------------------------------------
// thm31: the word/continued-fraction bijection
// ---------------------------------------------------------------------

fn check_cf_bijection(rec: &mut Recorder, depth: u32) {
    let mut rows: Vec<Vec<ContinuedFraction>> = Vec::new();
    for m in 0..=depth {
        rows.push(cf_row(m));
    }

    for (m, row) in rows.iter().enumerate() {
        for c in row {
            rec.case();
            let w = c.to_word();
            rec.expect_eq(
                format!("round trip of {c}"),
                c.clone(),
                ContinuedFraction::from_word(&w),
            );
            rec.expect_eq(format!("level of {c}"), BigUint::from(m), c.level());
            let (left, right) = c.children();
            rec.expect_eq(
                format!("left child of {c}"),
                w.child(Letter::L),
                left.to_word(),
            );
            rec.expect_eq(
                format!("right child of {c}"),
                w.child(Letter::R),
                right.to_word(),
            );
            rec.expect(
                format!("children of {c}"),
                "children satisfy the quotient constraints",
                ContinuedFraction::new(left.quotients().to_vec()).is_ok()
                    && ContinuedFraction::new(right.quotients().to_vec()).is_ok(),
            );

            let value = c.eval();
            rec.expect_eq(
                format!("folded value of {c}"),
                value.clone(),
                c.eval_folded(),
            );
            rec.expect_eq(
                format!("expansion of {value}"),
                c.clone(),
                ContinuedFraction::from_fraction(&value).expect("positive finite"),
            );

            // a vertex lies in the unit interval named by its first quotient
            let q0 = Fraction::from_integer(c.quotients()[0].clone());
            let q0_next = Fraction::from_integer(c.quotients()[0].clone() + 1u32);
            rec.expect(
                format!("value bounds of {c}"),
                "q0 <= value < q0 + 1, strict on the left past one quotient",
                if c.quotients().len() == 1 {
                    value == q0
                } else {
                    q0 < value && value < q0_next
                },
            );
        }
    }

    // order isomorphism on all pairs at the quadratic depth
    let pair_depth = depth.min(8) as usize;
    let vertices: Vec<(ContinuedFraction, Fraction, GenString)> = rows[..=pair_depth]
        .iter()
        .flatten()
        .map(|c| (c.clone(), c.eval(), GenString::Word(c.to_word())))
        .collect();
    for (a, va, sa) in &vertices {
        for (b, vb, sb) in &vertices {
            if a == b {
                continue;
            }
            rec.case();
            rec.expect(
                format!("{a} vs {b}"),
                "value order matches word order",
                va.cmp(vb) == compare_strings(sa, sb),
            );
        }
    }

    // the value is monotone in the final quotient: increasing after an
    // even run index, decreasing after an odd one
    let mut prefixes: std::collections::HashSet<Vec<BigUint>> = std::collections::HashSet::new();
    for row in &rows[..=pair_depth] {
        for c in row {
            let q = c.quotients();
            prefixes.insert(q[..q.len() - 1].to_vec());
        }
    }
    let mut prefixes: Vec<Vec<BigUint>> = prefixes.into_iter().collect();
    prefixes.sort();
    for prefix in prefixes {
        rec.case();
        let m = prefix.len();
        let lowest = if m == 0 { 1u32 } else { 2u32 };
        let values: Vec<Fraction> = (lowest..=10)
            .map(|last| {
                let mut quotients = prefix.clone();
                quotients.push(BigUint::from(last));
                ContinuedFraction::new(quotients)
                    .expect("valid by construction")
                    .eval()
            })
            .collect();
        let ordered = values.windows(2).all(|pair| {
            if m % 2 == 0 {
                pair[0] < pair[1]
            } else {
                pair[0] > pair[1]
            }
        });
        rec.expect(
            format!("final-quotient monotonicity after prefix of length {m}"),
            "value is monotone in the final quotient",
            ordered,
        );
    }
}

// ---------------------------------------------------------------------
// best_approx: parents are the nearest lower-level neighbours
// ---------------------------------------------------------------------

/// Exact `|r(a) - r(b)|` of two order values.
fn order_distance(a: &Dyadic, b: &Dyadic) -> Dyadic {
    if a >= b {
        a - b
    } else {
        b - a
    }
}

/// Three laws per vertex, over every vertex of strictly smaller level.
///
/// 1. Sided: the nearest lower-level value below (above) the vertex is its
///    parent on that side; a side with no lower-level value at all must be
///    the side of a boundary parent.
/// 2. In order-value space the two parents are the unique two nearest
///    lower-level generalized strings, both at distance exactly
///    `2^-level`.
/// 3. The plain value-distance sort is also run. When it returns exactly
///    the two parent values with no tie it is asserted; ties with the
///    distant parent's distance and same-side values that slip strictly
///    between the two parent distances are recorded as notes (findings),
///    and any deviation of a different shape is a failure.
fn check_best_approximations(rec: &mut Recorder, depth: u32) {
    let rows: Vec<Vec<(ContinuedFraction, Fraction)>> = (0..=depth)
        .map(|m| {
            cf_row(m)
                .into_iter()
                .map(|c| {
                    let v = c.eval();
                    (c, v)
                })
                .collect()
        })
        .collect();
    // the same vertices word-side, with their order values; the sentinels
    // take part as the images of the boundary vertices
    let word_rows: Vec<Vec<(GenString, Dyadic)>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|(c, _)| {
                    let w = c.to_word();
                    let r = order_value_closed(&w);
                    (GenString::Word(w), r)
                })
                .collect()
        })
        .collect();

    // the root itself approximates nothing: both its parents are the
    // boundary vertices
    rec.case();
    let root_parents = ContinuedFraction::root().parents();
    rec.expect(
        "parents of the root",
        "the root's parents are the boundary vertices",
        root_parents
            == (
                lrtree::cf::CfParent::Boundary(lrtree::cf::Boundary::Zero),
                lrtree::cf::CfParent::Boundary(lrtree::cf::Boundary::Infinity),
            ),
    );

    let boundaries = [
        (GenString::RInv, Dyadic::zero()),
        (GenString::LInv, Dyadic::two()),
    ];

    for level in 1..=depth as usize {
        let lower: Vec<&(ContinuedFraction, Fraction)> = rows[..level].iter().flatten().collect();
        let lower_words: Vec<(&GenString, &Dyadic)> = word_rows[..level]
            .iter()
            .flatten()
            .chain(boundaries.iter())
            .map(|(s, r)| (s, r))
            .collect();

        for (i, (c, value)) in rows[level].iter().enumerate() {
            rec.case();
            let (close, distant) = c.parents();

            // classify the two parents by side; the boundary vertices sit
            // below everything (value 0) or above everything (infinite)
            let mut below: Option<Fraction> = None;
            let mut above: Option<Fraction> = None;
            for parent in [&close, &distant] {
                let pv = parent.value();
                if pv < *value {
                    below = Some(pv);
                } else {
                    above = Some(pv);
                }
            }
            let (Some(parent_below), Some(parent_above)) = (below, above) else {
                rec.expect(format!("parents of {c}"), "one parent on each side", false);
                continue;
            };

            let nearest_below = lower
                .iter()
                .filter(|(_, v)| v < value)
                .max_by(|a, b| a.1.cmp(&b.1));
            let nearest_above = lower
                .iter()
                .filter(|(_, v)| v > value)
                .min_by(|a, b| a.1.cmp(&b.1));
            match nearest_below {
                Some((_, v)) => rec.expect_eq(
                    format!("nearest lower-level value below {c}"),
                    v.clone(),
                    parent_below.clone(),
                ),
                None => rec.expect(
                    format!("nothing below {c}"),
                    "empty side matches the zero boundary parent",
                    parent_below == Fraction::zero(),
                ),
            }
            match nearest_above {
                Some((_, v)) => rec.expect_eq(
                    format!("nearest lower-level value above {c}"),
                    v.clone(),
                    parent_above.clone(),
                ),
                None => rec.expect(
                    format!("nothing above {c}"),
                    "empty side matches the infinite boundary parent",
                    parent_above == Fraction::infinity(),
                ),
            }

            // order-value space: both parents at distance exactly
            // 2^-level, everything else strictly farther
            let (s, r) = &word_rows[level][i];
            let w = s.as_word().expect("vertex rows hold words");
            let step = Dyadic::pow2_neg(level as u64);
            let left = w.parent_left();
            let right = w.parent_right();
            rec.expect(
                format!("order distance of the parents of {c}"),
                "both parents sit at order distance exactly 2^-level",
                order_distance(&order_value_from(&left), r) == step
                    && order_distance(&order_value_from(&right), r) == step,
            );
            for &(v, rv) in &lower_words {
                if *v == left || *v == right {
                    continue;
                }
                if order_distance(rv, r) <= step {
                    rec.expect(
                        format!("order distance from {c} to {v}"),
                        "non-parents sit strictly farther than 2^-level",
                        false,
                    );
                }
            }

            // plain value distances: deviations from "the two closest are
            // exactly the parents" are findings of two analyzed shapes
            if parent_below.is_zero() || !parent_above.is_finite() {
                continue;
            }
            let d_close = Fraction::abs_diff(&close.value(), value);
            let d_distant = Fraction::abs_diff(&distant.value(), value);
            let (d_near, d_far) = if d_close <= d_distant {
                (&d_close, &d_distant)
            } else {
                (&d_distant, &d_close)
            };
            let mut clean = true;
            for (v, vv) in lower.iter().map(|(c, v)| (c, v)) {
                if vv == &parent_below || vv == &parent_above {
                    continue;
                }
                let d = Fraction::abs_diff(vv, value);
                if d < *d_near {
                    rec.expect(
                        format!("value distance from {c} to {v}"),
                        "no value beats the nearer parent",
                        false,
                    );
                } else if d < *d_far {
                    clean = false;
                    rec.note(format!(
                        "at {c} (value {value}) the lower-level {v} (value {vv}, distance {d}) \
                         is strictly closer than the distant parent (distance {d_far})"
                    ));
                } else if d == *d_far {
                    clean = false;
                    rec.note(format!(
                        "at {c} (value {value}) the lower-level {v} (value {vv}) ties the \
                         distant parent's distance {d_far}"
                    ));
                }
            }
            if clean {
                // with no finding the literal two-closest reading holds
                let mut by_distance: Vec<(Fraction, &Fraction)> = lower
                    .iter()
                    .map(|(_, v)| (Fraction::abs_diff(v, value), v))
                    .collect();
                by_distance.sort();
                let mut got = [by_distance[0].1.clone(), by_distance[1].1.clone()];
                got.sort();
                let mut expected = [parent_below.clone(), parent_above.clone()];
                expected.sort();
                rec.expect(
                    format!("two closest lower-level values to {c}"),
                    "the distance sort returns exactly the parent values",
                    got == expected,
                );
            }
        }
    }
}

fn order_value_from(s: &GenString) -> Dyadic {
    lrtree::metrics::order_value(s)
}

// ---------------------------------------------------------------------
// stern_brocot: uniqueness, order, duality, mediants
// ---------------------------------------------------------------------

fn check_stern_brocot(rec: &mut Recorder, depth: u32) {
    let mut seen: std::collections::HashSet<Fraction> = std::collections::HashSet::new();
    for m in 0..=depth {
        let mut previous: Option<Fraction> = None;
        for w in words_at_level(m) {
            rec.case();
            let s = GenString::Word(w.clone());
            let value = stern_brocot_value(&s);

            rec.expect(
                format!("reducedness of value at {w}"),
                "numerator and denominator are coprime",
                num_integer::Integer::gcd(value.numerator(), value.denominator())
                    == BigUint::from(1u32),
            );
            if let Some(prev) = &previous {
                rec.expect(
                    format!("row order at {w}"),
                    "each level row increases left to right",
                    prev < &value,
                );
            }
            rec.expect(
                format!("uniqueness of {value}"),
                "every fraction appears at most once",
                seen.insert(value.clone()),
            );

            rec.expect_eq(
                format!("tree value at {w}"),
                ContinuedFraction::from_word(&w).eval(),
                value.clone(),
            );
            rec.expect_eq(
                format!("reversal duality at {w}"),
                stern_brocot_value(&GenString::Word(w.reverse())),
                calkin_wilf_value(&w),
            );
            rec.expect(
                format!("double reversal of {w}"),
                "reversal is a level-preserving involution",
                w.reverse().reverse() == w && w.reverse().level() == w.level(),
            );
            rec.expect_eq(
                format!("mediant of the parents of {w}"),
                Fraction::mediant(
                    &stern_brocot_value(&w.parent_left()),
                    &stern_brocot_value(&w.parent_right()),
                ),
                value.clone(),
            );
            rec.expect_eq(
                format!("located word of {value}"),
                w.clone(),
                stern_brocot_locate(&value).expect("tree values are positive finite"),
            );
            previous = Some(value);
        }

        // the two trees hold the same fractions level by level
        let mut sb_row = lrtree::trees::stern_brocot_row(m);
        let mut cw_row = lrtree::trees::calkin_wilf_row(m);
        sb_row.sort();
        cw_row.sort();
        rec.case();
        rec.expect(
            format!("row sets at level {m}"),
            "both tree rows hold the same set of fractions",
            sb_row == cw_row,
        );
    }
}

// ---------------------------------------------------------------------
// simplest: the interval solver against brute force and the formula
// ---------------------------------------------------------------------

/// Reduced fractions `p/q` with `0 < p < q <= max_den`, ascending, with
/// their machine parts.
fn farey_interior(max_den: u64) -> Vec<(u64, u64, Fraction)> {
    let mut out = Vec::new();
    for den in 2..=max_den {
        for num in 1..den {
            if num_integer::Integer::gcd(&num, &den) == 1 {
                out.push((
                    num,
                    den,
                    Fraction::new(BigUint::from(num), BigUint::from(den)).unwrap(),
                ));
            }
        }
    }
    out.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
    out
}

/// First denominator admitting a fraction strictly inside `(x, y)`, and
/// the smallest numerator at that denominator. Machine arithmetic only;
/// the caller keeps the parts small.
fn brute_force_simplest(px: u64, qx: u64, py: u64, qy: u64) -> (u64, u64) {
    for den in 1u64.. {
        let num = px * den / qx + 1;
        if num * qy < py * den {
            return (num, den);
        }
    }
    unreachable!("an open interval of rationals always contains one")
}

fn check_simplest(rec: &mut Recorder, max_den: u64, config: &Config) {
    // every ordered pair of distinct reduced fractions in (0, 1) with
    // denominator at most max_den, against the denominator-by-denominator
    // search
    let fractions = farey_interior(max_den);
    let outcomes: Vec<(u64, Vec<Failure>)> = fractions
        .par_iter()
        .enumerate()
        .map(|(i, (px, qx, x))| {
            let mut cases = 0u64;
            let mut failures = Vec::new();
            for (py, qy, y) in &fractions[i + 1..] {
                cases += 1;
                let got = cf::simplest_between(x, y).expect("valid interval");
                let (num, den) = brute_force_simplest(*px, *qx, *py, *qy);
                let ok = u64::try_from(got.numerator()) == Ok(num)
                    && u64::try_from(got.denominator()) == Ok(den);
                if !ok {
                    failures.push(Failure {
                        input: format!("({x}, {y})"),
                        expected: format!("{num}/{den}"),
                        actual: got.to_string(),
                    });
                }
            }
            (cases, failures)
        })
        .collect();
    for (cases, failures) in outcomes {
        rec.cases += cases;
        rec.failures.extend(failures);
    }

    // seeded random pairs sharing a proper prefix, against the
    // common-prefix formula [shared.., min(a_k, b_k) + 1]
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.random_pairs {
        rec.case();
        let (a, b) = random_prefix_pair(&mut rng);
        let (va, vb) = (a.eval(), b.eval());
        let (lo, hi) = if va < vb { (&va, &vb) } else { (&vb, &va) };
        let formula = formula_between(&a, &b);
        let got = cf::simplest_between(lo, hi).expect("distinct values");
        rec.expect_eq(format!("between {a} and {b}"), formula.eval(), got);
    }
}

fn rand_range(rng: &mut impl RngCore, lo: u64, hi: u64) -> u64 {
    lo + rng.next_u64() % (hi - lo + 1)
}

/// Two distinct canonical continued fractions sharing their first `k`
/// quotients and differing by at least 2 at index `k`, where both are
/// defined; under those conditions the common-prefix formula provably
/// names the simplest rational between their values.
fn random_prefix_pair(rng: &mut impl RngCore) -> (ContinuedFraction, ContinuedFraction) {
    let prefix_len = rand_range(rng, 0, 3) as usize;
    let mut prefix: Vec<u64> = Vec::with_capacity(prefix_len);
    for i in 0..prefix_len {
        prefix.push(if i == 0 {
            rand_range(rng, 0, 3)
        } else {
            rand_range(rng, 1, 4)
        });
    }
    let k = prefix.len();

    // lower bounds for the k-th quotient depend on whether a tail follows
    // and whether k is the leading index; drawing the smaller value above
    // both bounds keeps every assignment canonical
    let tails = (rand_range(rng, 0, 2), rand_range(rng, 0, 2));
    let bound = |tail: u64| -> u64 {
        match (tail > 0, k == 0) {
            (true, true) => 0,
            (true, false) => 1,
            (false, true) => 1,
            (false, false) => 2,
        }
    };
    let small = bound(tails.0).max(bound(tails.1)) + rand_range(rng, 0, 3);
    let big = small + 2 + rand_range(rng, 0, 3);
    let (ak, bk) = if rng.next_u64() % 2 == 0 {
        (small, big)
    } else {
        (big, small)
    };

    let mut build = |at_k: u64, tail_len: u64| -> ContinuedFraction {
        let mut quotients = prefix.clone();
        quotients.push(at_k);
        for i in 0..tail_len {
            quotients.push(if i + 1 == tail_len {
                rand_range(rng, 2, 5)
            } else {
                rand_range(rng, 1, 4)
            });
        }
        ContinuedFraction::new(quotients.into_iter().map(BigUint::from).collect())
            .expect("generated quotients are canonical")
    };
    let a = build(ak, tails.0);
    let b = build(bk, tails.1);
    (a, b)
}

/// The common-prefix rule: with `a` and `b` first differing at index `k`,
/// the simplest value between them is `[a_0, .., a_{k-1}, min(a_k, b_k) + 1]`.
fn formula_between(a: &ContinuedFraction, b: &ContinuedFraction) -> ContinuedFraction {
    let (qa, qb) = (a.quotients(), b.quotients());
    let k = qa
        .iter()
        .zip(qb.iter())
        .position(|(x, y)| x != y)
        .expect("the pair differs within the shared indices");
    let mut quotients: Vec<BigUint> = qa[..k].to_vec();
    quotients.push(qa[k].clone().min(qb[k].clone()) + 1u32);
    ContinuedFraction::new(quotients).expect("min + 1 keeps the form canonical")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_a_small_depth() {
        let config = Config::default();
        for suite in Suite::ALL {
            let depth = match suite {
                Suite::Simplest => 30,
                Suite::Table1 => 22,
                Suite::BestApprox => 6,
                _ => 6,
            };
            let report = run_suite(suite, Some(depth), &config).unwrap();
            assert!(report.passed(), "suite {} failed:\n{report}", suite.name());
            assert!(report.cases_checked > 0);
        }
    }

    #[test]
    fn depth_guards() {
        let config = Config::default();
        assert!(run_suite(Suite::Table1, Some(23), &config).is_err());
        assert!(run_suite(Suite::Table1, Some(0), &config).is_err());
        assert!(run_suite(Suite::Thm21, Some(40), &config).is_err());
    }

    #[test]
    fn every_suite_checks_something_at_depth_zero() {
        let config = Config {
            seed: 1,
            random_pairs: 5,
        };
        for suite in Suite::ALL {
            if suite == Suite::Table1 {
                continue;
            }
            let report = run_suite(suite, Some(0), &config).unwrap();
            assert!(
                report.passed(),
                "suite {} at depth 0:\n{report}",
                suite.name()
            );
            assert!(report.cases_checked > 0, "suite {}", suite.name());
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let config = Config::default();
        let first = run_suite(Suite::BestApprox, Some(5), &config).unwrap();
        let second = run_suite(Suite::BestApprox, Some(5), &config).unwrap();
        assert_eq!(first.cases_checked, second.cases_checked);
        assert_eq!(first.failures, second.failures);
        assert_eq!(first.notes, second.notes);
        // the parallel sweep and the seeded phase repeat exactly too
        let first = run_suite(Suite::Simplest, Some(25), &config).unwrap();
        let second = run_suite(Suite::Simplest, Some(25), &config).unwrap();
        assert_eq!(first.cases_checked, second.cases_checked);
        assert_eq!(first.failures, second.failures);
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(Suite::from_name(suite.name()), Some(suite));
        }
        assert_eq!(Suite::from_name("bogus"), None);
    }

    #[test]
    fn reports_serialize() {
        let report = run_suite(Suite::Table1, None, &Config::default()).unwrap();
        let json = report.to_json();
        assert_eq!(json["suite"], "table1");
        assert_eq!(json["cases_checked"], 22);
        assert_eq!(json["passed"], true);
    }

    #[test]
    fn brute_force_matches_known_answers() {
        assert_eq!(brute_force_simplest(7, 5, 3, 2), (10, 7));
        assert_eq!(brute_force_simplest(1, 3, 2, 3), (1, 2));
        assert_eq!(brute_force_simplest(1, 1, 2, 1), (3, 2));
    }

    #[test]
    fn random_pairs_are_canonical_and_share_a_proper_prefix() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let (a, b) = random_prefix_pair(&mut rng);
            assert!(ContinuedFraction::new(a.quotients().to_vec()).is_ok());
            assert!(ContinuedFraction::new(b.quotients().to_vec()).is_ok());
            let k = a
                .quotients()
                .iter()
                .zip(b.quotients())
                .position(|(x, y)| x != y)
                .expect("pairs differ at a shared index");
            let diff = a.quotients()[k].clone().max(b.quotients()[k].clone())
                - a.quotients()[k].clone().min(b.quotients()[k].clone());
            assert!(diff >= BigUint::from(2u32));
        }
    }
}
