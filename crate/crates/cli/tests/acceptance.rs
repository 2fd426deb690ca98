//! Acceptance gate: one test per shipping criterion, each driving the
//! exhaustive check suites at their contract depths and printing one
//! PASS/FAIL line (visible with `cargo test --test acceptance -- --nocapture`).

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use lrtree::metrics::distant_parent_sequence;
use lrtree::string::words_at_level;
use lrtree::trees::TreeKind;
use lrtree_cli::oracle::{run_suite, CheckReport, Config, Suite};

fn cached(cell: &'static OnceLock<CheckReport>, suite: Suite, depth: u64) -> &'static CheckReport {
    cell.get_or_init(|| {
        run_suite(suite, Some(depth), &Config::default()).expect("depth within bounds")
    })
}

fn assert_criterion(name: &str, report: &CheckReport, budget: Option<Duration>) {
    let within = budget.is_none_or(|b| report.elapsed <= b);
    let ok = report.passed() && within;
    println!(
        "criterion {name}: {} ({} cases, {} failures, {} notes, {:.2?}{})",
        if ok { "PASS" } else { "FAIL" },
        report.cases_checked,
        report.failures.len(),
        report.notes.len(),
        report.elapsed,
        budget.map_or(String::new(), |b| format!(" / budget {b:.0?}")),
    );
    assert!(
        report.passed(),
        "criterion {name}: suite {} reported failures:\n{report}",
        report.suite
    );
    assert!(
        within,
        "criterion {name}: suite {} took {:.2?}, over its budget of {:.2?}",
        report.suite,
        report.elapsed,
        budget.unwrap()
    );
}

static TABLE1: OnceLock<CheckReport> = OnceLock::new();
static THM21: OnceLock<CheckReport> = OnceLock::new();
static THM22: OnceLock<CheckReport> = OnceLock::new();
static COR23: OnceLock<CheckReport> = OnceLock::new();
static THM31: OnceLock<CheckReport> = OnceLock::new();
static BEST: OnceLock<CheckReport> = OnceLock::new();
static STERN: OnceLock<CheckReport> = OnceLock::new();
static SIMPLEST: OnceLock<CheckReport> = OnceLock::new();

#[test]
fn criterion_01_parent_position_table() {
    let report = cached(&TABLE1, Suite::Table1, 22);
    assert_eq!(report.cases_checked, 22);
    assert_criterion(
        "01 close/distant parent positions n=1..22",
        report,
        Some(Duration::from_secs(1)),
    );
}

#[test]
fn criterion_02_level_rows() {
    let start = Instant::now();

    let r_rows = [
        vec!["1.0"],
        vec!["0.1", "1.1"],
        vec!["0.01", "0.11", "1.01", "1.11"],
        vec![
            "0.001", "0.011", "0.101", "0.111", "1.001", "1.011", "1.101", "1.111",
        ],
    ];
    for (level, expected) in r_rows.iter().enumerate() {
        let got: Vec<String> = lrtree::trees::order_value_row(level as u32)
            .iter()
            .map(|d| d.to_binary_string())
            .collect();
        assert_eq!(&got, expected, "order-value row {level}");
    }

    let position_rows = [
        vec!["0"],
        vec!["1", "2"],
        vec!["3", "4", "5", "6"],
        vec!["7", "8", "9", "10", "11", "12", "13", "14"],
    ];
    for (level, expected) in position_rows.iter().enumerate() {
        assert_eq!(
            &TreeKind::Positions.row_text(level as u32),
            expected,
            "position row {level}"
        );
    }

    let run_count_rows: [&[u64]; 4] = [&[0], &[1, 0], &[1, 2, 1, 0], &[1, 2, 3, 2, 1, 2, 1, 0]];
    for (level, expected) in run_count_rows.iter().enumerate() {
        let got: Vec<u64> = words_at_level(level as u32)
            .iter()
            .map(|w| w.run_count())
            .collect();
        assert_eq!(&got.as_slice(), expected, "run-count row {level}");
    }

    let cf_rows = [
        vec!["[1]"],
        vec!["[0,2]", "[2]"],
        vec!["[0,3]", "[0,1,2]", "[1,2]", "[3]"],
        vec![
            "[0,4]",
            "[0,2,2]",
            "[0,1,1,2]",
            "[0,1,3]",
            "[1,3]",
            "[1,1,2]",
            "[2,2]",
            "[4]",
        ],
    ];
    for (level, expected) in cf_rows.iter().enumerate() {
        assert_eq!(
            &TreeKind::Cf.row_text(level as u32),
            expected,
            "cf row {level}"
        );
    }

    let stern_brocot_rows = [
        vec!["1/1"],
        vec!["1/2", "2/1"],
        vec!["1/3", "2/3", "3/2", "3/1"],
        vec!["1/4", "2/5", "3/5", "3/4", "4/3", "5/3", "5/2", "4/1"],
    ];
    for (level, expected) in stern_brocot_rows.iter().enumerate() {
        assert_eq!(
            &TreeKind::SternBrocot.row_text(level as u32),
            expected,
            "stern-brocot row {level}"
        );
    }

    let calkin_wilf_rows = [
        vec!["1/1"],
        vec!["1/2", "2/1"],
        vec!["1/3", "3/2", "2/3", "3/1"],
        vec!["1/4", "4/3", "3/5", "5/2", "2/5", "5/3", "3/4", "4/1"],
    ];
    for (level, expected) in calkin_wilf_rows.iter().enumerate() {
        assert_eq!(
            &TreeKind::CalkinWilf.row_text(level as u32),
            expected,
            "calkin-wilf row {level}"
        );
    }

    let elapsed = start.elapsed();
    println!("criterion 02 tree level rows 0..3: PASS ({elapsed:.2?} / budget 1s)");
    assert!(elapsed <= Duration::from_secs(1));
}

#[test]
fn criterion_03_level_value_sets() {
    // the level-set clauses sweep inside the parent-law suite at depth 12
    let report = cached(&THM21, Suite::Thm21, 12);
    assert_criterion(
        "03 order-value level sets m<=12",
        report,
        Some(Duration::from_secs(10)),
    );
}

#[test]
fn criterion_04_order_value_parent_steps() {
    let report = cached(&THM21, Suite::Thm21, 12);
    assert_criterion("04 parent order-value steps |S|<=12", report, None);
}

#[test]
fn criterion_05_closed_forms() {
    let report = cached(&THM22, Suite::Thm22, 14);
    assert_criterion(
        "05 closed forms vs recurrences |S|<=14",
        report,
        Some(Duration::from_secs(30)),
    );
}

#[test]
fn criterion_06_parity_and_comparator() {
    let report = cached(&COR23, Suite::Cor23, 12);
    // the quadratic phase runs over all ordered pairs at |S| <= 8
    assert!(report.cases_checked > 260_000);
    assert_criterion(
        "06 run/position parity and comparator",
        report,
        Some(Duration::from_secs(30)),
    );
}

#[test]
fn criterion_07_cf_bijection() {
    let report = cached(&THM31, Suite::Thm31, 12);
    assert_criterion("07 continued-fraction bijection", report, None);
}

#[test]
fn criterion_08_best_lower_level_approximations() {
    let report = cached(&BEST, Suite::BestApprox, 10);
    // The distance sweep asserts the sided law (nearest lower-level value
    // on each side is the parent) and the order-value law (the parents
    // are the unique two nearest, at distance exactly 2^-level), and
    // reports every deviation of the plain value-distance reading as a
    // note. Ties do exist (e.g. 1 and 1/2 are equidistant from 3/4), so
    // the notes are expected to be non-empty and every one of them is
    // shape-checked by the suite.
    assert_criterion(
        "08 parents are the nearest lower-level approximations",
        report,
        Some(Duration::from_secs(60)),
    );
    println!(
        "criterion 08 findings: {} value-distance ties/displacements reported, e.g. {}",
        report.notes.len(),
        report.notes.first().map(String::as_str).unwrap_or("-")
    );
}

#[test]
fn criterion_09_stern_brocot_uniqueness() {
    let report = cached(&STERN, Suite::SternBrocot, 12);
    // one case per vertex of levels 0..=12, plus one row-set case per level
    assert!(report.cases_checked >= (1 << 13) - 1);
    assert_criterion("09 stern-brocot uniqueness and duality", report, None);
}

#[test]
fn criterion_10_simplest_rational() {
    let report = cached(&SIMPLEST, Suite::Simplest, 200);
    assert_criterion(
        "10 simplest rational between endpoints",
        report,
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn criterion_11_distant_parent_sequence() {
    let start = Instant::now();
    let expected: Vec<i64> = vec![
        -1, 0, -1, 1, 1, 0, -1, 3, 3, 1, 1, 5, 5, 0, -1, 7, 7, 3, 3, 9, 9, 1,
    ];
    let got: Vec<i64> = distant_parent_sequence(22)
        .iter()
        .map(|t| i64::try_from(t).expect("small terms"))
        .collect();
    assert_eq!(got, expected);

    // integer-valued throughout, and odd whenever the distant parent has
    // an integral position (the -1/2 sentinel doubles to the even 0)
    for (i, term) in distant_parent_sequence(4096).iter().enumerate() {
        let n = lrtree::BigUint::from(i + 1);
        let w = lrtree::metrics::string_at_position(&n);
        match w.parent_distant().expect("n >= 1") {
            lrtree::string::GenString::LInv => {
                assert_eq!(*term, 0i64.into(), "a({})", i + 1)
            }
            _ => assert_eq!(
                (term % 2i64).magnitude(),
                &lrtree::BigUint::from(1u32),
                "a({})",
                i + 1
            ),
        }
    }
    println!(
        "criterion 11 distant-parent sequence: PASS (22 frozen terms + parity to 4096, {:.2?})",
        start.elapsed()
    );
}
