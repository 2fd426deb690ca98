//! Command-line front end for the kinship calculus.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use lrtree::cf::{self, CfParent, ContinuedFraction};
use lrtree::fraction::Fraction;
use lrtree::metrics::distant_parent_sequence;
use lrtree::string::{GenString, Letter, Word};
use lrtree::trees::{stern_brocot_locate, TreeKind};
use lrtree::Error;

use lrtree_cli::formats::{self, Format};
use lrtree_cli::oracle::{self, Config, Suite};

#[derive(Parser)]
#[command(
    name = "lrtree",
    version,
    about = "Exact calculus of close and distant parents on the complete binary tree",
    after_help = "Formats: string (\"LLRR\", \"e\", \"L^-1\", \"R^-1\", \"S(1,2)\"), runs, \
                  position (\"5\", \"-1\", \"-1/2\"), r (\"9/2^3\" or \"1.001\"), cf (\"[1,2,3]\"), \
                  fraction (\"10/7\").\nExit codes: 0 success, 1 verification failure, 2 usage or parse error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a value between the six vertex formats.
    Convert {
        value: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Also print a decimal rendering with this many digits (r and
        /// fraction outputs only).
        #[arg(long)]
        decimal: Option<u32>,
    },
    /// Print the close and distant parents of a vertex.
    Parents {
        value: String,
        #[arg(long, default_value = "string")]
        format: String,
    },
    /// Print the left and right children of a vertex.
    Children {
        value: String,
        #[arg(long, default_value = "string")]
        format: String,
    },
    /// Emit the distant-parent integer sequence a(1..=count).
    Seq {
        count: usize,
        /// One "n a(n)" line per term instead of a single row.
        #[arg(long)]
        bfile: bool,
    },
    /// The simplest rational strictly between two fractions, with its
    /// continued fraction and tree word.
    Between {
        x: String,
        y: String,
        #[arg(long)]
        decimal: Option<u32>,
    },
    /// The two best lower-level approximations (the parents) of a vertex.
    Best {
        value: String,
        #[arg(long, default_value = "cf")]
        format: String,
    },
    /// Print one level row of a tree, left to right.
    Enum {
        /// string, r_metric, position, cf, stern_brocot, or calkin_wilf.
        tree: String,
        level: u32,
        #[arg(long)]
        json: bool,
        /// Refuse rows past this level [env: LRTREE_MAX_LEVEL].
        #[arg(long)]
        max_level: Option<u32>,
    },
    /// Render a tree, level-limited, as indented text or DOT.
    Render {
        tree: String,
        #[arg(long, default_value_t = 3)]
        levels: u32,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        max_level: Option<u32>,
    },
    /// Run a named check suite (or "all") and report.
    Verify {
        suite: String,
        /// Sweep depth [env: LRTREE_DEPTH]; default depends on the suite.
        #[arg(long)]
        depth: Option<u64>,
        #[arg(long)]
        json: bool,
        /// Worker threads for the parallel sweeps [env: LRTREE_JOBS].
        #[arg(long)]
        jobs: Option<usize>,
        /// Seed for the randomized sub-suite [env: LRTREE_SEED].
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn env_value<T: FromStr>(name: &str) -> Option<T> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

const DEFAULT_MAX_LEVEL: u32 = 20;

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Convert {
            value,
            from,
            to,
            decimal,
        } => {
            let from = Format::from_name(&from)?;
            let to = Format::from_name(&to)?;
            let pivot = formats::parse_value(from, &value)?;
            let mut out = formats::format_value(to, &pivot)?;
            if let Some(digits) = decimal {
                out.push_str(" ~ ");
                out.push_str(&decimal_of(to, &pivot, digits)?);
            }
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Parents { value, format } => {
            let format = Format::from_name(&format)?;
            let pivot = formats::parse_value(format, &value)?;
            let word = pivot.word()?;
            let (close, distant) = if word.is_empty() {
                // the root: its generalized parents are the two boundary
                // sentinels, reported with a boundary tag
                (GenString::RInv, GenString::LInv)
            } else {
                (
                    GenString::Word(word.parent_close()?),
                    word.parent_distant()?,
                )
            };
            println!("close: {}", parent_line(format, &close)?);
            println!("distant: {}", parent_line(format, &distant)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Children { value, format } => {
            let format = Format::from_name(&format)?;
            let pivot = formats::parse_value(format, &value)?;
            let word = pivot.word()?;
            let left = GenString::Word(word.child(Letter::L));
            let right = GenString::Word(word.child(Letter::R));
            println!("left: {}", formats::format_value(format, &left)?);
            println!("right: {}", formats::format_value(format, &right)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Seq { count, bfile } => {
            if count < 1 {
                return Err(Error::domain("count must be at least 1".to_string()));
            }
            let terms = distant_parent_sequence(count);
            if bfile {
                for (i, term) in terms.iter().enumerate() {
                    println!("{} {term}", i + 1);
                }
            } else {
                let row: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
                println!("{}", row.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Between { x, y, decimal } => {
            let x: Fraction = x.parse()?;
            let y: Fraction = y.parse()?;
            let simplest = cf::simplest_between(&x, &y)?;
            let expansion = ContinuedFraction::from_fraction(&simplest)?;
            let word = stern_brocot_locate(&simplest)?;
            let mut out = format!("{simplest} {expansion} {word}");
            if let Some(digits) = decimal {
                out.push_str(" ~ ");
                out.push_str(&formats::fraction_decimal(&simplest, digits));
            }
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Best { value, format } => {
            let format = Format::from_name(&format)?;
            let pivot = formats::parse_value(format, &value)?;
            let vertex = ContinuedFraction::from_word(pivot.word()?);
            let (close_value, distant_value) = vertex.best_lower_level()?;
            let (close, distant) = vertex.parents();
            println!("close: {}", best_line(&close, &close_value));
            println!("distant: {}", best_line(&distant, &distant_value));
            Ok(ExitCode::SUCCESS)
        }
        Command::Enum {
            tree,
            level,
            json,
            max_level,
        } => {
            let bound = max_level
                .or_else(|| env_value("LRTREE_MAX_LEVEL"))
                .unwrap_or(DEFAULT_MAX_LEVEL);
            if level > bound {
                return Err(Error::domain(format!(
                    "level {level} exceeds the enumeration bound {bound} (raise --max-level)"
                )));
            }
            let row = TreeKind::from_name(&tree)?.row_text(level);
            if json {
                println!("{}", serde_json::json!(row));
            } else {
                println!("{}", row.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Render {
            tree,
            levels,
            dot,
            max_level,
        } => {
            let bound = max_level
                .or_else(|| env_value("LRTREE_MAX_LEVEL"))
                .unwrap_or(DEFAULT_MAX_LEVEL);
            if levels > bound {
                return Err(Error::domain(format!(
                    "{levels} levels exceed the enumeration bound {bound} (raise --max-level)"
                )));
            }
            let kind = TreeKind::from_name(&tree)?;
            if dot {
                render_dot(kind, levels);
            } else {
                render_indented(kind, levels);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            depth,
            json,
            jobs,
            seed,
        } => {
            let depth = depth.or_else(|| env_value("LRTREE_DEPTH"));
            let jobs = jobs.or_else(|| env_value("LRTREE_JOBS"));
            let seed = seed.or_else(|| env_value("LRTREE_SEED"));
            let mut config = Config::default();
            if let Some(seed) = seed {
                config.seed = seed;
            }
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![Suite::from_name(&suite).ok_or_else(|| {
                    Error::domain(format!(
                        "unknown suite \"{suite}\" (expected all, thm21, thm22, cor23, table1, \
                         thm31, best_approx, stern_brocot, or simplest)"
                    ))
                })?]
            };
            let run_all = || -> Result<Vec<_>, String> {
                suites
                    .iter()
                    .map(|s| oracle::run_suite(*s, depth, &config))
                    .collect()
            };
            let reports = match jobs {
                Some(jobs) => rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()
                    .map_err(|e| Error::domain(e.to_string()))?
                    .install(run_all),
                None => run_all(),
            }
            .map_err(Error::Domain)?;
            let all_passed = reports.iter().all(|r| r.passed());
            if json {
                let body: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
                if body.len() == 1 {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&body[0]).expect("valid json")
                    );
                } else {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&body).expect("valid json")
                    );
                }
            } else {
                for report in &reports {
                    print!("{report}");
                }
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

/// Parents may be sentinels; render them in the closest shape the format
/// has, tagging the boundary cases.
fn parent_line(format: Format, parent: &GenString) -> Result<String, Error> {
    match parent {
        GenString::Word(_) => Ok(format!(
            "{} (level {})",
            formats::format_value(format, parent)?,
            parent.level()
        )),
        sentinel => {
            let shown = match format {
                Format::Cf => match sentinel {
                    GenString::RInv => "[0]".to_string(),
                    _ => "[]".to_string(),
                },
                Format::Position | Format::R | Format::Fraction => {
                    formats::format_value(format, sentinel)?
                }
                Format::String | Format::Runs => sentinel.to_string(),
            };
            Ok(format!("{shown} (boundary, level -1)"))
        }
    }
}

fn best_line(parent: &CfParent, value: &Fraction) -> String {
    match parent {
        CfParent::Vertex(c) => format!("{c} = {value} (level {})", c.level()),
        CfParent::Boundary(b) => format!("{b} = {value} (boundary)"),
    }
}

fn node_label(kind: TreeKind, w: &Word) -> String {
    use lrtree::metrics;
    match kind {
        TreeKind::Strings => GenString::Word(w.clone()).to_string(),
        TreeKind::OrderValues => metrics::order_value_closed(w).to_binary_string(),
        TreeKind::Positions => metrics::position_closed(w).to_string(),
        TreeKind::Cf => ContinuedFraction::from_word(w).to_string(),
        TreeKind::SternBrocot => {
            lrtree::trees::stern_brocot_value(&GenString::Word(w.clone())).to_string()
        }
        TreeKind::CalkinWilf => lrtree::trees::calkin_wilf_value(w).to_string(),
    }
}

fn render_indented(kind: TreeKind, levels: u32) {
    fn walk(kind: TreeKind, w: &Word, depth: u32, levels: u32) {
        println!("{}{}", "  ".repeat(depth as usize), node_label(kind, w));
        if depth < levels {
            walk(kind, &w.child(Letter::L), depth + 1, levels);
            walk(kind, &w.child(Letter::R), depth + 1, levels);
        }
    }
    walk(kind, &Word::empty(), 0, levels);
}

fn render_dot(kind: TreeKind, levels: u32) {
    fn walk(kind: TreeKind, w: &Word, depth: u32, levels: u32) {
        if depth >= levels {
            return;
        }
        let here = node_label(kind, w);
        for child in [w.child(Letter::L), w.child(Letter::R)] {
            println!("  \"{here}\" -> \"{}\";", node_label(kind, &child));
            walk(kind, &child, depth + 1, levels);
        }
    }
    println!("digraph tree {{");
    println!("  ordering=out;");
    walk(kind, &Word::empty(), 0, levels);
    println!("}}");
}

fn decimal_of(format: Format, pivot: &GenString, digits: u32) -> Result<String, Error> {
    match format {
        Format::R => Ok(formats::dyadic_decimal(
            &lrtree::metrics::order_value(pivot),
            digits,
        )),
        Format::Fraction => Ok(formats::fraction_decimal(
            &lrtree::trees::stern_brocot_value(pivot),
            digits,
        )),
        _ => Err(Error::domain(
            "a decimal rendering applies only to r and fraction outputs".to_string(),
        )),
    }
}
