//! Argument parsing and dispatch for the `cuspidal` binary.
//!
//! Exit codes: 0 success, 1 computation error, 2 usage error, 3 invariant violation.

mod check;
mod render;
mod tables;

pub use check::{run_checks, CheckOutcome, Grid};
pub use render::{report_text, table_text};
pub use tables::{table_rows, TableRow};

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::criteria::{search_one_pair, verdict_table, Criterion};
use crate::distribution::{conjecture_check, fact_one_holds, route_check, CurveRecord};
use crate::error::Result;
use crate::families::{
    ams_curve, kashiwara_curve, lz_curve, lz_identity_check, one_pair_curve, orevkov_curve,
    tono_type1, tono_type2, KashiwaraMember, LzCase, OnePairCase, Sign, TonoS,
};
use crate::singularity::parse_cusp;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "cuspidal",
    version,
    about = "Invariants of rational cuspidal plane curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the full pipeline on one curve candidate.
    Analyze {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        degree: u64,
        /// `newton:(p,q),…`, `mult:[m,…]` or `gens:[b0,…]`; repeat per cusp.
        #[arg(long = "cusp", required = true)]
        cusps: Vec<String>,
        #[arg(long)]
        label: Option<String>,
    },
    /// Build a family member and run the pipeline on it.
    Family {
        #[command(subcommand)]
        family: FamilyCmd,
        /// Also run the route cross-checks.
        #[arg(long, global = true)]
        verify: bool,
    },
    /// Enumerate one-pair candidates `(d, a, b)` and evaluate criteria.
    Search {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        dmax: u64,
        /// Comma-separated subset of semicontinuity, orevkov, distribution; all when omitted.
        #[arg(long, value_delimiter = ',')]
        filters: Vec<Criterion>,
    },
    /// Reproduce the classification table for degree 4 to 7.
    Table {
        #[arg(long = "d", value_parser = clap::value_parser!(u64).range(4..=7))]
        d: u64,
    },
    /// Run the family grids and criteria cross-checks.
    Check {
        #[arg(long, value_enum, default_value_t = Grid::Small)]
        grid: Grid,
    },
}

#[derive(Subcommand, Debug)]
pub enum FamilyCmd {
    Ams {
        #[arg(long, value_delimiter = ',', required = true)]
        floors: Vec<u64>,
    },
    OnePair {
        #[arg(long)]
        case: OnePairCase,
        /// `d` for cases a, b; `j` for c, d; ignored for e, f.
        #[arg(long, default_value_t = 0)]
        param: u64,
    },
    Kashiwara {
        #[arg(long, allow_hyphen_values = true)]
        sign: Sign,
        #[arg(long)]
        ell: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u64>,
        #[arg(long, default_value = "ge")]
        member: KashiwaraMember,
    },
    Tono1 {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        s: u64,
    },
    Tono2 {
        #[arg(long)]
        n: u64,
        /// `half` for IIa or a natural number for IIb.
        #[arg(long)]
        s: TonoS,
    },
    Orevkov {
        #[arg(long)]
        j: u64,
        #[arg(long)]
        star: bool,
    },
    Lz {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, value_delimiter = ',')]
        floors: Vec<u64>,
        #[arg(long, default_value = "1")]
        case: LzCase,
        /// Truncation order of the identity check, `3d²` by default.
        #[arg(long)]
        order: Option<usize>,
    },
}

/// Rendered output and whether an invariant was violated.
pub struct Outcome {
    pub output: String,
    pub violation: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            violation: false,
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &outcome.output) {
                eprintln!("error: cannot write output: {e}");
                return EXIT_COMPUTATION;
            }
            if outcome.violation {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            eprintln!("error [{}]: {e}", e.kind());
            EXIT_COMPUTATION
        }
    }
}

fn emit(cli: &Cli, output: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, output),
        None => {
            print!("{output}");
            Ok(())
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::Analyze {
            degree,
            cusps,
            label,
        } => {
            let label = label
                .clone()
                .unwrap_or_else(|| format!("d={degree} {}", cusps.join(" ")));
            let cusps = cusps
                .iter()
                .map(|s| parse_cusp(s))
                .collect::<Result<Vec<_>>>()?;
            let rec = CurveRecord::new(*degree, cusps, label)?;
            analyze_record(&rec, fmt, false)
        }
        Command::Family { family, verify } => run_family(family, fmt, *verify),
        Command::Search { dmax, filters } => {
            let filters = if filters.is_empty() {
                Criterion::ALL.to_vec()
            } else {
                filters.clone()
            };
            let verdicts = search_one_pair(*dmax, &filters)?;
            Ok(Outcome::ok(match fmt {
                Format::Json => verdicts.iter().map(|v| v.to_json_line() + "\n").collect(),
                Format::Text => verdict_table(&verdicts),
            }))
        }
        Command::Table { d } => {
            let rows = table_rows(*d)?;
            let mut reports = Vec::with_capacity(rows.len());
            for row in &rows {
                reports.push(conjecture_check(&row.record)?);
            }
            Ok(Outcome::ok(match fmt {
                Format::Text => table_text(&rows, &reports),
                Format::Json => {
                    let lines: Vec<String> = reports.iter().map(|r| r.to_json_line()).collect();
                    with_newline(lines.join("\n"))
                }
            }))
        }
        Command::Check { grid } => {
            let outcomes = run_checks(*grid);
            let violation = outcomes.iter().any(|o| !o.passed());
            let output = match fmt {
                Format::Text => outcomes.iter().map(|o| o.text_line() + "\n").collect(),
                Format::Json => outcomes.iter().map(|o| o.to_json_line() + "\n").collect(),
            };
            Ok(Outcome { output, violation })
        }
    }
}

fn analyze_record(rec: &CurveRecord, fmt: Format, verify: bool) -> Result<Outcome> {
    let report = conjecture_check(rec)?;
    let mut violation = false;
    let mut notes = Vec::new();
    if verify {
        if rec.dense_feasible() && report.genus_ok {
            let rc = route_check(rec)?;
            notes.push(format!("routes agree: {}", rc.all_agree()));
            violation |= !rc.all_agree();
        }
        if rec.nu() == 1 && report.genus_ok && report.r_is_zero == Some(true) {
            let ok = fact_one_holds(&rec.semigroups()[0], rec.d());
            notes.push(format!("gap ceiling sum: {ok}"));
            violation |= !ok;
        }
    }
    let output = match fmt {
        Format::Json => with_newline(report.to_json()),
        Format::Text => {
            let mut s = report_text(&report);
            for n in notes {
                s.push_str(&n);
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome { output, violation })
}

fn run_family(family: &FamilyCmd, fmt: Format, verify: bool) -> Result<Outcome> {
    let rec = match family {
        FamilyCmd::Ams { floors } => ams_curve(floors)?,
        FamilyCmd::OnePair { case, param } => one_pair_curve(*case, *param)?,
        FamilyCmd::Kashiwara {
            sign,
            ell,
            lambda,
            member,
        } => kashiwara_curve(*sign, *ell, lambda, *member)?,
        FamilyCmd::Tono1 { a, s } => tono_type1(*a, *s)?,
        FamilyCmd::Tono2 { n, s } => tono_type2(*n, *s)?,
        FamilyCmd::Orevkov { j, star } => orevkov_curve(*j, *star)?,
        FamilyCmd::Lz {
            p,
            q,
            floors,
            case,
            order,
        } => {
            let rec = lz_curve(*p, *q, floors, *case)?;
            let identity = if verify {
                let order = order.unwrap_or(3 * (rec.d as usize) * (rec.d as usize));
                Some(lz_identity_check(&rec, order)?)
            } else {
                None
            };
            let violation = identity == Some(false);
            let output = match fmt {
                Format::Json => {
                    let v = serde_json::json!({
                        "label": rec.label(),
                        "p": rec.p,
                        "q": rec.q,
                        "floors": rec.floors,
                        "case": rec.case.to_string(),
                        "d": rec.d,
                        "L1": {"num": rec.l1.num, "den": rec.l1.den},
                        "L2": {"num": rec.l2.num, "den": rec.l2.den},
                        "genuine": rec.genuine(),
                        "identity_holds": identity,
                    });
                    with_newline(serde_json::to_string_pretty(&v).expect("json value serializes"))
                }
                Format::Text => render::lz_text(&rec, identity),
            };
            return Ok(Outcome { output, violation });
        }
    };
    analyze_record(&rec, fmt, verify)
}
