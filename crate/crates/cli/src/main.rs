//! `csp2`: exact computations for rank-2 coherent systems on the projective
//! plane. JSON on stdout, diagnostics on stderr. Exit code 0 on success, 2 on
//! precondition or usage errors, 3 when an internal consistency check fails.

mod output;

use std::cmp::Ordering;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use csp2_core::compare::{compare_closed_form, sweep_comparison};
use csp2_core::critical::{chambers, critical_values_closed_form, equality_locus, is_critical};
use csp2_core::flips::flip_dimensions;
use csp2_core::nonempty::{nonempty_iff, nonempty_sufficient, proposition_bound, trivial_only};
use csp2_core::points::{
    cayley_bacharach, gen_collinear, gen_general, h0_ideal, lies_on_no_curve, witness_config,
    PointConfig,
};
use csp2_core::rational::{rat, ratio};
use csp2_core::segre::{cycle_length, feasible_segre_values, necessary_conditions, segre_feasible};
use csp2_core::stability::{classify_with_maximal, compare_sub_linear};
use csp2_core::system::{AlphaLinear, CsType, SubsystemData};
use csp2_core::Rational;
use output::{add_float_fields, obj, record, write_or_print};
use serde_json::{json, Value};

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Parser)]
#[command(name = "csp2", version, about = "Exact stability and wall-crossing arithmetic for rank-2 coherent systems on the plane")]
struct Cli {
    /// Write output to FILE instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Add approximate decimal fields next to exact rationals (reading aid only)
    #[arg(long, global = true)]
    float: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Segre-invariant feasibility and cycle lengths
    Segre {
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long)]
        t: i64,
        #[arg(long, allow_negative_numbers = true)]
        c2: i64,
        /// Query a single Segre parameter instead of the feasible range
        #[arg(long, allow_negative_numbers = true)]
        s: Option<i64>,
    },
    /// Order a subsystem against a system at am + b, or classify against the
    /// maximal subsystem when --s is given
    Stability {
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long)]
        t: i64,
        #[arg(long, allow_negative_numbers = true)]
        c2: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long = "c1L", allow_negative_numbers = true)]
        c1_l: i64,
        #[arg(long)]
        w: i64,
        #[arg(long, allow_negative_numbers = true)]
        s: Option<i64>,
    },
    /// Walls (critical values) at a numerical type; with --a/--b a membership
    /// test; --oracle forces brute force; --compare diffs the routes
    Critical {
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long)]
        t: i64,
        #[arg(long, allow_negative_numbers = true)]
        c2: i64,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, requires = "b")]
        a: Option<Rational>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, requires = "a")]
        b: Option<Rational>,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        compare: bool,
    },
    /// Chamber decomposition of the parameter line
    Chambers {
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long)]
        t: i64,
        #[arg(long, allow_negative_numbers = true)]
        c2: i64,
    },
    /// Flip-locus dimensions at a stable-family wall
    FlipDim {
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
        #[arg(long)]
        t: i64,
        #[arg(long, allow_negative_numbers = true)]
        c2: i64,
    },
    /// Point-configuration operations over exact rational coordinates
    Points {
        #[command(subcommand)]
        command: PointsCommand,
    },
    /// Non-emptiness verdicts for the moduli of stable systems
    Nonempty {
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long)]
        t: i64,
        #[arg(long, allow_negative_numbers = true)]
        c2: i64,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        b: Option<Rational>,
        #[arg(long, allow_negative_numbers = true)]
        s0: Option<i64>,
        #[arg(long)]
        semistable: bool,
        /// Section-space dimension for the small-c1 trivial-bundle test
        #[arg(long, default_value_t = 2)]
        k: i64,
    },
    /// Iterate a (r, t, c2) grid; one JSON record per cell with
    /// closed-form/oracle diffs. --compare exits 3 on any unclassified
    /// mismatch
    Sweep {
        #[arg(long, default_value_t = 1)]
        r_min: i64,
        #[arg(long, default_value_t = 8)]
        r_max: i64,
        /// Restrict to one parity (default: both)
        #[arg(long)]
        t: Option<i64>,
        #[arg(long, default_value_t = 80)]
        c2_max: i64,
        #[arg(long)]
        compare: bool,
    },
}

#[derive(Subcommand)]
enum PointsCommand {
    /// Generate a deterministic pseudo-random configuration
    Gen {
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Put all points on a line instead of general position
        #[arg(long)]
        collinear: bool,
        /// Write the configuration to FILE as a JSON array of triples
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Sections of the twisted ideal sheaf, h0(O(d) (x) I_Z)
    H0 {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
    },
    /// Is the configuration contained in no curve of degree d?
    NoCurve {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
    },
    /// Cayley-Bacharach test at degree d
    Cb {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
    },
    /// Certified witness cycle for feasible (r, t, c2, s)
    Witness {
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long)]
        t: i64,
        #[arg(long, allow_negative_numbers = true)]
        c2: i64,
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the bare configuration to FILE
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Core(#[from] csp2_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Inconsistent(String),
}

fn ordering_name(ord: Ordering) -> &'static str {
    match ord {
        Ordering::Less => "Less",
        Ordering::Equal => "Equal",
        Ordering::Greater => "Greater",
    }
}

fn emit(lines: Vec<Value>, cli: &Cli) -> Result<(), CliError> {
    let pretty = lines.len() == 1;
    let mut rendered = Vec::with_capacity(lines.len());
    for mut line in lines {
        if cli.float {
            add_float_fields(&mut line);
        }
        rendered.push(if pretty {
            serde_json::to_string_pretty(&line)?
        } else {
            serde_json::to_string(&line)?
        });
    }
    write_or_print(&rendered.join("\n"), cli.out.as_deref())?;
    Ok(())
}

fn read_config(path: &PathBuf) -> Result<PointConfig, CliError> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Segre { r, t, c2, s } => {
            CsType::new(*r, *t, *c2, 2)?;
            let value = match s {
                None => obj(vec![
                    ("r", json!(r)),
                    ("t", json!(t)),
                    ("c2", json!(c2)),
                    ("feasible_s", json!(feasible_segre_values(*r, *t, *c2))),
                ]),
                Some(s) => {
                    let feasible = segre_feasible(*r, *t, *c2, *s);
                    let length = cycle_length(*r, *t, *c2, *s).ok();
                    let violations =
                        necessary_conditions(&CsType::new(*r, *t, *c2, 2)?, *s)?;
                    obj(vec![
                        ("r", json!(r)),
                        ("t", json!(t)),
                        ("c2", json!(c2)),
                        ("s", json!(s)),
                        ("feasible", json!(feasible)),
                        ("cycle_length", json!(length)),
                        ("violations", record(&violations)),
                    ])
                }
            };
            emit(vec![value], cli)
        }
        Command::Stability {
            r,
            t,
            c2,
            k,
            a,
            b,
            c1_l,
            w,
            s,
        } => {
            let cs = CsType::new(*r, *t, *c2, *k)?;
            let alpha = AlphaLinear::new(a.clone(), b.clone());
            let sub = SubsystemData::new(*c1_l, *w);
            let value = match s {
                None => {
                    let ord = compare_sub_linear(&cs, &alpha, &sub);
                    obj(vec![("ordering", json!(ordering_name(ord)))])
                }
                Some(s) => {
                    let class = classify_with_maximal(&cs, &alpha, &sub, *s)?;
                    obj(vec![("classification", record(&class))])
                }
            };
            emit(vec![value], cli)
        }
        Command::Critical {
            r,
            t,
            c2,
            a,
            b,
            oracle,
            compare,
        } => {
            let cs = CsType::new(*r, *t, *c2, 2)?;
            if let (Some(a), Some(b)) = (a, b) {
                let query = is_critical(&cs, &AlphaLinear::new(a.clone(), b.clone()));
                let value = obj(vec![
                    ("r", json!(r)),
                    ("t", json!(t)),
                    ("c2", json!(c2)),
                    ("a", record(a)),
                    ("b", record(b)),
                    ("critical", json!(query.critical)),
                    ("witnesses", record(&query.witnesses)),
                ]);
                return emit(vec![value], cli);
            }
            if *compare {
                let report = compare_closed_form(*r, *t, *c2)?;
                let consistent = report.consistent;
                emit(vec![record(&report)], cli)?;
                if !consistent {
                    return Err(CliError::Inconsistent(format!(
                        "closed form and oracle disagree at (r={r}, t={t}, c2={c2})"
                    )));
                }
                return Ok(());
            }
            let walls = if *oracle {
                equality_locus(&cs)
            } else {
                critical_values_closed_form(*r, *t, *c2)?
            };
            let value = obj(vec![
                ("r", json!(r)),
                ("t", json!(t)),
                ("c2", json!(c2)),
                ("walls", record(&walls)),
            ]);
            emit(vec![value], cli)
        }
        Command::Chambers { r, t, c2 } => {
            let cs = CsType::new(*r, *t, *c2, 2)?;
            let decomposition = chambers(&cs);
            let value = obj(vec![
                ("r", json!(r)),
                ("t", json!(t)),
                ("c2", json!(c2)),
                ("walls", record(&decomposition.walls)),
                ("chambers", record(&decomposition.chambers)),
            ]);
            emit(vec![value], cli)
        }
        Command::FlipDim { r, s, t, c2 } => {
            let dims = flip_dimensions(*r, *s, *t, *c2)?;
            emit(vec![record(&dims)], cli)
        }
        Command::Points { command } => run_points(command, cli),
        Command::Nonempty {
            r,
            t,
            c2,
            a,
            b,
            s0,
            semistable,
            k,
        } => {
            let c1 = 2 * r - t;
            let value = if let Some(s0) = s0 {
                let b = b.clone().ok_or_else(|| {
                    csp2_core::Error::Precondition("--s0 requires --b".into())
                })?;
                let verdict = nonempty_iff(*r, *t, *c2, *s0, a, &b, *semistable)?;
                obj(vec![
                    ("nonempty", json!(verdict)),
                    ("semistable", json!(semistable)),
                    ("s0", json!(s0)),
                    (
                        "thresholds",
                        obj(vec![
                            ("a", record(&(rat(-s0) + ratio(*t, 2)))),
                            ("b", record(&proposition_bound(*r, *t, *c2, *s0))),
                        ]),
                    ),
                ])
            } else if c1 <= 0 {
                let verdict = trivial_only(*r, *t, *c2, *k)?;
                obj(vec![
                    ("trivial_only", json!(verdict)),
                    ("c1", json!(c1)),
                    ("k", json!(k)),
                ])
            } else {
                let case = nonempty_sufficient(*r, *t, *c2, a)?;
                obj(vec![
                    ("case", record(&case)),
                    (
                        "thresholds",
                        obj(vec![
                            ("case1_c2_min", json!(r * r - t + 2)),
                            ("case2_c2_min", json!(r * r - r * t)),
                            ("case2_a_min", record(&ratio(*t, 2))),
                            ("case3_s0_min", json!(t + 2 - r)),
                            ("case4_c2", json!([2 * r - t - 1, 2 * r - t])),
                            ("case4_a_min", record(&(rat(r - 1) - ratio(*t, 2)))),
                        ]),
                    ),
                ])
            };
            emit(vec![value], cli)
        }
        Command::Sweep {
            r_min,
            r_max,
            t,
            c2_max,
            compare,
        } => {
            let ts: Vec<i64> = match t {
                Some(t) => vec![*t],
                None => vec![0, 1],
            };
            for &t in &ts {
                CsType::new(1, t, 0, 2)?;
            }
            let reports = sweep_comparison((*r_min, *r_max), &ts, *c2_max);
            let mut bad = Vec::new();
            let mut lines = Vec::with_capacity(reports.len());
            for report in &reports {
                if !report.consistent {
                    bad.push((report.r, report.t, report.c2));
                }
                lines.push(obj(vec![
                    ("r", json!(report.r)),
                    ("t", json!(report.t)),
                    ("c2", json!(report.c2)),
                    ("walls", record(&report.walls)),
                    ("discrepancies", record(&report.discrepancies)),
                    ("consistent", json!(report.consistent)),
                ]));
            }
            emit(lines, cli)?;
            if *compare && !bad.is_empty() {
                return Err(CliError::Inconsistent(format!(
                    "unclassified closed-form/oracle mismatches at {bad:?}"
                )));
            }
            Ok(())
        }
    }
}

fn run_points(command: &PointsCommand, cli: &Cli) -> Result<(), CliError> {
    match command {
        PointsCommand::Gen {
            l,
            seed,
            collinear,
            file,
        } => {
            let config = if *collinear {
                gen_collinear(*l, *seed)
            } else {
                gen_general(*l, *seed)?
            };
            if let Some(path) = file {
                std::fs::write(path, serde_json::to_string_pretty(&config)?)?;
                Ok(())
            } else {
                emit(vec![record(&config)], cli)
            }
        }
        PointsCommand::H0 { file, d } => {
            let config = read_config(file)?;
            let value = obj(vec![
                ("d", json!(d)),
                ("h0_ideal", json!(h0_ideal(&config, *d))),
            ]);
            emit(vec![value], cli)
        }
        PointsCommand::NoCurve { file, d } => {
            let config = read_config(file)?;
            let value = obj(vec![
                ("d", json!(d)),
                ("no_curve", json!(lies_on_no_curve(&config, *d))),
            ]);
            emit(vec![value], cli)
        }
        PointsCommand::Cb { file, d } => {
            let config = read_config(file)?;
            let value = obj(vec![
                ("d", json!(d)),
                ("cb", json!(cayley_bacharach(&config, *d))),
            ]);
            emit(vec![value], cli)
        }
        PointsCommand::Witness {
            r,
            t,
            c2,
            s,
            seed,
            file,
        } => {
            let certified = witness_config(*r, *t, *c2, *s, *seed)?;
            if let Some(path) = file {
                std::fs::write(path, serde_json::to_string_pretty(&certified.points)?)?;
            }
            emit(vec![record(&certified)], cli)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Inconsistent(msg)) => {
            eprintln!("inconsistency: {msg}");
            ExitCode::from(3)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
