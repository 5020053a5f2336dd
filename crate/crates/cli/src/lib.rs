//! Command-line frontend for `raney-core`.
//!
//! [`run`] does all the work and returns what should be printed, so `main`
//! only forwards streams and the exit status.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use raney_core::coral::{count_coral, enumerate_coral};
use raney_core::numbers::{
    catalan, fuss_catalan, raney, raney_by_convolution, raney_by_recurrence, RaneyParams,
};
use raney_core::posets::{enumerate_order_ideals, ideal_to_partition, CorePoset};
use raney_core::verify::{CountMethod, Harness, DEFAULT_ENUMERATION_BOUND};
use raney_core::{Execution, Natural};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "raney",
    version,
    about = "Exact Raney numbers, core partitions and coral diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RaneyMethod {
    Closed,
    Recurrence,
    Convolution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterMethod {
    Direct,
    IdealProperty,
    Recurrence,
}

impl From<FilterMethod> for CountMethod {
    fn from(m: FilterMethod) -> Self {
        match m {
            FilterMethod::Direct => CountMethod::Direct,
            FilterMethod::IdealProperty => CountMethod::IdealProperty,
            FilterMethod::Recurrence => CountMethod::Recurrence,
        }
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(long)]
    s: u32,
    #[arg(long)]
    t: u32,
    /// Largest enumerated s for (s, s+1); general pairs need max(s, t) <= bound + 1.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND)]
    bound: u32,
}

#[derive(Debug, Args)]
struct TypeArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    k: u32,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Raney number R_{p,r}(k)
    Raney {
        #[command(flatten)]
        params: TypeArgs,
        #[arg(long, value_enum, default_value = "closed")]
        method: RaneyMethod,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Catalan number C_k
    Catalan {
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Fuss-Catalan number C_p(k)
    Fuss {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Number of (s,t)-core partitions, by enumeration
    CountCores {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Every (s,t)-core partition, or the matching order ideals
    ListCores {
        #[command(flatten)]
        pair: PairArgs,
        /// Print beta-sets (order ideals, ascending) instead of partitions
        #[arg(long)]
        ideals: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Number of (s,s+1)-cores with all parts divisible by p
    CountFiltered {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value = "direct")]
        method: FilterMethod,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND)]
        bound: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Number of coral diagrams of type (p,r,k)
    CoralCount {
        #[command(flatten)]
        params: TypeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Every coral diagram of type (p,r,k)
    CoralList {
        #[command(flatten)]
        params: TypeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Hasse diagram of the gap poset P(s,t) in DOT
    PosetDot {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// One coral diagram of type (p,r,k) in DOT
    CoralDot {
        #[command(flatten)]
        params: TypeArgs,
        /// Position in the enumeration order
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Cross-check the filtered core counts against R_{p+1,r+1}(k)
    Verify {
        #[arg(long, default_value_t = 10)]
        s_max: u32,
        #[arg(long, default_value_t = 6)]
        p_max: u32,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND)]
        bound: u32,
        /// Compute cases on the current thread only
        #[arg(long)]
        sequential: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
}

/// Exit status plus the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            status: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            status: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

type CmdResult = Result<Outcome, Outcome>;

fn usage<E: std::fmt::Display>(e: E) -> Outcome {
    Outcome::usage(e)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return if err.use_stderr() {
                Outcome {
                    status: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) | Err(outcome) => outcome,
    }
}

fn number_output(format: Format, fields: serde_json::Value, value: &Natural) -> CmdResult {
    match format {
        Format::Text => Ok(Outcome::ok(format!("{value}\n"))),
        Format::Json => {
            let mut object = fields;
            object["value"] = serde_json::to_value(value).map_err(usage)?;
            Ok(Outcome::ok(format!("{object}\n")))
        }
        Format::Dot => Err(Outcome::usage(
            "--format dot is not available for this command",
        )),
    }
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Raney {
            params,
            method,
            out,
        } => {
            let TypeArgs { p, r, k } = params;
            let rp = RaneyParams::new(p, r, k).map_err(usage)?;
            let value = match method {
                RaneyMethod::Closed => raney(rp),
                RaneyMethod::Recurrence => raney_by_recurrence(rp),
                RaneyMethod::Convolution => raney_by_convolution(rp).map_err(usage)?,
            };
            number_output(out.format, json!({"p": p, "r": r, "k": k}), &value)
        }
        Command::Catalan { k, out } => number_output(out.format, json!({"k": k}), &catalan(k)),
        Command::Fuss { p, k, out } => {
            let value = fuss_catalan(p, k).map_err(usage)?;
            number_output(out.format, json!({"p": p, "k": k}), &value)
        }
        Command::CountCores { pair, out } => {
            let poset = enumerable_poset(&pair)?;
            let count = Natural::from(enumerate_order_ideals(&poset).count());
            number_output(out.format, json!({"s": pair.s, "t": pair.t}), &count)
        }
        Command::ListCores { pair, ideals, out } => {
            let poset = enumerable_poset(&pair)?;
            let items: Vec<serde_json::Value> = enumerate_order_ideals(&poset)
                .map(|ideal| {
                    if ideals {
                        serde_json::to_value(&ideal)
                    } else {
                        serde_json::to_value(ideal_to_partition(&ideal))
                    }
                })
                .collect::<Result<_, _>>()
                .map_err(usage)?;
            match out.format {
                Format::Text => {
                    let mut text = String::new();
                    for item in &items {
                        writeln!(text, "{item}").unwrap();
                    }
                    Ok(Outcome::ok(text))
                }
                Format::Json => Ok(Outcome::ok(format!(
                    "{}\n",
                    serde_json::Value::Array(items)
                ))),
                Format::Dot => Err(Outcome::usage(
                    "--format dot is not available for list-cores",
                )),
            }
        }
        Command::CountFiltered {
            s,
            p,
            method,
            bound,
            out,
        } => {
            let harness = Harness::new(bound, Execution::Sequential);
            let method = CountMethod::from(method);
            let value = harness.count_filtered_cores(s, p, method).map_err(usage)?;
            number_output(
                out.format,
                json!({"s": s, "p": p, "method": method.to_string()}),
                &value,
            )
        }
        Command::CoralCount { params, out } => {
            let TypeArgs { p, r, k } = params;
            let value = count_coral(p, r, k).map_err(usage)?;
            number_output(out.format, json!({"p": p, "r": r, "k": k}), &value)
        }
        Command::CoralList { params, out } => {
            let TypeArgs { p, r, k } = params;
            let diagrams = enumerate_coral(p, r, k).map_err(usage)?;
            match out.format {
                Format::Text => {
                    let mut text = String::new();
                    for d in diagrams {
                        writeln!(text, "{d}").unwrap();
                    }
                    Ok(Outcome::ok(text))
                }
                Format::Json => {
                    let all: Vec<_> = diagrams.collect();
                    let value = serde_json::to_value(&all).map_err(usage)?;
                    Ok(Outcome::ok(format!("{value}\n")))
                }
                Format::Dot => Err(Outcome::usage("use coral-dot for DOT output")),
            }
        }
        Command::PosetDot { s, t, format } => {
            if format != Format::Dot {
                return Err(Outcome::usage("poset-dot only supports --format dot"));
            }
            let poset = CorePoset::new(s, t).map_err(usage)?;
            Ok(Outcome::ok(poset.to_dot()))
        }
        Command::CoralDot {
            params,
            index,
            format,
        } => {
            if format != Format::Dot {
                return Err(Outcome::usage("coral-dot only supports --format dot"));
            }
            let TypeArgs { p, r, k } = params;
            let diagram = enumerate_coral(p, r, k)
                .map_err(usage)?
                .nth(index)
                .ok_or_else(|| {
                    Outcome::usage(format!(
                        "no coral diagram of type ({p},{r},{k}) at index {index}"
                    ))
                })?;
            Ok(Outcome::ok(diagram.to_dot()))
        }
        Command::Verify {
            s_max,
            p_max,
            bound,
            sequential,
            out,
        } => {
            let execution = if sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            let report = Harness::new(bound, execution).verify_main_theorem(s_max, p_max);
            let stdout = match out.format {
                Format::Json => format!("{}\n", report.to_json()),
                Format::Text => {
                    let mut text = String::new();
                    for c in &report.cases {
                        let show = |n: &Option<Natural>| {
                            n.as_ref().map_or("-".to_string(), Natural::to_string)
                        };
                        writeln!(
                            text,
                            "s={:<3} p={:<3} k={:<3} r={:<3} direct={} ideal={} recurrence={} raney={} rhs={} {}",
                            c.s,
                            c.p,
                            c.k,
                            c.r,
                            show(&c.count_enumeration),
                            show(&c.count_ideal_property),
                            c.count_recurrence,
                            c.count_raney,
                            c.rhs_conjecture,
                            if c.agree { "ok" } else { "MISMATCH" }
                        )
                        .unwrap();
                    }
                    writeln!(
                        text,
                        "{} cases, {} disagreements, all_agree={}",
                        report.summary.cases,
                        report.summary.disagreements,
                        report.summary.all_agree
                    )
                    .unwrap();
                    text
                }
                Format::Dot => {
                    return Err(Outcome::usage("--format dot is not available for verify"))
                }
            };
            let status = if report.summary.all_agree {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
            Ok(Outcome {
                status,
                stdout,
                stderr: String::new(),
            })
        }
    }
}

fn enumerable_poset(pair: &PairArgs) -> Result<CorePoset, Outcome> {
    let poset = CorePoset::new(pair.s, pair.t).map_err(usage)?;
    Harness::new(pair.bound, Execution::Sequential)
        .ensure_enumerable(pair.s, pair.t)
        .map_err(usage)?;
    Ok(poset)
}
