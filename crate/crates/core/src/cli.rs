//! Command-line front end.
//!
//! Exit codes: `0` on success, `1` when a checked property fails, `2` on usage
//! errors (bad flags, malformed or mismatched input).

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::dims::{fiber_dim, flag_dim, orbit_dim};
use crate::enumerate::enumerate;
use crate::error::Error;
use crate::geometry::{generic_orbit, jordan_rep, OracleParams};
use crate::order::{compare, Comparison, OrderMethod};
use crate::poset::hasse;
use crate::transform::{transform_t, transform_t_prime_traced, transform_t_traced, Trace};
use crate::triangle::{DimVector, TriangularArray};
use crate::verify::{self, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "triarray",
    version,
    about = "Triangular arrays, orbit closures and the combinatorial Fourier transform"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every triangular array of a dimension vector.
    Enumerate {
        #[arg(long)]
        dim: DimVector,
    },
    /// Orbit, flag and fiber dimensions.
    Dim {
        #[arg(long)]
        triangle: TriangularArray,
    },
    /// Compare two arrays in the closure order.
    Order {
        #[arg(long)]
        left: TriangularArray,
        #[arg(long)]
        right: TriangularArray,
    },
    /// Hasse diagram of the closure order.
    Hasse {
        #[arg(long)]
        dim: DimVector,
        /// Emit Graphviz DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Apply T.
    Transform {
        #[arg(long)]
        triangle: TriangularArray,
        #[arg(long)]
        trace: bool,
    },
    /// Apply T'.
    Inverse {
        #[arg(long)]
        triangle: TriangularArray,
        #[arg(long)]
        trace: bool,
    },
    /// Compute the transform from a generic commuting representation.
    Oracle {
        #[arg(long)]
        triangle: TriangularArray,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(i64).range(1..))]
        range: i64,
    },
    /// Run the property suites.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_entry: u32,
        /// Size cap for properties using exact linear algebra.
        #[arg(long, default_value_t = 3)]
        geometry_max_n: usize,
        #[arg(long, default_value_t = 2)]
        geometry_max_entry: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(i64).range(1..))]
        range: i64,
    },
}

/// Captured result of one command.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(e: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json") + "\n"
}

fn same_size(left: &TriangularArray, right: &TriangularArray) -> Result<(), Error> {
    if left.dim_vector() != right.dim_vector() {
        return Err(Error::DimMismatch {
            left: left.dim_vector().entries().to_vec(),
            right: right.dim_vector().entries().to_vec(),
        });
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Enumerate { dim } => {
            let all = enumerate(dim);
            match format {
                Format::Text => Outcome::ok(lines(all.iter().map(|y| y.to_string()))),
                Format::Json => Outcome::ok(pretty(&serde_json::to_value(&all).expect("json"))),
            }
        }
        Command::Dim { triangle } => {
            let (o, fl, fi) = (orbit_dim(triangle), flag_dim(triangle), fiber_dim(triangle));
            match format {
                Format::Text => Outcome::ok(format!("orbit_dim {o}\nflag_dim {fl}\nfiber_dim {fi}\n")),
                Format::Json => Outcome::ok(pretty(&json!({
                    "triangle": triangle.to_string(),
                    "orbit_dim": o,
                    "flag_dim": fl,
                    "fiber_dim": fi,
                }))),
            }
        }
        Command::Order { left, right } => {
            if let Err(e) = same_size(left, right) {
                return Outcome::usage(e);
            }
            let methods = [OrderMethod::Chutewise, OrderMethod::Segments, OrderMethod::Coweights];
            let results: Vec<Comparison> =
                methods.iter().map(|&m| compare(left, right, m).expect("sizes checked")).collect();
            let agree = results.iter().all(|r| *r == results[0]);
            let stdout = match format {
                Format::Text => format!("{}\n", results[0]),
                Format::Json => pretty(&json!({
                    "left": left.to_string(),
                    "right": right.to_string(),
                    "relation": results[0].to_string(),
                    "chutewise": results[0].to_string(),
                    "segments": results[1].to_string(),
                    "coweights": results[2].to_string(),
                    "agree": agree,
                })),
            };
            if agree {
                Outcome::ok(stdout)
            } else {
                Outcome {
                    code: EXIT_PROPERTY,
                    stdout,
                    stderr: format!(
                        "order methods disagree: chutewise {}, segments {}, coweights {}\n",
                        results[0], results[1], results[2]
                    ),
                }
            }
        }
        Command::Hasse { dim, dot } => {
            let p = hasse(dim);
            if *dot {
                Outcome::ok(p.to_dot())
            } else {
                match format {
                    Format::Json => Outcome::ok(p.to_json() + "\n"),
                    Format::Text => {
                        let e = p.elements();
                        Outcome::ok(lines(p.covers().iter().map(|&(a, b)| format!("{} < {}", e[a], e[b]))))
                    }
                }
            }
        }
        Command::Transform { triangle, trace } => transform_command(triangle, *trace, format, false),
        Command::Inverse { triangle, trace } => transform_command(triangle, *trace, format, true),
        Command::Oracle { triangle, seed, trials, range } => {
            let params = OracleParams { seed: *seed, trials: *trials as usize, range: *range };
            let g = match generic_orbit(&jordan_rep(triangle), &params) {
                Ok(g) => g,
                Err(e) => return Outcome::usage(e),
            };
            let t = transform_t(triangle);
            let agree = g.label == t;
            let monotone = g.is_monotone();
            let stdout = match format {
                Format::Text => {
                    let mut s = format!("{}\n", g.label);
                    s += &format!("T: {t}\n");
                    s += &format!("agree: {}\n", if agree { "yes" } else { "no" });
                    s += &format!("dim C(x): {}\n", g.commuting_dim);
                    for (k, sample) in g.samples.iter().enumerate() {
                        s += &format!("trial {k}: {sample}\n");
                    }
                    s
                }
                Format::Json => pretty(&json!({
                    "triangle": triangle.to_string(),
                    "oracle": g.label.to_string(),
                    "transform": t.to_string(),
                    "agree": agree,
                    "monotone": monotone,
                    "commuting_dim": g.commuting_dim,
                    "samples": g.samples.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    "seed": seed,
                    "trials": trials,
                    "range": range,
                })),
            };
            if agree && monotone {
                Outcome::ok(stdout)
            } else {
                let why = if monotone { "oracle and T disagree" } else { "a sample exceeds the returned label" };
                Outcome { code: EXIT_PROPERTY, stdout, stderr: format!("{why}\n") }
            }
        }
        Command::Verify { max_n, max_entry, geometry_max_n, geometry_max_entry, seed, trials, range } => {
            if *max_n < 1 {
                return Outcome::usage("--max-n must be at least 1");
            }
            let config = VerifyConfig {
                max_n: *max_n,
                max_entry: *max_entry,
                geometry_max_n: (*geometry_max_n).min(*max_n),
                geometry_max_entry: (*geometry_max_entry).min(*max_entry),
                oracle: OracleParams { seed: *seed, trials: *trials as usize, range: *range },
            };
            let report = verify::run(&config);
            let stdout = match format {
                Format::Text => format!("{report}\n"),
                Format::Json => pretty(&serde_json::to_value(&report).expect("json")),
            };
            Outcome { code: if report.all_passed() { EXIT_OK } else { EXIT_PROPERTY }, stdout, stderr: String::new() }
        }
    }
}

fn transform_command(y: &TriangularArray, trace: bool, format: Format, inverse: bool) -> Outcome {
    let mut tr = if trace { Trace::enabled() } else { Trace::disabled() };
    let out = if inverse { transform_t_prime_traced(y, &mut tr) } else { transform_t_traced(y, &mut tr) };
    match format {
        Format::Text => {
            let mut s = String::new();
            for l in tr.lines() {
                s += l;
                s.push('\n');
            }
            s += &format!("{out}\n");
            Outcome::ok(s)
        }
        Format::Json => {
            let mut v = json!({ "input": y.to_string(), "output": out.to_string() });
            if trace {
                v["trace"] = json!(tr.lines());
            }
            Outcome::ok(pretty(&v))
        }
    }
}

/// Parses `args` (program name first) and runs; clap help and version go to
/// stdout with code 0.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => verify::with_pool(|| run(&cli)),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

/// Entry point for the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let o = run_args(args);
    let _ = std::io::stdout().write_all(o.stdout.as_bytes());
    let _ = std::io::stderr().write_all(o.stderr.as_bytes());
    o.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run_args(std::iter::once("triarray").chain(args.iter().copied()))
    }

    #[test]
    fn enumerate_text() {
        let o = go(&["enumerate", "--dim", "1,1"]);
        assert_eq!(o, Outcome::ok("1,0/1\n0,1/1\n".into()));
    }

    #[test]
    fn order_and_transform() {
        assert_eq!(go(&["order", "--left", "0,1,2/1,2/3", "--right", "0,0,3/0,3/3"]).stdout, "<\n");
        assert_eq!(go(&["transform", "--triangle", "0,0,3/0,3/3"]).stdout, "3,0,0/3,0/3\n");
        assert_eq!(go(&["inverse", "--triangle", "3,0,0/3,0/3"]).stdout, "0,0,3/0,3/3\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(go(&["transform", "--triangle", "0,1/2/3"]).code, EXIT_USAGE);
        assert_eq!(go(&["order", "--left", "1,0/1", "--right", "2,0/1"]).code, EXIT_USAGE);
        assert_eq!(go(&["bogus"]).code, EXIT_USAGE);
        assert_eq!(go(&["oracle", "--triangle", "1", "--trials", "0"]).code, EXIT_USAGE);
        assert_eq!(go(&["--help"]).code, EXIT_OK);
    }
}
