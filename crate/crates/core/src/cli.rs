//! The `svdyn` command line.
//!
//! Exit codes: 0 success, 1 an asserted property is false, 2 usage or parse
//! error, 3 resource cap reached.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::constructions::{corpus, desingularize};
use crate::dynamics::{find_cycles, sarkovskii_precedes, verify_sarkovskii_span, SpanOutcome, DEFAULT_CYCLE_BUDGET};
use crate::format::{parse, serialize};
use crate::mahavier::{
    build_truncation_with, fissile_cell_diagnostic, project, truncation_connected, TruncationConfig,
    DEFAULT_CELL_CAP,
};
use crate::plot::svg;
use crate::properties::{classify, PropertyReport};
use crate::rational::{parse_rational, to_pq, Rational};
use crate::relation::PLRelation;
use crate::report::{interval_set, pq, RunReport};

pub const CELL_CAP_ENV: &str = "SVDYN_CELL_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "svdyn", version, about = "Exact analysis of piecewise-linear set-valued maps of [0,1]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a relation and print its property report.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Exit 1 unless this property holds; repeatable.
        #[arg(long = "assert", value_name = "PROPERTY")]
        assert: Vec<String>,
        /// Include wall-clock timing in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Find cycles of an exact period.
    Cycle {
        file: PathBuf,
        #[arg(long)]
        period: usize,
        #[arg(long, default_value_t = DEFAULT_CYCLE_BUDGET)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether M precedes N in the Sarkovskii order.
    Sarkovskii { m: u64, n: u64 },
    /// Check that a cycle of period N forces every later period up to M.
    Span {
        file: PathBuf,
        #[arg(long)]
        period: usize,
        #[arg(long)]
        max: usize,
        #[arg(long, default_value_t = DEFAULT_CYCLE_BUDGET)]
        budget: usize,
        #[arg(long)]
        json: bool,
        /// Exit 1 unless every forced period was found.
        #[arg(long = "assert")]
        assert: bool,
    },
    /// Write the composite relation "F then G".
    Compose {
        f: PathBuf,
        g: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build a finite truncation of the inverse limit.
    Truncate {
        file: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        fissile: bool,
        /// Print the realized values of this coordinate.
        #[arg(long)]
        project: Option<usize>,
        #[arg(long)]
        json: bool,
        /// With --connected: exit 1 if the truncation is disconnected.
        #[arg(long = "assert")]
        assert: bool,
    },
    /// Replace rectangles by a light path through the given cycle.
    Desingularize {
        file: PathBuf,
        /// Comma-separated cycle points, e.g. "0,1/2,1".
        #[arg(long)]
        cycle: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Draw a relation, or a two-coordinate projection of a truncation.
    Plot {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
        /// Coordinates to project onto, e.g. "0,2".
        #[arg(long, default_value = "0,1")]
        coords: String,
    },
    /// Write a named example relation.
    Corpus {
        name: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// A failed command with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

type CmdResult = Result<i32, Failure>;

fn load(path: &Path) -> Result<(PLRelation, Vec<u8>), Failure> {
    let bytes = fs::read(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8_lossy(&bytes);
    let r = parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok((r, bytes))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, report: &RunReport, as_json: bool) {
    let text = if as_json {
        serde_json::to_string_pretty(&report.to_json()).expect("reports serialize") + "\n"
    } else {
        report.to_text()
    };
    let _ = out.write_all(text.as_bytes());
}

fn property(p: &PropertyReport, name: &str) -> Option<bool> {
    Some(match name {
        "domain_full" => p.domain_full,
        "surjective" => p.surjective,
        "graph_connected" => p.graph_connected,
        "interior_empty" => p.interior_empty,
        "slices_connected" => p.slices_connected,
        "weakly_continuous" => p.weakly_continuous,
        "ivp" => p.ivp,
        "weak_ivp" => p.weak_ivp,
        "light" => p.light,
        "almost_nonfissile" => p.almost_nonfissile,
        _ => return None,
    })
}

fn parse_list(text: &str) -> Result<Vec<Rational>, Failure> {
    text.split(',')
        .map(|t| parse_rational(t).ok_or_else(|| usage(format!("malformed rational `{}`", t.trim()))))
        .collect()
}

fn cell_cap() -> Result<usize, Failure> {
    match std::env::var(CELL_CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("{CELL_CAP_ENV}: not a count: `{v}`"))),
        Err(_) => Ok(DEFAULT_CELL_CAP),
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Check { file, json, assert, timing } => {
            let (r, bytes) = load(&file)?;
            for name in &assert {
                if property(&classify(&PLRelation::identity()), name).is_none() {
                    return Err(usage(format!("unknown property `{name}`")));
                }
            }
            let start = Instant::now();
            let props = classify(&r);
            let mut report = RunReport::new("check").with_input(&file.display().to_string(), &bytes);
            report.add_properties(&props);
            if timing {
                report.timing_ms = Some(start.elapsed().as_millis());
            }
            emit(out, &report, json);
            let all = assert.iter().all(|n| property(&props, n) == Some(true));
            Ok(if all { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Cycle { file, period, budget, json } => {
            if period == 0 {
                return Err(usage("period must be positive"));
            }
            let (r, bytes) = load(&file)?;
            if !r.domain_is_full() {
                return Err(usage("relation is not defined on all of [0,1]"));
            }
            let search = find_cycles(&r, period, budget);
            let mut report = RunReport::new("cycle").with_input(&file.display().to_string(), &bytes);
            report.push("period", json!(period));
            report.push("complete", json!(search.complete));
            report.push("explored", json!(search.explored));
            report.push("count", json!(search.cycles.len()));
            let cycles: Vec<Value> =
                search.cycles.iter().map(|c| Value::Array(c.points().iter().map(pq).collect())).collect();
            report.push("cycles", Value::Array(cycles));
            emit(out, &report, json);
            Ok(EXIT_OK)
        }
        Command::Sarkovskii { m, n } => {
            if m == 0 || n == 0 {
                return Err(usage("the order is defined on positive integers"));
            }
            let _ = writeln!(out, "{}", sarkovskii_precedes(m, n));
            Ok(EXIT_OK)
        }
        Command::Span { file, period, max, budget, json, assert } => {
            if period == 0 {
                return Err(usage("period must be positive"));
            }
            let (r, bytes) = load(&file)?;
            let span = verify_sarkovskii_span(&r, period, max, budget).map_err(|e| usage(e.to_string()))?;
            let mut report = RunReport::new("span").with_input(&file.display().to_string(), &bytes);
            report.push("period", json!(period));
            report.push("witness", Value::Array(span.witness.points().iter().map(pq).collect()));
            for (m, outcome) in &span.entries {
                let v = match outcome {
                    SpanOutcome::Found(c) => Value::Array(c.points().iter().map(pq).collect()),
                    SpanOutcome::NotFoundWithinBudget => Value::String("not found within budget".into()),
                    SpanOutcome::Violation => Value::String("violation".into()),
                };
                report.push(&format!("period.{m}"), v);
            }
            report.push("all_found", json!(span.all_found()));
            emit(out, &report, json);
            Ok(if span.has_violation() || (assert && !span.all_found()) { EXIT_FALSE } else { EXIT_OK })
        }
        Command::Compose { f, g, output } => {
            let (rf, _) = load(&f)?;
            let (rg, _) = load(&g)?;
            write_file(&output, &serialize(&rf.compose(&rg)))?;
            Ok(EXIT_OK)
        }
        Command::Truncate { file, depth, connected, fissile, project: proj, json, assert } => {
            let (r, bytes) = load(&file)?;
            let config = TruncationConfig { cell_cap: cell_cap()?, ..TruncationConfig::default() };
            let c = build_truncation_with(&r, depth, &config).map_err(|e| Failure {
                code: if e.is_resource_cap() { EXIT_CAP } else { EXIT_USAGE },
                message: e.to_string(),
            })?;
            let mut report = RunReport::new("truncate").with_input(&file.display().to_string(), &bytes);
            report.push("depth", json!(depth));
            report.push("cells", json!(c.cells.len()));
            report.push("adjacent_pairs", json!(c.adjacency.len()));
            let is_connected = truncation_connected(&c);
            if connected {
                report.push("connected", json!(is_connected));
                report.push("components", json!(c.component_count()));
            }
            if fissile {
                let d = fissile_cell_diagnostic(&r, &c);
                report.push("fissile_fraction", Value::String(to_pq(&d.fraction)));
                report.push("fissile_cells", json!(d.fissile_cells));
            }
            if let Some(k) = proj {
                let set = project(&c, k).map_err(|e| usage(e.to_string()))?;
                report.push(&format!("project.{k}"), interval_set(&set));
            }
            emit(out, &report, json);
            Ok(if assert && connected && !is_connected { EXIT_FALSE } else { EXIT_OK })
        }
        Command::Desingularize { file, cycle, output } => {
            let (r, _) = load(&file)?;
            let points = parse_list(&cycle)?;
            let g = desingularize(&r, &points).map_err(|e| usage(e.to_string()))?;
            write_file(&output, &serialize(&g))?;
            Ok(EXIT_OK)
        }
        Command::Plot { file, output, depth, coords } => {
            let (r, _) = load(&file)?;
            let title = file.display().to_string();
            let picture = match depth {
                None => svg(&r, &title),
                Some(n) => {
                    let ij: Vec<usize> = coords
                        .split(',')
                        .map(|t| t.trim().parse().map_err(|_| usage(format!("bad coordinate `{t}`"))))
                        .collect::<Result<_, _>>()?;
                    let [i, j] = ij[..] else { return Err(usage("--coords takes two indices")) };
                    if i > n || j > n {
                        return Err(usage(format!("coordinates must be at most the depth {n}")));
                    }
                    let config = TruncationConfig { cell_cap: cell_cap()?, ..TruncationConfig::default() };
                    let c = build_truncation_with(&r, n, &config).map_err(|e| Failure {
                        code: if e.is_resource_cap() { EXIT_CAP } else { EXIT_USAGE },
                        message: e.to_string(),
                    })?;
                    svg(&c.project_pair(i, j), &format!("{title} (x{i}, x{j}) at depth {n}"))
                }
            };
            write_file(&output, &picture)?;
            Ok(EXIT_OK)
        }
        Command::Corpus { name, output } => {
            let r = corpus(&name).map_err(|e| usage(e.to_string()))?;
            write_file(&output, &serialize(&r))?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["svdyn"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn order_query() {
        assert_eq!(call(&["sarkovskii", "3", "5"]), (0, "true\n".into(), String::new()));
        assert_eq!(call(&["sarkovskii", "5", "3"]).1, "false\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["check", "/nonexistent/file.plrel"]).0, EXIT_USAGE);
        assert_eq!(call(&["sarkovskii", "0", "3"]).0, EXIT_USAGE);
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }
}
