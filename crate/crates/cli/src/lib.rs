//! Command-line frontend for `lifestory-core`.
//!
//! [`run`] takes an argument vector and two sinks and returns the process
//! exit status: 0 on success, 1 on a domain error (or a failed range
//! verification), 2 on a usage error.

pub mod graph;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Write};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use lifestory_core::dynamics::{trace_seed, SeedOutcome};
use lifestory_core::{
    biographies, check_praise_properties, check_zoomin_facts, classify_seed, cls, cv,
    enumerate_autobiographical, find_praising_pairs, is_autobiographical, is_biography,
    is_mutually_praising, trajectory, verify_cycles, DigitString, MapKind, Trajectory,
    VerificationReport, DEFAULT_MAX_STEPS,
};

use crate::graph::FunctionalGraph;

#[derive(Debug, Parser)]
#[command(
    name = "lifestory",
    version,
    about = "Digit-count biographies and their dynamics"
)]
pub struct Cli {
    /// Output format; csv is valid only for verify commands, dot only for graph.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Worker threads for range commands; output does not depend on it.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapArg {
    Cv,
    Cls,
}

impl From<MapArg> for MapKind {
    fn from(m: MapArg) -> Self {
        match m {
            MapArg::Cv => MapKind::Cv,
            MapArg::Cls => MapKind::Cls,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Curriculum vitae (shortest biography) of S.
    Cv { s: DigitString },
    /// Complete life story (ten-digit biography) of S.
    Cls { s: DigitString },
    /// All biographies of S, shortest first.
    Biographies { s: DigitString },
    /// Whether M is a biography of N.
    Isbio { m: DigitString, n: DigitString },
    /// Enumerate or recognize autobiographical numbers.
    #[command(group(ArgGroup::new("mode").required(true).args(["enumerate", "check"])))]
    Autobio {
        #[arg(long)]
        enumerate: bool,
        #[arg(long, value_name = "S")]
        check: Option<DigitString>,
    },
    /// Whether the CV sequence of S is defined forever.
    Classify { s: DigitString },
    /// Prefix and cycle of the CV sequence of S.
    CvSeq {
        s: DigitString,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
    },
    /// Prefix and cycle of the CLS sequence of S.
    ClsSeq {
        s: DigitString,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
    },
    /// Check that every CV sequence seeded in a range reaches a known cycle.
    VerifyCv(RangeArgs),
    /// Check that every CLS sequence seeded in a range reaches the known cycle.
    VerifyCls(RangeArgs),
    /// Find or check mutually-praising pairs.
    #[command(group(ArgGroup::new("mode").required(true).args(["find", "check"])))]
    Praise {
        #[arg(long)]
        find: bool,
        /// Only pairs whose members both lack a leading zero.
        #[arg(long, requires = "find")]
        legit_only: bool,
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        check: Option<Vec<DigitString>>,
    },
    /// Functional graph of a map over the states reachable from a range.
    Graph {
        #[arg(long, value_enum)]
        map: MapArg,
        #[command(flatten)]
        range: RangeArgs,
    },
}

#[derive(Debug, Clone, clap::Args)]
pub struct RangeArgs {
    #[arg(long = "from", value_name = "A")]
    pub from: u64,
    #[arg(long = "to", value_name = "B")]
    pub to: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
    pub max_steps: usize,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

/// Parses `args` (program name first), runs the command, and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };

    let mut buf = Vec::new();
    let result = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build()
        {
            Ok(pool) => pool.install(|| execute(&cli, &mut buf)),
            Err(e) => Err(CliError::Io(io::Error::other(e))),
        },
        None => execute(&cli, &mut buf),
    };
    let flushed = out.write_all(&buf).and_then(|()| out.flush());
    let result = result.and_then(|code| flushed.map(|()| code).map_err(CliError::Io));

    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(CliError::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Text,
    Json,
}

fn plain_mode(format: Option<OutputFormat>, command: &str) -> Result<Mode, CliError> {
    match format {
        None | Some(OutputFormat::Text) => Ok(Mode::Text),
        Some(OutputFormat::Json) => Ok(Mode::Json),
        Some(OutputFormat::Csv) => Err(CliError::Usage(format!(
            "--format csv is only valid for verify-cv and verify-cls, not {command}"
        ))),
        Some(OutputFormat::Dot) => Err(CliError::Usage(format!(
            "--format dot is only valid for graph, not {command}"
        ))),
    }
}

fn check_range(range: &RangeArgs) -> Result<(), CliError> {
    if range.from > range.to {
        return Err(CliError::Usage(format!(
            "--from {} is greater than --to {}",
            range.from, range.to
        )));
    }
    Ok(())
}

fn emit(
    out: &mut dyn Write,
    mode: Mode,
    text: String,
    value: serde_json::Value,
) -> Result<(), CliError> {
    match mode {
        Mode::Text => out.write_all(text.as_bytes())?,
        Mode::Json => writeln!(out, "{value}")?,
    }
    Ok(())
}

fn lines<'a>(items: impl IntoIterator<Item = &'a DigitString>) -> String {
    items.into_iter().map(|s| format!("{s}\n")).collect()
}

fn joined(items: &[DigitString]) -> String {
    items
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Cv { s } => {
            let mode = plain_mode(format, "cv")?;
            let b = cv(s).map_err(domain)?;
            emit(
                out,
                mode,
                format!("{b}\n"),
                json!({"input": s, "cv": b, "legitimate": b.is_legitimate()}),
            )?;
        }
        Command::Cls { s } => {
            let mode = plain_mode(format, "cls")?;
            let b = cls(s).map_err(domain)?;
            emit(
                out,
                mode,
                format!("{b}\n"),
                json!({"input": s, "cls": b, "legitimate": b.is_legitimate()}),
            )?;
        }
        Command::Biographies { s } => {
            let mode = plain_mode(format, "biographies")?;
            let all = biographies(s).map_err(domain)?;
            emit(
                out,
                mode,
                lines(&all),
                json!({"input": s, "biographies": all}),
            )?;
        }
        Command::Isbio { m, n } => {
            let mode = plain_mode(format, "isbio")?;
            let yes = is_biography(m, n);
            emit(
                out,
                mode,
                format!("{yes}\n"),
                json!({"m": m, "n": n, "is_biography": yes}),
            )?;
        }
        Command::Autobio { enumerate, check } => {
            let mode = plain_mode(format, "autobio")?;
            if *enumerate {
                let catalog = enumerate_autobiographical();
                let facts = check_zoomin_facts(&catalog);
                emit(
                    out,
                    mode,
                    lines(catalog.members()),
                    json!({"autobiographical": catalog.members(), "structural_facts": facts}),
                )?;
            } else if let Some(s) = check {
                let yes = is_autobiographical(s);
                emit(
                    out,
                    mode,
                    format!("{yes}\n"),
                    json!({"input": s, "autobiographical": yes}),
                )?;
            }
        }
        Command::Classify { s } => {
            let mode = plain_mode(format, "classify")?;
            let c = classify_seed(s);
            emit(
                out,
                mode,
                format!("{c}\n"),
                json!({"input": s, "verdict": c.verdict, "failure_depth": c.failure_depth}),
            )?;
        }
        Command::CvSeq { s, max_steps } => {
            let mode = plain_mode(format, "cv-seq")?;
            let t = trajectory(MapKind::Cv, s, *max_steps).map_err(domain)?;
            emit_trajectory(out, mode, &t)?;
        }
        Command::ClsSeq { s, max_steps } => {
            let mode = plain_mode(format, "cls-seq")?;
            let t = trajectory(MapKind::Cls, s, *max_steps).map_err(domain)?;
            emit_trajectory(out, mode, &t)?;
        }
        Command::VerifyCv(range) => return verify(out, format, MapKind::Cv, range),
        Command::VerifyCls(range) => return verify(out, format, MapKind::Cls, range),
        Command::Praise {
            find,
            legit_only,
            check,
        } => {
            let mode = plain_mode(format, "praise")?;
            if *find {
                let mut pairs = find_praising_pairs();
                let facts = check_praise_properties(&pairs);
                if *legit_only {
                    pairs.retain(|p| p.both_legitimate);
                }
                let text = pairs
                    .iter()
                    .map(|p| {
                        let kind = if p.both_legitimate { "legit" } else { "string" };
                        format!("{} {} {kind}\n", p.a, p.b)
                    })
                    .collect();
                let value = match mode {
                    Mode::Json => serde_json::to_value(&pairs).map_err(domain)?,
                    Mode::Text => serde_json::Value::Null,
                };
                emit(out, mode, text, value)?;
                if !facts.all_pass() {
                    return Err(CliError::Domain(format!(
                        "structural check failed on {} legitimate pair(s)",
                        facts.violators.len()
                    )));
                }
            } else if let Some(pair) = check {
                let yes = is_mutually_praising(&pair[0], &pair[1]);
                emit(
                    out,
                    mode,
                    format!("{yes}\n"),
                    json!({"a": pair[0], "b": pair[1], "mutually_praising": yes}),
                )?;
            }
        }
        Command::Graph { map, range } => {
            match format {
                None | Some(OutputFormat::Dot) => {}
                Some(other) => {
                    return Err(CliError::Usage(format!(
                        "graph only supports --format dot, got {other:?}"
                    )))
                }
            }
            check_range(range)?;
            let kind = MapKind::from(*map);
            let g = FunctionalGraph::from_range(kind, range.from, range.to, range.max_steps)
                .map_err(domain)?;
            out.write_all(g.to_dot(kind.name()).as_bytes())?;
        }
    }
    Ok(0)
}

fn emit_trajectory(out: &mut dyn Write, mode: Mode, t: &Trajectory) -> Result<(), CliError> {
    let text = format!(
        "prefix: {}\ncycle: {}\n",
        joined(&t.prefix),
        joined(&t.cycle)
    );
    let value = serde_json::to_value(t).map_err(domain)?;
    emit(out, mode, text, value)
}

fn render_report(r: &VerificationReport) -> String {
    let mut s = String::new();
    writeln!(s, "map: {}", r.map).unwrap();
    writeln!(s, "range: {}..={}", r.lo, r.hi).unwrap();
    writeln!(s, "checked: {}", r.checked).unwrap();
    writeln!(s, "skipped: {}", r.skipped).unwrap();
    writeln!(s, "max_prefix: {}", r.max_prefix).unwrap();
    for c in &r.cycles {
        writeln!(s, "cycle [{}]: {}", joined(&c.members), c.absorbed).unwrap();
    }
    if r.counterexamples.is_empty() {
        writeln!(s, "counterexamples: none").unwrap();
    } else {
        writeln!(s, "counterexamples: {}", joined(&r.counterexamples)).unwrap();
    }
    writeln!(s, "result: {}", if r.passes() { "PASS" } else { "FAIL" }).unwrap();
    s
}

const CSV_CHUNK: u64 = 1 << 16;

fn verify(
    out: &mut dyn Write,
    format: Option<OutputFormat>,
    kind: MapKind,
    range: &RangeArgs,
) -> Result<i32, CliError> {
    check_range(range)?;
    let passed = match format {
        Some(OutputFormat::Csv) => write_csv(out, kind, range)?,
        Some(OutputFormat::Dot) => {
            return Err(CliError::Usage(format!(
                "--format dot is only valid for graph, not verify-{kind}"
            )))
        }
        Some(OutputFormat::Json) => {
            let r = verify_cycles(kind, range.from, range.to, range.max_steps);
            writeln!(out, "{}", serde_json::to_string(&r).map_err(domain)?)?;
            r.passes()
        }
        None | Some(OutputFormat::Text) => {
            let r = verify_cycles(kind, range.from, range.to, range.max_steps);
            out.write_all(render_report(&r).as_bytes())?;
            r.passes()
        }
    };
    Ok(if passed { 0 } else { 1 })
}

/// One row per checked seed; seeds without an infinite sequence are
/// omitted. Returns whether every row reached a known cycle.
fn write_csv(out: &mut dyn Write, kind: MapKind, range: &RangeArgs) -> Result<bool, CliError> {
    let known = kind.known_cycles();
    let mut passed = true;
    writeln!(out, "seed,prefix_len,cycle_id")?;
    let mut start = range.from;
    loop {
        let end = start.saturating_add(CSV_CHUNK - 1).min(range.to);
        let seeds: Vec<u64> = (start..=end).collect();
        let rows: Vec<(u64, SeedOutcome)> = seeds
            .par_iter()
            .map(|&seed| {
                let s = DigitString::from_u64(seed);
                (seed, trace_seed(kind, &s, range.max_steps))
            })
            .collect();
        for (seed, outcome) in rows {
            match outcome {
                SeedOutcome::Skipped(_) => {}
                SeedOutcome::BudgetExceeded => {
                    passed = false;
                    writeln!(out, "{seed},,")?;
                }
                SeedOutcome::Cycle { prefix_len, cycle } => {
                    passed &= known.contains(&cycle);
                    writeln!(out, "{seed},{prefix_len},{}", cycle[0])?;
                }
            }
        }
        if end == range.to {
            break;
        }
        start = end + 1;
    }
    Ok(passed)
}
