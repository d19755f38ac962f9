//! The `lh` command line.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage, input or
//! budget errors. Results go to the standard stream, diagnostics to the
//! error stream.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::finspace::PointSet;
use crate::hyperspace::{
    conv1_conditions, is_primitive, seq_clusters, seq_limits, EvPerSeq, Flavor,
};
use crate::io::{
    emit_hyperspace_report, emit_report, emit_sweep, parse_seq_spec, parse_set, parse_space,
    Format, LabeledSpace,
};
use crate::limitsets::CarrierKind;
use crate::theorems::{sweep, verify_with, Hyperspaces, SweepOptions, VerifyOptions};

/// Largest `n` swept without `--long`.
pub const DEFAULT_SWEEP_LIMIT: usize = 4;

#[derive(Debug, Parser)]
#[command(
    name = "lh",
    version,
    about = "Closed-set hyperspaces of finite spaces and their limit sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a space file describes a topology.
    Validate { file: PathBuf },
    /// Print the hyperspace carriers and per-element neighbourhood data.
    Report {
        file: PathBuf,
        #[arg(long, default_value = "L")]
        carrier: CarrierKind,
        #[arg(long, default_value = "w")]
        topology: Flavor,
    },
    /// Run every theorem check on a space.
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run every theorem check on every topology with N labeled points.
    Sweep {
        n: usize,
        /// Allow N = 5 (6942 spaces).
        #[arg(long)]
        long: bool,
        #[arg(long, env = "LH_JOBS")]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Decide convergence of an eventually periodic sequence of closed sets.
    Converge {
        file: PathBuf,
        /// Sequence as pre:[{..},..];cyc:[{..},..] over point labels.
        #[arg(long)]
        seq: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value = "w")]
        topology: Flavor,
    },
}

enum Failure {
    Usage(String),
    Input(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn load(file: &PathBuf) -> std::result::Result<LabeledSpace, Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    Ok(parse_space(&text)?)
}

/// Run `argv` (including the program name), writing to the given streams.
pub fn run_with(
    argv: impl IntoIterator<Item = String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn run(argv: impl IntoIterator<Item = String>) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

fn emit(out: &mut dyn Write, text: &str) -> std::result::Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Usage(format!("writing output: {e}")))
}

fn execute(command: Command, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    match command {
        Command::Validate { file } => {
            let s = load(&file)?;
            emit(
                out,
                &format!(
                    "valid: {} points, {} opens, {} closed sets\n",
                    s.space.len(),
                    s.space.opens().len(),
                    s.space.closed_sets().len()
                ),
            )?;
            Ok(0)
        }
        Command::Report {
            file,
            carrier,
            topology,
        } => {
            let s = load(&file)?;
            emit(out, &emit_hyperspace_report(&s, carrier, topology))?;
            Ok(0)
        }
        Command::Verify { file, json } => {
            let s = load(&file)?;
            let ctx = Hyperspaces::new(s.space.clone());
            let report = verify_with(&ctx, s.labels.clone(), &VerifyOptions::default())?;
            let format = if json { Format::Json } else { Format::Text };
            emit(out, &emit_report(&report, format))?;
            Ok(if report.all_ok() { 0 } else { 1 })
        }
        Command::Sweep {
            n,
            long,
            jobs,
            json,
        } => {
            if n > DEFAULT_SWEEP_LIMIT && !long {
                return Err(Failure::Usage(format!(
                    "sweep {n} needs --long (the default limit is {DEFAULT_SWEEP_LIMIT} points)"
                )));
            }
            if jobs == Some(0) {
                return Err(Failure::Usage("--jobs must be at least 1".to_string()));
            }
            let opts = SweepOptions {
                jobs,
                verify: VerifyOptions::default(),
            };
            let report = sweep(n, &opts)?;
            let format = if json { Format::Json } else { Format::Text };
            emit(out, &emit_sweep(&report, format))?;
            Ok(if report.failures == 0 { 0 } else { 1 })
        }
        Command::Converge {
            file,
            seq,
            target,
            topology,
        } => {
            let s = load(&file)?;
            let sets = parse_seq_spec(&s, &seq)?;
            let target = parse_set(&s, &target)?;
            emit(out, &converge_report(&s, &sets, target, topology)?)?;
            Ok(0)
        }
    }
}

fn converge_report(
    s: &LabeledSpace,
    sets: &EvPerSeq<PointSet>,
    target: PointSet,
    flavor: Flavor,
) -> Result<String> {
    let ctx = Hyperspaces::new(s.space.clone());
    let t = ctx.topology(CarrierKind::F, flavor);
    let index = |a: PointSet| {
        t.index(a)
            .map_err(|_| Error::InvalidDocument(format!("{} is not a closed set", s.render(a))))
    };
    let seq = EvPerSeq::new(
        sets.preperiod()
            .iter()
            .map(|&a| index(a))
            .collect::<Result<Vec<_>>>()?,
        sets.cycle()
            .iter()
            .map(|&a| index(a))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let a = index(target)?;
    let limits = seq_limits(t, &seq);
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let conv1 = conv1_conditions(&s.space, sets, target);
    let mut text = String::new();
    text.push_str(&format!("topology: {flavor} on F\n"));
    text.push_str(&format!(
        "limits: {}\n",
        s.render_family(&t.sets_of(&limits))
    ));
    text.push_str(&format!(
        "clusters: {}\n",
        s.render_family(&t.sets_of(&seq_clusters(t, &seq)))
    ));
    text.push_str(&format!("primitive: {}\n", yes_no(is_primitive(t, &seq))));
    text.push_str(&format!(
        "pointwise conditions at {}: cond_a {}, cond_b {}\n",
        s.render(target),
        yes_no(conv1.cond_a),
        yes_no(conv1.cond_b)
    ));
    text.push_str(&format!("limit: {}\n", yes_no(limits.contains(a))));
    Ok(text)
}
