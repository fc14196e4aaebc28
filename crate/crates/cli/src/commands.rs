use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use tripartite_core::classify::{classify_mixed, classify_pure, PureClassification, DEFAULT_ZERO_TOL};
use tripartite_core::families::{sweep_point, Family, DEFAULT_POINTS};
use tripartite_core::gsd::{classify_gsd_pattern, gsd, PhaseMode};
use tripartite_core::measures::MeasureSet;
use tripartite_core::states::random::haar_pure;
use tripartite_core::states::State;

use crate::error::{CliError, EXIT_AMBIGUOUS, EXIT_OK};
use crate::{report, statefile, table};

#[derive(Debug, Parser)]
#[command(
    name = "tripartite",
    version,
    about = "Entanglement measures and subtype classification for three-qubit states"
)]
pub struct Cli {
    /// Zero threshold for every classification decision.
    #[arg(long, global = true, default_value_t = DEFAULT_ZERO_TOL)]
    pub tol: f64,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Subtype of a pure state, or the certified claims for a mixed one.
    Classify { path: PathBuf },
    /// All entanglement measures of a state.
    Measure { path: PathBuf },
    /// Canonical five-coefficient form of a pure state.
    Gsd {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Normal)]
        mode: Mode,
    },
    /// Evaluate a parametrized family on its default grid and write CSV.
    Sweep {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = DEFAULT_POINTS)]
        points: usize,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify Haar-random pure states and summarize the subtypes.
    Random {
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV destination for the per-state rows; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Raw,
    Normal,
}

impl From<Mode> for PhaseMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Raw => PhaseMode::Raw,
            Mode::Normal => PhaseMode::Normal,
        }
    }
}

/// What to print on standard output and standard error, and the exit status.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), exit: EXIT_OK }
    }
}

fn json_text(v: &serde_json::Value) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Classify { path } => classify(path, cli.tol, cli.json),
        Command::Measure { path } => measure(path, cli.json),
        Command::Gsd { path, mode } => decompose(path, (*mode).into(), cli.tol, cli.json),
        Command::Sweep { family, points, out } => sweep(family, *points, out.as_deref(), cli.tol),
        Command::Random { count, seed, out } => random(*count, *seed, out.as_deref(), cli.tol, cli.json),
    }
}

pub fn classify(path: &Path, tol: f64, json: bool) -> Result<Outcome, CliError> {
    let (text, ambiguous) = match statefile::read_state(path)? {
        State::Pure(psi) => {
            let c = classify_pure(&psi, tol)?;
            let text = if json { json_text(&report::pure_json(&c))? } else { report::pure_text(&c) };
            (text, c.ambiguous)
        }
        State::Mixed(rho) => {
            let v = classify_mixed(&rho, tol)?;
            let text = if json { json_text(&report::mixed_json(&v, tol))? } else { report::mixed_text(&v, tol) };
            (text, v.ambiguous)
        }
    };
    Ok(Outcome { stdout: text, stderr: String::new(), exit: if ambiguous { EXIT_AMBIGUOUS } else { EXIT_OK } })
}

pub fn measure(path: &Path, json: bool) -> Result<Outcome, CliError> {
    let m = MeasureSet::of_state(&statefile::read_state(path)?)?;
    Ok(Outcome::ok(if json { json_text(&report::measures_json(&m))? } else { report::measures_text(&m) }))
}

pub fn decompose(path: &Path, mode: PhaseMode, tol: f64, json: bool) -> Result<Outcome, CliError> {
    let state = statefile::read_state(path)?;
    let psi = state.as_pure().ok_or(CliError::NeedsPure("gsd"))?;
    let form = gsd(psi, mode)?;
    let pattern = classify_gsd_pattern(&form, tol);
    let text = if json { json_text(&report::gsd_json(&form, &pattern))? } else { report::gsd_text(&form, &pattern) };
    Ok(Outcome { stdout: text, stderr: String::new(), exit: if pattern.is_err() { EXIT_AMBIGUOUS } else { EXIT_OK } })
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path).map(BufWriter::new).map_err(|source| CliError::Write { path: path.to_path_buf(), source })
}

pub fn sweep(family: &str, points: usize, out: Option<&Path>, tol: f64) -> Result<Outcome, CliError> {
    let family = Family::from_id(family)?;
    let grid = family.default_grid(points);
    if grid.is_empty() {
        return Err(tripartite_core::families::FamilyError::EmptyGrid.into());
    }
    // rayon keeps the grid order when collecting
    let rows = grid.par_iter().map(|p| sweep_point(family, p, tol)).collect::<Result<Vec<_>, _>>()?;
    match out {
        Some(path) => {
            let mut w = create(path)?;
            table::write_sweep(&mut w, &rows)?;
            w.flush().map_err(|source| CliError::Write { path: path.to_path_buf(), source })?;
            Ok(Outcome::ok(format!("wrote {} rows for {family} to {}\n", rows.len(), path.display())))
        }
        None => {
            let mut buf = Vec::new();
            table::write_sweep(&mut buf, &rows)?;
            Ok(Outcome::ok(String::from_utf8(buf).expect("csv of ASCII and UTF-8 labels")))
        }
    }
}

/// The `i`-th state of a batch: its own ChaCha8 stream under the batch seed,
/// so every state is independent of the batch size and of scheduling.
pub fn batch_state(seed: u64, i: usize) -> tripartite_core::states::PureState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    haar_pure(&mut rng)
}

const SUBTYPE_ORDER: [&str; 6] = ["0-0", "1^1-1", "2-0", "2-1", "2-2", "2-3"];

fn histogram(rows: &[PureClassification], json: bool) -> Result<String, CliError> {
    let mut counts: BTreeMap<&str, usize> = SUBTYPE_ORDER.iter().map(|&s| (s, 0)).collect();
    for c in rows {
        *counts.entry(c.label.code()).or_default() += 1;
    }
    let ambiguous = rows.iter().filter(|c| c.ambiguous).count();
    let n = rows.len();
    if json {
        let map: serde_json::Map<_, _> =
            SUBTYPE_ORDER.iter().map(|&s| (s.to_string(), serde_json::json!(counts[s]))).collect();
        return json_text(&serde_json::json!({ "count": n, "subtypes": map, "ambiguous": ambiguous }));
    }
    let mut s = format!("{n} states\n");
    for code in SUBTYPE_ORDER {
        let k = counts[code];
        s.push_str(&format!("  {code:<6}{k:>8}  {:6.2}%\n", 100.0 * k as f64 / n as f64));
    }
    s.push_str(&format!("  near threshold: {ambiguous}\n"));
    Ok(s)
}

/// Per-state rows go to `out`, or to standard output with the histogram on
/// standard error when no file is given.
pub fn random(count: usize, seed: u64, out: Option<&Path>, tol: f64, json: bool) -> Result<Outcome, CliError> {
    if count == 0 {
        return Err(CliError::EmptyBatch);
    }
    let rows =
        (0..count).into_par_iter().map(|i| classify_pure(&batch_state(seed, i), tol)).collect::<Result<Vec<_>, _>>()?;
    let summary = histogram(&rows, json)?;
    match out {
        Some(path) => {
            let mut w = create(path)?;
            table::write_random(&mut w, &rows)?;
            w.flush().map_err(|source| CliError::Write { path: path.to_path_buf(), source })?;
            Ok(Outcome::ok(summary))
        }
        None => {
            let mut buf = Vec::new();
            table::write_random(&mut buf, &rows)?;
            let stdout = String::from_utf8(buf).expect("csv of ASCII and UTF-8 labels");
            Ok(Outcome { stdout, stderr: summary, exit: EXIT_OK })
        }
    }
}

/// Write `text` to standard output or standard error. A closed pipe is not
/// an error worth reporting.
pub fn emit(text: &str, to_stderr: bool) {
    let _ = if to_stderr { io::stderr().write_all(text.as_bytes()) } else { io::stdout().write_all(text.as_bytes()) };
}
