//! Command-line front end.
//!
//! Exit codes: 0 success; 1 invalid arguments, unreadable or malformed input;
//! 2 distance-based indices requested on a disconnected graph (the
//! degree-based reports that were requested are still printed); 3 `verify`
//! found a failing check.
//!
//! The default seed for `generate` comes from `SGIDX_SEED` when `--seed` is
//! not given, and is 0 otherwise.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::generators::{self, RandomGraphSpec, SignPattern};
use crate::graph::SignedGraph;
use crate::io::{parse_sgl, to_json, write_sgl};
use crate::oracle::check_identities;
use crate::{degree_indices, distance, IndexSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_DISCONNECTED: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sgidx",
    version,
    about = "Topological indices of signed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute index families for a .sgl file ("-" reads standard input).
    Compute {
        input: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        indices: Vec<IndexKind>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Print a generated graph as canonical .sgl.
    Generate {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// plus | minus | alternating | random:<p_plus>[:<seed>]
        #[arg(long, default_value = "plus")]
        pattern: String,
        /// Edge probability (random family only).
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, env = "SGIDX_SEED", default_value_t = 0)]
        seed: u64,
        /// Resample until connected (random family only).
        #[arg(long)]
        connected: bool,
    },
    /// Check every identity and inequality; exits nonzero if any fails.
    Verify {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: VerifyFormat,
    },
    /// Rewrite a .sgl file in canonical form.
    Convert { input: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IndexKind {
    Zagreb1,
    Zagreb2,
    Irregularity,
    Schultz,
    Gutman,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyFormat {
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Random,
}

/// Failure carrying the exit code and a one-line diagnostic.
struct Failure(i32, String);

type Outcome = Result<(), Failure>;

fn input_error(e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_INPUT, e.to_string())
}

fn read_input(path: &Path, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| input_error(format!("<stdin>: {e}")))?;
    } else {
        text = fs::read_to_string(path)
            .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn load(path: &Path, stdin: &mut dyn Read) -> Result<SignedGraph, Failure> {
    let text = read_input(path, stdin)?;
    parse_sgl(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write_out(stdout: &mut dyn Write, text: &str) -> Outcome {
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| input_error(format!("write failed: {e}")))
}

fn compute(
    graph: &SignedGraph,
    kinds: &[IndexKind],
    format: OutputFormat,
    stdout: &mut dyn Write,
) -> Outcome {
    let wants = |k: IndexKind| kinds.contains(&k) || kinds.contains(&IndexKind::All);
    let mut set = IndexSet {
        first_zagreb: wants(IndexKind::Zagreb1).then(|| degree_indices::first_zagreb(graph)),
        second_zagreb: wants(IndexKind::Zagreb2).then(|| degree_indices::second_zagreb(graph)),
        irregularity: wants(IndexKind::Irregularity).then(|| degree_indices::irregularity(graph)),
        ..IndexSet::default()
    };

    let mut failure = None;
    if wants(IndexKind::Schultz) || wants(IndexKind::Gutman) {
        match distance::all_pairs_distances(graph) {
            Ok(dist) => {
                set.schultz =
                    wants(IndexKind::Schultz).then(|| distance::schultz_with(graph, &dist));
                set.gutman = wants(IndexKind::Gutman).then(|| distance::gutman_with(graph, &dist));
            }
            Err(e) => failure = Some(Failure(EXIT_DISCONNECTED, e.to_string())),
        }
    }

    if set != IndexSet::default() {
        let text = match format {
            OutputFormat::Json => set.to_json(),
            OutputFormat::Csv => set.to_csv(),
        };
        write_out(stdout, &text)?;
    }
    failure.map_or(Ok(()), Err)
}

fn generate(
    family: Family,
    n: usize,
    pattern: &str,
    p: Option<f64>,
    seed: u64,
    connected: bool,
) -> Result<SignedGraph, Failure> {
    let pattern = SignPattern::parse(pattern, seed).map_err(input_error)?;
    if family != Family::Random && (p.is_some() || connected) {
        return Err(input_error(
            "--p and --connected apply to the random family only",
        ));
    }
    let graph = match family {
        Family::Path => generators::path(n, pattern),
        Family::Cycle => generators::cycle(n, pattern),
        Family::Complete => generators::complete(n, pattern),
        Family::Star => generators::star(n, pattern),
        Family::Random => {
            let edge_probability =
                p.ok_or_else(|| input_error("the random family requires --p"))?;
            generators::random_signed(&RandomGraphSpec {
                n,
                edge_probability,
                pattern,
                seed,
                require_connected: connected,
            })
        }
    };
    graph.map_err(input_error)
}

fn dispatch(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Compute {
            input,
            indices,
            format,
        } => {
            let graph = load(&input, stdin)?;
            compute(&graph, &indices, format, stdout)
        }
        Command::Generate {
            family,
            n,
            pattern,
            p,
            seed,
            connected,
        } => {
            let graph = generate(family, n, &pattern, p, seed, connected)?;
            write_out(stdout, &write_sgl(&graph))
        }
        Command::Verify {
            input,
            format: VerifyFormat::Json,
        } => {
            let graph = load(&input, stdin)?;
            let report = check_identities(&graph);
            write_out(stdout, &to_json(&report))?;
            if report.all_pass {
                Ok(())
            } else {
                let names: Vec<_> = report.failures().map(|c| c.name).collect();
                Err(Failure(
                    EXIT_CHECK_FAILED,
                    format!("failed checks: {}", names.join(", ")),
                ))
            }
        }
        Command::Convert { input } => {
            let graph = load(&input, stdin)?;
            write_out(stdout, &write_sgl(&graph))
        }
    }
}

/// Runs one invocation and returns its exit code. `args` includes the
/// program name.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err(Failure(code, message)) => {
            let _ = writeln!(stderr, "sgidx: {message}");
            code
        }
    }
}
