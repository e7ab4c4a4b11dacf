//! `stcore` command-line front end.
//!
//! [`run`] parses arguments, dispatches to a subcommand and writes the
//! result to `out` (or `--out FILE`). Exit status is 0 on success, 1 for
//! domain and I/O errors, and 2 for usage errors.

mod cache;
mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use cache::{cache_path, CACHE_VERSION};

/// Schema version stamped on every JSON document.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug)]
pub enum CliError {
    Domain(stcore::Error),
    Io(String),
    Usage(String),
}

impl From<stcore::Error> for CliError {
    fn from(e: stcore::Error) -> Self {
        CliError::Domain(e)
    }
}

#[derive(Parser, Debug)]
#[command(name = "stcore", version, about = "Simultaneous (s,t)-core partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the result to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Directory for cached enumerations.
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Copy)]
struct PairArgs {
    #[arg(long)]
    s: u32,
    #[arg(long)]
    t: u32,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct ShapeArgs {
    /// Comma-separated, weakly decreasing parts.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    partition: Option<Vec<u32>>,
    /// Comma-separated distinct positive elements.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    beta: Option<Vec<u32>>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert between a partition and its beta-set.
    Convert(ShapeArgs),
    /// Hook numbers by row and the full hook multiset.
    Hooks {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Show only this row (1-based).
        #[arg(long)]
        row: Option<usize>,
    },
    /// (s,t)-closure of a beta-set.
    Closure {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_delimiter = ',', num_args = 0.., required = true)]
        beta: Vec<u32>,
    },
    /// Whether a beta-set is (s,t)-closed and (s,t)-core.
    CheckCore {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_delimiter = ',', num_args = 0.., required = true)]
        beta: Vec<u32>,
    },
    /// Minimal generating set of a closed beta-set.
    Generators {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_delimiter = ',', num_args = 0.., required = true)]
        beta: Vec<u32>,
    },
    /// Bead diagram of the maximal core, optionally extended and circled.
    Bead {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 0)]
        extend_rows: u32,
        #[arg(long, default_value_t = 0)]
        extend_cols: u32,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        circle: Vec<u32>,
    },
    /// A delta-set by generator, or the largest one with a given size.
    Delta {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, conflicts_with = "size", required_unless_present = "size")]
        generator: Option<u32>,
        /// Report the largest delta-set with exactly this many elements.
        #[arg(long)]
        size: Option<usize>,
    },
    /// Canonical form of a closed beta-set in a triangular region.
    Canonical {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_delimiter = ',', num_args = 0.., required = true)]
        beta: Vec<u32>,
        /// Region apex; defaults to st - s - t.
        #[arg(long)]
        apex: Option<u32>,
        /// Region depth; defaults to the deepest valid one.
        #[arg(long)]
        depth: Option<u32>,
        /// Print a diagram for every sliding move.
        #[arg(long)]
        trace: bool,
    },
    /// Enumerate all (s,t)-core beta-sets.
    Enumerate {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        by_size: bool,
        #[arg(long)]
        witnesses: bool,
        #[arg(long, default_value_t = stcore::verify::DEFAULT_GUARD)]
        guard: usize,
    },
    /// Exhaustive checks of the containment results.
    Verify {
        #[arg(value_enum)]
        check: VerifyCheck,
        #[command(flatten)]
        pair: PairArgs,
        /// Largest delta generator (gen1, lemmas).
        #[arg(long)]
        gen_bound: Option<u32>,
        /// Largest set size (gen2, lemmas).
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = stcore::verify::DEFAULT_GUARD)]
        guard: usize,
    },
    /// Cores for tuples of pairwise coprime integers.
    Tcore {
        #[arg(value_enum)]
        action: TcoreAction,
        /// Comma-separated entries; `conjecture` needs exactly two.
        #[arg(long, value_delimiter = ',', required = true)]
        ts: Vec<u32>,
        /// Largest set size for `conjecture`.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = stcore::verify::DEFAULT_GUARD)]
        guard: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyCheck {
    Maximal,
    Gen1,
    Gen2,
    Lemmas,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TcoreAction {
    BetaT,
    Enumerate,
    Maximal,
    Conjecture,
}

/// Runs one invocation and returns the process exit status.
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
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let result = commands::dispatch(&cli, err).and_then(|text| match &cli.out {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    });
    match result {
        Ok(()) => 0,
        Err(CliError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(CliError::Usage(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
