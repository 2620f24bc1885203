//! `collapse-lab`: generate prefixes of classical infinite words and
//! analyze their factor, abelian and binomial complexity, balance,
//! projections and colorings; run the named verification scenarios.
//!
//! Exit codes: 0 success (all-pass), 1 negative verdict, 2 usage or parse
//! error, 3 generator or analysis error. `COLLAPSE_LAB_THREADS` caps
//! internal parallelism.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use collapse_lab_cli::commands::{self, CliError};
use collapse_lab_cli::render::Format;

#[derive(Parser)]
#[command(name = "collapse-lab", version, about, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the length-L prefix of a word as a glyph string
    Generate {
        /// Word-spec document (JSON with a "kind" field)
        #[arg(long)]
        spec: PathBuf,
        /// Number of letters to generate
        #[arg(long)]
        length: usize,
        /// Write to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Tabulate p, rho and binomial class counts per factor length
    Complexity {
        #[arg(long)]
        spec: PathBuf,
        /// Prefix length to analyze (initial probe length with --saturate)
        #[arg(long, default_value_t = 4096)]
        length: usize,
        /// Grow the prefix until factor counts stabilize
        #[arg(long)]
        saturate: bool,
        /// Largest factor length to analyze
        #[arg(long, default_value_t = 30)]
        nmax: usize,
        /// Binomial order to tabulate (repeatable; default 2)
        #[arg(long = "k")]
        orders: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Tabulate sliding-window letter-count spreads
    Balance {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 4096)]
        length: usize,
        /// Largest window length to analyze
        #[arg(long, default_value_t = 30)]
        nmax: usize,
        /// Report each binary projection instead of the word itself
        #[arg(long)]
        projections: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List the order-k equivalence classes of the length-n factors
    Classes {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 4096)]
        length: usize,
        /// Binomial order
        #[arg(long)]
        k: usize,
        /// Factor length to partition
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write a prefix of the word restricted to chosen letters
    Project {
        #[arg(long)]
        spec: PathBuf,
        /// Number of letters of the projected word
        #[arg(long)]
        length: usize,
        /// Letters to keep, e.g. "13"
        #[arg(long)]
        letters: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Replace occurrences of a letter by successive letters of a second word
    Color {
        /// Base word spec
        #[arg(long)]
        spec: PathBuf,
        /// The letter of the base word to recolor
        #[arg(long)]
        letter: String,
        /// Spec of the word supplying the replacement letters
        #[arg(long)]
        colors: PathBuf,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Rebuild a word from its binary projections
    Reconstruct {
        /// Full alphabet of the word, e.g. "abc"
        #[arg(long)]
        alphabet: String,
        /// One file per letter pair, each holding one "PAIR WORD" line
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run named verification scenarios
    Verify {
        /// Scenario to run (repeatable)
        #[arg(long = "scenario")]
        scenarios: Vec<String>,
        /// Run every standard scenario
        #[arg(long)]
        all: bool,
        /// Also run the minutes-long sweep scenarios with --all
        #[arg(long)]
        include_long: bool,
        /// List the registry instead of running
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("COLLAPSE_LAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = value.trim().parse().map_err(|_| {
        CliError::Usage(format!(
            "COLLAPSE_LAB_THREADS must be a positive integer, got \"{value}\""
        ))
    })?;
    if threads == 0 {
        return Err(CliError::Usage(
            "COLLAPSE_LAB_THREADS must be at least 1".to_string(),
        ));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot configure {threads} threads: {e}")))
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Generate {
            spec,
            length,
            output,
        } => commands::generate(&spec, length, output.as_deref()),
        Command::Complexity {
            spec,
            length,
            saturate,
            nmax,
            orders,
            format,
            output,
        } => commands::complexity(
            &spec,
            length,
            saturate,
            nmax,
            &orders,
            format,
            output.as_deref(),
        ),
        Command::Balance {
            spec,
            length,
            nmax,
            projections,
            format,
            output,
        } => commands::balance(&spec, length, nmax, projections, format, output.as_deref()),
        Command::Classes {
            spec,
            length,
            k,
            n,
            format,
            output,
        } => commands::class_partition(&spec, length, k, n, format, output.as_deref()),
        Command::Project {
            spec,
            length,
            letters,
            output,
        } => commands::project(&spec, length, &letters, output.as_deref()),
        Command::Color {
            spec,
            letter,
            colors,
            length,
            output,
        } => commands::color(&spec, &letter, &colors, length, output.as_deref()),
        Command::Reconstruct {
            alphabet,
            files,
            output,
        } => commands::reconstruct(&alphabet, &files, output.as_deref()),
        Command::Verify {
            scenarios,
            all,
            include_long,
            list,
            format,
            output,
        } => commands::verify(&scenarios, all, include_long, list, format, output.as_deref()),
    }
}

fn main() {
    let cli = Cli::parse();
    let outcome = configure_threads().and_then(|()| run(cli.command));
    if let Err(error) = outcome {
        eprintln!("error: {}", error.message());
        std::process::exit(error.code());
    }
}
