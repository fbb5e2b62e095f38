//! `gga`: builds and checks the catalog algebras, enumerates nice sets and
//! runs contraction surveys. Every command prints a JSON report on stdout.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage
//! or input errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use gga_core::reps::RepKind;
use gga_core::{AlgebraKind, ContractionSpec, MaskKind};

#[derive(Parser)]
#[command(name = "gga", version, about = "Generalized group algebras over Z2^3")]
struct Cli {
    /// Add wall-clock time to the report; off by default so reports stay reproducible.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a catalog algebra as JSON.
    Build {
        #[arg(long)]
        algebra: AlgebraKind,
        #[arg(long, default_value = "full")]
        mask: MaskKind,
        /// Destination file; the algebra goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lie axioms, oracle comparison, center, derived algebra and Killing checks.
    Verify {
        /// Expected catalog algebra; inferred from the file's name field with --input.
        #[arg(long, required_unless_present = "input")]
        algebra: Option<AlgebraKind>,
        #[arg(long, default_value = "full")]
        mask: MaskKind,
        /// Load the algebra from a JSON file instead of building it.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Killing form blocks, rank and radical.
    Killing {
        #[arg(long)]
        algebra: AlgebraKind,
        #[arg(long, default_value = "full")]
        mask: MaskKind,
    },
    /// Nice subsets of index pairs.
    NiceSets {
        #[command(subcommand)]
        action: NiceAction,
    },
    /// Contract a catalog algebra by a catalog map.
    Contract {
        #[arg(long)]
        algebra: AlgebraKind,
        /// T<n>, eta:<q>, mu:<q> or beta:<q>,<q>.
        #[arg(long)]
        map: ContractionSpec,
        #[arg(long, default_value = "full")]
        mask: MaskKind,
    },
    /// Fingerprints of contracted algebras.
    Survey {
        /// Comma-separated; all three by default.
        #[arg(long, value_delimiter = ',')]
        algebra: Vec<AlgebraKind>,
        /// Comma-separated; both masks by default.
        #[arg(long, value_delimiter = ',')]
        mask: Vec<MaskKind>,
        /// Repeatable; T1..T24, eta:2, mu:2 and beta:2,3 by default.
        #[arg(long = "map")]
        maps: Vec<ContractionSpec>,
    },
    /// A representation of a catalog algebra.
    Rep {
        #[arg(long)]
        which: RepKind,
        /// Run the homomorphism, irreducibility and intertwiner checks.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Subcommand)]
enum NiceAction {
    /// Scan all 2^21 subsets.
    Enumerate {
        /// Group the nice sets into collineation orbits.
        #[arg(long)]
        classify: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let result = match cli.command {
        Command::Build { algebra, mask, out } => commands::build(echo, algebra, mask, out.as_deref()),
        Command::Verify { algebra, mask, input } => commands::verify(echo, algebra, mask, input.as_deref()),
        Command::Killing { algebra, mask } => commands::killing(echo, algebra, mask),
        Command::NiceSets { action: NiceAction::Enumerate { classify } } => commands::nice_sets(echo, classify),
        Command::Contract { algebra, map, mask } => commands::contract(echo, algebra, &map, mask),
        Command::Survey { algebra, mask, maps } => commands::survey(echo, algebra, mask, maps),
        Command::Rep { which, check } => commands::rep(echo, which, check),
    };
    match result {
        Ok(Some(mut report)) => {
            if cli.timing {
                report.timing_seconds = Some(start.elapsed().as_secs_f64());
            }
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
