//! `cocentral`: classify Hopf algebras in abelian cocentral extensions.

mod cache;
mod commands;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

/// Exit status when arguments or inputs are unusable.
const USAGE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "cocentral", version, about, propagate_version = true)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Emit plain text (default).
    #[arg(long, global = true)]
    pub text: bool,
    /// Write the report to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Wall-clock budget such as 600s or 10m; items not started in time are skipped.
    #[arg(long, global = true, value_name = "DURATION", value_parser = humantime::parse_duration)]
    pub budget: Option<Duration>,
    /// Cache directory for automorphism groups and cohomology.
    #[arg(long, global = true, value_name = "DIR", env = "COCENTRAL_CACHE_DIR")]
    pub cache: Option<PathBuf>,
    /// Largest group order accepted.
    #[arg(long, global = true, value_name = "INT", value_parser = clap::value_parser!(u64).range(1..))]
    pub max_order: Option<u64>,
    /// Seed for sampled property checks; never changes a count.
    #[arg(long, global = true, value_name = "INT", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Count extensions of O(H) by kZ_m with noncommutative universal grading.
    Classify {
        #[arg(long, value_name = "SPEC")]
        group: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, default_value = "both")]
        method: cocentral::classify::Method,
    },
    /// Count graded twists of O(G) by cocentral Z_m-actions.
    Twists {
        #[arg(long, value_name = "SPEC")]
        group: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
    },
    /// Order and cyclicity of the Schur multiplier.
    Schur {
        #[arg(long, value_name = "SPEC")]
        group: String,
    },
    /// Validate a datum file, or list datum classes over a group.
    Datum {
        #[arg(
            long,
            value_name = "FILE",
            conflicts_with = "group",
            required_unless_present = "group"
        )]
        file: Option<PathBuf>,
        #[arg(long, value_name = "SPEC", requires = "m")]
        group: Option<String>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: Option<u64>,
        #[arg(long, value_enum, default_value = "reduced")]
        filter: Filter,
    },
    /// Build the Hopf algebra of a datum file and scan its axioms.
    Hopf {
        #[arg(long, value_name = "FILE")]
        file: PathBuf,
    },
    /// Run a fixed collection of checks.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Include the slower optional items.
        #[arg(long)]
        stretch: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Filter {
    All,
    Noncommutative,
    Reduced,
    Cyclic,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Suite {
    /// Every published count, with table rows.
    Paper,
    /// Sampled relabeling invariance, driven by --seed.
    Properties,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
