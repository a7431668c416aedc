//! `shortcat`: validate, certify, construct and roundtrip structure files.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Which;
use input::{CliError, Limits};

#[derive(Parser)]
#[command(name = "shortcat", version, about = "Finite short multicategories and skew monoidal categories")]
struct Cli {
    /// Worker threads for axiom instances; reports do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Refuse structures with more objects than this.
    #[arg(long, global = true, default_value_t = 8)]
    max_objects: usize,
    /// Refuse structures with a larger multimap set than this.
    #[arg(long, global = true, default_value_t = 64)]
    max_multimaps: usize,
    /// Disable both size guards.
    #[arg(long, global = true)]
    allow_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the validator for the file's kind; exit 1 on any failed instance.
    Validate {
        /// Structure files, or references such as `catalogue:z2`.
        #[arg(required = true)]
        paths: Vec<String>,
        /// Also write the report here (default: $SHORTCAT_REPORT_DIR).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Search classifiers, units, hom objects and write the certificate.
    Certify {
        path: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Leave out the bijection tables.
        #[arg(long)]
        no_witnesses: bool,
    },
    /// Build a structure from a certified one.
    Construct {
        path: String,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Induce, certify, rebuild and compare; exit 0 iff isomorphic.
    Roundtrip {
        path: String,
        /// Skew monoidal partner of a skew closed file.
        #[arg(long)]
        partner: Option<String>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Emit catalogue structures: a reference, `list`, `comm-monoid`,
    /// `mutant:<id>`, or `mutants`/`positives` into a directory.
    Catalogue {
        name: String,
        /// Operation table for `comm-monoid`, rows separated by `;`.
        #[arg(long)]
        table: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let limits = Limits {
        jobs: cli.jobs.max(1),
        max_objects: cli.max_objects,
        max_multimaps: cli.max_multimaps,
        allow_large: cli.allow_large,
    };
    match cli.command {
        Command::Validate { paths, report } => commands::validate(&paths, report.as_deref(), &limits),
        Command::Certify { path, out, no_witnesses } => commands::certify(&path, out.as_deref(), !no_witnesses, &limits),
        Command::Construct { path, which, out } => commands::construct(&path, which, out.as_deref(), &limits),
        Command::Roundtrip { path, partner, report } => {
            commands::roundtrip(&path, partner.as_deref(), report.as_deref(), &limits)
        }
        Command::Catalogue { name, table, out } => commands::catalogue_cmd(&name, table.as_deref(), out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { input::EXIT_USAGE } else { input::EXIT_PASS });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
