mod commands;
mod document;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use commands::{Outcome, INPUT_ERROR};

/// Gröbner bases, heights, Hilbert series, Gorenstein tests and biliaison
/// chains for mixed ladder determinantal ideals.
///
/// Reports are JSON on stdout; a one-line summary goes to stderr.
/// Exit codes: 0 success, 1 mathematical check failed, 2 input error,
/// 3 budget exceeded.
#[derive(Parser, Debug)]
#[command(name = "mixladder", version)]
struct Cli {
    /// Characteristic of the coefficient field (overrides the document).
    #[arg(long, global = true)]
    prime: Option<u32>,
    /// Maximum number of S-pair reductions (overrides the document).
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the ladder assumptions.
    Validate { file: PathBuf },
    /// Predicted Gröbner basis; --verify certifies it and compares with Buchberger.
    Gb {
        file: PathBuf,
        #[arg(long)]
        verify: bool,
    },
    /// Independent height computations, which must agree.
    Height {
        file: PathBuf,
        /// Fail unless the height equals this value.
        #[arg(long)]
        expect_height: Option<usize>,
    },
    /// Hilbert series: h-vector, dimension, degree.
    Hilbert { file: PathBuf },
    /// Gorenstein classification; --oracle adds the h-vector symmetry check.
    Gorenstein {
        file: PathBuf,
        #[arg(long)]
        oracle: bool,
    },
    /// Biliaison chain down to a linear ideal; --verify checks every step.
    Biliaison {
        file: PathBuf,
        #[arg(long)]
        verify: bool,
    },
    /// Reisner's criterion on the initial ideal.
    CmCheck { file: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Gb { .. } => "gb",
            Command::Height { .. } => "height",
            Command::Hilbert { .. } => "hilbert",
            Command::Gorenstein { .. } => "gorenstein",
            Command::Biliaison { .. } => "biliaison",
            Command::CmCheck { .. } => "cm-check",
        }
    }

    fn file(&self) -> &PathBuf {
        match self {
            Command::Validate { file }
            | Command::Gb { file, .. }
            | Command::Height { file, .. }
            | Command::Hilbert { file }
            | Command::Gorenstein { file, .. }
            | Command::Biliaison { file, .. }
            | Command::CmCheck { file } => file,
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let name = cli.command.name();
    let loaded = match document::load(cli.command.file(), cli.prime, cli.budget) {
        Ok(l) => l,
        Err(msg) => {
            return Outcome { code: INPUT_ERROR, report: json!({ "command": name, "status": "input_error", "error": msg }), summary: msg }
        }
    };
    let (ladder, s) = (&loaded.ladder, &loaded.settings);
    if let Command::Validate { .. } = cli.command {
        return commands::validate(ladder, s);
    }
    let check = ladder.validate();
    if !check.is_ok() {
        let mut out = commands::validate(ladder, s);
        out.code = INPUT_ERROR;
        out.report["command"] = json!(name);
        out.report["status"] = json!("input_error");
        return out;
    }
    let result = match &cli.command {
        Command::Validate { .. } => unreachable!(),
        Command::Gb { verify, .. } => commands::gb(ladder, s, *verify),
        Command::Height { expect_height, .. } => commands::height(ladder, s, *expect_height),
        Command::Hilbert { .. } => commands::hilbert(ladder, s),
        Command::Gorenstein { oracle, .. } => commands::gorenstein(ladder, s, *oracle),
        Command::Biliaison { verify, .. } => commands::biliaison(ladder, s, *verify),
        Command::CmCheck { .. } => commands::cm_check(ladder, s),
    };
    result.unwrap_or_else(|e| Outcome::from_error(name, &e))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(&cli);
    println!("{}", serde_json::to_string_pretty(&out.report).expect("report serializes"));
    eprintln!("mixladder {}: {}", cli.command.name(), out.summary);
    ExitCode::from(out.code)
}
