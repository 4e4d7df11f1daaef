//! `slgt`: Gelfand-Tsetlin modules of sl_n from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

mod commands;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use slgt_core::{Partition, Schedule};

#[derive(Parser)]
#[command(name = "slgt", version, about = "Gelfand-Tsetlin realization of simple sl_n modules")]
struct Cli {
    /// Output format; `matrixmarket` is only accepted by `matrix` and `export`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout (a directory for `export --format matrixmarket`).
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Matrixmarket,
}

/// A partition as typed, plus the shift that normalized its last part to 0.
#[derive(Clone, Debug)]
pub struct PartitionArg {
    pub partition: Partition,
    pub shift: i64,
}

fn parse_partition(s: &str) -> Result<PartitionArg, String> {
    let partition: Partition = s.parse().map_err(|e: slgt_core::Error| e.to_string())?;
    let shift = s.rsplit(',').next().and_then(|t| t.trim().parse().ok()).unwrap_or(0);
    Ok(PartitionArg { partition, shift })
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of the module.
    Dim {
        #[arg(value_parser = parse_partition)]
        partition: PartitionArg,
    },
    /// Enumerate the basis patterns with their weights.
    Patterns {
        #[arg(value_parser = parse_partition)]
        partition: PartitionArg,
    },
    /// Matrix of one generator: `E k` = E_{k,k+1}, `F k` = F_{k+1,k}, `H i` = H_{i,i},
    /// `cartan k` = H_{k,k} − H_{k+1,k+1}.
    Matrix {
        #[arg(value_parser = parse_partition)]
        partition: PartitionArg,
        generator: String,
        index: usize,
    },
    /// Check the bracket relations and certify simplicity.
    Verify {
        #[arg(value_parser = parse_partition)]
        partition: PartitionArg,
    },
    /// Weight spaces and their multiplicities.
    Weights {
        #[arg(value_parser = parse_partition)]
        partition: PartitionArg,
    },
    /// Raising word taking a pattern to the highest pattern, with λ_β.
    Raise {
        #[arg(value_parser = parse_partition)]
        partition: PartitionArg,
        /// Top-to-bottom pattern text, e.g. "2,1,0;2,0;0".
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value = "canonical")]
        schedule: Schedule,
    },
    /// Monomial family and its rank.
    Monomials {
        #[arg(value_parser = parse_partition)]
        partition: PartitionArg,
        /// canonical, alternate (n = 3) or custom:ROWS, e.g. custom:2,1,2.
        #[arg(long, default_value = "canonical")]
        schedule: Schedule,
        /// Exit 1 when the family is not a basis.
        #[arg(long)]
        strict: bool,
    },
    /// All simple generators at once: one JSON document, or one .mtx file per generator.
    Export {
        #[arg(value_parser = parse_partition)]
        partition: PartitionArg,
    },
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Verification(String),
}

impl From<slgt_core::Error> for Failure {
    fn from(e: slgt_core::Error) -> Self {
        use slgt_core::Error::*;
        match e {
            Internal(_) | Certification(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Rendered output; `ok = false` still prints but exits 1.
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    pub fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let fmt = cli.format;
    let out = cli.output.as_deref();
    match cli.command {
        Command::Dim { partition } => commands::dim(&partition, table_or_json(fmt, "dim")?),
        Command::Patterns { partition } => commands::patterns(&partition, table_or_json(fmt, "patterns")?),
        Command::Matrix { partition, generator, index } => {
            commands::matrix(&partition, &generator, index, fmt.unwrap_or(Format::Table))
        }
        Command::Verify { partition } => commands::verify(&partition, table_or_json(fmt, "verify")?),
        Command::Weights { partition } => commands::weights(&partition, table_or_json(fmt, "weights")?),
        Command::Raise { partition, pattern, schedule } => {
            commands::raise(&partition, &pattern, &schedule, table_or_json(fmt, "raise")?)
        }
        Command::Monomials { partition, schedule, strict } => {
            commands::monomials(&partition, &schedule, strict, table_or_json(fmt, "monomials")?)
        }
        Command::Export { partition } => commands::export(&partition, fmt.unwrap_or(Format::Json), out),
    }
}

fn table_or_json(fmt: Option<Format>, cmd: &str) -> Result<Format, Failure> {
    match fmt.unwrap_or(Format::Table) {
        Format::Matrixmarket => Err(Failure::Usage(format!(
            "--format matrixmarket is only valid for matrix and export, not {cmd}"
        ))),
        f => Ok(f),
    }
}

fn emit(text: &str, path: Option<&std::path::Path>) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // export to a directory writes its own files and reports on stdout
    let dir_export = matches!(cli.command, Command::Export { .. }) && cli.format == Some(Format::Matrixmarket);
    let path = if dir_export { None } else { cli.output.clone() };
    match run(cli) {
        Ok(out) => {
            if let Err(e) = emit(&out.text, path.as_deref()) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}
