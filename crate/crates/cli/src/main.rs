//! `hkg`: invariants of one-point p-group covers from their ramification
//! data.

mod table;

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hkg_core::catalog::FamilySpec;
use hkg_core::report::{self, AnalyzeOptions, JumpDirection};
use hkg_core::{HkgError, ReportError};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "hkg", version, about = "Exact invariants of one-point p-group covers of the line")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for a document {"p": .., "exponents": [..], "jumps": [..]}.
    Analyze {
        /// Input file; standard input when absent or "-".
        input: Option<PathBuf>,
        /// Treat the input as a JSON array of documents, analyzed in parallel.
        #[arg(long)]
        batch: bool,
        #[command(flatten)]
        opts: ReportArgs,
    },
    /// Full report for a named family, e.g. `catalog hermitian q=5`.
    Catalog {
        /// artin-schreier (p, m), as-tower (p, m), hermitian (q) or gk-shape (q, m1, mr).
        family: String,
        /// Parameters as key=value.
        params: Vec<String>,
        #[command(flatten)]
        opts: ReportArgs,
    },
    /// Convert between lower and upper jumps.
    Jumps {
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long)]
        p: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        exponents: Vec<u32>,
        /// Jumps; upper jumps as exact fractions such as 6/5.
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Polydifferential bases for the requested tensor powers.
    Basis {
        input: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        m: Vec<u64>,
        #[arg(long)]
        warn_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Args)]
struct ReportArgs {
    /// Recheck every semigroup-derived number by brute force.
    #[arg(long)]
    verify: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Tensor powers for the polydifferential blocks.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    m: Vec<u64>,
    /// Downgrade the genus >= 2 and pole-number gates to warnings.
    #[arg(long)]
    warn_only: bool,
    /// Field sizes for the maximal-curve screen; default p, ..., p^{h_0}.
    #[arg(long, value_delimiter = ',')]
    q: Option<Vec<u64>>,
}

impl ReportArgs {
    fn options(&self) -> AnalyzeOptions {
        AnalyzeOptions {
            verify: self.verify,
            warn_only: self.warn_only,
            m_values: self.m.clone(),
            q_values: self.q.clone(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    LowerToUpper,
    UpperToLower,
}

fn exit_code(err: &ReportError) -> u8 {
    match err {
        ReportError::Parse(_) | ReportError::Catalog(_) => 2,
        ReportError::Hkg(HkgError::Malformed(_)) => 2,
        ReportError::Validation(_) => 3,
        ReportError::Hkg(HkgError::NonIntegralLowerJump { .. } | HkgError::NonIncreasingUpperJumps) => 3,
        ReportError::VerificationMismatch { .. } => 4,
        _ => 1,
    }
}

fn error_kind(err: &ReportError) -> &'static str {
    match exit_code(err) {
        2 => "parse",
        3 => "validation",
        4 => "mismatch",
        _ => "internal",
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, ReportError> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = fs::read_to_string(p).map_err(|e| ReportError::Parse(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| ReportError::Parse(e.to_string()))?;
        }
    }
    Ok(text)
}

/// Writes to stdout, ignoring a closed pipe.
fn out(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn emit_report(r: &report::InvariantReport, format: Format) {
    match format {
        Format::Json => out(&format!("{}\n", to_json(r))),
        Format::Table => out(&table::report(r)),
    }
}

fn parse_params(params: &[String]) -> Result<BTreeMap<String, u64>, ReportError> {
    params
        .iter()
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| ReportError::Parse(format!("expected key=value, got {kv:?}")))?;
            let v = v
                .parse::<u64>()
                .map_err(|_| ReportError::Parse(format!("{k}: not a non-negative integer: {v:?}")))?;
            Ok((k.to_string(), v))
        })
        .collect()
}

fn run_batch(text: &str, opts: &ReportArgs) -> Result<u8, ReportError> {
    let docs: Vec<Value> = serde_json::from_str(text).map_err(|e| ReportError::Parse(e.to_string()))?;
    let options = opts.options();
    let results: Vec<Result<report::InvariantReport, ReportError>> = docs
        .par_iter()
        .map(|doc| report::run_analyze(&doc.to_string(), &options))
        .collect();
    let code = results
        .iter()
        .filter_map(|r| r.as_ref().err().map(exit_code))
        .max_by_key(|&c| if c == 1 { 0 } else { c })
        .unwrap_or(0);
    match opts.format {
        Format::Json => {
            let docs: Vec<Value> = results
                .iter()
                .map(|r| match r {
                    Ok(rep) => json!({ "report": rep }),
                    Err(e) => json!({ "error": { "kind": error_kind(e), "message": e.to_string() } }),
                })
                .collect();
            out(&format!("{}\n", to_json(&docs)));
        }
        Format::Table => {
            for (i, r) in results.iter().enumerate() {
                out(&format!("== document {i} ==\n"));
                match r {
                    Ok(rep) => out(&table::report(rep)),
                    Err(e) => out(&format!("error ({}): {e}\n", error_kind(e))),
                }
            }
        }
    }
    Ok(code)
}

fn run(cli: Cli) -> Result<u8, ReportError> {
    match cli.command {
        Command::Analyze { input, batch, opts } => {
            let text = read_input(&input)?;
            if batch {
                return run_batch(&text, &opts);
            }
            emit_report(&report::run_analyze(&text, &opts.options())?, opts.format);
        }
        Command::Catalog { family, params, opts } => {
            let spec = FamilySpec::parse(&family, parse_params(&params)?)?;
            emit_report(&report::run_catalog(&spec, &opts.options())?, opts.format);
        }
        Command::Jumps {
            direction,
            p,
            exponents,
            values,
            format,
        } => {
            let direction = match direction {
                Direction::LowerToUpper => JumpDirection::LowerToUpper,
                Direction::UpperToLower => JumpDirection::UpperToLower,
            };
            let seq = report::run_jumps(direction, p, &exponents, &values)?;
            match format {
                Format::Json => out(&format!("{}\n", to_json(&seq))),
                Format::Table => out(&format!("{}\n", table::jumps(&seq))),
            }
        }
        Command::Basis {
            input,
            m,
            warn_only,
            format,
        } => {
            let data = report::parse_input(&read_input(&input)?)?;
            let blocks = report::run_basis(data, &m, warn_only)?;
            match format {
                Format::Json => out(&format!("{}\n", to_json(&blocks))),
                Format::Table => {
                    let mut text = String::new();
                    table::poly_blocks(&mut text, &blocks);
                    out(&text);
                }
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
