use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use divpoly_cli::output::{render_eval, render_poly, render_report};
use divpoly_cli::{oeis_check, parse_bfile, run_suite, Format, IndexRange, Sequence, Suite, VerificationReport, VerifyOptions};
use divpoly_core::{build_poly, EvalPoint, Family, Natural};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "divpoly", version, about = "Divisor-interval polynomials L_n(q) and P_n(q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the centered coefficients of F_n(q)/q^(n-1).
    Compute {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Evaluate F_n exactly at 1, -1, i, zeta3 or zeta6.
    Eval {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        at: EvalPoint,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite; exits 1 if any identity fails.
    Verify {
        #[arg(long)]
        suite: Suite,
        /// LO..HI, overriding every check's default range.
        #[arg(long)]
        range: Option<IndexRange>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Truncation order for the series suite.
        #[arg(long, default_value_t = divpoly_cli::suites::DEFAULT_SERIES_ORDER)]
        order: usize,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Compare L_n-derived values with an OEIS b-file.
    OeisCheck {
        #[arg(long)]
        seq: Sequence,
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long)]
        range: Option<IndexRange>,
        #[arg(long, default_value = "text")]
        format: Format,
    },
}

fn natural(n: u64) -> Result<Natural, String> {
    Natural::new(n).map_err(|e| format!("--n: {e}"))
}

fn emit(text: &str) -> Result<(), String> {
    io::stdout().write_all(text.as_bytes()).map_err(|e| format!("writing output: {e}"))
}

fn emit_reports(reports: &[VerificationReport], format: Format) -> Result<u8, String> {
    for report in reports {
        emit(&render_report(report, format))?;
    }
    Ok(if reports.iter().all(VerificationReport::passed) { 0 } else { EXIT_COUNTEREXAMPLE })
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Compute { family, n, format } => {
            emit(&render_poly(&build_poly(natural(n)?, family), format))?;
            Ok(0)
        }
        Command::Eval { family, n, at, format } => {
            let poly = build_poly(natural(n)?, family);
            emit(&render_eval(&poly, at, poly.eval(at), format))?;
            Ok(0)
        }
        Command::Verify { suite, range, workers, order, format } => {
            if order == 0 {
                return Err("--order must be at least 1".to_string());
            }
            let options = VerifyOptions { range: range.map(|r| (r.lo, r.hi)), order, workers: workers.max(1) };
            emit_reports(&run_suite(suite, &options), format)
        }
        Command::OeisCheck { seq, bfile, range, format } => {
            let file = File::open(&bfile).map_err(|e| format!("{}: {e}", bfile.display()))?;
            let entries = parse_bfile(BufReader::new(file)).map_err(|e| format!("{}: {e}", bfile.display()))?;
            let report = oeis_check(seq, &entries, range.map(|r| (r.lo, r.hi))).map_err(|e| e.to_string())?;
            emit_reports(&[report], format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("divpoly: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
