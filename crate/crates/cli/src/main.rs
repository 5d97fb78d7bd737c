//! `kdyck`: counts, sequences and cross-route verification for k-Dyck paths.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod output;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand};
use kdyck_core::formulas::Fault;
use kdyck_core::oracle::{count_paths, PathSpec};
use kdyck_core::verify::{self, VerifyConfig};
use kdyck_core::{dm_count, ubar_series, KParameter, SequenceKind};

use output::{write_terms, Format};

/// Largest `--m-max` / `--order` accepted without `--unsafe-no-cap`.
const TERM_CAP: usize = 10_000;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "kdyck", version, about = "Exact enumeration of k-Dyck paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Paths with N up-steps ending at level J.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        /// Require the last step to be an up-step (closed formula); otherwise
        /// any final step is allowed (dynamic programming).
        #[arg(long)]
        last_up: bool,
    },

    /// Print terms 0..=M_MAX of a sequence family.
    Sequence {
        #[arg(long, value_parser = parse_kind)]
        kind: SequenceKind,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        /// Up-steps, for end-level-count.
        #[arg(long)]
        n: Option<usize>,
        /// Last index; defaults to k*n for end-level-count and 10 otherwise.
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// First index written in csv and bfile output.
        #[arg(long, default_value_t = 0)]
        offset: u64,
        #[arg(long)]
        unsafe_no_cap: bool,
    },

    /// Run every cross-route check; exit 1 on the first disagreement.
    Verify {
        #[arg(long, default_value_t = 3)]
        k_max: u32,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, hide = true, value_parser = parse_fault)]
        inject_fault: Option<Fault>,
    },

    /// Coefficients of the kernel root ū through z^ORDER.
    Ubar {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        unsafe_no_cap: bool,
    },
}

fn parse_kind(s: &str) -> Result<SequenceKind, String> {
    s.parse()
}

fn parse_fault(s: &str) -> Result<Fault, String> {
    s.parse()
}

fn usage_error(message: impl std::fmt::Display) -> ! {
    Cli::command()
        .error(ErrorKind::ValueValidation, message)
        .exit()
}

fn check_cap(flag: &str, value: usize, unsafe_no_cap: bool) {
    if value > TERM_CAP && !unsafe_no_cap {
        usage_error(format!(
            "{flag} {value} exceeds the cap of {TERM_CAP}; pass --unsafe-no-cap to override"
        ));
    }
}

fn k_param(k: u32) -> KParameter {
    KParameter::new(k).unwrap_or_else(|e| usage_error(format!("--k: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match run(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if let Err(e) = out.flush() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    code
}

fn run<W: Write>(command: Command, out: &mut W) -> io::Result<ExitCode> {
    match command {
        Command::Count { k, n, j, last_up } => {
            let k = k_param(k);
            let value = if last_up {
                dm_count(k, n, j)
            } else {
                count_paths(PathSpec::new(k, n, j, false))
            };
            writeln!(out, "{value}")?;
        }
        Command::Sequence {
            kind,
            k,
            n,
            m_max,
            format,
            offset,
            unsafe_no_cap,
        } => {
            let k = k_param(k);
            if kind.needs_n() && n.is_none() {
                usage_error(format!("--n is required for --kind {kind}"));
            }
            let m_max = m_max.unwrap_or_else(|| match n {
                Some(n) if kind.needs_n() => k.get() as usize * n,
                _ => 10,
            });
            check_cap("--m-max", m_max, unsafe_no_cap);
            let terms = kind
                .terms(k, m_max, n)
                .unwrap_or_else(|e| usage_error(e));
            write_terms(out, &terms, format, offset)?;
        }
        Command::Verify {
            k_max,
            n_max,
            order,
            inject_fault,
        } => {
            let config = VerifyConfig {
                k_max,
                n_max,
                order,
                fault: inject_fault,
            };
            let report = verify::run(config).unwrap_or_else(|e| usage_error(e));
            writeln!(out, "{report}")?;
            if let Some((suite, cx)) = report.first_counterexample() {
                eprintln!("verification failed in {suite}: {cx}");
                return Ok(ExitCode::from(EXIT_VERIFY_FAILED));
            }
        }
        Command::Ubar {
            k,
            order,
            unsafe_no_cap,
        } => {
            let k = k_param(k);
            check_cap("--order", order, unsafe_no_cap);
            write_terms(out, ubar_series(k, order).coeffs(), Format::Plain, 0)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
