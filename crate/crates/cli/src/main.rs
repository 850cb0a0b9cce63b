use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pfun_core::exact::format_decimal;
use pfun_core::quasipoly::{polynomial_part, principal_part, PrintedForm};
use pfun_core::strategy::{durfee_registry, partition_registry, MULTISUM_CEILING};
use pfun_core::table::{
    figure_points, is_square_minus_one, local_maxima, table_rows, CSV_HEADER, FIGURE_HEADER,
};
use pfun_core::verify::{Profile, Scale, Status, Verifier};
use pfun_core::Error;

const PRECISION_ENV: &str = "PFUN_PRECISION";
const MIN_DIGITS: i64 = 10;
const MAX_DIGITS: i64 = 100_000;

#[derive(Parser)]
#[command(name = "pfun", version, about = "Partition counting by Durfee squares, quasipolynomials and Rademacher series")]
struct Cli {
    /// Working precision in decimal digits for the analytic methods
    /// [env: PFUN_PRECISION; default grows with n]
    #[arg(long, global = true, value_name = "DIGITS",
          value_parser = clap::value_parser!(u32).range(MIN_DIGITS..=MAX_DIGITS))]
    precision: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print p(n).
    P {
        n: u64,
        #[arg(long, value_enum, default_value_t = PMethod::Euler)]
        method: PMethod,
        /// Largest n the multisum method will attempt.
        #[arg(long, default_value_t = MULTISUM_CEILING)]
        ceiling: u64,
    },
    /// Print D(n, k), the number of partitions of n with Durfee square of side k.
    Dnk {
        n: u64,
        k: u64,
        #[arg(long, value_enum, default_value_t = DMethod::Multisum)]
        method: DMethod,
        /// Keep the original sign of the Legendre term in the k = 4 closed form (printed method only).
        #[arg(long)]
        verbatim: bool,
        #[arg(long, default_value_t = MULTISUM_CEILING)]
        ceiling: u64,
    },
    /// Write CSV rows comparing p(n) with p_D(n) and p_R(n).
    Table {
        from: u64,
        to: u64,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Digits after the decimal point.
        #[arg(long, default_value_t = 5)]
        digits: usize,
    },
    /// Write p_R(n) - p_D(n) for 1 <= n <= TO and report its local maxima.
    Figure {
        #[arg(long)]
        to: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        digits: usize,
    },
    /// Print c_{0,1,l}(k) for l = 1..2k, one `num/den` per line.
    Coeffs { k: u64 },
    /// Print the coefficients of the polynomial part of D(n, k), lowest first.
    Tilde { k: u64 },
    /// Run the cross-validation suites.
    Verify {
        #[arg(long)]
        max_n: Option<u64>,
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PMethod {
    Multisum,
    Euler,
    Hrr,
}

#[derive(Clone, Copy, ValueEnum)]
enum DMethod {
    Multisum,
    Oracle,
    Genfun,
    Quasi,
    Printed,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

enum Failure {
    Verification,
    Usage(String),
    Refused(String),
    Io(String),
    Compute(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Self::Verification | Self::Compute(_) => 1,
            Self::Usage(_) => 2,
            Self::Refused(_) => 3,
            Self::Io(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::RefusedScale { .. } => Self::Refused(msg),
            Error::Domain(_) | Error::Unsupported(_) | Error::UnknownMethod(_) => Self::Usage(msg),
            Error::NotInvertible
            | Error::Precision(_)
            | Error::Convergence(_)
            | Error::Interpolation { .. } => Self::Compute(msg),
        }
    }
}

fn io_failure(path: Option<&Path>, e: io::Error) -> Failure {
    match path {
        Some(p) => Failure::Io(format!("{}: {e}", p.display())),
        None => Failure::Io(e.to_string()),
    }
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| io_failure(Some(p), e))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_lines(path: Option<&Path>, lines: impl IntoIterator<Item = String>) -> Result<(), Failure> {
    let mut out = open_output(path)?;
    for line in lines {
        writeln!(out, "{line}").map_err(|e| io_failure(path, e))?;
    }
    out.flush().map_err(|e| io_failure(path, e))
}

fn positive(name: &str, v: u64) -> Result<(), Failure> {
    if v == 0 {
        return Err(Failure::Usage(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// The flag wins over the environment, which wins over the per-n default.
fn resolve_precision(flag: Option<u32>) -> Result<Option<u32>, Failure> {
    if flag.is_some() {
        return Ok(flag);
    }
    let Some(raw) = std::env::var_os(PRECISION_ENV) else {
        return Ok(None);
    };
    let text = raw.to_string_lossy();
    if text.trim().is_empty() {
        return Ok(None);
    }
    match text.trim().parse::<u32>() {
        Ok(d) if (MIN_DIGITS..=MAX_DIGITS).contains(&i64::from(d)) => Ok(Some(d)),
        _ => Err(Failure::Usage(format!(
            "{PRECISION_ENV}={text} is not a digit count in {MIN_DIGITS}..={MAX_DIGITS}"
        ))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let precision = resolve_precision(cli.precision)?;
    match cli.command {
        Command::P { n, method, ceiling } => {
            positive("n", n)?;
            let registry = partition_registry(ceiling, precision);
            let name = match method {
                PMethod::Multisum => "multisum",
                PMethod::Euler => "euler",
                PMethod::Hrr => "hrr",
            };
            let value = registry.get(name)?.count(n)?;
            write_lines(None, [value.to_string()])
        }
        Command::Dnk { n, k, method, verbatim, ceiling } => {
            if verbatim && !matches!(method, DMethod::Printed) {
                return Err(Failure::Usage("--verbatim applies to --method printed only".into()));
            }
            let form = if verbatim { PrintedForm::Verbatim } else { PrintedForm::Corrected };
            let registry = durfee_registry(ceiling, form);
            let name = match method {
                DMethod::Multisum => "multisum",
                DMethod::Oracle => "oracle",
                DMethod::Genfun => "genfun",
                DMethod::Quasi => "quasi",
                DMethod::Printed => "printed",
            };
            let value = registry.get(name)?.durfee(n, k)?;
            write_lines(None, [value.to_string()])
        }
        Command::Table { from, to, out, digits } => {
            let rows = table_rows(from, to, precision)?;
            let lines = std::iter::once(CSV_HEADER.to_string()).chain(rows.iter().map(|r| r.to_csv(digits)));
            write_lines(out.as_deref(), lines)
        }
        Command::Figure { to, out, digits } => {
            let points = figure_points(to, precision)?;
            let lines = std::iter::once(FIGURE_HEADER.to_string())
                .chain(points.iter().map(|(n, v)| format!("{n},{}", format_decimal(v, digits))));
            write_lines(out.as_deref(), lines)?;
            let mut err = io::stderr().lock();
            for n in local_maxima(&points) {
                let note = if is_square_minus_one(n) {
                    format!("  (= {}² - 1)", (n + 1).isqrt())
                } else {
                    String::new()
                };
                writeln!(err, "local maximum at n = {n}{note}").map_err(|e| io_failure(None, e))?;
            }
            Ok(())
        }
        Command::Coeffs { k } => {
            positive("k", k)?;
            let part = principal_part(k);
            let lines = (1..=2 * k as usize).map(|l| {
                let c = part.coefficient_at_q_minus_one(l);
                format!("{}/{}", c.numer(), c.denom())
            });
            write_lines(None, lines)
        }
        Command::Tilde { k } => {
            positive("k", k)?;
            write_lines(None, [polynomial_part(k).to_string()])
        }
        Command::Verify { max_n, profile } => {
            let profile = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
            };
            let durfee = durfee_registry(MULTISUM_CEILING, PrintedForm::Corrected);
            let partition = partition_registry(MULTISUM_CEILING, precision);
            let verifier = Verifier::new(&durfee, &partition, Scale::new(profile, max_n));
            let mut out = io::stdout().lock();
            let mut write_err = None;
            let reports = verifier.run_all(|r| {
                if let Err(e) = writeln!(out, "{r}").and_then(|_| out.flush()) {
                    write_err.get_or_insert(e);
                }
            });
            if let Some(e) = write_err {
                return Err(io_failure(None, e));
            }
            let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
            writeln!(out, "{} suites, {} failed ({profile} profile)", reports.len(), failed.len())
                .map_err(|e| io_failure(None, e))?;
            match failed.first().map(|r| &r.status) {
                Some(Status::Failed(cx)) => {
                    eprintln!("first counterexample: {cx}");
                    Err(Failure::Verification)
                }
                _ => Ok(()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Verification => {}
                Failure::Usage(m) | Failure::Refused(m) | Failure::Io(m) | Failure::Compute(m) => {
                    eprintln!("pfun: {m}");
                }
            }
            ExitCode::from(f.code())
        }
    }
}
