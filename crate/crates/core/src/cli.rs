//! Command-line front end.
//!
//! ```text
//! centroskew show <r|pi|eta|exchange|fourier|h|shift> <n>
//! centroskew spectrum <circ|scirc> <c1,c2,...> [--vectors]
//! centroskew spectrum <r-even|r-odd> <n> [--vectors]
//! centroskew verify <relation|nilpotent|centro|unitary|all> <a..b>
//!     [--format pretty|json|csv] [--seed N] [--tol X]
//! ```
//!
//! Exit codes: 0 pass, 1 verification failure, 2 usage error.

use clap::{Parser, Subcommand, ValueEnum};

use crate::centro::exchange_dense;
use crate::circulant::{Circulant, EigenPair, SkewCirculant};
use crate::dft::make_fourier_pack;
use crate::error::Error;
use crate::linalg::{Complex, ComplexDense, ComplexVector, Tolerance};
use crate::relation::{eta_minus_etat_coeffs, lower_shift_dense, pi_minus_pit_coeffs, r_dense};
use crate::report::{CommandReport, Metric, OutputFormat, Payload};
use crate::verify::{run_suite, Suite};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_SEED: u64 = 1;
pub const MAX_SHOW_N: usize = 1024;
pub const MAX_VERIFY_N: usize = 64;

#[derive(Debug, Parser)]
#[command(
    name = "centroskew",
    version,
    about = "Structured-matrix constructions and verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Pretty)]
    format: OutputFormat,

    /// Seed for the ChaCha8 generator used by `verify`.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Overrides both parts of the predicate/solver tolerance (default 1e-10).
    #[arg(long, global = true)]
    tol: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a dense matrix.
    Show { kind: ShowKind, n: usize },
    /// Print an analytic spectrum with dense eigen-residuals.
    Spectrum {
        kind: SpectrumKind,
        /// Comma-separated coefficients (circ, scirc) or the size n (r-even, r-odd).
        #[arg(allow_hyphen_values = true)]
        arg: String,
        /// Append eigenvector components to each payload row.
        #[arg(long)]
        vectors: bool,
    },
    /// Run an invariant suite over an inclusive range `a..b` of sizes.
    Verify { suite: Suite, range: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ShowKind {
    R,
    Pi,
    Eta,
    Exchange,
    Fourier,
    H,
    Shift,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpectrumKind {
    Circ,
    Scirc,
    REven,
    ROdd,
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }

    fn report(report: &CommandReport, format: OutputFormat) -> Self {
        Self {
            code: if report.passed() { EXIT_PASS } else { EXIT_FAIL },
            stdout: report.render(format),
            stderr: String::new(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_PASS,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome::usage(text),
            };
        }
    };
    let tol = match cli.tol {
        None => Tolerance::default(),
        Some(x) => match Tolerance::uniform(x) {
            Ok(t) => t,
            Err(_) => return Outcome::usage(format!("invalid --tol {x}: must be finite and >= 0\n")),
        },
    };
    match cli.command {
        Command::Show { kind, n } => show(kind, n, cli.format),
        Command::Spectrum { kind, arg, vectors } => spectrum(kind, &arg, vectors, cli.format),
        Command::Verify { suite, range } => verify(suite, &range, cli.seed, tol, cli.format),
    }
}

fn show(kind: ShowKind, n: usize, format: OutputFormat) -> Outcome {
    let min = match kind {
        ShowKind::R | ShowKind::Pi | ShowKind::Eta => 2,
        _ => 1,
    };
    if n < min || n > MAX_SHOW_N {
        return Outcome::usage(format!("n must be in {min}..{MAX_SHOW_N} for this kind, got {n}\n"));
    }
    let built: Result<ComplexDense, Error> = match kind {
        ShowKind::R => r_dense(n),
        ShowKind::Pi => Circulant::basic(n).map(|c| c.dense()),
        ShowKind::Eta => SkewCirculant::basic(n).map(|s| s.dense()),
        ShowKind::Exchange => exchange_dense(n),
        ShowKind::Fourier => make_fourier_pack(n).map(|p| p.f_star),
        ShowKind::H => make_fourier_pack(n).map(|p| p.h_star),
        ShowKind::Shift => Ok(lower_shift_dense(n)),
    };
    match built {
        Ok(m) => {
            let name = format!("show {}", kind.to_possible_value().expect("named").get_name());
            Outcome::report(
                &CommandReport::new(name, n, vec![], Some(Payload::from_dense(&m))),
                format,
            )
        }
        Err(e) => Outcome::usage(format!("{e}\n")),
    }
}

/// Parses `3`, `-2.5`, `1+2i`, `1-2i`, `2i`, `-i`.
pub fn parse_complex(text: &str) -> Option<Complex> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let finite = |z: Complex| (z.re.is_finite() && z.im.is_finite()).then_some(z);
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().ok().map(|re| Complex::new(re, 0.0)).and_then(finite);
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |t: &str| match t {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => t.parse::<f64>().ok(),
    };
    let z = match split {
        Some(k) => Complex::new(body[..k].parse().ok()?, imag(&body[k..])?),
        None => Complex::new(0.0, imag(body)?),
    };
    finite(z)
}

fn parse_coeffs(text: &str) -> Option<ComplexVector> {
    let values: Option<Vec<Complex>> = text.split(',').map(parse_complex).collect();
    ComplexVector::new(values?).ok()
}

fn spectrum(kind: SpectrumKind, arg: &str, vectors: bool, format: OutputFormat) -> Outcome {
    let (pairs, dense, scale) = match kind {
        SpectrumKind::Circ | SpectrumKind::Scirc => {
            let Some(coeffs) = parse_coeffs(arg) else {
                return Outcome::usage(format!("cannot parse coefficient list {arg:?}\n"));
            };
            if coeffs.len() > MAX_SHOW_N {
                return Outcome::usage(format!("at most {MAX_SHOW_N} coefficients\n"));
            }
            let scale = coeffs.norm();
            if kind == SpectrumKind::Circ {
                let c = Circulant::new(coeffs);
                (c.eigenpairs(), c.dense(), scale)
            } else {
                let s = SkewCirculant::new(coeffs);
                (s.eigenpairs(), s.dense(), scale)
            }
        }
        SpectrumKind::REven | SpectrumKind::ROdd => {
            let n = match arg.parse::<usize>() {
                Ok(n) if (2..=MAX_SHOW_N).contains(&n) => n,
                _ => return Outcome::usage(format!("n must be an integer in 2..{MAX_SHOW_N}, got {arg:?}\n")),
            };
            if kind == SpectrumKind::REven {
                let c = pi_minus_pit_coeffs(n).expect("n >= 2");
                let scale = c.coeffs().norm();
                (c.eigenpairs(), c.dense(), scale)
            } else {
                let s = eta_minus_etat_coeffs(n).expect("n >= 2");
                let scale = s.coeffs().norm();
                (s.eigenpairs(), s.dense(), scale)
            }
        }
    };
    let n = pairs.len();
    let bound = 1e-10 * n as f64 * scale;
    let metrics = pairs
        .iter()
        .enumerate()
        .map(|(k, p)| {
            Metric::new(
                format!("residual[{k}]"),
                p.residual(&dense).unwrap_or(f64::INFINITY),
                bound,
            )
        })
        .collect();
    let name = format!("spectrum {}", kind.to_possible_value().expect("named").get_name());
    let report = CommandReport::new(name, n, metrics, Some(spectrum_payload(&pairs, vectors)));
    Outcome::report(&report, format)
}

/// Row `k` holds eigenvalue `k`, followed by its eigenvector when requested.
fn spectrum_payload(pairs: &[EigenPair], vectors: bool) -> Payload {
    let n = pairs.len();
    let cols = if vectors { n + 1 } else { 1 };
    let m = ComplexDense::from_fn(
        n,
        cols,
        |k, j| if j == 0 { pairs[k].value } else { pairs[k].vector[j - 1] },
    );
    Payload::from_dense(&m)
}

/// Accepts `a..b`, `a..=b` (both inclusive) or a single `n`.
pub fn parse_range(text: &str) -> Option<(usize, usize)> {
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a.parse().ok()?, b.strip_prefix('=').unwrap_or(b).parse().ok()?),
        None => {
            let n = text.parse().ok()?;
            (n, n)
        }
    };
    (lo <= hi).then_some((lo, hi))
}

fn verify(suite: Suite, range: &str, seed: u64, tol: Tolerance, format: OutputFormat) -> Outcome {
    let Some((lo, hi)) = parse_range(range) else {
        return Outcome::usage(format!("cannot parse range {range:?}, expected a..b\n"));
    };
    if lo < 2 || hi > MAX_VERIFY_N {
        return Outcome::usage(format!("range must lie within 2..{MAX_VERIFY_N}, got {lo}..{hi}\n"));
    }
    match run_suite(suite, lo..=hi, seed, tol) {
        Ok(metrics) => {
            let report = CommandReport::new(format!("verify {}", suite.name()), hi, metrics, None).with_seed(seed);
            Outcome::report(&report, format)
        }
        Err(e) => Outcome {
            code: EXIT_FAIL,
            stdout: String::new(),
            stderr: format!("verification aborted: {e}\n"),
        },
    }
}
