use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use twofold::convexity::{certify, construct_witness, gap_profile};
use twofold::generators::{generate, Family, GeneratorSpec};
use twofold::oracle::{
    enumerate_patterns, probe_patterns, sweep_patterns, Check, PatternFilter, ProbeConfig, Sample,
};
use twofold::spectral::{perron_pair, spectral_radius, SpectralConfig};
use twofold::structure::{classify, is_irreducible};
use twofold::{DiagonalParams, NonnegMatrix};

mod exit {
    pub const OK: u8 = 0;
    pub const INPUT: u8 = 1;
    pub const VIOLATION: u8 = 2;
    pub const NOT_STRICT: u8 = 3;
    pub const TWO_FOLD: u8 = 4;
    pub const NO_CONVERGENCE: u8 = 5;
}

#[derive(Parser)]
#[command(
    name = "twofold",
    version,
    about = "Two-fold irreducibility and log-convexity of r(e^D A)"
)]
struct Cli {
    #[command(flatten)]
    spectral: SpectralFlags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpectralFlags {
    /// Relative bracket width at which power iteration stops.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tolerance: f64,
    #[arg(long = "max-iter", global = true, default_value_t = 100_000)]
    max_iter: usize,
    /// Diagonal shift applied during power iteration.
    #[arg(long, global = true, default_value_t = 1.0)]
    shift: f64,
}

impl SpectralFlags {
    fn config(&self) -> twofold::Result<SpectralConfig> {
        let cfg = SpectralConfig {
            tolerance: self.tolerance,
            max_iterations: self.max_iter,
            shift: self.shift,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify the sign pattern of a matrix.
    Analyze {
        /// Matrix file (text or JSON); `-` reads stdin.
        path: PathBuf,
        /// Also report the spectral radius and Perron vector.
        #[arg(long)]
        spectral: bool,
    },
    /// Strict convexity certificate, or an equality witness (exit 3).
    Certify { path: PathBuf },
    /// Equality witness; exit 4 when the pattern is two-fold irreducible.
    Witness { path: PathBuf },
    /// Tabulate φ(t) along the segment from C to D.
    Gap {
        path: PathBuf,
        /// Comma-separated diagonal, e.g. `0,0,0,0`.
        #[arg(long = "C", value_name = "C", allow_hyphen_values = true)]
        c: String,
        #[arg(long = "D", value_name = "D", allow_hyphen_values = true)]
        d: String,
        #[arg(long = "t-grid", default_value = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9")]
        t_grid: String,
    },
    /// Print a matrix from a named family.
    Generate {
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Cyclic class sizes for `cyclic_normal`, comma-separated.
        #[arg(long, value_delimiter = ',')]
        blocks: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check theorems over enumerated or sampled patterns; exit 2 on a violation.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Draw this many seeded patterns instead of enumerating all.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = CheckSet::All)]
        check: CheckSet,
        /// Random (C, D) draws per strict pattern for `--check property1`.
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckSet {
    All,
    Twofold,
    Property1,
}

struct Exit(u8);

fn read_matrix(path: &Path) -> anyhow::Result<NonnegMatrix> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        buf
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    NonnegMatrix::parse_any(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn parse_diagonal(flag: &str, text: &str, n: usize) -> anyhow::Result<DiagonalParams> {
    let d: DiagonalParams = text.parse().with_context(|| format!("parsing --{flag}"))?;
    if d.len() != n {
        bail!(twofold::Error::DimensionMismatch {
            expected: n,
            found: d.len()
        });
    }
    Ok(d)
}

fn parse_grid(text: &str) -> anyhow::Result<Vec<f64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .with_context(|| format!("invalid t value {s:?} in --t-grid"))
        })
        .collect()
}

#[derive(Serialize)]
struct GapRow {
    t: f64,
    phi: f64,
}

#[derive(Serialize)]
struct ProbeSummary<'a> {
    n: usize,
    patterns: usize,
    strict: usize,
    witnesses: usize,
    disagreements: usize,
    first_disagreement: Option<&'a twofold::oracle::ProbeReport>,
}

fn run(cli: Cli) -> anyhow::Result<Exit> {
    let cfg = cli.spectral.config()?;
    match cli.command {
        Command::Analyze { path, spectral } => {
            let m = read_matrix(&path)?;
            let pattern = m.sign_pattern();
            let mut report = serde_json::to_value(classify(&pattern))?;
            if spectral {
                let radius = spectral_radius(&m, &cfg)?;
                let vector = if is_irreducible(&pattern) {
                    Some(perron_pair(&m, &cfg)?.vector)
                } else {
                    None
                };
                let obj = report.as_object_mut().expect("report is an object");
                obj.insert("spectral_radius".into(), serde_json::to_value(radius)?);
                obj.insert("perron_vector".into(), serde_json::to_value(vector)?);
            }
            print_json(&report)?;
            Ok(Exit(exit::OK))
        }
        Command::Certify { path } => {
            let m = read_matrix(&path)?;
            let cert = certify(&m, &cfg)?;
            print_json(&cert)?;
            if cert.is_strict() {
                Ok(Exit(exit::OK))
            } else {
                eprintln!("Property 1 fails: equality holds along the reported segment");
                Ok(Exit(exit::NOT_STRICT))
            }
        }
        Command::Witness { path } => {
            let m = read_matrix(&path)?;
            print_json(&construct_witness(&m, &cfg)?)?;
            Ok(Exit(exit::OK))
        }
        Command::Gap { path, c, d, t_grid } => {
            let m = read_matrix(&path)?;
            let c = parse_diagonal("C", &c, m.n())?;
            let d = parse_diagonal("D", &d, m.n())?;
            let grid = parse_grid(&t_grid)?;
            let rows: Vec<GapRow> = gap_profile(&m, &c, &d, &grid, &cfg)?
                .into_iter()
                .map(|(t, phi)| GapRow { t, phi })
                .collect();
            print_json(&rows)?;
            Ok(Exit(exit::OK))
        }
        Command::Generate {
            family,
            n,
            seed,
            density,
            blocks,
            format,
        } => {
            let m = generate(&GeneratorSpec {
                family,
                n,
                seed,
                density,
                blocks,
            })?;
            match format {
                Format::Text => print!("{}", m.to_text()),
                Format::Json => print_json(&m)?,
            }
            Ok(Exit(exit::OK))
        }
        Command::Enumerate {
            n,
            sample,
            seed,
            check,
            trials,
        } => {
            let sample = sample.map(|count| Sample { count, seed });
            match check {
                CheckSet::All | CheckSet::Twofold => {
                    let checks: &[Check] = match check {
                        CheckSet::All => &Check::ALL,
                        _ => &Check::TWO_FOLD,
                    };
                    let patterns = enumerate_patterns(n, PatternFilter::All, sample)?;
                    let report = sweep_patterns(n, &patterns, checks);
                    print_json(&report)?;
                    if report.is_clean() {
                        Ok(Exit(exit::OK))
                    } else {
                        eprintln!("{} violation(s)", report.violations());
                        Ok(Exit(exit::VIOLATION))
                    }
                }
                CheckSet::Property1 => {
                    let patterns = enumerate_patterns(n, PatternFilter::PositiveRadius, sample)?;
                    let probe = ProbeConfig {
                        trials,
                        seed,
                        spectral: cfg,
                        strict_threshold: 10.0 * cfg.tolerance,
                        ..ProbeConfig::default()
                    };
                    let reports = probe_patterns(&patterns, &probe)?;
                    let strict = reports.iter().filter(|r| r.decision == "holds").count();
                    let disagreements = reports.iter().filter(|r| !r.agrees()).count();
                    print_json(&ProbeSummary {
                        n,
                        patterns: reports.len(),
                        strict,
                        witnesses: reports.len() - strict,
                        disagreements,
                        first_disagreement: reports.iter().find(|r| !r.agrees()),
                    })?;
                    if disagreements == 0 {
                        Ok(Exit(exit::OK))
                    } else {
                        eprintln!("{disagreements} disagreement(s)");
                        Ok(Exit(exit::VIOLATION))
                    }
                }
            }
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<twofold::Error>() {
        Some(twofold::Error::TwoFold) => exit::TWO_FOLD,
        Some(twofold::Error::NoConvergence { .. }) => exit::NO_CONVERGENCE,
        _ => exit::INPUT,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() {
                exit::INPUT
            } else {
                exit::OK
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Exit(code)) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = exit_code(&err);
            if code == exit::TWO_FOLD {
                eprintln!("the pattern is two-fold irreducible; no equality witness exists");
            }
            ExitCode::from(code)
        }
    }
}
