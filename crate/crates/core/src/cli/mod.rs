//! The `su11` command-line front end.
//!
//! Every command reads a transfer matrix either as `--matrix reA,imA,reB,imB`
//! or from a stack file (`--stack FILE`, see [`stackfile`]). Matrix input is
//! checked against `--tol` and then renormalized onto the group, since
//! decimal input is never exactly unimodular.
//!
//! Exit codes: 0 ok, 2 parse, 3 determinant, 4 evanescent, 5 degenerate,
//! 6 I/O.

pub mod plot;
pub mod report;
pub mod stackfile;

use std::ffi::OsString;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::error::Error;
use crate::iwasawa::Subgroup;
use crate::orbits::{self, DEFAULT_SAMPLES};
use crate::stack::build_matrix_with_tol;
use crate::su11::{DiscPoint, Su11Matrix};

use self::report::{Render, Source};
use self::stackfile::StackFile;

/// Default validation tolerance for matrices typed on the command line.
pub const DEFAULT_INPUT_TOL: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(
    name = "su11",
    version,
    about = "Classify and factor lossless multilayer transfer matrices"
)]
pub struct Cli {
    /// Emit machine-readable JSON instead of the text report.
    #[arg(long, global = true)]
    pub json: bool,

    /// Tolerance on |α|² − |β|² − 1 when accepting an input matrix.
    #[arg(long, global = true, default_value_t = DEFAULT_INPUT_TOL)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Trace class, fixed points and degeneracy.
    Classify(Input),
    /// Iwasawa factors K(φ)A(ξ)N(ν).
    Iwasawa(Input),
    /// Conjugate into canonical K/A/N form.
    Conjugate(Input),
    /// Subgroup orbit through a seed point, as CSV or SVG.
    Orbit(OrbitArgs),
    /// Real SL(2,R) matrix and its ray-optics reading.
    Sl2r(Input),
    /// Reflection and transmission coefficients.
    Coefficients(Input),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Matrix as `reA,imA,reB,imB`.
    #[arg(long, value_name = "RE_A,IM_A,RE_B,IM_B", allow_hyphen_values = true)]
    pub matrix: Option<MatrixArg>,

    /// Stack description file.
    #[arg(long, value_name = "FILE")]
    pub stack: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SubgroupArg {
    K,
    A,
    N,
}

impl From<SubgroupArg> for Subgroup {
    fn from(s: SubgroupArg) -> Self {
        match s {
            SubgroupArg::K => Subgroup::K,
            SubgroupArg::A => Subgroup::A,
            SubgroupArg::N => Subgroup::N,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotFormat {
    Csv,
    Svg,
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    #[arg(value_enum)]
    pub subgroup: SubgroupArg,

    /// Seed point `re,im`.
    #[arg(long, allow_hyphen_values = true)]
    pub seed: Pair,

    /// Parameter range `lo,hi` (defaults: K 0,4π; A −6,6; N −20,20).
    #[arg(long, allow_hyphen_values = true)]
    pub range: Option<Pair>,

    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,

    #[arg(long, short)]
    pub output: PathBuf,

    #[arg(long, value_enum, default_value = "csv")]
    pub format: PlotFormat,
}

fn parse_decimals<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated decimals, got {}", parts.len()));
    }
    let mut out = [0.0; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("`{p}` is not a finite decimal"))?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixArg {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl FromStr for MatrixArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let [ar, ai, br, bi] = parse_decimals::<4>(s)?;
        Ok(MatrixArg {
            alpha: Complex64::new(ar, ai),
            beta: Complex64::new(br, bi),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pair(pub f64, pub f64);

impl FromStr for Pair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let [a, b] = parse_decimals::<2>(s)?;
        Ok(Pair(a, b))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Core(e) => match e {
                Error::DeterminantViolation { .. } => 3,
                Error::EvanescentWave { .. } => 4,
                Error::DegenerateMatrix => 5,
                Error::ZeroTransmission | Error::InvalidRange(_) | Error::DuplicatePoints | Error::InvalidStack(_) => 2,
            },
            CliError::Io { .. } => 6,
        }
    }
}

fn load(input: &Input, tol: f64) -> Result<(Su11Matrix, Source), CliError> {
    if let Some(m) = input.matrix {
        let raw = Su11Matrix::new(m.alpha, m.beta, tol)?;
        return Ok((raw.renormalize(), Source::Matrix));
    }
    let path = input.stack.as_ref().expect("clap enforces one input");
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    let file = StackFile::parse(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let m = build_matrix_with_tol(&file.stack, tol)?;
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok((
        m.renormalize(),
        Source::Stack {
            name,
            layers: file.stack.layers.len(),
        },
    ))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Runs one parsed invocation and returns what goes to stdout.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let tol = cli.tol;
    let json = cli.json;
    match &cli.command {
        Command::Classify(input) => {
            let (m, src) = load(input, tol)?;
            Ok(report::classify(&m, &src).render(json))
        }
        Command::Iwasawa(input) => {
            let (m, src) = load(input, tol)?;
            Ok(report::iwasawa(&m, &src).render(json))
        }
        Command::Conjugate(input) => {
            let (m, src) = load(input, tol)?;
            Ok(report::conjugate(&m, &src)?.render(json))
        }
        Command::Sl2r(input) => {
            let (m, src) = load(input, tol)?;
            Ok(report::sl2r(&m, &src).render(json))
        }
        Command::Coefficients(input) => {
            let (m, src) = load(input, tol)?;
            Ok(report::coefficients(&m, &src).render(json))
        }
        Command::Orbit(args) => {
            let subgroup = Subgroup::from(args.subgroup);
            let seed = DiscPoint::new(args.seed.0, args.seed.1);
            let range = args
                .range
                .map(|p| (p.0, p.1))
                .unwrap_or_else(|| orbits::default_range(subgroup));
            let orbit = orbits::orbit(subgroup, seed, range, args.samples)?;
            let contents = match args.format {
                PlotFormat::Csv => plot::orbit_csv(&orbit),
                PlotFormat::Svg => {
                    plot::orbits_svg(std::slice::from_ref(&orbit), &plot::subgroup_fixed_points(subgroup))
                }
            };
            write_file(&args.output, &contents)?;
            Ok(report::orbit_summary(&orbit, &args.output).render(json))
        }
    }
}

/// Parses `args` (program name first), runs, prints, returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            0
        }
        Err(e) => {
            eprintln!("su11: {e}");
            e.exit_code()
        }
    }
}
