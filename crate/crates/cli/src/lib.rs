//! The `cuboid` command line: single-point reports, grid scans, Legendre and
//! conic queries, and witness verification.
//!
//! Exit codes: 0 on success, 1 on a usage error, 2 when a computed claim fails
//! its re-check.

pub mod analysis;
pub mod range;
pub mod render;
pub mod scan;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use cuboid_core::arith::{is_square_free, parse_rational};
use cuboid_core::conic::{self, DEFAULT_SEARCH_LIMIT};
use cuboid_core::verify::{
    eval_cuboid_polynomials, factor_equation_values, positivity_gate, FACTOR_EQUATION_NAMES,
};
use cuboid_core::{BigInt, BigRational, ConicSpec, CuboidWitness, FormulaVariant, ParameterPoint};
use num_traits::Zero;
use serde::Serialize;

use crate::render::rs;
use crate::scan::{OutputFormat, ScanConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Verification(String),
    Io(String),
    /// The reader went away (for example `cuboid scan ... | head`).
    Closed,
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        match e.kind() {
            std::io::ErrorKind::BrokenPipe => CliError::Closed,
            _ => CliError::Io(e.to_string()),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Verification(_) => EXIT_VERIFICATION,
            CliError::Closed => EXIT_OK,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Verification(m) => write!(f, "verification failure: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Closed => write!(f, "output closed"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "cuboid", version, about = "Exact analysis of the cuboid conic/cubic curve pair")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report for one parameter point (JSON).
    Report {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Printed)]
        variant: VariantArg,
        #[arg(long, default_value_t = DEFAULT_SEARCH_LIMIT)]
        search_limit: u64,
    },
    /// Classify every point of a (b, c) grid.
    Scan {
        /// start:stop:step (stop included when reached) or a comma list.
        #[arg(long, allow_hyphen_values = true)]
        b_range: String,
        #[arg(long, allow_hyphen_values = true)]
        c_range: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::JsonLines)]
        format: OutputFormat,
        #[arg(long, value_enum, default_value_t = VariantArg::Printed)]
        variant: VariantArg,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_LIMIT)]
        search_limit: u64,
    },
    /// Solvability and a solution of X^2 - MN Y^2 + 3 Z^2 = 0.
    Legendre {
        #[arg(long, allow_hyphen_values = true)]
        mn: String,
    },
    /// Rational points on w^2 + 3 = Q alpha^2.
    Conic {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Parameter values to map through the chord parametrization.
        #[arg(long = "t", allow_hyphen_values = true)]
        t: Vec<String>,
    },
    /// Check x1,x2,x3,d1,d2,d3,L against the cuboid and factor equations.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        witness: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum VariantArg {
    Printed,
    Corrected,
}

impl From<VariantArg> for FormulaVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Printed => FormulaVariant::Printed,
            VariantArg::Corrected => FormulaVariant::Corrected,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = write!(err, "{}", e.render().ansi());
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(CliError::Closed) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}

fn rational_arg(name: &str, v: &str) -> Result<BigRational, CliError> {
    parse_rational(v).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(json_err)?;
    writeln!(out)?;
    Ok(())
}

pub(crate) fn json_err(e: serde_json::Error) -> CliError {
    match e.io_error_kind() {
        Some(kind) => std::io::Error::from(kind).into(),
        None => CliError::Io(e.to_string()),
    }
}

pub fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Report { b, c, variant, search_limit } => {
            let point = ParameterPoint::new(rational_arg("b", &b)?, rational_arg("c", &c)?);
            let a = analysis::analyze_point(&point, variant.into(), search_limit)
                .map_err(|e| CliError::Verification(e.0))?;
            print_json(out, &render::report(&a))
        }
        Command::Scan { b_range, c_range, format, variant, workers, search_limit } => {
            let bs = range::parse_axis(&b_range)
                .map_err(|e| CliError::Usage(format!("--b-range: {e}")))?;
            let cs = range::parse_axis(&c_range)
                .map_err(|e| CliError::Usage(format!("--c-range: {e}")))?;
            let workers = match workers {
                Some(0) => return Err(CliError::Usage("--workers must be at least 1".into())),
                Some(n) => n,
                None => std::thread::available_parallelism().map_or(1, |n| n.get()),
            };
            let cfg = ScanConfig {
                b_range,
                c_range,
                bs,
                cs,
                format,
                variant: variant.into(),
                workers,
                search_limit,
            };
            let summary = scan::run_scan(&cfg, out)?;
            if format == OutputFormat::Csv {
                writeln!(
                    err,
                    "rows {} singular {} conic-rational {} sextic-root-found {}",
                    summary.rows, summary.singular, summary.conic_rational, summary.sextic_root_found
                )?;
            }
            Ok(())
        }
        Command::Legendre { mn } => legendre(&mn, out),
        Command::Conic { q, t } => conic_query(&q, &t, out),
        Command::Verify { witness } => verify(&witness, out),
    }
}

#[derive(Serialize)]
struct LegendreOut {
    #[serde(rename = "MN")]
    mn: String,
    solvable: bool,
    solution: Option<[String; 3]>,
}

fn legendre(mn: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let k: BigInt = mn
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("--mn: `{mn}` is not an integer")))?;
    if k.is_zero() {
        return Err(CliError::Usage("--mn: must be nonzero".into()));
    }
    let sf = is_square_free(&k).map_err(|e| CliError::Usage(format!("--mn: {e}")))?;
    if !sf {
        return Err(CliError::Usage(format!("--mn: {k} is not square-free")));
    }
    let solvable = conic::legendre_solvable(&k).map_err(|e| CliError::Usage(e.to_string()))?;
    let solution =
        conic::solve_legendre(&k).map_err(|e| CliError::Verification(e.to_string()))?;
    if let Some(s) = &solution {
        if !s.satisfies(&k) {
            return Err(CliError::Verification(format!("{s} misses the equation for {k}")));
        }
    }
    if solvable != solution.is_some() {
        return Err(CliError::Verification(format!(
            "criterion and search disagree for MN = {k}"
        )));
    }
    print_json(
        out,
        &LegendreOut {
            mn: k.to_string(),
            solvable,
            solution: solution.map(|s| [s.x.to_string(), s.y.to_string(), s.z.to_string()]),
        },
    )
}

#[derive(Serialize)]
struct ParamPoint {
    t: String,
    point: Option<[String; 2]>,
    degenerate: bool,
}

#[derive(Serialize)]
struct ConicOut {
    #[serde(rename = "Q")]
    q: String,
    #[serde(rename = "M")]
    big_m: String,
    #[serde(rename = "N")]
    big_n: String,
    m: String,
    n: String,
    #[serde(rename = "MN")]
    mn: String,
    rational: bool,
    point: Option<[String; 2]>,
    parametrized: Vec<ParamPoint>,
}

fn conic_query(q: &str, ts: &[String], out: &mut dyn Write) -> Result<(), CliError> {
    let q = rational_arg("q", q)?;
    let spec = ConicSpec::new(q.clone()).map_err(|e| CliError::Usage(format!("--q: {e}")))?;
    let ts = ts
        .iter()
        .map(|t| rational_arg("t", t))
        .collect::<Result<Vec<_>, _>>()?;
    let verification = |e: cuboid_core::Error| CliError::Verification(e.to_string());
    let form = conic::normalize_conic(&spec).map_err(verification)?;
    let point = conic::find_conic_point(&spec).map_err(verification)?;
    let mut parametrized = Vec::new();
    if let Some(base) = &point {
        if !spec.contains(base) {
            return Err(CliError::Verification(format!("base point is off the conic {q}")));
        }
        for t in ts {
            match conic::parametrize_conic(&spec, base, &t) {
                Ok(p) => {
                    let back = conic::parameter_from_point(base, &p).ok();
                    if !spec.contains(&p) || back.as_ref() != Some(&t) {
                        return Err(CliError::Verification(format!(
                            "parametrized point at t = {t} fails its re-check"
                        )));
                    }
                    parametrized.push(ParamPoint {
                        t: rs(&t),
                        point: Some([rs(&p.w), rs(&p.alpha)]),
                        degenerate: false,
                    });
                }
                Err(_) => parametrized.push(ParamPoint { t: rs(&t), point: None, degenerate: true }),
            }
        }
    }
    print_json(
        out,
        &ConicOut {
            q: rs(&q),
            big_m: form.big_m.to_string(),
            big_n: form.big_n.to_string(),
            m: form.m.to_string(),
            n: form.n.to_string(),
            mn: form.mn().to_string(),
            rational: point.is_some(),
            point: point.map(|p| [rs(&p.w), rs(&p.alpha)]),
            parametrized,
        },
    )
}

pub const WITNESS_FIELDS: [&str; 7] = ["x1", "x2", "x3", "d1", "d2", "d3", "L"];

pub fn parse_witness(s: &str) -> Result<CuboidWitness, String> {
    let tokens: Vec<&str> = s.split(',').collect();
    if tokens.len() != 7 {
        return Err(format!(
            "expected 7 comma-separated values x1,x2,x3,d1,d2,d3,L, got {}",
            tokens.len()
        ));
    }
    let mut vals = Vec::with_capacity(7);
    for (name, tok) in WITNESS_FIELDS.iter().zip(tokens) {
        vals.push(parse_rational(tok).map_err(|e| format!("{name}: {e}"))?);
    }
    let [x1, x2, x3, d1, d2, d3, l]: [BigRational; 7] =
        vals.try_into().expect("exactly seven values");
    Ok(CuboidWitness::new([x1, x2, x3], [d1, d2, d3], l))
}

#[derive(Serialize)]
struct FactorEquation {
    name: &'static str,
    value: String,
    holds: bool,
}

#[derive(Serialize)]
struct WitnessView {
    x1: String,
    x2: String,
    x3: String,
    d1: String,
    d2: String,
    d3: String,
    #[serde(rename = "L")]
    l: String,
}

#[derive(Serialize)]
struct VerifyOut {
    witness: WitnessView,
    p: [String; 4],
    factor_equations: Vec<FactorEquation>,
    classification: &'static str,
}

fn verify(witness: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let w = parse_witness(witness).map_err(|e| CliError::Usage(format!("--witness: {e}")))?;
    let p = eval_cuboid_polynomials(&w);
    let values = factor_equation_values(&w);
    let class = positivity_gate(&w).map_err(|e| CliError::Verification(e.to_string()))?;
    print_json(
        out,
        &VerifyOut {
            witness: WitnessView {
                x1: rs(&w.x[0]),
                x2: rs(&w.x[1]),
                x3: rs(&w.x[2]),
                d1: rs(&w.d[0]),
                d2: rs(&w.d[1]),
                d3: rs(&w.d[2]),
                l: rs(&w.l),
            },
            p: p.each_ref().map(rs),
            factor_equations: FACTOR_EQUATION_NAMES
                .iter()
                .zip(&values)
                .map(|(name, v)| FactorEquation { name, value: rs(v), holds: v.is_zero() })
                .collect(),
            classification: class.as_str(),
        },
    )
}
