//! Argument handling and the analyze / verify / polygon commands.

use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use newton_core::oracle::{
    pairs_from_factorization, validate_with, EvidenceError, SPECIALIZATION_POINTS,
};
use newton_core::{
    analyze, check_kappa, kronecker_factor, specialization_evidence, valuation_profile, BigInt,
    Criterion, DiscreteValuation, FactorizationLimits, FamilyError, FamilyKind, FamilyParams,
    NewtonError, OracleError, PolyError, Polynomial, ValuationError, XUnits,
};
use rayon::prelude::*;
use thiserror::Error;

use crate::parse::{parse_poly, ParseError};
use crate::polygon;
use crate::report::{Analyzed, EvidenceCheck, KappaRow, UnivariateCheck, Verification};

pub const EXIT_OK: i32 = 0;
/// A verdict failed oracle validation or contradicted specialization evidence.
pub const EXIT_VERIFICATION: i32 = 1;
/// Bad flags, unparsable input, or a valuation that does not fit the input.
pub const EXIT_USAGE: i32 = 2;
/// The oracle hit a degree, coefficient or search-budget limit.
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "newton",
    version,
    about = "Newton-index irreducibility criteria"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Valuation profile, slopes, Newton index and every criterion's verdict.
    Analyze(CommonArgs),
    /// Analyze, then check each verdict against brute-force factorization.
    Verify(CommonArgs),
    /// Newton polygon as TSV (default) or SVG.
    Polygon(CommonArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Polynomial in x (and y for bivariate input), e.g. "x^3 - 2".
    pub expr: Option<String>,
    /// Use the p-adic valuation for this prime.
    #[arg(long, value_name = "P", conflicts_with = "degree_valuation")]
    pub prime: Option<BigInt>,
    /// Use v(g) = -deg g on the x-coefficients of a polynomial in y.
    #[arg(long)]
    pub degree_valuation: bool,
    /// Build a stock family instance instead of parsing an expression.
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Family prime (defaults to --prime).
    #[arg(long)]
    pub p: Option<BigInt>,
    /// Coefficient degree for family Z.
    #[arg(long)]
    pub d: Option<usize>,
    /// Family X units a0,a1,a2,an.
    #[arg(long, value_delimiter = ',')]
    pub units: Option<Vec<BigInt>>,
    /// Seed for the random family.
    #[arg(long)]
    pub seed: Option<u64>,
    /// One expression per line; blank lines and lines starting with '#' are skipped.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Emit the Newton polygon instead of the report.
    #[arg(long, value_enum)]
    pub polygon: Option<PolygonFormat>,
    /// Run oracle verification after the analysis.
    #[arg(long)]
    pub verify: bool,
    /// Oracle degree limit.
    #[arg(long, default_value_t = 8)]
    pub max_degree: usize,
    /// Add a generated_at field to JSON output.
    #[arg(long)]
    pub timestamps: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "X", alias = "x")]
    X,
    #[value(name = "Y", alias = "y")]
    Y,
    #[value(name = "Z", alias = "z")]
    Z,
    Eisenstein,
    Random,
}

impl From<FamilyArg> for FamilyKind {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::X => FamilyKind::X,
            FamilyArg::Y => FamilyKind::Y,
            FamilyArg::Z => FamilyKind::Z,
            FamilyArg::Eisenstein => FamilyKind::Eisenstein,
            FamilyArg::Random => FamilyKind::Random,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolygonFormat {
    Svg,
    Tsv,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Newton(#[from] NewtonError),
    #[error(transparent)]
    Valuation(#[from] ValuationError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl From<EvidenceError> for CliError {
    fn from(e: EvidenceError) -> Self {
        match e {
            EvidenceError::Poly(e) => CliError::Poly(e),
            EvidenceError::Oracle(e) => CliError::Oracle(e),
        }
    }
}

fn oracle_exit(e: &OracleError) -> i32 {
    match e {
        OracleError::DegreeLimit { .. }
        | OracleError::CoefficientLimit { .. }
        | OracleError::DivisorBudget { .. } => EXIT_RESOURCE,
        OracleError::KappaPrecondition(_) => EXIT_VERIFICATION,
        OracleError::ZeroPolynomial | OracleError::UnsupportedValuation => EXIT_USAGE,
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Oracle(e) | CliError::Family(FamilyError::Oracle(e)) => oracle_exit(e),
            _ => EXIT_USAGE,
        }
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(e: &CliError) -> Self {
        Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Report,
    Polygon(PolygonFormat),
}

/// Runs a parsed command line.
pub fn run(cli: Cli) -> Outcome {
    let (mut args, force_verify, polygon_default) = match cli.command {
        Command::Analyze(a) => (a, false, None),
        Command::Verify(a) => (a, true, None),
        Command::Polygon(a) => (a, false, Some(PolygonFormat::Tsv)),
    };
    args.verify |= force_verify;
    let mode = match args.polygon.or(polygon_default) {
        Some(f) => Mode::Polygon(f),
        None => Mode::Report,
    };
    match run_args(&args, mode) {
        Ok(o) => o,
        Err(e) => Outcome::error(&e),
    }
}

/// Parses `argv` (including the program name) and runs it. Usage errors
/// become exit code 2 with clap's message.
pub fn run_from<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

fn run_args(args: &CommonArgs, mode: Mode) -> Result<Outcome, CliError> {
    let sources = [
        args.expr.is_some(),
        args.family.is_some(),
        args.input.is_some(),
    ];
    if sources.iter().filter(|&&b| b).count() != 1 {
        return Err(CliError::Usage(
            "give exactly one of an expression, --family or --input".into(),
        ));
    }
    let valuation = select_valuation(args)?;
    let limits = FactorizationLimits::default().with_max_degree(args.max_degree);
    let stamp = args.timestamps.then(now_seconds);

    if let Some(path) = &args.input {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        return Ok(run_batch(&text, &valuation, args, mode, &limits, stamp));
    }

    let poly = match &args.expr {
        Some(text) => parse_poly(text)?,
        None => build_family(args, &valuation, &limits)?,
    };
    let analyzed = process(poly, &valuation, args.verify, &limits)?;
    Ok(render_single(&analyzed, args.format, mode, stamp))
}

fn select_valuation(args: &CommonArgs) -> Result<DiscreteValuation, CliError> {
    if let (Some(a), Some(b)) = (&args.prime, &args.p) {
        if a != b {
            return Err(CliError::Usage(format!("--prime {a} and --p {b} disagree")));
        }
    }
    if args.degree_valuation {
        return Ok(DiscreteValuation::Degree);
    }
    if let Some(p) = args.prime.clone().or_else(|| args.p.clone()) {
        return Ok(DiscreteValuation::padic(p)?);
    }
    if args.family == Some(FamilyArg::Z) {
        return Ok(DiscreteValuation::Degree);
    }
    Err(CliError::Usage(
        "choose a valuation with --prime P or --degree-valuation".into(),
    ))
}

fn build_family(
    args: &CommonArgs,
    valuation: &DiscreteValuation,
    limits: &FactorizationLimits,
) -> Result<Polynomial, CliError> {
    let kind: FamilyKind = args.family.expect("checked by caller").into();
    let mut params = FamilyParams::new(kind);
    params.p = args
        .p
        .clone()
        .or_else(|| valuation.prime().map(|p| p.value().clone()));
    params.n = args.n;
    params.d = args.d;
    params.seed = args.seed;
    if let Some(u) = &args.units {
        let [a0, a1, a2, an] = <[BigInt; 4]>::try_from(u.clone())
            .map_err(|_| CliError::Usage("--units takes exactly four values a0,a1,a2,an".into()))?;
        params.units = Some(XUnits { a0, a1, a2, an });
    }
    Ok(params.build(limits)?)
}

/// Analysis plus optional verification of one polynomial.
pub fn process(
    poly: Polynomial,
    valuation: &DiscreteValuation,
    verify: bool,
    limits: &FactorizationLimits,
) -> Result<Analyzed, CliError> {
    let profile = valuation_profile(&poly, valuation)?;
    let analysis = analyze(&profile);
    let verification = if verify {
        Some(run_verification(&poly, valuation, &analysis, limits)?)
    } else {
        None
    };
    Ok(Analyzed {
        polynomial: poly,
        valuation: valuation.clone(),
        analysis,
        verification,
    })
}

fn run_verification(
    poly: &Polynomial,
    valuation: &DiscreteValuation,
    analysis: &newton_core::AnalysisReport,
    limits: &FactorizationLimits,
) -> Result<Verification, CliError> {
    match (poly, valuation) {
        (Polynomial::Uni(f), DiscreteValuation::PAdic(p)) => {
            let factorization = kronecker_factor(f, limits)?;
            let pairs = pairs_from_factorization(&factorization, p);
            let validations: Vec<_> = analysis
                .reports
                .iter()
                .map(|r| validate_with(&factorization, &pairs, r))
                .collect();
            let t1 = analysis.report(Criterion::Theorem1);
            let mut kappa = Vec::new();
            if let (true, Some(s), Some(d)) = (t1.passed(), t1.s, t1.d_s) {
                if s != 0 {
                    for pair in &pairs {
                        let k = check_kappa(&analysis.profile, pair, s, d)?;
                        kappa.push(KappaRow {
                            pair: pair.clone(),
                            holds: k.holds(),
                            kappa: k.kappa,
                            modulus: k.modulus,
                        });
                    }
                }
            }
            let validated = validations.iter().all(|v| v.valid) && kappa.iter().all(|k| k.holds);
            Ok(Verification::Univariate(UnivariateCheck {
                factorization,
                pairs,
                validations,
                kappa,
                validated,
            }))
        }
        (Polynomial::Bi(z), DiscreteValuation::Degree) => {
            let evidence = specialization_evidence(z, &SPECIALIZATION_POINTS, limits)?;
            let contradictions: Vec<_> = analysis
                .reports
                .iter()
                .map(|r| (r.criterion, evidence.contradictions(&r.verdict)))
                .filter(|(_, c)| !c.is_empty())
                .collect();
            let validated = contradictions.is_empty();
            Ok(Verification::Evidence(EvidenceCheck {
                evidence,
                contradictions,
                validated,
            }))
        }
        _ => Err(CliError::Oracle(OracleError::UnsupportedValuation)),
    }
}

/// Exit status for a processed polynomial: 1 when verification failed.
pub fn exit_code_for(a: &Analyzed) -> i32 {
    match &a.verification {
        Some(v) if !v.validated() => EXIT_VERIFICATION,
        _ => EXIT_OK,
    }
}

fn render(a: &Analyzed, format: Format, mode: Mode, stamp: Option<u64>, compact: bool) -> String {
    match mode {
        Mode::Polygon(PolygonFormat::Tsv) => polygon::to_tsv(&a.analysis.profile),
        Mode::Polygon(PolygonFormat::Svg) => polygon::to_svg(&a.analysis.profile),
        Mode::Report => match format {
            Format::Text => a.to_text(),
            Format::Json if compact => a.to_json(stamp) + "\n",
            Format::Json => a.to_json_pretty(stamp) + "\n",
        },
    }
}

fn render_single(a: &Analyzed, format: Format, mode: Mode, stamp: Option<u64>) -> Outcome {
    Outcome {
        code: exit_code_for(a),
        stdout: render(a, format, mode, stamp, false),
        stderr: String::new(),
    }
}

/// Processes every line in parallel; output keeps input order. JSON output
/// is one object per line. The exit code is the largest over all lines.
fn run_batch(
    text: &str,
    valuation: &DiscreteValuation,
    args: &CommonArgs,
    mode: Mode,
    limits: &FactorizationLimits,
    stamp: Option<u64>,
) -> Outcome {
    let entries: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let results: Vec<(usize, &str, Result<Analyzed, CliError>)> = entries
        .par_iter()
        .map(|&(line, expr)| {
            let r = parse_poly(expr)
                .map_err(CliError::from)
                .and_then(|p| process(p, valuation, args.verify, limits));
            (line, expr, r)
        })
        .collect();

    let mut out = Outcome {
        code: EXIT_OK,
        stdout: String::new(),
        stderr: String::new(),
    };
    for (line, expr, r) in results {
        match r {
            Ok(a) => {
                out.code = out.code.max(exit_code_for(&a));
                if args.format == Format::Text || mode != Mode::Report {
                    out.stdout.push_str(&format!("# line {line}: {expr}\n"));
                }
                out.stdout
                    .push_str(&render(&a, args.format, mode, stamp, true));
                if args.format == Format::Text && mode == Mode::Report {
                    out.stdout.push('\n');
                }
            }
            Err(e) => {
                out.code = out.code.max(e.exit_code());
                out.stderr.push_str(&format!("line {line}: error: {e}\n"));
                if args.format == Format::Json && mode == Mode::Report {
                    let obj =
                        serde_json::json!({ "line": line, "input": expr, "error": e.to_string() });
                    out.stdout.push_str(&format!("{obj}\n"));
                }
            }
        }
    }
    out
}

fn now_seconds() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}
