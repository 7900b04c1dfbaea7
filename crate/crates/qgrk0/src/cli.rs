//! Command-line surface. Parsing lives here so the exit-code taxonomy can be
//! tested without spawning processes:
//!
//! * 0  success
//! * 1  domain error (invalid degree data, non-positive class)
//! * 2  internal certification failure
//! * 64 usage error (malformed flags, polynomial text, or module JSON)

use crate::degree::{validate_degrees, DegreeData};
use crate::jsonint::JsonInt;
use crate::k0;
use crate::poly::LaurentPoly;
use crate::qgraph;
use crate::realize::{self, ModuleDescription, ModuleDescriptionJson, RealizeError,
    VerificationReport};
use crate::roots::{self, ComplexRoot};
use crate::selftest::{self, SelfTestItem};
use crate::{hilbert, DegreeError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_CERTIFICATION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "qgrk0",
    version,
    about = "Ordered Grothendieck group computations for degree data",
    disable_help_subcommand = true
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Comma-separated generator degrees, e.g. 1,2,3
    #[arg(long, value_name = "CSV")]
    pub degrees: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Degree data summary: defining polynomial, factorization, ordering root
    Analyze {
        #[command(flatten)]
        common: CommonArgs,
        /// Isolation width as a rational a/b (default 1/10^12)
        #[arg(long, value_name = "A/B")]
        width: Option<String>,
    },
    /// Hilbert coefficients a_0..a_n
    Hilbert {
        #[command(flatten)]
        common: CommonArgs,
        /// Last index to compute
        #[arg(short = 'n', default_value_t = 10)]
        n: usize,
    },
    /// Root isolation, factorization, and max-modulus certification
    Roots {
        #[command(flatten)]
        common: CommonArgs,
        /// Isolation width as a rational a/b (default 1/10^12)
        #[arg(long, value_name = "A/B")]
        width: Option<String>,
        /// Certification tolerance (default 1e-9 for degree <= 16, else 1e-6)
        #[arg(long)]
        tol: Option<f64>,
    },
    /// The two graphs: certification report, or DOT with --dot
    Graph {
        #[command(flatten)]
        common: CommonArgs,
        /// Emit DOT for both graphs instead of the report
        #[arg(long)]
        dot: bool,
        /// Perron iteration tolerance
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Canonical form of a Laurent polynomial class
    #[command(name = "k0-reduce")]
    K0Reduce {
        #[command(flatten)]
        common: CommonArgs,
        /// Sparse polynomial, comma-separated exp:coeff pairs
        #[arg(long, value_name = "SPARSE", allow_hyphen_values = true)]
        poly: String,
    },
    /// Exact sign of a Laurent polynomial at the ordering root
    #[command(name = "k0-sign")]
    K0Sign {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_name = "SPARSE", allow_hyphen_values = true)]
        poly: String,
    },
    /// Degree-shift action on a class
    #[command(name = "k0-shift")]
    K0Shift {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_name = "SPARSE", allow_hyphen_values = true)]
        poly: String,
        /// Shift amount
        #[arg(short = 'n', allow_hyphen_values = true, default_value_t = 1)]
        n: i64,
    },
    /// Produce a module description realizing a positive class
    Realize {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_name = "SPARSE", allow_hyphen_values = true)]
        poly: String,
    },
    /// Verify a (polynomial, module description) pair
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_name = "SPARSE", allow_hyphen_values = true)]
        poly: String,
        /// Module description JSON, inline or @path to a file
        #[arg(long, value_name = "JSON")]
        module: String,
    },
    /// Reproduce the built-in example suite
    Selftest {
        /// Output format
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub code: i32,
    pub output: String,
}

impl CliOutcome {
    fn ok(output: String) -> Self {
        Self { code: EXIT_OK, output }
    }

    fn fail(code: i32, message: String) -> Self {
        Self { code, output: message }
    }
}

/// Parse argv (including the program name) and run.
pub fn run_args<I, S>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config),
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            CliOutcome { code, output: err.render().to_string() }
        }
    }
}

/// Dispatch one parsed invocation.
pub fn run(config: &RunConfig) -> CliOutcome {
    match &config.command {
        Command::Analyze { common, width } => with_degrees(common, |dd| {
            let width = parse_width(width.as_deref())?;
            cmd_analyze(dd, &width, common.format)
        }),
        Command::Hilbert { common, n } => with_degrees(common, |dd| {
            Ok(cmd_hilbert(dd, *n, common.format))
        }),
        Command::Roots { common, width, tol } => with_degrees(common, |dd| {
            let width = parse_width(width.as_deref())?;
            cmd_roots(dd, &width, *tol, common.format)
        }),
        Command::Graph { common, dot, tol } => with_degrees(common, |dd| {
            cmd_graph(dd, *dot, *tol, common.format)
        }),
        Command::K0Reduce { common, poly } => with_degrees(common, |dd| {
            let p = parse_poly(poly)?;
            Ok(cmd_k0_reduce(dd, &p, common.format))
        }),
        Command::K0Sign { common, poly } => with_degrees(common, |dd| {
            let p = parse_poly(poly)?;
            Ok(cmd_k0_sign(dd, &p, common.format))
        }),
        Command::K0Shift { common, poly, n } => with_degrees(common, |dd| {
            let p = parse_poly(poly)?;
            Ok(cmd_k0_shift(dd, &p, *n, common.format))
        }),
        Command::Realize { common, poly } => with_degrees(common, |dd| {
            let p = parse_poly(poly)?;
            cmd_realize(dd, &p, common.format)
        }),
        Command::Verify { common, poly, module } => with_degrees(common, |dd| {
            let p = parse_poly(poly)?;
            let m = parse_module(module)?;
            Ok(cmd_verify(dd, &p, &m, common.format))
        }),
        Command::Selftest { format } => cmd_selftest(*format),
    }
}

fn with_degrees(
    common: &CommonArgs,
    body: impl FnOnce(&DegreeData) -> Result<CliOutcome, CliOutcome>,
) -> CliOutcome {
    let raw = match parse_degree_csv(&common.degrees) {
        Ok(v) => v,
        Err(out) => return out,
    };
    match validate_degrees(&raw) {
        Ok(dd) => body(&dd).unwrap_or_else(|e| e),
        Err(err @ (DegreeError::NonPositiveDegree(_)
        | DegreeError::TooFewGenerators(_)
        | DegreeError::PairingBroken { .. }
        | DegreeError::GcdNotOne(_))) => {
            CliOutcome::fail(EXIT_DOMAIN, format!("invalid degree data: {err}\n"))
        }
    }
}

fn parse_degree_csv(text: &str) -> Result<Vec<i64>, CliOutcome> {
    text.split(',')
        .map(|part| {
            part.trim().parse::<i64>().map_err(|_| {
                CliOutcome::fail(
                    EXIT_USAGE,
                    format!("--degrees expects comma-separated integers, got {part:?}\n"),
                )
            })
        })
        .collect()
}

fn parse_poly(text: &str) -> Result<LaurentPoly, CliOutcome> {
    LaurentPoly::parse(text)
        .map_err(|e| CliOutcome::fail(EXIT_USAGE, format!("invalid polynomial text: {e}\n")))
}

fn parse_width(text: Option<&str>) -> Result<BigRational, CliOutcome> {
    let Some(text) = text else {
        return Ok(roots::default_isolation_width());
    };
    let parsed: Result<BigRational, _> = text.trim().parse();
    match parsed {
        Ok(w) if w.is_positive() => Ok(w),
        _ => Err(CliOutcome::fail(
            EXIT_USAGE,
            format!("--width expects a positive rational like 1/1000000000000, got {text:?}\n"),
        )),
    }
}

fn parse_module(text: &str) -> Result<ModuleDescription, CliOutcome> {
    let body = if let Some(path) = text.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| {
            CliOutcome::fail(EXIT_USAGE, format!("cannot read module file {path:?}: {e}\n"))
        })?
    } else {
        text.to_string()
    };
    let json: ModuleDescriptionJson = serde_json::from_str(&body)
        .map_err(|e| CliOutcome::fail(EXIT_USAGE, format!("invalid module JSON: {e}\n")))?;
    ModuleDescription::from_json(&json)
        .map_err(|e| CliOutcome::fail(EXIT_USAGE, format!("invalid module description: {e}\n")))
}

fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report serialization cannot fail");
    s.push('\n');
    s
}

/// Twelve significant digits, the precision everything irrational is printed
/// with.
fn twelve_sig(x: f64) -> String {
    format!("{x:.11e}")
}

/// An irrational value pinned between exact rational bounds.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CertifiedValueJson {
    pub approx: f64,
    pub twelve_sig: String,
    pub low: String,
    pub high: String,
}

fn certified_value(low: &BigRational, high: &BigRational, approx: f64) -> CertifiedValueJson {
    CertifiedValueJson {
        approx,
        twelve_sig: twelve_sig(approx),
        low: low.to_string(),
        high: high.to_string(),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AnalyzeReport {
    pub degrees: Vec<i64>,
    pub generator_count: usize,
    pub pairing_degree: i64,
    pub degree_sum: i64,
    pub f: Vec<JsonInt>,
    pub hilbert_prefix: Vec<JsonInt>,
    pub irreducible: bool,
    pub factors: Vec<Vec<JsonInt>>,
    pub factor_multiplicities: Vec<u32>,
    pub theta_factor_index: usize,
    pub theta: CertifiedValueJson,
    pub theta_inv: CertifiedValueJson,
}

/// Assemble the analyze report; shared by the CLI and the C interface.
pub fn analyze_report(dd: &DegreeData, width: &BigRational) -> Result<AnalyzeReport, roots::RootsError> {
    let factors = roots::factor_f(dd)?;
    let interval = roots::isolate_theta(dd, width);
    let theta = interval.midpoint_f64();
    let inv_low = interval.high().recip();
    let inv_high = interval.low().recip();
    let theta_inv = roots::rational_range_midpoint_f64(&inv_low, &inv_high);
    let f = dd.defining_int_poly();
    Ok(AnalyzeReport {
        degrees: dd.degrees().to_vec(),
        generator_count: dd.generator_count(),
        pairing_degree: dd.pairing_degree(),
        degree_sum: dd.degree_sum(),
        f: crate::jsonint::wrap_vec(&f.coeff_vec()),
        hilbert_prefix: crate::jsonint::wrap_vec(&hilbert::hilbert_coeffs(dd, 10)),
        irreducible: factors.is_irreducible(),
        factors: factors
            .factors()
            .iter()
            .map(|(p, _)| crate::jsonint::wrap_vec(&p.coeff_vec()))
            .collect(),
        factor_multiplicities: factors.factors().iter().map(|(_, m)| *m).collect(),
        theta_factor_index: factors.theta_index(),
        theta: certified_value(interval.low(), interval.high(), theta),
        theta_inv: certified_value(&inv_low, &inv_high, theta_inv),
    })
}

fn cmd_analyze(
    dd: &DegreeData,
    width: &BigRational,
    format: OutputFormat,
) -> Result<CliOutcome, CliOutcome> {
    let report = analyze_report(dd, width)
        .map_err(|e| CliOutcome::fail(EXIT_CERTIFICATION, format!("{e}\n")))?;
    let output = match format {
        OutputFormat::Json => to_json_line(&report),
        OutputFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "degrees {}  g = {}  d = {}  degree sum = {}\n",
                dd, report.generator_count, report.pairing_degree, report.degree_sum
            ));
            out.push_str(&format!("f(t) = {}\n", dd.defining_int_poly()));
            let hilbert_strs: Vec<String> =
                report.hilbert_prefix.iter().map(|c| c.0.to_string()).collect();
            out.push_str(&format!("hilbert: {}\n", hilbert_strs.join(", ")));
            if report.irreducible {
                out.push_str("f is irreducible\n");
            } else {
                for (i, coeffs) in report.factors.iter().enumerate() {
                    let p = crate::poly::IntPoly::new(coeffs.iter().map(|c| c.0.clone()).collect());
                    let mult = report.factor_multiplicities[i];
                    let marker =
                        if i == report.theta_factor_index { "  (contains theta)" } else { "" };
                    if mult == 1 {
                        out.push_str(&format!("factor: {p}{marker}\n"));
                    } else {
                        out.push_str(&format!("factor: ({p})^{mult}{marker}\n"));
                    }
                }
            }
            out.push_str(&format!("theta   = {}\n", report.theta.twelve_sig));
            out.push_str(&format!("1/theta = {}\n", report.theta_inv.twelve_sig));
            out
        }
    };
    Ok(CliOutcome::ok(output))
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct HilbertReport {
    pub degrees: Vec<i64>,
    pub n: usize,
    pub coeffs: Vec<JsonInt>,
}

fn cmd_hilbert(dd: &DegreeData, n: usize, format: OutputFormat) -> CliOutcome {
    let coeffs = hilbert::hilbert_coeffs(dd, n);
    match format {
        OutputFormat::Json => CliOutcome::ok(to_json_line(&HilbertReport {
            degrees: dd.degrees().to_vec(),
            n,
            coeffs: crate::jsonint::wrap_vec(&coeffs),
        })),
        OutputFormat::Text => {
            let strs: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
            CliOutcome::ok(format!("{}\n", strs.join(", ")))
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RootsReport {
    pub roots: Vec<ComplexRoot>,
    pub theta: f64,
    pub theta_inv: f64,
    pub unique_max_modulus: bool,
    pub factors: Vec<Vec<JsonInt>>,
    pub theta_interval: CertifiedValueJson,
    pub tolerance: f64,
}

/// Assemble the roots report; shared by the CLI and the C interface.
pub fn roots_report(
    dd: &DegreeData,
    width: &BigRational,
    tolerance: f64,
) -> Result<RootsReport, roots::RootsError> {
    let factors = roots::factor_f(dd)?;
    let cert = roots::certify_max_modulus(dd, tolerance)?;
    let interval = roots::isolate_theta(dd, width);
    Ok(RootsReport {
        roots: cert.roots.clone(),
        theta: cert.theta,
        theta_inv: cert.theta_inv,
        unique_max_modulus: cert.passed(),
        factors: factors
            .factors()
            .iter()
            .map(|(p, _)| crate::jsonint::wrap_vec(&p.coeff_vec()))
            .collect(),
        theta_interval: certified_value(interval.low(), interval.high(), interval.midpoint_f64()),
        tolerance,
    })
}

fn cmd_roots(
    dd: &DegreeData,
    width: &BigRational,
    tol: Option<f64>,
    format: OutputFormat,
) -> Result<CliOutcome, CliOutcome> {
    let tolerance = tol.unwrap_or_else(|| roots::default_modulus_tolerance(dd.pairing_degree()));
    if !(tolerance > 0.0) {
        return Err(CliOutcome::fail(
            EXIT_USAGE,
            "--tol expects a positive number\n".to_string(),
        ));
    }
    let report = roots_report(dd, width, tolerance)
        .map_err(|e| CliOutcome::fail(EXIT_CERTIFICATION, format!("{e}\n")))?;
    let output = match format {
        OutputFormat::Json => to_json_line(&report),
        OutputFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "theta   = {}  in [{}, {}]\n",
                twelve_sig(report.theta),
                report.theta_interval.low,
                report.theta_interval.high
            ));
            out.push_str(&format!("1/theta = {}\n", twelve_sig(report.theta_inv)));
            let moduli: Vec<String> =
                report.roots.iter().map(|r| format!("{:.6}", r.modulus)).collect();
            out.push_str(&format!("moduli: {}\n", moduli.join(", ")));
            out.push_str(&format!(
                "unique max-modulus root: {} (tolerance {:e})\n",
                report.unique_max_modulus, tolerance
            ));
            for coeffs in &report.factors {
                let p = crate::poly::IntPoly::new(coeffs.iter().map(|c| c.0.clone()).collect());
                out.push_str(&format!("factor: {p}\n"));
            }
            out
        }
    };
    Ok(CliOutcome::ok(output))
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GraphCertificationJson {
    pub strongly_connected: bool,
    pub period: u64,
    pub primitivity_witness: usize,
    pub perron_root: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GraphReport {
    pub degrees: Vec<i64>,
    pub quiver_vertices: usize,
    pub quiver_arrows: usize,
    pub second_vertices: usize,
    pub second_edges: usize,
    pub char_poly: Vec<JsonInt>,
    pub certification: GraphCertificationJson,
}

/// Assemble the graph report; shared by the CLI and the C interface.
pub fn graph_report(dd: &DegreeData, tolerance: f64) -> Result<GraphReport, qgraph::GraphError> {
    let (quiver, second) = qgraph::build_graphs(dd);
    let primitivity = qgraph::certify_primitive(&second)?;
    let perron = qgraph::perron_root(&second, tolerance)?;
    let char_poly = qgraph::char_poly_det(&second);
    let coeffs: Vec<BigInt> = (0..=dd.degree_sum()).map(|e| char_poly.coeff(e)).collect();
    Ok(GraphReport {
        degrees: dd.degrees().to_vec(),
        quiver_vertices: quiver.vertices().len(),
        quiver_arrows: quiver.arrows().len(),
        second_vertices: second.vertex_count(),
        second_edges: second.edge_count(),
        char_poly: crate::jsonint::wrap_vec(&coeffs),
        certification: GraphCertificationJson {
            strongly_connected: primitivity.strongly_connected,
            period: primitivity.period,
            primitivity_witness: primitivity.primitivity_witness,
            perron_root: perron,
        },
    })
}

fn cmd_graph(
    dd: &DegreeData,
    dot: bool,
    tol: Option<f64>,
    format: OutputFormat,
) -> Result<CliOutcome, CliOutcome> {
    if dot {
        let (quiver, second) = qgraph::build_graphs(dd);
        return Ok(CliOutcome::ok(format!("{}{}", quiver.to_dot(), second.to_dot())));
    }
    let tolerance = tol.unwrap_or(1e-12);
    if !(tolerance > 0.0) {
        return Err(CliOutcome::fail(
            EXIT_USAGE,
            "--tol expects a positive number\n".to_string(),
        ));
    }
    let report = graph_report(dd, tolerance)
        .map_err(|e| CliOutcome::fail(EXIT_CERTIFICATION, format!("{e}\n")))?;
    let output = match format {
        OutputFormat::Json => to_json_line(&report),
        OutputFormat::Text => {
            let char_poly = LaurentPoly::from_terms(
                report.char_poly.iter().enumerate().map(|(i, c)| (i as i64, c.0.clone())),
            );
            let cert = &report.certification;
            let mut out = String::new();
            out.push_str(&format!(
                "quiver: {} vertices, {} arrows\n",
                report.quiver_vertices, report.quiver_arrows
            ));
            out.push_str(&format!(
                "second graph: {} vertices, {} edges\n",
                report.second_vertices, report.second_edges
            ));
            out.push_str(&format!("char poly = {}\n", char_poly.pretty()));
            out.push_str(&format!(
                "strongly connected: {}; period {}; positive power at n = {}\n",
                cert.strongly_connected, cert.period, cert.primitivity_witness
            ));
            out.push_str(&format!("perron root = {}\n", twelve_sig(cert.perron_root)));
            out
        }
    };
    Ok(CliOutcome::ok(output))
}

fn cmd_k0_reduce(dd: &DegreeData, p: &LaurentPoly, format: OutputFormat) -> CliOutcome {
    let class = k0::reduce(p, dd);
    match format {
        OutputFormat::Json => CliOutcome::ok(to_json_line(&class.to_json())),
        OutputFormat::Text => CliOutcome::ok(format!(
            "rep = {}\ncone = {}\n",
            class.representative(),
            class.cone_position()
        )),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SignReport {
    pub degrees: Vec<i64>,
    pub poly: String,
    pub sign: String,
}

fn cmd_k0_sign(dd: &DegreeData, p: &LaurentPoly, format: OutputFormat) -> CliOutcome {
    let sign = roots::sign_at_theta(p, dd);
    match format {
        OutputFormat::Json => CliOutcome::ok(to_json_line(&SignReport {
            degrees: dd.degrees().to_vec(),
            poly: p.to_text(),
            sign: sign.to_string(),
        })),
        OutputFormat::Text => CliOutcome::ok(format!("{sign}\n")),
    }
}

fn cmd_k0_shift(dd: &DegreeData, p: &LaurentPoly, n: i64, format: OutputFormat) -> CliOutcome {
    let class = k0::reduce(p, dd).shift(n);
    match format {
        OutputFormat::Json => CliOutcome::ok(to_json_line(&class.to_json())),
        OutputFormat::Text => CliOutcome::ok(format!(
            "rep = {}\ncone = {}\n",
            class.representative(),
            class.cone_position()
        )),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RealizeReport {
    pub degrees: Vec<i64>,
    pub poly: String,
    pub description: ModuleDescriptionJson,
    pub q: String,
    pub verification: VerificationReport,
}

fn describe_blocks(m: &ModuleDescription) -> String {
    if m.is_empty() {
        return "  (empty direct sum)\n".to_string();
    }
    let mut out = String::new();
    for block in m.blocks() {
        match block {
            realize::Block::Free { shift, mult } => {
                out.push_str(&format!("  A(-{shift})^{mult}\n"));
            }
            realize::Block::Cyclic { gen, shift, mult } => {
                out.push_str(&format!("  (A/x_{gen} A)(-{shift})^{mult}\n"));
            }
        }
    }
    out
}

fn cmd_realize(
    dd: &DegreeData,
    p: &LaurentPoly,
    format: OutputFormat,
) -> Result<CliOutcome, CliOutcome> {
    let description = realize::realize(p, dd).map_err(|e| match e {
        RealizeError::NotPositive(_) => CliOutcome::fail(EXIT_DOMAIN, format!("{e}\n")),
        RealizeError::SearchExhausted { .. } | RealizeError::MultiplicityNegative { .. } => {
            CliOutcome::fail(EXIT_CERTIFICATION, format!("{e}\n"))
        }
    })?;
    let q = realize::q_of_module(&description, dd);
    let verification = realize::verify_realization(p, &description, dd);
    let report = RealizeReport {
        degrees: dd.degrees().to_vec(),
        poly: p.to_text(),
        description: description.to_json(),
        q: q.to_text(),
        verification: verification.clone(),
    };
    let output = match format {
        OutputFormat::Json => to_json_line(&report),
        OutputFormat::Text => format!(
            "description:\n{}q(t) = {}\nverification: congruence {}, coefficients {}, sign {}\n",
            describe_blocks(&description),
            q.pretty(),
            verification.reduce_zero,
            verification.hilbert_nonnegative,
            verification.sign_nonnegative
        ),
    };
    Ok(CliOutcome::ok(output))
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct VerifyReport {
    pub degrees: Vec<i64>,
    pub poly: String,
    pub q: String,
    pub verification: VerificationReport,
    pub all_pass: bool,
}

fn cmd_verify(
    dd: &DegreeData,
    p: &LaurentPoly,
    m: &ModuleDescription,
    format: OutputFormat,
) -> CliOutcome {
    let verification = realize::verify_realization(p, m, dd);
    let q = realize::q_of_module(m, dd);
    let report = VerifyReport {
        degrees: dd.degrees().to_vec(),
        poly: p.to_text(),
        q: q.to_text(),
        verification: verification.clone(),
        all_pass: verification.all_pass(),
    };
    match format {
        OutputFormat::Json => CliOutcome::ok(to_json_line(&report)),
        OutputFormat::Text => CliOutcome::ok(format!(
            "q(t) = {}\ncongruence {}, coefficients {}, sign {}\nall checks pass: {}\n",
            q.pretty(),
            verification.reduce_zero,
            verification.hilbert_nonnegative,
            verification.sign_nonnegative,
            report.all_pass
        )),
    }
}

fn cmd_selftest(format: OutputFormat) -> CliOutcome {
    let items = selftest::run_selftest();
    let all = selftest::all_passed(&items);
    let output = match format {
        OutputFormat::Json => {
            let wrapper: Vec<&SelfTestItem> = items.iter().collect();
            to_json_line(&wrapper)
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for i in &items {
                let status = if i.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!("{status}  {}: {}\n", i.name, i.detail));
            }
            out.push_str(&format!(
                "{}\n",
                if all { "all items passed" } else { "SOME ITEMS FAILED" }
            ));
            out
        }
    };
    CliOutcome { code: if all { EXIT_OK } else { EXIT_CERTIFICATION }, output }
}
