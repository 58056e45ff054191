//! Batch command-line front end for the Verma-module engine.
//!
//! Every subcommand emits a JSON report (with an embedded schema version)
//! that is byte-deterministic for identical flags; `--format text` switches
//! to a human-oriented rendering with no determinism contract.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cga_verma::pbw::TermJson;
use cga_verma::quotient::{classify, submodule_slice, Branch, LevelReport};
use cga_verma::shapovalov::{gram, gram_det_roots};
use cga_verma::solver::{q0_coefficient_table, solve_singular};
use cga_verma::verify;
use cga_verma::weight::enumerate_basis;
use cga_verma::{
    check_jacobi, parse_rational, Field, Generator, Monomial, NumericEngine, Rational,
    RationalFunction, SpecPoint, SymbolicEngine, Var, WeightLabel,
};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(
    name = "cga-verma",
    version,
    about = "Exact singular-vector and module classification engine for the exotic conformal Galilei algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; JSON output is byte-deterministic for equal flags.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report to this path instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Print the ordered basis and dimension of the (p, q) weight space.
    Weights {
        #[arg(long)]
        p: u32,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
    /// Apply one generator to a basis monomial C^h K-^k F-^l F+^m.
    Act {
        /// Generator name: H, D, C, J, Theta, P+, P-, K+, K-, F+, F-.
        #[arg(long, value_parser = parse_generator_arg)]
        x: Generator,
        #[arg(long, default_value_t = 0)]
        h: u32,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        l: u32,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Find all singular vectors in a weight space by exact nullspace
    /// computation.
    Singular {
        #[arg(long)]
        p: u32,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Gram matrix of the bilinear form on a weight space, its determinant,
    /// and (while d stays symbolic) the rational roots in d.
    Gram {
        #[arg(long)]
        p: u32,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        /// Keep d symbolic (the default; conflicts with --d).
        #[arg(long, conflicts_with = "d")]
        generic_d: bool,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        theta: Option<Rational>,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        r: Option<Rational>,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        d: Option<Rational>,
    },
    /// Classify the irreducible highest-weight module at a parameter point
    /// and print the per-level dimension table.
    Classify {
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        d: Rational,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        r: Rational,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        theta: Rational,
        #[arg(long, default_value_t = 6)]
        pmax: u32,
        #[arg(long, default_value_t = 3)]
        qmax: u32,
    },
    /// Run the full verification grid; exits nonzero on any violation.
    VerifyTheorems {
        #[arg(long, default_value_t = 6)]
        pmax: u32,
        #[arg(long, default_value_t = 3)]
        qmax: u32,
    },
    /// Exhaustive Jacobi-identity and anti-automorphism scan.
    Jacobi {
        /// Include the full bracket table in the report.
        #[arg(long)]
        emit_table: bool,
    },
    /// Normal-ordered expansion of (2θC - K-F+)^p on the highest-weight
    /// vector.
    ClosedForm {
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        mode: ModeArgs,
    },
}

/// Parameter-point flags shared by the module-level commands: either
/// `--generic` (fully symbolic) or all of `--d --r --theta`.
#[derive(Args)]
struct ModeArgs {
    /// Work symbolically over the rational-function field in (θ, d, r).
    #[arg(long, conflicts_with_all = ["d", "r", "theta"])]
    generic: bool,
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    d: Option<Rational>,
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    r: Option<Rational>,
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    theta: Option<Rational>,
}

enum Mode {
    Generic,
    At(SpecPoint),
}

impl ModeArgs {
    fn resolve(self, default_generic: bool) -> Result<Mode, String> {
        if self.generic {
            return Ok(Mode::Generic);
        }
        match (self.theta, self.d, self.r) {
            (None, None, None) if default_generic => Ok(Mode::Generic),
            (Some(theta), Some(d), Some(r)) => SpecPoint::new(theta, d, r)
                .map(Mode::At)
                .map_err(|e| e.to_string()),
            _ => Err(
                "specify a full parameter point (--d --r --theta) or --generic".to_string(),
            ),
        }
    }
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_generator_arg(s: &str) -> Result<Generator, String> {
    Generator::parse(s).ok_or_else(|| {
        format!("unknown generator `{s}` (expected one of H, D, C, J, Theta, P+, P-, K+, K-, F+, F-)")
    })
}

#[derive(Serialize)]
struct PointJson {
    theta: String,
    d: String,
    r: String,
}

impl PointJson {
    fn from(point: &SpecPoint) -> Self {
        PointJson {
            theta: point.theta.to_string(),
            d: point.d.to_string(),
            r: point.r.to_string(),
        }
    }
}

fn mode_fields(mode: &Mode) -> (&'static str, Option<PointJson>) {
    match mode {
        Mode::Generic => ("generic", None),
        Mode::At(point) => ("specialized", Some(PointJson::from(point))),
    }
}

#[derive(Serialize)]
struct WeightsReport {
    schema: u32,
    p: u32,
    q: i64,
    dimension: usize,
    basis: Vec<Monomial>,
}

#[derive(Serialize)]
struct ActReport {
    schema: u32,
    generator: String,
    input: Monomial,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<PointJson>,
    result: Vec<TermJson>,
}

#[derive(Serialize)]
struct CoefJson {
    l: u32,
    m: u32,
    coef: String,
}

#[derive(Serialize)]
struct CandidateJson {
    coefficients: Vec<CoefJson>,
}

#[derive(Serialize)]
struct SingularReport {
    schema: u32,
    p: u32,
    q: i64,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<PointJson>,
    weight_dimension: usize,
    dimension: usize,
    nullspace: Vec<CandidateJson>,
    matches_closed_form: bool,
}

#[derive(Serialize)]
struct GramReport {
    schema: u32,
    p: u32,
    q: i64,
    specialized: Vec<String>,
    basis: Vec<Monomial>,
    matrix: Vec<Vec<String>>,
    det: String,
    rational_roots_in_d: Option<Vec<String>>,
}

#[derive(Serialize)]
struct ClassifyReport {
    schema: u32,
    d: String,
    r: String,
    theta: String,
    branch: Branch,
    p0: Option<u32>,
    positive_integer_convention: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    levels: Vec<LevelReport>,
}

#[derive(Serialize)]
struct VerifyReport {
    schema: u32,
    p_max: u32,
    q_max: u32,
    criteria: Vec<verify::CriterionReport>,
    pass: bool,
}

#[derive(Serialize)]
struct JacobiJson {
    schema: u32,
    triples_checked: usize,
    violations: Vec<String>,
    omega_pairs_checked: usize,
    omega_violations: Vec<String>,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    bracket_table: Option<serde_json::Value>,
}

#[derive(Serialize)]
struct ClosedFormReport {
    schema: u32,
    p: u32,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<PointJson>,
    vector: Vec<TermJson>,
    matches_coefficient_table: bool,
}

struct Output {
    format: Format,
    path: Option<PathBuf>,
}

impl Output {
    fn emit<T: Serialize>(&self, report: &T, text: String) -> Result<(), String> {
        let body = match self.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(report)
                    .map_err(|e| format!("serialization failed: {e}"))?;
                s.push('\n');
                s
            }
            Format::Text => text,
        };
        match &self.path {
            None => {
                std::io::stdout()
                    .write_all(body.as_bytes())
                    .map_err(|e| format!("write failed: {e}"))?;
            }
            Some(path) => {
                std::fs::write(path, body).map_err(|e| format!("write failed: {e}"))?;
            }
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("CGA_VERMA_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
    let out = Output {
        format: cli.format,
        path: cli.output.clone(),
    };
    match run(cli.command, &out) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command, out: &Output) -> Result<ExitCode, String> {
    match command {
        Command::Weights { p, q } => {
            let basis = enumerate_basis(WeightLabel::new(p, q));
            let text = format!(
                "weight space (p={p}, q={q}): dimension {}\n{}",
                basis.len(),
                basis
                    .iter()
                    .map(|b| format!("  |{},{},{},{}⟩", b.h, b.k, b.l, b.m))
                    .collect::<Vec<_>>()
                    .join("\n")
                    + "\n"
            );
            let report = WeightsReport {
                schema: SCHEMA,
                p,
                q,
                dimension: basis.len(),
                basis,
            };
            out.emit(&report, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Act { x, h, k, l, m, mode } => {
            let mode = mode.resolve(true)?;
            let input = Monomial::new(h, k, l, m);
            let (mode_name, point) = mode_fields(&mode);
            let result = match &mode {
                Mode::Generic => SymbolicEngine::symbolic().act_monomial(x, input).to_json_terms(),
                Mode::At(point) => NumericEngine::at_point(point).act_monomial(x, input).to_json_terms(),
            };
            let text = format!(
                "{x}|{h},{k},{l},{m}⟩ = {}\n",
                if result.is_empty() {
                    "0".to_string()
                } else {
                    result
                        .iter()
                        .map(|t| format!("({})|{},{},{},{}⟩", t.coef, t.h, t.k, t.l, t.m))
                        .collect::<Vec<_>>()
                        .join(" + ")
                }
            );
            let report = ActReport {
                schema: SCHEMA,
                generator: x.name().to_string(),
                input,
                mode: mode_name,
                point,
                result,
            };
            out.emit(&report, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Singular { p, q, mode } => {
            let mode = mode.resolve(false)?;
            let report = singular_report(p, q, &mode)?;
            let text = format!(
                "weight (p={p}, q={q}): {} singular vector(s); matches closed form: {}\n",
                report.dimension, report.matches_closed_form
            );
            out.emit(&report, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gram {
            p,
            q,
            generic_d: _,
            theta,
            r,
            d,
        } => {
            let report = gram_report(p, q, theta, r, d)?;
            let text = format!(
                "Gram matrix at (p={p}, q={q}): det = {}\nroots in d: {:?}\n",
                report.det, report.rational_roots_in_d
            );
            out.emit(&report, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify {
            d,
            r,
            theta,
            pmax,
            qmax,
        } => {
            let point = SpecPoint::new(theta, d, r).map_err(|e| e.to_string())?;
            let report = classify_report(&point, pmax, qmax)?;
            let text = format!(
                "d={}, r={}, theta={}: {:?}{}\n",
                report.d,
                report.r,
                report.theta,
                report.branch,
                match report.p0 {
                    Some(p0) => format!(" (singular level p0 = {p0})"),
                    None => String::new(),
                }
            );
            out.emit(&report, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyTheorems { pmax, qmax } => {
            let criteria = verify::run_all(pmax, qmax);
            let pass = criteria.iter().all(|c| c.pass);
            let text = criteria
                .iter()
                .map(|c| {
                    format!(
                        "{} {} — {}\n",
                        if c.pass { "PASS" } else { "FAIL" },
                        c.name,
                        c.details
                    )
                })
                .collect::<String>();
            let report = VerifyReport {
                schema: SCHEMA,
                p_max: pmax,
                q_max: qmax,
                criteria,
                pass,
            };
            out.emit(&report, text)?;
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Jacobi { emit_table } => {
            let jacobi = check_jacobi();
            let omega_bad = cga_verma::algebra::omega_violations();
            let pass = jacobi.passed() && omega_bad.is_empty();
            let report = JacobiJson {
                schema: SCHEMA,
                triples_checked: jacobi.triples_checked,
                violations: jacobi
                    .violations
                    .iter()
                    .map(|v| format!("{:?}", v.triple))
                    .collect(),
                omega_pairs_checked: 121,
                omega_violations: omega_bad.iter().map(|(x, y)| format!("({x}, {y})")).collect(),
                pass,
                bracket_table: emit_table.then(cga_verma::algebra::bracket_table_json),
            };
            let text = format!(
                "Jacobi: {} triples, {} violations; omega: 121 pairs, {} violations\n",
                report.triples_checked,
                report.violations.len(),
                report.omega_violations.len()
            );
            out.emit(&report, text)?;
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::ClosedForm { p, mode } => {
            let mode = mode.resolve(true)?;
            let report = closed_form_report(p, &mode)?;
            let text = format!(
                "(2θC - K-F+)^{p}|hw⟩: {} terms; matches coefficient table: {}\n",
                report.vector.len(),
                report.matches_coefficient_table
            );
            out.emit(&report, text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn singular_report(p: u32, q: i64, mode: &Mode) -> Result<SingularReport, String> {
    let w = WeightLabel::new(p, q);
    let weight_dimension = enumerate_basis(w).len();
    let (mode_name, point) = mode_fields(mode);
    let (candidates, matches) = match mode {
        Mode::Generic => {
            let engine = SymbolicEngine::symbolic();
            let found = solve_singular(&engine, w);
            let json = found
                .iter()
                .map(|c| CandidateJson {
                    coefficients: c
                        .coefficients
                        .iter()
                        .map(|(&(l, m), coef)| CoefJson {
                            l,
                            m,
                            coef: coef.to_string(),
                        })
                        .collect(),
                })
                .collect::<Vec<_>>();
            (json, false)
        }
        Mode::At(point) => {
            let engine = NumericEngine::at_point(point);
            let found = solve_singular(&engine, w);
            let matches = if found.len() == 1 && q == 0 && p >= 1 {
                let basis = enumerate_basis(w);
                let closed = engine
                    .closed_form_power(p)
                    .map_err(|e| e.to_string())?
                    .normalized_leading(&basis);
                found[0].to_element() == closed
            } else {
                false
            };
            let json = found
                .iter()
                .map(|c| CandidateJson {
                    coefficients: c
                        .coefficients
                        .iter()
                        .map(|(&(l, m), coef)| CoefJson {
                            l,
                            m,
                            coef: coef.to_string(),
                        })
                        .collect(),
                })
                .collect::<Vec<_>>();
            (json, matches)
        }
    };
    Ok(SingularReport {
        schema: SCHEMA,
        p,
        q,
        mode: mode_name,
        point,
        weight_dimension,
        dimension: candidates.len(),
        nullspace: candidates,
        matches_closed_form: matches,
    })
}

fn gram_report(
    p: u32,
    q: i64,
    theta: Option<Rational>,
    r: Option<Rational>,
    d: Option<Rational>,
) -> Result<GramReport, String> {
    if matches!(&theta, Some(t) if *t == Rational::from_integer(0.into())) {
        return Err("theta must be nonzero".to_string());
    }
    let w = WeightLabel::new(p, q);
    let engine = SymbolicEngine::symbolic();
    let g = gram(&engine, w);
    // Substitute whatever was specialized, keeping the rest symbolic.
    let substitutions: Vec<(Var, Rational)> = [
        (Var::Theta, theta),
        (Var::R, r),
        (Var::D, d.clone()),
    ]
    .into_iter()
    .filter_map(|(v, val)| val.map(|val| (v, val)))
    .collect();
    let subst = |f: &RationalFunction| -> Result<RationalFunction, String> {
        let mut out = f.clone();
        for (v, val) in &substitutions {
            out = out.eval_var(*v, val).map_err(|e| e.to_string())?;
        }
        Ok(out)
    };
    let mut matrix = Vec::with_capacity(g.basis.len());
    for row in &g.entries {
        let mut out_row = Vec::with_capacity(row.len());
        for entry in row {
            out_row.push(subst(entry)?);
        }
        matrix.push(out_row);
    }
    let det = cga_verma::linalg::determinant(matrix.clone());
    let roots = if d.is_none() {
        Some(
            gram_det_roots(&det)
                .into_iter()
                .map(|r| r.to_string())
                .collect(),
        )
    } else {
        None
    };
    Ok(GramReport {
        schema: SCHEMA,
        p,
        q,
        specialized: substitutions
            .iter()
            .map(|(v, val)| format!("{}={}", v.symbol(), val))
            .collect(),
        basis: g.basis,
        matrix: matrix
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect())
            .collect(),
        det: det.to_string(),
        rational_roots_in_d: roots,
    })
}

fn classify_report(point: &SpecPoint, pmax: u32, qmax: u32) -> Result<ClassifyReport, String> {
    let verdict = classify(point);
    let engine = NumericEngine::at_point(point);
    let mut levels = Vec::new();
    for p in 1..=pmax {
        for q in -i64::from(qmax)..=i64::from(qmax) {
            let w = WeightLabel::new(p, q);
            let dim = enumerate_basis(w).len();
            let dim_submodule = match verdict.p0 {
                Some(_) => submodule_slice(&engine, w).map_err(|e| e.to_string())?.dim(),
                None => 0,
            };
            levels.push(LevelReport {
                p,
                q,
                dim_weight_space: dim,
                dim_submodule,
                dim_quotient: dim - dim_submodule,
            });
        }
    }
    let two_d_plus_3 = Rational::from_integer(2.into()) * point.d.clone()
        + Rational::from_integer(3.into());
    let note = if two_d_plus_3 == Rational::from_integer(0.into()) {
        Some(
            "2d+3 = 0 is excluded by the positive-integer convention; no proper submodule arises"
                .to_string(),
        )
    } else {
        None
    };
    Ok(ClassifyReport {
        schema: SCHEMA,
        d: verdict.d.to_string(),
        r: verdict.r.to_string(),
        theta: verdict.theta.to_string(),
        branch: verdict.branch,
        p0: verdict.p0,
        positive_integer_convention: verdict.positive_integer_convention,
        note,
        levels,
    })
}

fn closed_form_report(p: u32, mode: &Mode) -> Result<ClosedFormReport, String> {
    let (mode_name, point) = mode_fields(mode);
    let (vector, matches) = match mode {
        Mode::Generic => {
            let engine = SymbolicEngine::symbolic();
            let v = engine.closed_form_power(p).map_err(|e| e.to_string())?;
            let theta = RationalFunction::theta();
            let table = q0_coefficient_table(&theta, p).map_err(|e| e.to_string())?;
            let scale = (RationalFunction::from_integer(2) * theta).pow(p);
            let matches = table.iter().all(|(&(l, m), coef)| {
                v.coeff(&Monomial::new(p - l - m, m - l, l, m)) == coef.clone() * scale.clone()
            }) && v.len() == table.len();
            (v.to_json_terms(), matches)
        }
        Mode::At(point) => {
            let engine = NumericEngine::at_point(point);
            let v = engine.closed_form_power(p).map_err(|e| e.to_string())?;
            let table = q0_coefficient_table(&point.theta, p).map_err(|e| e.to_string())?;
            let mut scale = Rational::from_integer(1.into());
            for _ in 0..p {
                scale *= Rational::from_integer(2.into()) * point.theta.clone();
            }
            let matches = table.iter().all(|(&(l, m), coef)| {
                v.coeff(&Monomial::new(p - l - m, m - l, l, m)) == coef.clone() * scale.clone()
            }) && v.len() == table.len();
            (v.to_json_terms(), matches)
        }
    };
    Ok(ClosedFormReport {
        schema: SCHEMA,
        p,
        mode: mode_name,
        point,
        vector,
        matches_coefficient_table: matches,
    })
}
