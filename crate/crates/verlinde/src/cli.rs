//! The `verlinde` command line. Results go to stdout as JSON, progress and
//! diagnostics to stderr. Exit codes: 0 success, 1 verification failure,
//! 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use verlinde_core::algebra::gcd_degree;
use verlinde_core::family::{is_generic_type, predict_by_gcd, sample_line, verlinde_pencil, zero_count};
use verlinde_core::jumping::reconcile;
use verlinde_core::{HomogeneousPolynomial, LineInSystem, SampleMode, VerlindeContext};

use crate::error::InputError;
use crate::format::{polynomial_from_json, ReportJson};
use crate::inline::parse_polynomial;
use crate::suites::{run_suite, thread_pool, Suite, SuiteResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "verlinde", version, about = "Splitting types of Verlinde bundles on lines of hypersurfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Splitting type of V_k restricted to the line spanned by f1, f2 in |O(d)|.
    Split(SplitArgs),
    /// Class of the jumping-line locus of V_{d+1}, computed two ways.
    JumpingClass(JumpingArgs),
    /// Run the seeded verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct SplitArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub k: u32,
    /// Inline form like `x0*x1 - 3/2*x2^2`, a JSON object, or `@path` to a JSON file.
    #[arg(long, conflicts_with = "sample")]
    pub f1: Option<String>,
    #[arg(long, conflicts_with = "sample")]
    pub f2: Option<String>,
    /// `random` or `jumping:D` for a planted common factor of degree D.
    #[arg(long)]
    pub sample: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random restrictions used to estimate the gcd degree.
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
}

#[derive(Debug, Args)]
pub struct JumpingArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: u32,
    /// Random points for the Jacobian-rank dimension estimate.
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// algebra, pencil, criteria, schubert, jumping or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Serialize)]
pub struct SplitOutput {
    pub n: usize,
    pub d: u32,
    pub k: u32,
    pub f1: String,
    pub f2: String,
    pub w: usize,
    pub u: usize,
    pub rank: usize,
    pub degree: usize,
    #[serde(rename = "type")]
    pub splitting_type: Vec<u32>,
    pub p: usize,
    /// `None` when the degree exceeds the rank.
    pub generic: Option<bool>,
    pub generic_type: Option<Vec<u32>>,
    pub dominates_generic: Option<bool>,
    pub gcd_degree: u32,
    pub gcd_predicts_jump: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct VerifyOutput {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<verlinde_core::Error> for Failure {
    fn from(e: verlinde_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Split(a) => split(&a, out),
        Command::JumpingClass(a) => jumping_class(&a, out),
        Command::Verify(a) => verify(&a, out, err),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Verification) => EXIT_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn emit(out: &mut impl Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string(value).expect("plain data serializes");
    writeln!(out, "{text}").map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
}

/// Reads a form given inline, as a JSON object, or as `@path` to a JSON file.
pub fn read_form(arg: &str, n: usize, d: u32) -> Result<HomogeneousPolynomial, InputError> {
    let text = match arg.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|source| InputError::Io { path: path.to_string(), source })?
        }
        None => arg.to_string(),
    };
    let f = if text.trim_start().starts_with('{') {
        polynomial_from_json(&text)?
    } else {
        parse_polynomial(&text, n, Some(d))?
    };
    if f.n() != n || f.degree() != d {
        return Err(InputError::Usage(format!(
            "form {arg:?} has degree {} in {} variables, expected degree {d} in {}",
            f.degree(),
            f.num_vars(),
            n + 1
        )));
    }
    Ok(f)
}

pub fn parse_sample(text: &str) -> Result<SampleMode, InputError> {
    match text {
        "random" => Ok(SampleMode::Random),
        _ => text
            .strip_prefix("jumping:")
            .and_then(|e| e.parse().ok())
            .map(SampleMode::Jumping)
            .ok_or_else(|| InputError::Usage(format!("--sample expects `random` or `jumping:D`, got {text:?}"))),
    }
}

fn split(a: &SplitArgs, out: &mut impl Write) -> Result<(), Failure> {
    let ctx = VerlindeContext::new(a.n, a.d, a.k)?;
    let line = match (&a.sample, &a.f1, &a.f2) {
        (Some(mode), _, _) => sample_line(&ctx, parse_sample(mode)?, a.seed)?,
        (None, Some(f1), Some(f2)) => LineInSystem::new(read_form(f1, a.n, a.d)?, read_form(f2, a.n, a.d)?)?,
        _ => return Err(Failure::Usage("give both --f1 and --f2, or --sample".into())),
    };
    let ty = verlinde_pencil(&ctx, &line)?.splitting_type()?;
    let p = zero_count(&ctx, &line)?;
    let (generic, generic_type, dominates_generic, gcd_predicts_jump, gcd) = if ctx.has_generic_type() {
        let generic_type = ctx.generic_type()?;
        let prediction = predict_by_gcd(&ctx, &line, a.trials, a.seed)?;
        (
            Some(is_generic_type(&ctx, &line)?),
            Some(generic_type.entries().to_vec()),
            Some(ty.dominates(&generic_type)?),
            Some(prediction.jumping),
            prediction.gcd_degree,
        )
    } else {
        (None, None, None, None, gcd_degree(line.f1(), line.f2(), a.trials, a.seed)?)
    };
    emit(
        out,
        &SplitOutput {
            n: a.n,
            d: a.d,
            k: a.k,
            f1: line.f1().to_string(),
            f2: line.f2().to_string(),
            w: ctx.w(),
            u: ctx.u(),
            rank: ctx.rank(),
            degree: ctx.degree(),
            splitting_type: ty.entries().to_vec(),
            p,
            generic,
            generic_type,
            dominates_generic,
            gcd_degree: gcd,
            gcd_predicts_jump,
        },
    )
}

fn jumping_class(a: &JumpingArgs, out: &mut impl Write) -> Result<(), Failure> {
    let report = reconcile(a.n, a.d, a.trials, a.seed)?;
    emit(out, &ReportJson::from(&report))
}

fn verify(a: &VerifyArgs, out: &mut impl Write, err: &mut impl Write) -> Result<(), Failure> {
    let suites: Vec<Suite> = match a.suite.as_str() {
        "all" => Suite::ALL.to_vec(),
        name => vec![name.parse().map_err(Failure::Usage)?],
    };
    let pool = thread_pool();
    let mut results = Vec::new();
    for suite in suites {
        let start = Instant::now();
        let result = pool.install(|| run_suite(suite, a.seed));
        let _ = writeln!(
            err,
            "{suite}: {} cases, {} failures, {} ({:.2}s)",
            result.cases,
            result.failures.len(),
            if result.passed { "passed" } else { "FAILED" },
            start.elapsed().as_secs_f64()
        );
        results.push(result);
    }
    let passed = results.iter().all(|r| r.passed);
    emit(out, &VerifyOutput { seed: a.seed, passed, suites: results })?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
