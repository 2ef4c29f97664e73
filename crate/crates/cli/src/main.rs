use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use bohr_core::lab::{
    lemma_checks, sharpness_probe, standard_family, verify, TheoremId, TheoremParams, VerificationReport, VerifyConfig,
    DEFAULT_EPSILONS, DEFAULT_SHARPNESS_A,
};
use bohr_core::multidim::{reduction_check, MultidimLhs, Norm, DEFAULT_REDUCTION_A, DEFAULT_REDUCTION_R};
use bohr_core::radius::{solve, Equation, RadiusQuery, DEFAULT_TOL};
use bohr_core::{DiskFunction, Error, TableSpec};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

/// Radius solver and verification lab for refined Bohr inequalities.
#[derive(Parser)]
#[command(name = "bohr", version)]
struct Cli {
    /// Bisection tolerance for radius and table solves.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Seed for randomly generated test functions.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one radius equation.
    Radius {
        /// R1..R5, ZetaM, EtaM, AlphaKMP or BetaKMP.
        #[arg(long, value_parser = parse_equation)]
        theorem: Equation,
        #[command(flatten)]
        params: ParamArgs,
        /// Value of |f(0)| for equations that depend on it.
        #[arg(long, default_value_t = 0.0)]
        a: f64,
    },
    /// Recompute a published table.
    Table {
        /// 1, 2 or 3.
        id: u8,
        /// Compare against the printed values.
        #[arg(long)]
        diff: bool,
    },
    /// Check an inequality below its radius on a family of functions.
    Verify {
        /// T1..T6, ThmA1 or ThmA2.
        #[arg(value_parser = parse_theorem)]
        theorem: TheoremId,
        #[command(flatten)]
        params: ParamArgs,
        /// Restrict the extremal family to this value of |f(0)|.
        #[arg(long)]
        a: Option<f64>,
        /// Number of random Blaschke products added to the family.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, value_enum, default_value_t = Family::Extremal)]
        family: Family,
    },
    /// Search for a witness just beyond the radius.
    Sharpness {
        /// T1..T6, ThmA1 or ThmA2.
        #[arg(value_parser = parse_theorem)]
        theorem: TheoremId,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        a: Option<f64>,
        /// Offsets beyond the radius.
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_EPSILONS)]
        eps: Vec<f64>,
    },
    /// Run the auxiliary lemma oracles.
    Lemmas,
    /// Compare vector-valued left-hand sides with their one-variable versions.
    Multidim {
        /// One of G, H, I, J, K; all five when omitted.
        #[arg(long, value_parser = parse_lhs)]
        which: Option<MultidimLhs>,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, value_parser = parse_norm, default_value = "sup")]
        norm: Norm,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        r: Option<f64>,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Extremal,
    ConstantZero,
}

#[derive(Args, Clone, Copy)]
struct ParamArgs {
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long, default_value_t = 1)]
    m: u32,
    #[arg(long, default_value_t = 1.0)]
    p: f64,
    #[arg(long, default_value_t = 1)]
    q: u32,
    #[arg(long, default_value_t = 1)]
    s: u32,
    #[arg(long, default_value_t = 0)]
    t: u32,
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
}

impl ParamArgs {
    fn theorem_params(self, a: Option<f64>) -> TheoremParams {
        TheoremParams {
            k: self.k,
            m: self.m,
            p: self.p,
            q: self.q,
            s: self.s,
            t: self.t,
            lambda: self.lambda,
            a,
        }
    }
}

fn parse_equation(s: &str) -> Result<Equation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_lhs(s: &str) -> Result<MultidimLhs, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_norm(s: &str) -> Result<Norm, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Process outcome, mapped onto the exit-code contract.
enum Status {
    Pass,
    Fail,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NO_ROOT: u8 = 3;

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NoRootFound { .. } => EXIT_NO_ROOT,
        Error::NoWitness { .. } => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, status)) => {
            if let Err(e) = emit(&cli, &text) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            match status {
                Status::Pass => ExitCode::SUCCESS,
                Status::Fail => ExitCode::from(EXIT_FAIL),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<(String, Status), Error> {
    match &cli.command {
        Command::Radius { theorem, params, a } => radius(cli, *theorem, params, *a),
        Command::Table { id, diff } => table(cli, *id, *diff),
        Command::Verify {
            theorem,
            params,
            a,
            random,
            family,
        } => {
            let params = params.theorem_params(*a);
            let members = match family {
                Family::Extremal => standard_family(*theorem, &params, *random, cli.seed),
                Family::ConstantZero => vec![DiskFunction::Constant(Complex64::new(0.0, 0.0))],
            };
            let report = verify(*theorem, &params, &members, &VerifyConfig::default())?;
            Ok(render_report(cli.format, &report))
        }
        Command::Sharpness { theorem, params, a, eps } => {
            let report = sharpness_probe(*theorem, &params.theorem_params(*a), eps, &DEFAULT_SHARPNESS_A)?;
            Ok(render_report(cli.format, &report))
        }
        Command::Lemmas => {
            let report = lemma_checks()?;
            let status = if report.all_pass() { Status::Pass } else { Status::Fail };
            let text = match cli.format {
                Format::Json => report.to_json() + "\n",
                Format::Csv => to_csv(
                    &["check", "points", "worst_excess", "passed"],
                    report.checks.iter().map(|c| {
                        vec![c.name.clone(), c.points.to_string(), format!("{:e}", c.worst_excess), c.passed.to_string()]
                    }),
                ),
                Format::Md => report.to_markdown(),
            };
            if let Some(f) = report.first_failure() {
                eprintln!("first failure: {} at {}", f.name, f.violation.as_deref().unwrap_or("?"));
            }
            Ok((text, status))
        }
        Command::Multidim {
            which,
            d,
            norm,
            a,
            r,
            params,
        } => multidim(cli.format, *which, *d, *norm, *a, *r, params),
    }
}

fn to_csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

fn radius(cli: &Cli, theorem: Equation, params: &ParamArgs, a: f64) -> Result<(String, Status), Error> {
    let query = RadiusQuery {
        theorem,
        k: params.k,
        m: params.m,
        p: params.p,
        q: params.q,
        s: params.s,
        t: params.t,
        lambda: params.lambda,
        a,
    };
    let res = solve(&query, cli.tol)?;
    let text = match cli.format {
        Format::Json => {
            let value = serde_json::json!({
                "query": query.to_string(),
                "value": res.value,
                "bracket_lo": res.bracket_lo,
                "bracket_hi": res.bracket_hi,
                "residual": res.residual,
                "scan_step": res.scan_step,
            });
            serde_json::to_string_pretty(&value).expect("plain data") + "\n"
        }
        Format::Csv => to_csv(
            &["query", "value", "bracket_lo", "bracket_hi", "residual"],
            [vec![
                query.to_string(),
                format!("{:.6}", res.value),
                format!("{:e}", res.bracket_lo),
                format!("{:e}", res.bracket_hi),
                format!("{:e}", res.residual),
            ]],
        ),
        Format::Md => format!(
            "{:.6}\nbracket: [{:.15}, {:.15}]\nresidual: {:e}\n",
            res.value, res.bracket_lo, res.bracket_hi, res.residual
        ),
    };
    Ok((text, Status::Pass))
}

fn table(cli: &Cli, id: u8, diff: bool) -> Result<(String, Status), Error> {
    let computed = TableSpec::new(id)?.compute(cli.tol)?;
    let status = if !diff || computed.within_tolerance() {
        Status::Pass
    } else {
        Status::Fail
    };
    let text = match cli.format {
        Format::Md => computed.to_markdown(diff),
        Format::Csv => computed.to_csv(diff),
        Format::Json => computed.to_json() + "\n",
    };
    Ok((text, status))
}

fn render_report(format: Format, report: &VerificationReport) -> (String, Status) {
    let text = match format {
        Format::Json => report.to_json() + "\n",
        Format::Md => report.to_markdown(),
        Format::Csv => to_csv(
            &["fraction", "r", "theta", "lhs"],
            report.grid.iter().map(|g| {
                vec![
                    format!("{:.6}", g.fraction),
                    format!("{:.6}", g.r),
                    format!("{:.6}", g.theta),
                    format!("{:.12}", g.lhs),
                ]
            }),
        ),
    };
    let status = if report.verdict.is_pass() { Status::Pass } else { Status::Fail };
    (text, status)
}

fn multidim(
    format: Format,
    which: Option<MultidimLhs>,
    d: usize,
    norm: Norm,
    a: Option<f64>,
    r: Option<f64>,
    params: &ParamArgs,
) -> Result<(String, Status), Error> {
    if !(2..=3).contains(&d) {
        return Err(Error::InvalidParameter(format!("--d must be 2 or 3, got {d}")));
    }
    let a_grid = a.map_or(DEFAULT_REDUCTION_A.to_vec(), |a| vec![a]);
    let r_grid = r.map_or(DEFAULT_REDUCTION_R.to_vec(), |r| vec![r]);
    let variants = which.map_or(MultidimLhs::ALL.to_vec(), |w| vec![w]);
    let params = params.theorem_params(None);
    let reports = variants
        .into_iter()
        .map(|w| reduction_check(w, &params, d, norm, &a_grid, &r_grid))
        .collect::<Result<Vec<_>, _>>()?;
    let status = if reports.iter().all(|r| r.passed) { Status::Pass } else { Status::Fail };
    if let Some(bad) = reports.iter().find(|r| !r.passed) {
        eprintln!("first failure: {} at {:?}", bad.which, bad.first_mismatch);
    }
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&reports).expect("plain data") + "\n",
        Format::Csv => to_csv(
            &["which", "d", "norm", "points", "max_abs_diff", "passed"],
            reports.iter().map(|r| {
                vec![
                    r.which.to_string(),
                    r.dimension.to_string(),
                    r.norm.to_string(),
                    r.points.to_string(),
                    format!("{:e}", r.max_abs_diff),
                    r.passed.to_string(),
                ]
            }),
        ),
        Format::Md => reports.iter().map(|r| r.to_markdown()).collect::<Vec<_>>().join("\n"),
    };
    Ok((text, status))
}
