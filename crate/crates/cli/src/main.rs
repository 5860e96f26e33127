//! Command-line front end: point evaluation, table reproduction, bound-curve
//! CSV emission, and predicate-suite runs.
//!
//! Exit codes: 0 ok, 2 domain error, 3 convergence failure, 4 predicate
//! failure. CSV output uses dot decimals, comma separators, LF endings;
//! comment lines begin with `#`.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pqtrig::{
    arccos_pq, arcsin_pq_eval, arsinh_pq_eval, cos_pq, m_pq, pi_pq, propcheck, sin_pq, sinh_pq,
    Error, PqParams,
};

#[derive(Parser)]
#[command(name = "pqtrig", version, about = "Generalized (p,q)-trigonometric functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point
    Eval(EvalArgs),
    /// Emit a forward (arcsin/arccos/arsinh) or inverse (sin/cos/sinh) table
    Table(TableArgs),
    /// Emit the lower/upper bound curves bracketing pi_{p,p'} as CSV
    Figure1(Figure1Args),
    /// Run predicate sweeps over a parameter grid
    Check(CheckArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FnName {
    Arcsin,
    Arccos,
    Arsinh,
    Sin,
    Cos,
    Sinh,
    Pi,
    M,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    func: FnName,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    q: f64,
    /// Argument (not used for pi and m)
    #[arg(long)]
    x: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Forward,
    Inverse,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    kind: TableKind,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    q: f64,
    /// Comma-separated arguments; defaults to 0,0.25,0.5,0.75,1.0
    #[arg(long, value_delimiter = ',')]
    xs: Option<Vec<f64>>,
    /// Emit machine-precision values instead of 4-decimal rounding
    #[arg(long)]
    full_precision: bool,
}

#[derive(Args)]
struct Figure1Args {
    #[arg(long, default_value_t = 1.1)]
    p_min: f64,
    #[arg(long, default_value_t = 10.0)]
    p_max: f64,
    #[arg(long, default_value_t = 50)]
    n: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckFormat {
    Text,
    Records,
}

#[derive(Args)]
struct CheckArgs {
    /// `all` or one predicate id
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value = "default")]
    grid: String,
    /// Relative slack tolerance
    #[arg(long, default_value_t = propcheck::DEFAULT_EPS_REL)]
    eps: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: CheckFormat,
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Domain(_) | Error::DomainViolation(_) | Error::BracketInvalid { .. }
        | Error::UnknownPredicate(_) => 2,
        Error::NonConvergent { .. } | Error::NoConvergence { .. }
        | Error::MaxIterExceeded(_) => 3,
    }
}

/// Formats with 15 significant digits.
fn sig15(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    let decimals = (14 - exp).max(0) as usize;
    format!("{v:.decimals$}")
}

fn run_eval(a: &EvalArgs) -> Result<(), Error> {
    let pq = PqParams::new(a.p, a.q)?;
    let need_x = || {
        a.x.ok_or_else(|| Error::Domain("this function requires --x".to_string()))
    };
    let (value, method) = match a.func {
        FnName::Arcsin => {
            let r = arcsin_pq_eval(&pq, need_x()?)?;
            (r.value, r.method.as_str())
        }
        FnName::Arccos => {
            let r = arccos_pq(&pq, need_x()?)?;
            (r, "complement")
        }
        FnName::Arsinh => {
            let r = arsinh_pq_eval(&pq, need_x()?)?;
            (r.value, r.method.as_str())
        }
        FnName::Sin => (sin_pq(&pq, need_x()?)?, "inversion"),
        FnName::Cos => (cos_pq(&pq, need_x()?)?, "inversion"),
        FnName::Sinh => (sinh_pq(&pq, need_x()?)?, "inversion"),
        FnName::Pi => (pi_pq(&pq), "closed-form"),
        FnName::M => (m_pq(&pq), "closed-form"),
    };
    println!("{} method={}", sig15(value), method);
    Ok(())
}

fn fmt_cell(v: f64, full: bool) -> String {
    if full {
        format!("{v}")
    } else {
        // {:.4} rounds to nearest, ties to even
        format!("{v:.4}")
    }
}

fn run_table(a: &TableArgs) -> Result<(), Error> {
    let pq = PqParams::new(a.p, a.q)?;
    let xs = a
        .xs
        .clone()
        .unwrap_or_else(|| vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    let mut out = String::new();
    let mut notes: Vec<String> = Vec::new();
    match a.kind {
        TableKind::Forward => {
            out.push_str("x,arcsin,arccos,arsinh\n");
            for &x in &xs {
                let asn = arcsin_pq_eval(&pq, x)?.value;
                let acs = arccos_pq(&pq, x)?;
                let ash = arsinh_pq_eval(&pq, x)?.value;
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    fmt_cell(x, a.full_precision),
                    fmt_cell(asn, a.full_precision),
                    fmt_cell(acs, a.full_precision),
                    fmt_cell(ash, a.full_precision),
                ));
            }
        }
        TableKind::Inverse => {
            out.push_str("x,sin,cos,sinh\n");
            for &x in &xs {
                let sn = sin_pq(&pq, x)?;
                let cs = cos_pq(&pq, x)?;
                let sh = sinh_pq(&pq, x)?;
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    fmt_cell(x, a.full_precision),
                    fmt_cell(sn, a.full_precision),
                    fmt_cell(cs, a.full_precision),
                    fmt_cell(sh, a.full_precision),
                ));
                if x == 1.0 {
                    notes.push(format!(
                        "# NOTE: sinh at x=1.0 evaluates to {:.4}; a widely circulated \
                         reference table misprints this entry with the leading digit dropped.",
                        sh
                    ));
                }
            }
        }
    }
    print!("{out}");
    for n in notes {
        println!("{n}");
    }
    Ok(())
}

fn run_figure1(a: &Figure1Args) -> Result<(), Error> {
    if !(a.p_min > 1.0 && a.p_max > a.p_min && a.n >= 2) {
        return Err(Error::Domain(format!(
            "need 1 < p_min < p_max and n >= 2, got p_min={}, p_max={}, n={}",
            a.p_min, a.p_max, a.n
        )));
    }
    println!("p,low,pi,up");
    for i in 0..a.n {
        let p = a.p_min + (a.p_max - a.p_min) * i as f64 / (a.n - 1) as f64;
        let env = pqtrig::pi_conj_envelope(p)?;
        let pq = PqParams::new(p, p / (p - 1.0))?;
        let pi = pi_pq(&pq);
        println!("{},{},{},{}", p, env.lower, pi, env.upper);
    }
    Ok(())
}

fn print_report_text(r: &propcheck::PredicateReport) {
    let loc = r
        .worst_location
        .as_ref()
        .map(|p| p.to_string())
        .unwrap_or_else(|| "-".to_string());
    println!(
        "{:<26} {:<10} {:>7} points  worst_slack={:<24} at {:<40} {}",
        r.id,
        r.class.as_str(),
        r.grid_points,
        r.worst_slack,
        loc,
        r.status.as_str()
    );
}

fn print_report_record(r: &propcheck::PredicateReport) {
    let loc = r
        .worst_location
        .as_ref()
        .map(|p| p.to_string())
        .unwrap_or_else(|| "-".to_string());
    println!(
        "id={} class={} grid_points={} worst_slack={} worst_location={} status={}",
        r.id,
        r.class.as_str(),
        r.grid_points,
        r.worst_slack,
        loc,
        r.status.as_str()
    );
}

fn run_check(a: &CheckArgs) -> Result<bool, Error> {
    let grid = propcheck::GridSpec::preset(&a.grid)
        .ok_or_else(|| Error::Domain(format!("unknown grid preset `{}`", a.grid)))?;
    let reports = if a.suite == "all" {
        propcheck::run_all(&grid, a.eps)?
    } else {
        vec![propcheck::sweep(&a.suite, &grid, a.eps)?]
    };
    for r in &reports {
        match a.format {
            CheckFormat::Text => print_report_text(r),
            CheckFormat::Records => print_report_record(r),
        }
    }
    for r in &reports {
        if r.status == propcheck::Status::CounterexampleFound {
            println!(
                "# FINDING: conjecture {} has a counterexample at {} (slack {})",
                r.id,
                r.worst_location.as_ref().map(|p| p.to_string()).unwrap_or_default(),
                r.worst_slack
            );
        }
    }
    let ok = propcheck::all_passed(&reports);
    if matches!(a.format, CheckFormat::Text) {
        let n_fail = reports.iter().filter(|r| !r.passed).count();
        if ok {
            println!("# all {} predicates passed", reports.len());
        } else {
            println!("# {n_fail} of {} predicates FAILED", reports.len());
        }
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Eval(a) => run_eval(a).map(|_| true),
        Command::Table(a) => run_table(a).map(|_| true),
        Command::Figure1(a) => run_figure1(a).map(|_| true),
        Command::Check(a) => run_check(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(4),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
