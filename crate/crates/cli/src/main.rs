//! Command-line front end: parse a function, pick a solver mode, print the
//! roots, and optionally dump the evaluation trace for plotting.

// `!(a < b)` rejects NaN where `a >= b` would accept it.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use allroots::expr::Expr;
use allroots::{amr, static_mesh, two_phase, CountedObjective, SolveReport, Termination};
use allroots::{static_mesh::StaticConfig, two_phase::TwoPhaseConfig, SolverConfig};

mod output;
mod presets;

use presets::Preset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Adaptive subdivision (the default).
    Amr,
    /// Uniform mesh scan plus classic bisection.
    Static,
    /// High-exponent pass for multiple roots, then a plain pass on the rest.
    TwoPhase,
}

/// Find every real root of a function on a bounded interval.
#[derive(Debug, Parser)]
#[command(name = "allroots", version, arg_required_else_help = true)]
struct Cli {
    /// Objective as an expression in x, e.g. "(x-0.5)*(x-4)*sin(x)"
    #[arg(
        long,
        value_name = "TEXT",
        required_unless_present = "preset",
        conflicts_with = "preset"
    )]
    function: Option<String>,

    /// Built-in benchmark function (sets --function and --domain)
    #[arg(long, value_enum, value_name = "NAME")]
    preset: Option<Preset>,

    /// Search bound; required with --function, overrides the preset's bound
    #[arg(
        long,
        num_args = 2,
        value_names = ["A", "B"],
        allow_negative_numbers = true,
        required_unless_present = "preset"
    )]
    domain: Option<Vec<f64>>,

    /// Solver mode
    #[arg(long, value_enum, default_value_t = Mode::Amr)]
    mode: Mode,

    /// Halving-threshold scale factor (adaptive modes)
    #[arg(
        short = 'C',
        long = "ht-scale",
        value_name = "FLOAT",
        default_value_t = 0.01
    )]
    ht_scale: f64,

    /// Bracket tolerance per unit of bracket width
    #[arg(long, value_name = "FLOAT", default_value_t = 1e-2)]
    eps: f64,

    /// Cap on the bracket tolerance
    #[arg(long = "eps-m", value_name = "FLOAT", default_value_t = 1e-5)]
    eps_m: f64,

    /// |f| threshold for capturing near-zero midpoints as roots
    #[arg(long = "eps-f", value_name = "FLOAT", default_value_t = 2.22e-16)]
    eps_f: f64,

    /// |f'| threshold for confirming even-multiple roots
    #[arg(long = "eps-d", value_name = "FLOAT", default_value_t = 2.22e-16)]
    eps_d: f64,

    /// Width exponent of the halving threshold; above 1 tames odd-multiple roots
    #[arg(
        short = 'n',
        long = "exponent",
        value_name = "FLOAT",
        default_value_t = 1.0
    )]
    exponent: f64,

    /// Evaluation budget per run
    #[arg(long = "max-evals", value_name = "INT", default_value_t = 10_000_000)]
    max_evals: usize,

    /// Grid spacing of the uniform scan (static mode)
    #[arg(long = "ht", value_name = "FLOAT", default_value_t = 1e-3)]
    ht: f64,

    /// Relative stopping tolerance of classic bisection (static mode)
    #[arg(long = "eps-s", value_name = "FLOAT", default_value_t = 1e-6)]
    eps_s: f64,

    /// Differentiate the function symbolically and use it to confirm
    /// even-multiple roots
    #[arg(long = "use-derivative")]
    use_derivative: bool,

    /// Disable near-zero root capture (useful when hunting odd-multiple
    /// roots with -n above 1)
    #[arg(long = "no-even-check")]
    no_even_check: bool,

    /// Emit the report as JSON instead of a table
    #[arg(long)]
    json: bool,

    /// Write one CSV record per evaluation (idx,x,fx,ht) to this path
    #[arg(long, value_name = "PATH")]
    trace: Option<PathBuf>,

    /// Phase-1 overrides for two-phase mode (fall back to the global flags)
    #[arg(long = "p1-c", value_name = "FLOAT")]
    p1_c: Option<f64>,
    #[arg(long = "p1-eps", value_name = "FLOAT")]
    p1_eps: Option<f64>,
    #[arg(long = "p1-eps-m", value_name = "FLOAT")]
    p1_eps_m: Option<f64>,
    #[arg(long = "p1-eps-f", value_name = "FLOAT")]
    p1_eps_f: Option<f64>,
    #[arg(long = "p1-eps-d", value_name = "FLOAT")]
    p1_eps_d: Option<f64>,
    /// Phase-1 width exponent (two-phase mode; must exceed 1)
    #[arg(long = "p1-n", value_name = "FLOAT", default_value_t = 3.0)]
    p1_n: f64,

    /// Phase-2 overrides for two-phase mode
    #[arg(long = "p2-c", value_name = "FLOAT")]
    p2_c: Option<f64>,
    #[arg(long = "p2-eps", value_name = "FLOAT")]
    p2_eps: Option<f64>,
    #[arg(long = "p2-eps-m", value_name = "FLOAT")]
    p2_eps_m: Option<f64>,
    #[arg(long = "p2-eps-f", value_name = "FLOAT")]
    p2_eps_f: Option<f64>,
    #[arg(long = "p2-eps-d", value_name = "FLOAT")]
    p2_eps_d: Option<f64>,

    /// Exclusion radius per phase-1 root, as a multiple of
    /// max(error_bound, eps_m). Size it generously when phase 1 finds
    /// multiple roots: the region must clear the whole |f| < eps-f flat zone.
    #[arg(
        long = "exclusion-factor",
        value_name = "FLOAT",
        default_value_t = 10.0
    )]
    exclusion_factor: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Errors up to the start of the solve (parsing, configuration) surface as
/// `Err` and exit 2; solver outcomes map to 0 (done) or 3 (budget ran out).
fn run(cli: &Cli) -> Result<ExitCode, String> {
    let (text, (a, b)) = resolve_function(cli)?;
    let expr = Expr::parse(&text).map_err(|e| format!("in --function: {e}"))?;
    let derivative = if cli.use_derivative {
        Some(expr.differentiate().map_err(|e| e.to_string())?)
    } else {
        None
    };

    let tracing = cli.trace.is_some();
    let objective_fn = |x: f64| expr.eval(x).map_or(f64::NAN, |v| v);
    let mut objective = if tracing {
        CountedObjective::with_trace(objective_fn)
    } else {
        CountedObjective::new(objective_fn)
    };

    let mut report = match cli.mode {
        Mode::Amr => {
            let cfg = solver_config(cli);
            match &derivative {
                Some(dexpr) => {
                    let mut deriv =
                        CountedObjective::new(|x: f64| dexpr.eval(x).map_or(f64::NAN, |v| v));
                    amr::find_roots_with_derivative(&mut objective, &mut deriv, a, b, &cfg)
                }
                None => amr::find_roots(&mut objective, a, b, &cfg),
            }
        }
        Mode::Static => {
            let cfg = StaticConfig::new(cli.ht, cli.eps_s);
            static_mesh::find_roots(&mut objective, a, b, &cfg)
        }
        Mode::TwoPhase => {
            let cfg = two_phase_config(cli);
            match &derivative {
                Some(dexpr) => {
                    let mut deriv =
                        CountedObjective::new(|x: f64| dexpr.eval(x).map_or(f64::NAN, |v| v));
                    two_phase::two_phase_solve_with_derivative(
                        &mut objective,
                        &mut deriv,
                        a,
                        b,
                        &cfg,
                    )
                }
                None => two_phase::two_phase_solve(&mut objective, a, b, &cfg),
            }
            .map(|out| out.report)
        }
    }
    .map_err(|e| e.to_string())?;

    if let Some(path) = &cli.trace {
        write_trace(path, &report)
            .map_err(|e| format!("cannot write trace {}: {e}", path.display()))?;
        // The trace lives in the CSV; keep the report itself lean.
        report.trace = None;
    }

    let mut stdout = std::io::stdout().lock();
    if cli.json {
        let body = serde_json::to_string(&report).map_err(|e| e.to_string())?;
        writeln!(stdout, "{body}").map_err(|e| e.to_string())?;
    } else {
        output::print_table(&mut stdout, &report).map_err(|e| e.to_string())?;
    }

    Ok(if report.terminated_by == Termination::BudgetExceeded {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}

fn resolve_function(cli: &Cli) -> Result<(String, (f64, f64)), String> {
    let (text, preset_domain) = match (&cli.function, cli.preset) {
        (Some(text), None) => (text.clone(), None),
        (None, Some(preset)) => (preset.text().to_string(), Some(preset.domain())),
        _ => return Err("exactly one of --function or --preset is required".into()),
    };
    let domain = match &cli.domain {
        Some(values) => (values[0], values[1]),
        None => preset_domain.ok_or("--domain A B is required with --function")?,
    };
    if !(domain.0 < domain.1) {
        return Err(format!(
            "invalid domain: {} must be below {}",
            domain.0, domain.1
        ));
    }
    Ok((text, domain))
}

fn solver_config(cli: &Cli) -> SolverConfig {
    SolverConfig::default()
        .with_ht_scale(cli.ht_scale)
        .with_tolerances(cli.eps, cli.eps_m)
        .with_near_zero_tol(cli.eps_f)
        .with_derivative_zero_tol(cli.eps_d)
        .with_width_exponent(cli.exponent)
        .with_max_evaluations(cli.max_evals)
        .with_even_detection(!cli.no_even_check)
}

fn two_phase_config(cli: &Cli) -> TwoPhaseConfig {
    let phase1 = SolverConfig::default()
        .with_ht_scale(cli.p1_c.unwrap_or(cli.ht_scale))
        .with_tolerances(
            cli.p1_eps.unwrap_or(cli.eps),
            cli.p1_eps_m.unwrap_or(cli.eps_m),
        )
        .with_near_zero_tol(cli.p1_eps_f.unwrap_or(cli.eps_f))
        .with_derivative_zero_tol(cli.p1_eps_d.unwrap_or(cli.eps_d))
        .with_width_exponent(cli.p1_n)
        .with_max_evaluations(cli.max_evals);
    let phase2 = SolverConfig::default()
        .with_ht_scale(cli.p2_c.unwrap_or(cli.ht_scale))
        .with_tolerances(
            cli.p2_eps.unwrap_or(cli.eps),
            cli.p2_eps_m.unwrap_or(cli.eps_m),
        )
        .with_near_zero_tol(cli.p2_eps_f.unwrap_or(cli.eps_f))
        .with_derivative_zero_tol(cli.p2_eps_d.unwrap_or(cli.eps_d))
        .with_max_evaluations(cli.max_evals);
    TwoPhaseConfig {
        phase1,
        phase2,
        exclusion_factor: cli.exclusion_factor,
    }
}

fn write_trace(path: &PathBuf, report: &SolveReport) -> std::io::Result<()> {
    let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(file, "idx,x,fx,ht")?;
    if let Some(trace) = &report.trace {
        for (idx, point) in trace.iter().enumerate() {
            match point.ht {
                Some(ht) => writeln!(file, "{idx},{},{},{ht}", point.x, point.fx)?,
                None => writeln!(file, "{idx},{},{},", point.x, point.fx)?,
            }
        }
    }
    file.flush()
}
