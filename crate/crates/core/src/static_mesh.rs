//! Uniform-mesh baseline: scan the domain at constant spacing, then bisect
//! each sign change with the classic relative stopping rule.
//!
//! This is the reference against which the adaptive solver's evaluation
//! counts are compared. Separating two roots a distance `d` apart requires
//! `grid_spacing <= d`, so the scan cost is `(b - a) / d` evaluations no
//! matter where the roots actually are.

use crate::config::DEFAULT_MACHINE_EPS;
use crate::error::Error;
use crate::interval::Subinterval;
use crate::objective::CountedObjective;
use crate::report::{dedup_roots, Root, RootKind, SolveReport, Termination, TracePoint};

/// Tunables for the uniform-mesh baseline.
#[derive(Debug, Clone, PartialEq)]
pub struct StaticConfig {
    /// Node spacing of the scan; also the constant halving threshold.
    pub grid_spacing: f64,
    /// Relative stopping tolerance of the bisection,
    /// `|m_new - m_old| / max(1, |m_new|) < stop_tol`.
    pub stop_tol: f64,
}

impl Default for StaticConfig {
    fn default() -> Self {
        Self {
            grid_spacing: 1e-3,
            stop_tol: 1e-6,
        }
    }
}

impl StaticConfig {
    pub fn new(grid_spacing: f64, stop_tol: f64) -> Self {
        Self {
            grid_spacing,
            stop_tol,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !(self.grid_spacing > 0.0) || !self.grid_spacing.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "grid_spacing must be positive and finite, got {}",
                self.grid_spacing
            )));
        }
        if self.stop_tol < DEFAULT_MACHINE_EPS || !self.stop_tol.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "stop_tol must be at least machine epsilon, got {}",
                self.stop_tol
            )));
        }
        Ok(())
    }
}

/// Outcome of a uniform scan: the bracketing cells, plus any roots that fell
/// exactly on a grid node (those produce no strict sign change and are
/// reported directly).
#[derive(Debug, Clone, PartialEq)]
pub struct UniformScan {
    pub brackets: Vec<Subinterval>,
    pub node_roots: Vec<Root>,
}

/// Evaluates the objective at every node of a uniform mesh over `[a, b]` and
/// collects each consecutive node pair with a strict sign change.
///
/// The last cell may be shorter than `grid_spacing` so that `b` is always a
/// node. Evaluation cost is exactly the node count.
pub fn uniform_scan(
    objective: &mut CountedObjective<'_>,
    a: f64,
    b: f64,
    cfg: &StaticConfig,
) -> Result<UniformScan, Error> {
    cfg.validate()?;
    if !(a < b) {
        return Err(Error::InvalidInterval { a, b });
    }
    let mut brackets = Vec::new();
    let mut node_roots = Vec::new();
    let mut prev_x = a;
    let mut prev_f = objective.eval(a)?;
    if prev_f == 0.0 {
        node_roots.push(node_root(a));
    }
    loop {
        let mut x = prev_x + cfg.grid_spacing;
        if x >= b {
            x = b;
        }
        if x <= prev_x {
            return Err(Error::InvalidConfig(format!(
                "grid_spacing {} is below floating-point resolution near {}",
                cfg.grid_spacing, prev_x
            )));
        }
        let fx = objective.eval(x)?;
        if fx == 0.0 {
            node_roots.push(node_root(x));
        } else if (prev_f < 0.0 && fx > 0.0) || (prev_f > 0.0 && fx < 0.0) {
            brackets.push(Subinterval::from_parts(prev_x, x, prev_f, fx)?);
        }
        if x == b {
            break;
        }
        prev_x = x;
        prev_f = fx;
    }
    Ok(UniformScan {
        brackets,
        node_roots,
    })
}

fn node_root(x: f64) -> Root {
    Root {
        location: x,
        error_bound: DEFAULT_MACHINE_EPS * x.abs().max(1.0),
        kind: RootKind::NearZero,
    }
}

/// Classic bisection with the relative stopping criterion
/// `|m_new - m_old| / max(1, |m_new|) < stop_tol`, or an exact zero at the
/// midpoint. The caller must supply a bracketing subinterval.
pub fn classic_bisection(
    sub: Subinterval,
    cfg: &StaticConfig,
    objective: &mut CountedObjective<'_>,
) -> Result<Root, Error> {
    cfg.validate()?;
    debug_assert!(
        (sub.f_left < 0.0) != (sub.f_right < 0.0),
        "classic_bisection requires a bracketing subinterval"
    );
    let mut cur = sub;
    let mut prev_mid: Option<f64> = None;
    // The relative criterion cannot take more halvings than it takes the
    // width to fall below stop_tol; the slack covers |x| < 1 domains.
    let max_iter = ((sub.width() / cfg.stop_tol).log2().ceil() as usize).saturating_add(8);
    for _ in 0..max_iter {
        let m = cur.midpoint();
        if let Some(prev) = prev_mid {
            if (m - prev).abs() / m.abs().max(1.0) < cfg.stop_tol {
                return Ok(bracketed_root(m, &cur));
            }
        }
        if !(m > cur.x_left && m < cur.x_right) {
            return Ok(bracketed_root(m, &cur)); // floating-point resolution
        }
        let fm = objective.eval(m)?;
        if fm == 0.0 {
            return Ok(bracketed_root(m, &cur));
        }
        let left_brackets = (cur.f_left < 0.0) != (fm < 0.0);
        cur = if left_brackets {
            Subinterval::from_parts(cur.x_left, m, cur.f_left, fm)?
        } else {
            Subinterval::from_parts(m, cur.x_right, fm, cur.f_right)?
        };
        prev_mid = Some(m);
    }
    Ok(bracketed_root(cur.midpoint(), &cur))
}

fn bracketed_root(location: f64, enclosure: &Subinterval) -> Root {
    Root {
        location,
        error_bound: 0.5 * enclosure.width(),
        kind: RootKind::Bracketed,
    }
}

/// Full baseline pipeline: uniform scan, then classic bisection on every
/// bracketing cell found.
pub fn find_roots(
    objective: &mut CountedObjective<'_>,
    a: f64,
    b: f64,
    cfg: &StaticConfig,
) -> Result<SolveReport, Error> {
    let eval_base = objective.count();
    let scan = uniform_scan(objective, a, b, cfg)?;
    let mut roots = scan.node_roots;
    for bracket in scan.brackets {
        roots.push(classic_bisection(bracket, cfg, objective)?);
    }
    let evaluations = objective.count() - eval_base;
    let trace = objective.trace().map(|full| {
        full[full.len() - evaluations..]
            .iter()
            .map(|&(x, fx)| TracePoint { x, fx, ht: None })
            .collect()
    });
    Ok(SolveReport {
        roots: dedup_roots(roots),
        evaluations,
        derivative_evaluations: 0,
        terminated_by: Termination::WorklistExhausted,
        trace,
    })
}
