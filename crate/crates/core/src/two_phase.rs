//! Two-pass strategy for mixed root populations.
//!
//! Odd-multiple roots are cheap to find with a width exponent above one but
//! that same exponent makes close simple roots easy to miss. The strategy
//! therefore runs twice: first with the high exponent and near-zero capture
//! disabled to pick off the multiple roots, then with the plain exponent on
//! the rest of the domain, after carving exclusion regions around the roots
//! already found so the second pass cannot converge back onto them.

use crate::amr;
use crate::config::SolverConfig;
use crate::error::Error;
use crate::objective::CountedObjective;
use crate::report::{dedup_roots, SolveReport, Termination};

/// A neighborhood around an already-located root, removed from the second
/// pass's search domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExclusionRegion {
    pub center: f64,
    pub radius: f64,
}

/// Configuration of the two passes.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoPhaseConfig {
    /// First pass: `width_exponent` must exceed one; near-zero capture is
    /// forced off regardless of its `detect_even_roots` flag.
    pub phase1: SolverConfig,
    /// Second pass: plain `width_exponent = 1` with near-zero capture on.
    pub phase2: SolverConfig,
    /// Exclusion radius per phase-1 root, as a multiple of
    /// `max(error_bound, phase1.tol_cap)`. Must exceed one so regions
    /// always clear the enclosure they are built from.
    pub exclusion_factor: f64,
}

impl Default for TwoPhaseConfig {
    fn default() -> Self {
        Self {
            phase1: SolverConfig::default().with_width_exponent(3.0),
            phase2: SolverConfig::default(),
            exclusion_factor: 10.0,
        }
    }
}

impl TwoPhaseConfig {
    pub fn validate(&self) -> Result<(), Error> {
        self.phase1.validate()?;
        self.phase2.validate()?;
        if !(self.phase1.width_exponent > 1.0) {
            return Err(Error::InvalidConfig(format!(
                "phase-1 width_exponent must exceed 1, got {}",
                self.phase1.width_exponent
            )));
        }
        if self.phase2.width_exponent != 1.0 {
            return Err(Error::InvalidConfig(format!(
                "phase-2 width_exponent must be 1, got {}",
                self.phase2.width_exponent
            )));
        }
        if !(self.exclusion_factor > 1.0) || !self.exclusion_factor.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "exclusion_factor must exceed 1, got {}",
                self.exclusion_factor
            )));
        }
        Ok(())
    }
}

/// Which pass was running when the budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    One,
    Two,
}

/// Merged outcome of both passes, with per-phase accounting.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoPhaseReport {
    /// Merged, deduplicated report with combined counts.
    pub report: SolveReport,
    pub phase1_evaluations: usize,
    pub phase2_evaluations: usize,
    /// Regions carved out of the phase-2 domain.
    pub exclusions: Vec<ExclusionRegion>,
    /// Set when a pass exhausted the evaluation budget.
    pub budget_exceeded_in: Option<Phase>,
}

/// Runs both passes over `[a, b]` without derivative information.
pub fn two_phase_solve(
    objective: &mut CountedObjective<'_>,
    a: f64,
    b: f64,
    cfg: &TwoPhaseConfig,
) -> Result<TwoPhaseReport, Error> {
    solve(objective, None, a, b, cfg)
}

/// Runs both passes; the derivative is consulted only by the second pass,
/// which is the one doing even-multiple confirmation.
pub fn two_phase_solve_with_derivative(
    objective: &mut CountedObjective<'_>,
    derivative: &mut CountedObjective<'_>,
    a: f64,
    b: f64,
    cfg: &TwoPhaseConfig,
) -> Result<TwoPhaseReport, Error> {
    solve(objective, Some(derivative), a, b, cfg)
}

fn solve(
    objective: &mut CountedObjective<'_>,
    mut derivative: Option<&mut CountedObjective<'_>>,
    a: f64,
    b: f64,
    cfg: &TwoPhaseConfig,
) -> Result<TwoPhaseReport, Error> {
    cfg.validate()?;
    if !(a < b) {
        return Err(Error::InvalidInterval { a, b });
    }

    let phase1_cfg = cfg.phase1.clone().with_even_detection(false);
    let phase1 = amr::find_roots(objective, a, b, &phase1_cfg)?;
    let phase1_evaluations = phase1.evaluations;
    if phase1.terminated_by == Termination::BudgetExceeded {
        return Ok(TwoPhaseReport {
            report: phase1,
            phase1_evaluations,
            phase2_evaluations: 0,
            exclusions: Vec::new(),
            budget_exceeded_in: Some(Phase::One),
        });
    }

    let exclusions: Vec<ExclusionRegion> = phase1
        .roots
        .iter()
        .map(|root| ExclusionRegion {
            center: root.location,
            radius: cfg.exclusion_factor * root.error_bound.max(cfg.phase1.tol_cap),
        })
        .collect();

    let mut roots = phase1.roots.clone();
    let mut traces = phase1.trace.clone();
    let mut phase2_evaluations = 0;
    let mut derivative_evaluations = phase1.derivative_evaluations;
    let mut budget_exceeded_in = None;

    for (sub_a, sub_b) in exclusion_complement(a, b, &exclusions) {
        let sub_report = match derivative.as_deref_mut() {
            Some(deriv) => {
                amr::find_roots_with_derivative(objective, deriv, sub_a, sub_b, &cfg.phase2)?
            }
            None => amr::find_roots(objective, sub_a, sub_b, &cfg.phase2)?,
        };
        phase2_evaluations += sub_report.evaluations;
        derivative_evaluations += sub_report.derivative_evaluations;
        roots.extend_from_slice(&sub_report.roots);
        if let (Some(all), Some(part)) = (traces.as_mut(), sub_report.trace) {
            all.extend(part);
        }
        if sub_report.terminated_by == Termination::BudgetExceeded {
            budget_exceeded_in = Some(Phase::Two);
            break;
        }
    }

    let terminated_by = if budget_exceeded_in.is_some() {
        Termination::BudgetExceeded
    } else {
        Termination::WorklistExhausted
    };
    Ok(TwoPhaseReport {
        report: SolveReport {
            roots: dedup_roots(roots),
            evaluations: phase1_evaluations + phase2_evaluations,
            derivative_evaluations,
            terminated_by,
            trace: traces,
        },
        phase1_evaluations,
        phase2_evaluations,
        exclusions,
        budget_exceeded_in,
    })
}

/// The maximal closed subintervals of `[a, b]` that do not meet the interior
/// of any region. Regions are clipped to the domain; the result is sorted
/// and pairwise disjoint, and empty when the regions cover everything.
pub fn exclusion_complement(a: f64, b: f64, regions: &[ExclusionRegion]) -> Vec<(f64, f64)> {
    let mut spans: Vec<(f64, f64)> = regions
        .iter()
        .map(|r| ((r.center - r.radius).max(a), (r.center + r.radius).min(b)))
        .filter(|(lo, hi)| lo < hi)
        .collect();
    spans.sort_by(|x, y| x.0.total_cmp(&y.0));

    let mut remaining = Vec::new();
    let mut cursor = a;
    for (lo, hi) in spans {
        if lo > cursor {
            remaining.push((cursor, lo));
        }
        cursor = cursor.max(hi);
    }
    if cursor < b {
        remaining.push((cursor, b));
    }
    remaining
}
