//! Worklist-driven adaptive subdivision solver.
//!
//! The domain is kept as a queue of subintervals with cached endpoint
//! values. Each subinterval is probed once at its midpoint: a sign change
//! sends it to bisection, a near-zero midpoint is captured directly as a
//! root, and anything else is halved while its width exceeds the halving
//! threshold
//!
//! ```text
//! ht = ht_scale * min(|f_left|, |f_right|) / width^width_exponent
//! ```
//!
//! which shrinks near roots and grows away from them, so the mesh refines
//! only where the function approaches zero. Bisection re-enqueues every
//! discarded half that is still wider than its own threshold, which is how a
//! single sign change over a cluster of roots ends up yielding all of them.

use std::collections::VecDeque;

use crate::config::SolverConfig;
use crate::error::Error;
use crate::interval::Subinterval;
use crate::objective::CountedObjective;
use crate::report::{dedup_roots, Root, RootKind, SolveReport, Termination, TracePoint};

/// FIFO queue of pending subintervals. Every subinterval ever enqueued is
/// processed exactly once.
#[derive(Debug, Default)]
pub struct Worklist {
    pending: VecDeque<Subinterval>,
    enqueued: usize,
    processed: usize,
}

impl Worklist {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn enqueue(&mut self, sub: Subinterval) {
        self.pending.push_back(sub);
        self.enqueued += 1;
    }

    /// Takes the oldest pending subinterval, in enqueue order.
    pub fn take_next(&mut self) -> Option<Subinterval> {
        let sub = self.pending.pop_front();
        if sub.is_some() {
            self.processed += 1;
        }
        sub
    }

    pub fn pending(&self) -> usize {
        self.pending.len()
    }

    /// Total subintervals ever enqueued.
    pub fn total_enqueued(&self) -> usize {
        self.enqueued
    }

    /// Total subintervals taken for processing.
    pub fn total_processed(&self) -> usize {
        self.processed
    }
}

/// The width below which a non-bracketing subinterval is discarded instead
/// of halved. Zero when an endpoint value is exactly zero, which keeps the
/// subdivision going until another stop fires.
pub fn halving_threshold(sub: &Subinterval, ht_scale: f64, width_exponent: f64) -> f64 {
    let min_mag = sub.f_left.abs().min(sub.f_right.abs());
    let width = sub.width();
    let denom = if width_exponent == 1.0 {
        width
    } else {
        width.powf(width_exponent)
    };
    ht_scale * min_mag / denom
}

/// The enclosure tolerance for a bracket of initial width `bracket_width`:
/// `min(tol_scale * bracket_width, tol_cap)`. Narrow brackets (close roots)
/// get proportionally tighter tolerances.
pub fn adaptive_tolerance(bracket_width: f64, tol_scale: f64, tol_cap: f64) -> f64 {
    (tol_scale * bracket_width).min(tol_cap)
}

/// Strict sign change across the subinterval. An exact zero at an endpoint
/// does not count; such points are picked up by the near-zero check once
/// they become midpoints of later subintervals.
pub fn is_bracketing(sub: &Subinterval) -> bool {
    (sub.f_left < 0.0 && sub.f_right > 0.0) || (sub.f_left > 0.0 && sub.f_right < 0.0)
}

/// Classification of a candidate point by the near-zero check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvenRootStatus {
    /// |f| and |f'| both vanish: confirmed even-multiple root.
    EvenMultipleRoot,
    /// |f| vanishes; no derivative confirmation. With no derivative supplied
    /// this is the even-multiple candidate outcome, with one supplied it
    /// marks a near-zero point whose derivative does not vanish.
    NearZeroRoot,
    NotRoot,
}

/// Tests whether `x` is a root by magnitude, optionally confirming even
/// multiplicity through the first derivative.
pub fn even_root_check(
    x: f64,
    objective: &mut CountedObjective<'_>,
    derivative: Option<&mut CountedObjective<'_>>,
    near_zero_tol: f64,
    derivative_zero_tol: f64,
) -> Result<EvenRootStatus, Error> {
    let fx = objective.eval(x)?;
    if fx.abs() >= near_zero_tol {
        return Ok(EvenRootStatus::NotRoot);
    }
    match derivative {
        None => Ok(EvenRootStatus::NearZeroRoot),
        Some(deriv) => {
            let dfx = deriv.eval(x)?;
            if dfx.abs() < derivative_zero_tol {
                Ok(EvenRootStatus::EvenMultipleRoot)
            } else {
                Ok(EvenRootStatus::NearZeroRoot)
            }
        }
    }
}

/// Refines a bracketing subinterval down to its adaptive tolerance,
/// re-enqueueing discarded halves that may still hold roots.
///
/// The caller must ensure `is_bracketing(&sub)`.
pub fn bisect_refine(
    sub: Subinterval,
    cfg: &SolverConfig,
    worklist: &mut Worklist,
    objective: &mut CountedObjective<'_>,
) -> Result<Root, Error> {
    cfg.validate()?;
    debug_assert!(
        is_bracketing(&sub),
        "bisect_refine requires a bracketing subinterval"
    );
    let mut driver = Driver::new(objective, None, cfg);
    driver.refine_bracket(worklist, sub, None)
}

/// Finds all roots of `objective` on `[a, b]`.
///
/// Returns the sorted, deduplicated roots together with exact evaluation
/// counts. Running out of budget is not an error: the report comes back
/// tagged [`Termination::BudgetExceeded`] with the roots found so far.
pub fn find_roots(
    objective: &mut CountedObjective<'_>,
    a: f64,
    b: f64,
    cfg: &SolverConfig,
) -> Result<SolveReport, Error> {
    cfg.validate()?;
    Driver::new(objective, None, cfg).run(a, b)
}

/// Same as [`find_roots`], with a first derivative for confirming
/// even-multiple roots at machine accuracy. Derivative calls are counted
/// separately and do not draw on the evaluation budget.
pub fn find_roots_with_derivative(
    objective: &mut CountedObjective<'_>,
    derivative: &mut CountedObjective<'_>,
    a: f64,
    b: f64,
    cfg: &SolverConfig,
) -> Result<SolveReport, Error> {
    cfg.validate()?;
    Driver::new(objective, Some(derivative), cfg).run(a, b)
}

enum Confirmation {
    Confirmed,
    Rejected,
    NoDerivative,
}

struct Driver<'s, 'a, 'd> {
    obj: &'s mut CountedObjective<'a>,
    deriv: Option<&'s mut CountedObjective<'d>>,
    cfg: &'s SolverConfig,
    eval_base: usize,
    deriv_base: usize,
    roots: Vec<Root>,
    /// (evaluation index within this solve, halving threshold in force);
    /// collected only when the objective is tracing.
    ht_marks: Vec<(usize, f64)>,
}

impl<'s, 'a, 'd> Driver<'s, 'a, 'd> {
    fn new(
        obj: &'s mut CountedObjective<'a>,
        deriv: Option<&'s mut CountedObjective<'d>>,
        cfg: &'s SolverConfig,
    ) -> Self {
        let eval_base = obj.count();
        let deriv_base = deriv.as_ref().map_or(0, |d| d.count());
        Self {
            obj,
            deriv,
            cfg,
            eval_base,
            deriv_base,
            roots: Vec::new(),
            ht_marks: Vec::new(),
        }
    }

    fn eval(&mut self, x: f64) -> Result<f64, Error> {
        let spent = self.obj.count() - self.eval_base;
        if spent >= self.cfg.max_evaluations {
            return Err(Error::BudgetExceeded { spent });
        }
        self.obj.eval(x)
    }

    fn run(&mut self, a: f64, b: f64) -> Result<SolveReport, Error> {
        if !(a < b) {
            return Err(Error::InvalidInterval { a, b });
        }
        let mut worklist = Worklist::new();
        let mut termination = Termination::WorklistExhausted;
        match self.init(a, b) {
            Ok(initial) => {
                worklist.enqueue(initial);
                while let Some(sub) = worklist.take_next() {
                    match self.process(&mut worklist, sub) {
                        Ok(()) => {}
                        Err(Error::BudgetExceeded { .. }) => {
                            termination = Termination::BudgetExceeded;
                            break;
                        }
                        Err(err) => return Err(err),
                    }
                }
            }
            Err(Error::BudgetExceeded { .. }) => termination = Termination::BudgetExceeded,
            Err(err) => return Err(err),
        }
        Ok(self.finish(termination))
    }

    fn init(&mut self, a: f64, b: f64) -> Result<Subinterval, Error> {
        let fa = self.eval(a)?;
        let fb = self.eval(b)?;
        Subinterval::from_parts(a, b, fa, fb)
    }

    /// Handles one subinterval: midpoint probe, then bracketing refinement,
    /// near-zero capture, or threshold-guarded halving.
    fn process(&mut self, worklist: &mut Worklist, sub: Subinterval) -> Result<(), Error> {
        let m = sub.midpoint();
        if !(m > sub.x_left && m < sub.x_right) {
            // Interval at floating-point resolution; its endpoints were
            // already probed as midpoints of ancestors.
            return Ok(());
        }
        let fm = self.eval(m)?;
        self.mark_ht(&sub);

        if is_bracketing(&sub) {
            let root = self.refine_bracket(worklist, sub, Some(fm))?;
            self.roots.push(root);
            return Ok(());
        }

        if self.cfg.detect_even_roots && fm.abs() < self.cfg.near_zero_tol {
            match self.confirm_even(m)? {
                Confirmation::Confirmed => {
                    self.roots.push(Root {
                        location: m,
                        error_bound: 0.5 * sub.width(),
                        kind: RootKind::EvenMultiple,
                    });
                    return Ok(());
                }
                Confirmation::NoDerivative => {
                    self.roots.push(Root {
                        location: m,
                        error_bound: 0.5 * sub.width(),
                        kind: RootKind::NearZero,
                    });
                    return Ok(());
                }
                // The derivative does not vanish here, so this is not yet
                // the flat spot of an even-multiple root. Keep subdividing
                // toward it instead of recording a premature candidate.
                Confirmation::Rejected => {}
            }
        }

        let ht = halving_threshold(&sub, self.cfg.ht_scale, self.cfg.width_exponent);
        let floor = self.cfg.machine_eps * sub.x_left.abs().max(1.0);
        if sub.width() > ht && sub.width() >= floor {
            // Both children share the midpoint evaluation.
            worklist.enqueue(Subinterval::from_parts(sub.x_left, m, sub.f_left, fm)?);
            worklist.enqueue(Subinterval::from_parts(m, sub.x_right, fm, sub.f_right)?);
        }
        Ok(())
    }

    fn refine_bracket(
        &mut self,
        worklist: &mut Worklist,
        sub: Subinterval,
        mut pending_mid: Option<f64>,
    ) -> Result<Root, Error> {
        // The tolerance is fixed from the bracket's initial width.
        let tol = adaptive_tolerance(sub.width(), self.cfg.tol_scale, self.cfg.tol_cap);
        let mut cur = sub;
        while cur.width() > tol {
            let m = cur.midpoint();
            if !(m > cur.x_left && m < cur.x_right) {
                break; // floating-point resolution reached
            }
            let fm = match pending_mid.take() {
                Some(value) => value,
                None => self.eval(m)?,
            };
            if fm.abs() <= self.cfg.near_zero_tol {
                // Dead-on hit. The current bracket still certifies the sign
                // change, and both halves are unexplored and may carry roots
                // of their own.
                self.maybe_enqueue(
                    worklist,
                    Subinterval::from_parts(cur.x_left, m, cur.f_left, fm)?,
                );
                self.maybe_enqueue(
                    worklist,
                    Subinterval::from_parts(m, cur.x_right, fm, cur.f_right)?,
                );
                return Ok(Root {
                    location: m,
                    error_bound: 0.5 * cur.width(),
                    kind: RootKind::Bracketed,
                });
            }
            let left = Subinterval::from_parts(cur.x_left, m, cur.f_left, fm)?;
            let right = Subinterval::from_parts(m, cur.x_right, fm, cur.f_right)?;
            let (kept, discarded) = if is_bracketing(&left) {
                (left, right)
            } else {
                (right, left)
            };
            self.maybe_enqueue(worklist, discarded);
            cur = kept;
        }
        Ok(Root {
            location: cur.midpoint(),
            error_bound: 0.5 * cur.width(),
            kind: RootKind::Bracketed,
        })
    }

    /// Re-enqueues a discarded half only when it is still wider than its own
    /// halving threshold; anything narrower is certified uninteresting.
    fn maybe_enqueue(&self, worklist: &mut Worklist, sub: Subinterval) {
        if sub.width() > halving_threshold(&sub, self.cfg.ht_scale, self.cfg.width_exponent) {
            worklist.enqueue(sub);
        }
    }

    fn confirm_even(&mut self, x: f64) -> Result<Confirmation, Error> {
        match &mut self.deriv {
            None => Ok(Confirmation::NoDerivative),
            Some(deriv) => {
                let dfx = deriv.eval(x)?;
                if dfx.abs() < self.cfg.derivative_zero_tol {
                    Ok(Confirmation::Confirmed)
                } else {
                    Ok(Confirmation::Rejected)
                }
            }
        }
    }

    fn mark_ht(&mut self, sub: &Subinterval) {
        if self.obj.is_tracing() {
            let idx = self.obj.count() - 1 - self.eval_base;
            let ht = halving_threshold(sub, self.cfg.ht_scale, self.cfg.width_exponent);
            self.ht_marks.push((idx, ht));
        }
    }

    fn finish(&mut self, termination: Termination) -> SolveReport {
        let roots = dedup_roots(std::mem::take(&mut self.roots));
        let evaluations = self.obj.count() - self.eval_base;
        let derivative_evaluations = self.deriv.as_ref().map_or(0, |d| d.count()) - self.deriv_base;
        let trace = self.obj.trace().map(|full| {
            let slice = &full[full.len() - evaluations..];
            let mut points: Vec<TracePoint> = slice
                .iter()
                .map(|&(x, fx)| TracePoint { x, fx, ht: None })
                .collect();
            for &(idx, ht) in &self.ht_marks {
                points[idx].ht = Some(ht);
            }
            points
        });
        SolveReport {
            roots,
            evaluations,
            derivative_evaluations,
            terminated_by: termination,
            trace,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SolverConfig {
        SolverConfig::default().with_tolerances(1e-2, 1e-3)
    }

    #[test]
    fn halving_threshold_arithmetic() {
        let sub = Subinterval::from_parts(0.0, 2.0, 2.0, -6.0).unwrap();
        assert_eq!(halving_threshold(&sub, 1.0, 1.0), 1.0);

        let sub = Subinterval::from_parts(0.0, 2.0, 4.0, 5.0).unwrap();
        assert_eq!(halving_threshold(&sub, 0.5, 3.0), 0.25);

        let sub = Subinterval::from_parts(0.0, 2.0, 0.0, 5.0).unwrap();
        assert_eq!(halving_threshold(&sub, 1.0, 1.0), 0.0);
    }

    #[test]
    fn adaptive_tolerance_arithmetic() {
        assert_eq!(adaptive_tolerance(0.5, 1e-2, 1e-3), 1e-3);
        assert_eq!(adaptive_tolerance(1e-4, 1e-2, 1e-3), 1e-2 * 1e-4);
        // Widths above one always land on the cap.
        assert_eq!(adaptive_tolerance(2.0, 1e-4, 1e-5), 1e-5);
    }

    #[test]
    fn bracketing_is_a_strict_sign_change() {
        let sub = Subinterval::from_parts(0.0, 1.0, -1.0, 2.0).unwrap();
        assert!(is_bracketing(&sub));
        let sub = Subinterval::from_parts(0.0, 1.0, 1.0, 2.0).unwrap();
        assert!(!is_bracketing(&sub));
        // Exact zero at an endpoint is handled by the near-zero check, not
        // by bracketing.
        let sub = Subinterval::from_parts(0.0, 1.0, 0.0, 2.0).unwrap();
        assert!(!is_bracketing(&sub));
    }

    #[test]
    fn even_root_check_on_double_root_with_derivative() {
        let g = |x: f64| (x - 3.0) * (x - 3.0) * (x - 4.0) * (x - 4.0);
        let dg = |x: f64| {
            2.0 * (x - 3.0) * (x - 4.0) * (x - 4.0) + 2.0 * (x - 3.0) * (x - 3.0) * (x - 4.0)
        };
        let mut obj = CountedObjective::new(g);
        let mut deriv = CountedObjective::new(dg);
        let status = even_root_check(3.0, &mut obj, Some(&mut deriv), 2.22e-16, 2.22e-16).unwrap();
        assert_eq!(status, EvenRootStatus::EvenMultipleRoot);
    }

    #[test]
    fn even_root_check_rejects_simple_root_for_even_label() {
        let mut obj = CountedObjective::new(|x| x);
        let mut deriv = CountedObjective::new(|_| 1.0);
        let status = even_root_check(0.0, &mut obj, Some(&mut deriv), 2.22e-16, 2.22e-16).unwrap();
        assert_eq!(status, EvenRootStatus::NearZeroRoot);
    }

    #[test]
    fn even_root_check_not_a_root() {
        let mut obj = CountedObjective::new(|x| x);
        let status = even_root_check(
            0.5,
            &mut obj,
            None::<&mut CountedObjective<'_>>,
            1e-12,
            1e-12,
        )
        .unwrap();
        assert_eq!(status, EvenRootStatus::NotRoot);
    }

    #[test]
    fn bisect_refine_linear_offset() {
        // f(x) = x - 9.3 on [9, 10]
        let mut obj = CountedObjective::new(|x| x - 9.3);
        let sub = make(9.0, 10.0, |x| x - 9.3);
        let mut worklist = Worklist::new();
        let root = bisect_refine(sub, &cfg(), &mut worklist, &mut obj).unwrap();
        assert!((root.location - 9.3).abs() <= 1e-3);
        assert!(root.error_bound <= 1e-3);
        assert_eq!(root.kind, RootKind::Bracketed);
    }

    #[test]
    fn bisect_refine_keeps_discards_quiet_for_large_scale() {
        // Monotone objective far from zero elsewhere: with a large ht_scale
        // no discarded half is worth re-enqueueing.
        let mut obj = CountedObjective::new(|x| x);
        let sub = make(-1.0, 2.0, |x| x);
        let mut worklist = Worklist::new();
        let config = cfg().with_ht_scale(10.0);
        let root = bisect_refine(sub, &config, &mut worklist, &mut obj).unwrap();
        assert!(root.location.abs() <= 1e-3);
        assert_eq!(worklist.total_enqueued(), 0);
    }

    #[test]
    fn bisect_refine_reenqueues_halves_that_hold_more_roots() {
        let f = |x: f64| (x - 0.25) * (x - 0.5) * (x - 0.75);
        let mut obj = CountedObjective::new(f);
        let mut worklist = Worklist::new();
        let sub = make(0.0, 1.0, f);
        assert!(is_bracketing(&sub));
        let config = cfg().with_ht_scale(0.01);
        bisect_refine(sub, &config, &mut worklist, &mut obj).unwrap();
        assert!(worklist.pending() > 0);
    }

    #[test]
    fn find_roots_single_linear_root() {
        let mut obj = CountedObjective::new(|x| x - 0.5);
        let report = find_roots(&mut obj, 0.0, 1.0, &cfg()).unwrap();
        assert_eq!(report.roots.len(), 1);
        assert!((report.roots[0].location - 0.5).abs() <= 1e-3);
        assert_eq!(report.terminated_by, Termination::WorklistExhausted);
        assert_eq!(report.evaluations, obj.count());
    }

    #[test]
    fn find_roots_three_roots_behind_one_sign_change() {
        // f(0) < 0 and f(1) > 0, so the whole domain is a single bracket,
        // yet three roots hide inside. Expected locations frozen from a
        // dense-grid scan of the factored cubic.
        let f = |x: f64| (x - 0.25) * (x - 0.5) * (x - 0.75);
        let expected = [0.25, 0.5, 0.75];
        let mut obj = CountedObjective::new(f);
        let config = cfg().with_ht_scale(0.01);
        let report = find_roots(&mut obj, 0.0, 1.0, &config).unwrap();
        assert_eq!(report.roots.len(), 3, "roots: {:?}", report.roots);
        for (root, want) in report.roots.iter().zip(expected) {
            assert!(
                (root.location - want).abs() <= root.error_bound.max(1e-3),
                "root {} expected near {}",
                root.location,
                want
            );
        }
    }

    #[test]
    fn find_roots_budget_exhaustion_is_reported_not_raised() {
        // A triple root with a near neighbor keeps |f| microscopic over a
        // wide region; at width_exponent 1 the subdivision runs away, and
        // with near-zero capture off nothing quenches it before the budget.
        let f = |x: f64| (x - 0.5).powi(3) * (x - 0.50001) * (x - 1.0);
        let mut obj = CountedObjective::new(f);
        let config = cfg()
            .with_ht_scale(20.0)
            .with_tolerances(1e-5, 1e-5)
            .with_max_evaluations(500)
            .with_even_detection(false);
        let report = find_roots(&mut obj, 0.0, 1.5, &config).unwrap();
        assert_eq!(report.terminated_by, Termination::BudgetExceeded);
        assert!(report.evaluations <= 500);
    }

    #[test]
    fn find_roots_rejects_non_finite_objectives() {
        let mut obj = CountedObjective::new(|x| 1.0 / (x - 0.5));
        let config = cfg();
        // Midpoint of [0, 1] lands exactly on the pole.
        let err = find_roots(&mut obj, 0.0, 1.0, &config).unwrap_err();
        assert!(matches!(err, Error::NonFiniteValue { .. }));
    }

    #[test]
    fn trace_carries_ht_annotations_for_midpoint_probes() {
        let f = |x: f64| (x - 0.3) * (x - 0.7);
        let mut obj = CountedObjective::with_trace(f);
        let report = find_roots(&mut obj, 0.0, 1.0, &cfg()).unwrap();
        let trace = report.trace.as_ref().unwrap();
        assert_eq!(trace.len(), report.evaluations);
        // Endpoint probes carry no threshold; at least one midpoint does.
        assert!(trace[0].ht.is_none());
        assert!(trace[1].ht.is_none());
        assert!(trace.iter().any(|p| p.ht.is_some()));
        // Cache coherence: re-evaluating every traced point reproduces fx.
        for point in trace {
            assert_eq!(point.fx, f(point.x));
        }
    }

    fn make(a: f64, b: f64, f: impl Fn(f64) -> f64) -> Subinterval {
        Subinterval::from_parts(a, b, f(a), f(b)).unwrap()
    }
}
