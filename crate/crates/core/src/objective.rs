//! Objective wrapper with exact evaluation accounting.
//!
//! Every solver in this crate works through [`CountedObjective`], so reported
//! evaluation counts are exact by construction: each underlying call bumps the
//! counter by one, and the counter never resets mid-solve. An optional trace
//! records every `(x, f(x))` pair in evaluation order.

use crate::error::Error;

/// A univariate objective instrumented with an evaluation counter and an
/// optional point trace.
pub struct CountedObjective<'a> {
    f: Box<dyn FnMut(f64) -> f64 + 'a>,
    count: usize,
    trace: Option<Vec<(f64, f64)>>,
}

impl<'a> CountedObjective<'a> {
    /// Wraps a function without tracing.
    pub fn new(f: impl FnMut(f64) -> f64 + 'a) -> Self {
        Self {
            f: Box::new(f),
            count: 0,
            trace: None,
        }
    }

    /// Wraps a function and records every evaluated point.
    pub fn with_trace(f: impl FnMut(f64) -> f64 + 'a) -> Self {
        Self {
            f: Box::new(f),
            count: 0,
            trace: Some(Vec::new()),
        }
    }

    /// Evaluates the objective at `x`, counting the call.
    ///
    /// The counter increments even when the value turns out non-finite; the
    /// error reports the offending point.
    pub fn eval(&mut self, x: f64) -> Result<f64, Error> {
        let fx = (self.f)(x);
        self.count += 1;
        if let Some(trace) = &mut self.trace {
            trace.push((x, fx));
        }
        if fx.is_finite() {
            Ok(fx)
        } else {
            Err(Error::NonFiniteValue { x, fx })
        }
    }

    /// Total evaluations performed through this wrapper so far.
    pub fn count(&self) -> usize {
        self.count
    }

    /// The recorded `(x, f(x))` pairs, if tracing is enabled.
    pub fn trace(&self) -> Option<&[(f64, f64)]> {
        self.trace.as_deref()
    }

    pub fn is_tracing(&self) -> bool {
        self.trace.is_some()
    }
}

impl std::fmt::Debug for CountedObjective<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CountedObjective")
            .field("count", &self.count)
            .field("tracing", &self.trace.is_some())
            .finish()
    }
}

/// Builds a central-difference approximation of `f`'s first derivative, for
/// use when no closed-form derivative is available.
///
/// The step is `max(machine_eps^(1/3), 1e-8) * max(1, |x|)`; thresholds
/// compared against the result should be read against that truncation error,
/// not against an exact derivative.
pub fn central_difference<'a>(
    mut f: impl FnMut(f64) -> f64 + 'a,
    machine_eps: f64,
) -> impl FnMut(f64) -> f64 + 'a {
    let base_step = machine_eps.cbrt().max(1e-8);
    move |x: f64| {
        let h = base_step * x.abs().max(1.0);
        (f(x + h) - f(x - h)) / (2.0 * h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_every_call() {
        let mut obj = CountedObjective::new(|x| x * x);
        assert_eq!(obj.count(), 0);
        obj.eval(2.0).unwrap();
        obj.eval(3.0).unwrap();
        assert_eq!(obj.count(), 2);
    }

    #[test]
    fn trace_matches_count() {
        let mut obj = CountedObjective::with_trace(|x| 2.0 * x);
        for i in 0..5 {
            obj.eval(i as f64).unwrap();
        }
        let trace = obj.trace().unwrap();
        assert_eq!(trace.len(), obj.count());
        assert_eq!(trace[3], (3.0, 6.0));
    }

    #[test]
    fn non_finite_is_an_error_but_still_counted() {
        let mut obj = CountedObjective::new(|x| 1.0 / x);
        let err = obj.eval(0.0).unwrap_err();
        assert!(matches!(err, Error::NonFiniteValue { x, .. } if x == 0.0));
        assert_eq!(obj.count(), 1);
    }

    #[test]
    fn central_difference_tracks_derivative() {
        let mut df = central_difference(|x| x * x * x, f64::EPSILON);
        assert!((df(2.0) - 12.0).abs() < 1e-6);
        assert!((df(0.0) - 0.0).abs() < 1e-9);
    }
}
