//! Candidate subintervals with cached endpoint values.

use crate::error::Error;
use crate::objective::CountedObjective;

/// A candidate interval carrying the objective values at both endpoints.
///
/// Caching the endpoint values is what keeps the subdivision cheap: halving a
/// subinterval costs exactly one new evaluation (the midpoint), which both
/// children then share as an endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Subinterval {
    pub x_left: f64,
    pub x_right: f64,
    /// Cached objective value at `x_left`.
    pub f_left: f64,
    /// Cached objective value at `x_right`.
    pub f_right: f64,
}

impl Subinterval {
    /// Builds a subinterval from caller-supplied endpoint values without
    /// evaluating the objective.
    ///
    /// The caller is responsible for cache coherence: `f_left` and `f_right`
    /// must be the objective's values at the endpoints.
    pub fn from_parts(x_left: f64, x_right: f64, f_left: f64, f_right: f64) -> Result<Self, Error> {
        if !(x_left < x_right) {
            return Err(Error::InvalidInterval {
                a: x_left,
                b: x_right,
            });
        }
        Ok(Self {
            x_left,
            x_right,
            f_left,
            f_right,
        })
    }

    pub fn width(&self) -> f64 {
        self.x_right - self.x_left
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.x_left + self.x_right)
    }
}

/// Builds a subinterval over `[a, b]`, evaluating the objective at both
/// endpoints (exactly two evaluations).
pub fn make_subinterval(
    a: f64,
    b: f64,
    objective: &mut CountedObjective<'_>,
) -> Result<Subinterval, Error> {
    if !(a < b) {
        return Err(Error::InvalidInterval { a, b });
    }
    let fa = objective.eval(a)?;
    let fb = objective.eval(b)?;
    Subinterval::from_parts(a, b, fa, fb)
}
