//! Solver tunables.

use crate::error::Error;

/// The machine epsilon the solvers assume by default, as commonly quoted for
/// IEEE 754 double precision.
pub const DEFAULT_MACHINE_EPS: f64 = 2.22e-16;

/// Tunables for the adaptive solver.
///
/// `ht_scale` controls how deep subdivision goes: a non-bracketing
/// subinterval of width `w` is halved while
/// `w > ht_scale * min(|f_left|, |f_right|) / w^width_exponent`.
/// Brackets are refined until their width drops below
/// `min(tol_scale * L, tol_cap)` where `L` is the bracket's initial width,
/// so closely spaced roots automatically get tighter enclosures.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// Scale factor of the halving threshold.
    pub ht_scale: f64,
    /// Tolerance per unit of bracket width.
    pub tol_scale: f64,
    /// Upper cap on the bracket tolerance.
    pub tol_cap: f64,
    /// Threshold below which |f(x)| counts as zero (root capture).
    pub near_zero_tol: f64,
    /// Threshold below which |f'(x)| confirms an even-multiple root.
    pub derivative_zero_tol: f64,
    /// Exponent applied to the width in the halving threshold. `1.0` is the
    /// plain definition; values above one rein in the runaway subdivision
    /// that odd-multiple roots otherwise cause.
    pub width_exponent: f64,
    /// Hard cap on objective evaluations per solve.
    pub max_evaluations: usize,
    /// Machine epsilon used for validation and the subdivision width floor.
    pub machine_eps: f64,
    /// Whether near-zero midpoints of non-bracketing subintervals are
    /// captured as roots. Disable when hunting odd-multiple roots only.
    pub detect_even_roots: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            ht_scale: 0.01,
            tol_scale: 1e-2,
            tol_cap: 1e-5,
            near_zero_tol: DEFAULT_MACHINE_EPS,
            derivative_zero_tol: DEFAULT_MACHINE_EPS,
            width_exponent: 1.0,
            max_evaluations: 10_000_000,
            machine_eps: DEFAULT_MACHINE_EPS,
            detect_even_roots: true,
        }
    }
}

impl SolverConfig {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_ht_scale(mut self, ht_scale: f64) -> Self {
        self.ht_scale = ht_scale;
        self
    }

    pub fn with_tolerances(mut self, tol_scale: f64, tol_cap: f64) -> Self {
        self.tol_scale = tol_scale;
        self.tol_cap = tol_cap;
        self
    }

    pub fn with_near_zero_tol(mut self, near_zero_tol: f64) -> Self {
        self.near_zero_tol = near_zero_tol;
        self
    }

    pub fn with_derivative_zero_tol(mut self, derivative_zero_tol: f64) -> Self {
        self.derivative_zero_tol = derivative_zero_tol;
        self
    }

    pub fn with_width_exponent(mut self, width_exponent: f64) -> Self {
        self.width_exponent = width_exponent;
        self
    }

    pub fn with_max_evaluations(mut self, max_evaluations: usize) -> Self {
        self.max_evaluations = max_evaluations;
        self
    }

    pub fn with_even_detection(mut self, detect_even_roots: bool) -> Self {
        self.detect_even_roots = detect_even_roots;
        self
    }

    /// Checks every invariant the solvers rely on. All solver entry points
    /// call this, so an invalid configuration never starts a solve.
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.ht_scale > 0.0) || !self.ht_scale.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "ht_scale must be positive and finite, got {}",
                self.ht_scale
            )));
        }
        if !(self.tol_scale > 0.0) || !self.tol_scale.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "tol_scale must be positive and finite, got {}",
                self.tol_scale
            )));
        }
        if !(self.tol_cap > 0.0) || !self.tol_cap.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "tol_cap must be positive and finite, got {}",
                self.tol_cap
            )));
        }
        if !(self.machine_eps > 0.0) || !self.machine_eps.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "machine_eps must be positive and finite, got {}",
                self.machine_eps
            )));
        }
        // Tolerances below machine epsilon cannot be realized in floating
        // point; reject them rather than looping on unreachable targets.
        if self.near_zero_tol < self.machine_eps {
            return Err(Error::InvalidConfig(format!(
                "near_zero_tol {} is below machine epsilon {}",
                self.near_zero_tol, self.machine_eps
            )));
        }
        if !(self.derivative_zero_tol >= 0.0) {
            return Err(Error::InvalidConfig(format!(
                "derivative_zero_tol must be non-negative, got {}",
                self.derivative_zero_tol
            )));
        }
        if !(self.width_exponent >= 1.0) || !self.width_exponent.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "width_exponent must be at least 1, got {}",
                self.width_exponent
            )));
        }
        if self.max_evaluations == 0 {
            return Err(Error::InvalidConfig(
                "max_evaluations must be positive".into(),
            ));
        }
        Ok(())
    }
}
