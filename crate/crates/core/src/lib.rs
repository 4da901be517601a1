//! Find every real root of a univariate function on a bounded interval.
//!
//! The workhorse is [`amr::find_roots`]: a bracketing solver that subdivides
//! the domain adaptively, refining the mesh only where the function
//! approaches zero. Compared to scanning a uniform mesh fine enough to
//! separate the closest pair of roots, it typically needs orders of
//! magnitude fewer evaluations, encloses close roots with proportionally
//! tighter error bounds, and can capture even-multiple roots that no
//! sign-change test can see.
//!
//! Also here:
//! * [`static_mesh`] — the uniform-mesh baseline (scan plus classic
//!   bisection) for cost comparisons,
//! * [`two_phase`] — a two-pass strategy for domains mixing odd-multiple,
//!   even-multiple, and clustered simple roots,
//! * [`expr`] — a small expression language with symbolic differentiation,
//!   so objectives can come from text.
//!
//! ```
//! use allroots::{amr, CountedObjective, SolverConfig};
//!
//! let mut f = CountedObjective::new(|x: f64| (x - 0.25) * (x - 0.75));
//! let cfg = SolverConfig::default();
//! let report = amr::find_roots(&mut f, 0.0, 1.0, &cfg).unwrap();
//! assert_eq!(report.roots.len(), 2);
//! assert!((report.roots[0].location - 0.25).abs() < 1e-5);
//! assert!((report.roots[1].location - 0.75).abs() < 1e-5);
//! ```
//!
//! Every evaluation goes through [`CountedObjective`], so the evaluation
//! counts in a [`SolveReport`] are exact, and an optional trace records each
//! probed point for plotting mesh density against the function.

// Guards are written `!(a < b)` rather than `a >= b` on purpose: the negated
// form is true for NaN, so non-numbers fail validation instead of slipping
// through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod amr;
mod config;
mod error;
pub mod expr;
mod interval;
mod objective;
mod report;
pub mod static_mesh;
pub mod two_phase;

pub use config::{SolverConfig, DEFAULT_MACHINE_EPS};
pub use error::Error;
pub use interval::{make_subinterval, Subinterval};
pub use objective::{central_difference, CountedObjective};
pub use report::{Root, RootKind, SolveReport, Termination, TracePoint};

/// How hard a root set is to separate: the width of the search bound divided
/// by the smallest distance between two roots. Uniform meshes need on the
/// order of this many evaluations; the adaptive solver does not.
pub fn closeness_index(bound_width: f64, min_root_separation: f64) -> Result<f64, Error> {
    if min_root_separation == 0.0 {
        return Err(Error::DivisionDegenerate);
    }
    debug_assert!(bound_width > 0.0 && min_root_separation > 0.0);
    Ok(bound_width / min_root_separation)
}
