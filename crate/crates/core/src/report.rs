//! Root records and the solve report every solver returns.

use serde::{Deserialize, Serialize};

/// How a root was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootKind {
    /// The objective changes sign across the reported enclosure.
    Bracketed,
    /// |f| and |f'| both vanish at the location: a confirmed even-multiple
    /// root.
    EvenMultiple,
    /// |f| vanishes at the location but no derivative confirmation was
    /// available; this is the even-multiple candidate classification.
    NearZero,
}

impl std::fmt::Display for RootKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RootKind::Bracketed => write!(f, "bracketed"),
            RootKind::EvenMultiple => write!(f, "even-multiple"),
            RootKind::NearZero => write!(f, "near-zero"),
        }
    }
}

/// A located root with its certified enclosure half-width.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub location: f64,
    pub error_bound: f64,
    pub kind: RootKind,
}

/// Why a solve stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    /// Every pending subinterval was processed.
    WorklistExhausted,
    /// The evaluation budget ran out; the report carries the roots found so
    /// far.
    BudgetExceeded,
}

impl std::fmt::Display for Termination {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Termination::WorklistExhausted => write!(f, "worklist exhausted"),
            Termination::BudgetExceeded => write!(f, "budget exceeded"),
        }
    }
}

/// One objective evaluation in solve order. `ht` carries the halving
/// threshold in force for the subinterval whose midpoint this evaluation
/// probed; it is absent for endpoint and bisection-interior evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub x: f64,
    pub fx: f64,
    pub ht: Option<f64>,
}

/// The outcome of a solve: roots sorted ascending plus exact evaluation
/// accounting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub roots: Vec<Root>,
    pub evaluations: usize,
    pub derivative_evaluations: usize,
    pub terminated_by: Termination,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<Vec<TracePoint>>,
}

/// Sorts roots ascending and merges records that located the same root.
///
/// Two records are duplicates when their locations agree within the tighter
/// of the two error bounds, or within a few ulps (a root sitting on a shared
/// subinterval endpoint gets rediscovered from both sides at that scale).
/// The merge keeps the record with the smaller bound. Comparing against the
/// tighter bound rather than the sum keeps a loosely-enclosed capture from
/// swallowing a distinct neighbor whose enclosure merely touches it.
pub(crate) fn dedup_roots(mut roots: Vec<Root>) -> Vec<Root> {
    roots.sort_by(|a, b| a.location.total_cmp(&b.location));
    let mut out: Vec<Root> = Vec::with_capacity(roots.len());
    for root in roots {
        if let Some(last) = out.last_mut() {
            let ulp_floor = 4.0 * crate::DEFAULT_MACHINE_EPS * root.location.abs().max(1.0);
            let merge_within = last.error_bound.min(root.error_bound).max(ulp_floor);
            if root.location - last.location < merge_within {
                if root.error_bound < last.error_bound {
                    *last = root;
                }
                continue;
            }
        }
        out.push(root);
    }
    out
}
