//! Extreme points of the degree-bounded cut relaxation: the Fibonacci family
//! and its laminar certificate, a construction-agnostic extremeness verifier,
//! small-graph enumeration, per-solution statistics, and the lift to the
//! directed (ATSP) relaxation.

mod directed;
mod enumerate;
mod fibonacci;
mod verify;

pub use directed::{directed_face_extreme, lift_to_directed, DirectedSolution};
pub use enumerate::{enumerate_extreme_points, EnumerateOptions};
pub use fibonacci::{
    canonical_laminar_family, construct_fibonacci, fibonacci_number, FibonacciParams,
    LaminarFamily,
};
pub use verify::{verify_extreme, ExtremenessCertificate, ExtremenessOutcome, Refutation};

use crate::cutlp::{CutLpError, FractionalSolution};
use crate::graph::{CutSet, GraphError};
use crate::rational::{common_denominator, Rational};
use crate::simplex::LpError;
use num::bigint::BigInt;
use num::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExtremeError {
    #[error("Fibonacci parameter t must be at least 3, got {0}")]
    TTooSmall(u32),
    #[error("family of sets is not laminar")]
    NotLaminar,
    #[error("laminar family on {n} vertices has {len} sets, above the 2(n-1)-1 bound")]
    LaminarTooLarge { n: usize, len: usize },
    #[error("tight-cut enumeration bound exceeded: n = {0} > {1}")]
    VerifyTooLarge(usize, usize),
    #[error("cross value requires disjoint sets")]
    OverlappingSets,
    #[error("enumeration bound exceeded: n = {0} > {1} (override explicitly to proceed)")]
    EnumerationBound(usize, usize),
    #[error("the 3-vertex-connectivity filter can only be disabled for n <= 6, got n = {0}")]
    AuditBound(usize),
    #[error("solution is not feasible for the unbounded relaxation at k = 2")]
    InfeasibleLift,
    #[error("directed machinery bound exceeded: n = {0} > {1}")]
    DirectedTooLarge(usize, usize),
    #[error("no vertex of the directed face found after {0} objective draws")]
    NoVertexFound(usize),
    #[error(transparent)]
    CutLp(#[from] CutLpError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Lp(#[from] LpError),
}

/// Exact shape summary of a fractional solution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolutionStats {
    /// Minimum positive entry.
    pub fractionality: Rational,
    /// Least positive integer `d` with `d * x` integral.
    pub denominator: BigInt,
    pub max_support_degree: usize,
    pub vertex_count: usize,
    pub support_edges: usize,
}

pub fn stats(x: &FractionalSolution) -> SolutionStats {
    let n = x.graph().vertex_count();
    let mut fractionality: Option<Rational> = None;
    let mut degree = vec![0usize; n];
    for (idx, v) in x.support() {
        let e = x.graph().edge(idx);
        degree[e.u.0] += 1;
        degree[e.v.0] += 1;
        if fractionality.as_ref().map(|f| v < f).unwrap_or(true) {
            fractionality = Some(v.clone());
        }
    }
    SolutionStats {
        fractionality: fractionality.unwrap_or_else(Rational::zero),
        denominator: if x.support_size() == 0 {
            BigInt::one()
        } else {
            common_denominator(x.support().map(|(_, v)| v))
        },
        max_support_degree: degree.iter().copied().max().unwrap_or(0),
        vertex_count: n,
        support_edges: x.support_size(),
    }
}

/// Total solution value on edges with one end in `s` and the other in `t`.
/// The sets must be disjoint.
pub fn tight_cross_value(
    x: &FractionalSolution,
    s: &CutSet,
    t: &CutSet,
) -> Result<Rational, ExtremeError> {
    if !s.is_disjoint(t) {
        return Err(ExtremeError::OverlappingSets);
    }
    let mut total = Rational::zero();
    for (idx, v) in x.support() {
        let e = x.graph().edge(idx);
        let (a, b) = (e.u.0, e.v.0);
        if (s.contains(a) && t.contains(b)) || (s.contains(b) && t.contains(a)) {
            total += v;
        }
    }
    Ok(total)
}
