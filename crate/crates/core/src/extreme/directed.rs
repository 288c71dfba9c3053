//! Lift to the directed cut relaxation and extreme points of its fibers.
//!
//! The directed relaxation asks for nonnegative arc values with
//! `y(delta_out(U)) >= 1` on every proper vertex subset. Dropping directions
//! (`x_{u,v} = y_(u,v) + y_(v,u)`) projects it onto the undirected relaxation
//! at k = 2; the symmetric lift `y = x / 2` shows the projection is onto.

use super::ExtremeError;
use crate::cutlp::{check_feasible, FractionalSolution, LpVariant};
use crate::graph::MultiGraph;
use crate::matrix::RowBasis;
use crate::rational::Rational;
use crate::simplex::{lp_solve, LinearConstraint, LpStatus, Sense};
use num::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use std::collections::BTreeMap;

pub const DIRECTED_BOUND: usize = 16;
const OBJECTIVE_DRAWS: usize = 32;

/// Strictly positive values on arcs of a complete digraph on `n` vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DirectedSolution {
    n: usize,
    values: BTreeMap<(usize, usize), Rational>,
}

impl DirectedSolution {
    fn new(n: usize, values: BTreeMap<(usize, usize), Rational>) -> Self {
        debug_assert!(values.values().all(|v| *v > Rational::zero()));
        DirectedSolution { n, values }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.values.iter().map(|(&(u, v), w)| (u, v, w))
    }

    pub fn arc_count(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, from: usize, to: usize) -> Rational {
        self.values
            .get(&(from, to))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn min_positive_value(&self) -> Option<Rational> {
        self.values.values().min().cloned()
    }

    /// `y(delta_out(U))` for the member mask `U`.
    pub fn out_cut_value(&self, members: u64) -> Rational {
        let mut total = Rational::zero();
        for (&(u, v), w) in &self.values {
            if members >> u & 1 == 1 && members >> v & 1 == 0 {
                total += w;
            }
        }
        total
    }

    /// Projects onto the undirected relaxation: each record of `graph` gets
    /// the sum of its two arc values. Every positive pair value must land on
    /// exactly one record.
    pub fn drop_directions(
        &self,
        graph: &MultiGraph,
    ) -> Result<FractionalSolution, ExtremeError> {
        let mut pair_values: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (&(u, v), w) in &self.values {
            let key = (u.min(v), u.max(v));
            *pair_values.entry(key).or_insert_with(Rational::zero) += w;
        }
        let mut values = BTreeMap::new();
        for (idx, e) in graph.edges().iter().enumerate() {
            let key = (e.u.0.min(e.v.0), e.u.0.max(e.v.0));
            if let Some(v) = pair_values.remove(&key) {
                values.insert(idx, v);
            }
        }
        if !pair_values.is_empty() {
            return Err(ExtremeError::CutLp(
                crate::cutlp::CutLpError::GraphMismatch,
            ));
        }
        Ok(FractionalSolution::new(graph.clone(), values)?)
    }
}

/// The symmetric lift `y_(u,v) = y_(v,u) = x_e / 2`; requires `x` feasible
/// for the unbounded relaxation at k = 2, which makes the lift feasible for
/// the directed relaxation.
pub fn lift_to_directed(x: &FractionalSolution) -> Result<DirectedSolution, ExtremeError> {
    if !check_feasible(x, 2, LpVariant::Unbounded)? {
        return Err(ExtremeError::InfeasibleLift);
    }
    let half = Rational::new(1.into(), 2.into());
    let mut values: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    for (idx, v) in x.support() {
        let e = x.graph().edge(idx);
        let contribution = v * &half;
        *values
            .entry((e.u.0, e.v.0))
            .or_insert_with(Rational::zero) += &contribution;
        *values
            .entry((e.v.0, e.u.0))
            .or_insert_with(Rational::zero) += &contribution;
    }
    Ok(DirectedSolution::new(x.graph().vertex_count(), values))
}

/// An extreme point of the face of the directed relaxation that drops to
/// `x_star`: exact LP over the face under a generic objective, re-drawn from
/// the seeded generator until the optimum is a vertex.
///
/// `x_star` is expected to be a certified extreme point of the undirected
/// relaxation; feasibility is re-checked here, extremeness is the caller's
/// contract.
pub fn directed_face_extreme(
    x_star: &FractionalSolution,
    seed: Option<u64>,
) -> Result<DirectedSolution, ExtremeError> {
    let n = x_star.graph().vertex_count();
    if n > DIRECTED_BOUND {
        return Err(ExtremeError::DirectedTooLarge(n, DIRECTED_BOUND));
    }
    if !check_feasible(x_star, 2, LpVariant::Unbounded)? {
        return Err(ExtremeError::InfeasibleLift);
    }

    // Arc variables: for support record p on (u, v), arc 2p is u->v and arc
    // 2p+1 is v->u.
    let support: Vec<(usize, usize, Rational)> = x_star
        .support()
        .map(|(idx, v)| {
            let e = x_star.graph().edge(idx);
            (e.u.0, e.v.0, v.clone())
        })
        .collect();
    let arcs: Vec<(usize, usize)> = support
        .iter()
        .flat_map(|&(u, v, _)| [(u, v), (v, u)])
        .collect();
    let num_arcs = arcs.len();

    let pairing_rows: Vec<LinearConstraint> = support
        .iter()
        .enumerate()
        .map(|(p, (_, _, xv))| {
            let mut coeffs = vec![Rational::zero(); num_arcs];
            coeffs[2 * p] = Rational::one();
            coeffs[2 * p + 1] = Rational::one();
            LinearConstraint::new(coeffs, Sense::Eq, xv.clone())
        })
        .collect();

    let cut_row = |members: u64| -> LinearConstraint {
        let coeffs = arcs
            .iter()
            .map(|&(u, v)| {
                if members >> u & 1 == 1 && members >> v & 1 == 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        LinearConstraint::new(coeffs, Sense::Ge, Rational::one())
    };

    let full = (1u64 << n) - 1;
    let out_value = |members: u64, dense: &[Rational]| -> Rational {
        let mut total = Rational::zero();
        for (i, &(u, v)) in arcs.iter().enumerate() {
            if members >> u & 1 == 1 && members >> v & 1 == 0 && !dense[i].is_zero() {
                total += &dense[i];
            }
        }
        total
    };

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
    for draw in 0..OBJECTIVE_DRAWS {
        let objective: Vec<Rational> = if draw == 0 {
            (0..num_arcs)
                .map(|i| Rational::new(1.into(), (i as i64 + 2).into()))
                .collect()
        } else {
            (0..num_arcs)
                .map(|_| Rational::new(rng.gen_range(1..=1_000_000i64).into(), 1_000_000.into()))
                .collect()
        };

        // Cutting planes over the directed cut constraints.
        let mut rows = pairing_rows.clone();
        for v in 0..n {
            rows.push(cut_row(1 << v));
            rows.push(cut_row(full ^ (1 << v)));
        }
        let dense = loop {
            let outcome = lp_solve(&objective, &rows, None)?;
            assert_eq!(
                outcome.status,
                LpStatus::Optimal,
                "the face of a feasible point is nonempty and bounded"
            );
            let dense = outcome.solution.expect("optimal outcome carries a point");
            let mut violated: Option<(Rational, u64)> = None;
            for members in 1..full {
                let value = out_value(members, &dense);
                if value < Rational::one()
                    && violated.as_ref().map(|(best, _)| value < *best).unwrap_or(true)
                {
                    violated = Some((value, members));
                }
            }
            match violated {
                Some((_, members)) => rows.push(cut_row(members)),
                None => break dense,
            }
        };

        if is_face_vertex(n, &arcs, &support, &dense, &out_value) {
            let values: BTreeMap<(usize, usize), Rational> = arcs
                .iter()
                .zip(&dense)
                .filter(|(_, v)| !v.is_zero())
                .map(|(&(u, v), w)| ((u, v), w.clone()))
                .collect();
            let result = DirectedSolution::new(n, values);
            debug_assert_eq!(
                result.drop_directions(x_star.graph())?.dense(),
                x_star.dense()
            );
            return Ok(result);
        }
    }
    Err(ExtremeError::NoVertexFound(OBJECTIVE_DRAWS))
}

/// Vertex test on the face: tight rows (pairing equalities, tight directed
/// cuts, active nonnegativity bounds) must have full rank over the arcs.
fn is_face_vertex(
    n: usize,
    arcs: &[(usize, usize)],
    support: &[(usize, usize, Rational)],
    dense: &[Rational],
    out_value: &dyn Fn(u64, &[Rational]) -> Rational,
) -> bool {
    let num_arcs = arcs.len();
    let mut basis = RowBasis::new();
    for p in 0..support.len() {
        let mut row = vec![Rational::zero(); num_arcs];
        row[2 * p] = Rational::one();
        row[2 * p + 1] = Rational::one();
        basis.try_add(row);
    }
    for (i, v) in dense.iter().enumerate() {
        if v.is_zero() {
            let mut row = vec![Rational::zero(); num_arcs];
            row[i] = Rational::one();
            basis.try_add(row);
        }
    }
    if basis.rank() == num_arcs {
        return true;
    }
    let full = (1u64 << n) - 1;
    for members in 1..full {
        if out_value(members, dense) == Rational::one() {
            let row = arcs
                .iter()
                .map(|&(u, v)| {
                    if members >> u & 1 == 1 && members >> v & 1 == 0 {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            basis.try_add(row);
            if basis.rank() == num_arcs {
                return true;
            }
        }
    }
    false
}
