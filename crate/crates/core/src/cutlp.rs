//! The cut relaxations of k-edge-connected spanning multi-subgraphs:
//! feasibility, separation, exact cutting-plane optimization, scaling, and
//! the parsimonious comparison between the unbounded and degree-bounded
//! variants.
//!
//! The unbounded variant asks for min-cost `x >= 0` with `x(delta(S)) >= k`
//! on every proper vertex subset; the bounded variant additionally fixes
//! every vertex degree, `x(delta(v)) = k`. For `k = 2` the bounded variant is
//! the Held-Karp subtour relaxation of TSP.

use crate::graph::{cut_edges, global_min_cut, CutSet, GraphError, MultiGraph};
use crate::rational::Rational;
use crate::simplex::{lp_solve, LinearConstraint, LpError, LpStatus, Sense};
use num::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum LpVariant {
    /// Cut constraints only.
    Unbounded,
    /// Cut constraints plus degree equalities `x(delta(v)) = k`.
    Bounded,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CutLpError {
    #[error("k must be at least 1")]
    KZero,
    #[error("solution values must be strictly positive")]
    NonPositiveValue,
    #[error("solution references edge {0}, but the graph has {1} records")]
    BadEdgeIndex(usize, usize),
    #[error("solution graph must have unit multiplicities (expand first)")]
    UnexpandedGraph,
    #[error("solution is defined on a different graph")]
    GraphMismatch,
    #[error("scaling factor must be strictly positive")]
    NonPositiveFactor,
    #[error("parsimony requires metric costs")]
    NotMetric,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Lp(#[from] LpError),
}

/// Strictly positive values on a subset of a graph's edge records; the graph
/// itself is the ambient edge set for all cut constraints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FractionalSolution {
    graph: MultiGraph,
    values: BTreeMap<usize, Rational>,
}

impl FractionalSolution {
    pub fn new(
        graph: MultiGraph,
        values: BTreeMap<usize, Rational>,
    ) -> Result<Self, CutLpError> {
        if graph.edges().iter().any(|e| e.mult != 1) {
            return Err(CutLpError::UnexpandedGraph);
        }
        for (&idx, v) in &values {
            if idx >= graph.edge_count() {
                return Err(CutLpError::BadEdgeIndex(idx, graph.edge_count()));
            }
            if *v <= Rational::zero() {
                return Err(CutLpError::NonPositiveValue);
            }
        }
        Ok(FractionalSolution { graph, values })
    }

    /// Builds a solution from a dense value vector, dropping zero entries.
    pub fn from_dense(graph: MultiGraph, dense: &[Rational]) -> Result<Self, CutLpError> {
        let values = dense
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        FractionalSolution::new(graph, values)
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn value(&self, edge: usize) -> Rational {
        self.values.get(&edge).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.values.iter().map(|(&i, v)| (i, v))
    }

    pub fn support_size(&self) -> usize {
        self.values.len()
    }

    pub fn dense(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.graph.edge_count()];
        for (&i, v) in &self.values {
            out[i] = v.clone();
        }
        out
    }

    /// The subgraph induced by the support, with the solution's values kept
    /// as edge order; indices into it follow support order.
    pub fn support_graph(&self) -> (MultiGraph, Vec<Rational>) {
        let mut edges = Vec::new();
        let mut vals = Vec::new();
        for (&i, v) in &self.values {
            edges.push(self.graph.edge(i).clone());
            vals.push(v.clone());
        }
        (
            MultiGraph::new(self.graph.vertex_count(), edges).unwrap(),
            vals,
        )
    }

    pub fn degree_value(&self, v: usize) -> Rational {
        let mut total = Rational::zero();
        for (&i, val) in &self.values {
            let e = self.graph.edge(i);
            if e.u.0 == v || e.v.0 == v {
                total += val;
            }
        }
        total
    }

    /// Pointwise positive rescaling.
    pub fn scaled(&self, factor: &Rational) -> Result<Self, CutLpError> {
        if *factor <= Rational::zero() {
            return Err(CutLpError::NonPositiveFactor);
        }
        let values = self
            .values
            .iter()
            .map(|(&i, v)| (i, v * factor))
            .collect();
        Ok(FractionalSolution {
            graph: self.graph.clone(),
            values,
        })
    }

    pub fn total_cost(&self) -> Rational {
        self.values
            .iter()
            .map(|(&i, v)| &self.graph.edge(i).cost * v)
            .sum()
    }
}

/// One instance of the relaxation: a costed graph, the connectivity target
/// `k`, and the variant.
#[derive(Clone, Debug)]
pub struct CutLp {
    graph: MultiGraph,
    k: u64,
    variant: LpVariant,
}

/// Result of the cutting-plane solve. Active cuts list every cut row of the
/// final restricted LP, singletons included.
#[derive(Clone, Debug)]
pub enum CutLpSolution {
    Optimal {
        value: Rational,
        solution: FractionalSolution,
        active_cuts: Vec<CutSet>,
    },
    Infeasible {
        /// A cut with no crossing edges, when that is the cause.
        empty_cut: Option<CutSet>,
    },
}

impl CutLp {
    /// Multiplicities are expanded so that each parallel copy is its own LP
    /// variable.
    pub fn new(graph: &MultiGraph, k: u64, variant: LpVariant) -> Result<Self, CutLpError> {
        if k == 0 {
            return Err(CutLpError::KZero);
        }
        Ok(CutLp {
            graph: graph.expanded(),
            k,
            variant,
        })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn variant(&self) -> LpVariant {
        self.variant
    }

    fn k_rational(&self) -> Rational {
        Rational::from_integer(self.k.into())
    }

    /// Minimum-weight violated cut, or `None` when every proper cut carries
    /// weight at least `k`. Deterministic via the contraction order.
    pub fn separate(&self, x: &FractionalSolution) -> Result<Option<CutSet>, CutLpError> {
        if x.graph() != &self.graph {
            return Err(CutLpError::GraphMismatch);
        }
        self.separate_dense(&x.dense())
    }

    fn separate_dense(&self, dense: &[Rational]) -> Result<Option<CutSet>, CutLpError> {
        if self.graph.vertex_count() < 2 {
            return Ok(None);
        }
        let (cut, value) = global_min_cut(&self.graph, dense)?;
        if value < self.k_rational() {
            Ok(Some(cut))
        } else {
            Ok(None)
        }
    }

    fn degree_rows(&self) -> Vec<LinearConstraint> {
        let n = self.graph.vertex_count();
        let m = self.graph.edge_count();
        (0..n)
            .map(|v| {
                let mut coeffs = vec![Rational::zero(); m];
                for (i, e) in self.graph.edges().iter().enumerate() {
                    if e.u.0 == v || e.v.0 == v {
                        coeffs[i] = Rational::one();
                    }
                }
                LinearConstraint::new(coeffs, Sense::Eq, self.k_rational())
            })
            .collect()
    }

    fn cut_row(&self, cut: &CutSet) -> LinearConstraint {
        let m = self.graph.edge_count();
        let mut coeffs = vec![Rational::zero(); m];
        for (i, e) in self.graph.edges().iter().enumerate() {
            if e.crosses(cut) {
                coeffs[i] = Rational::one();
            }
        }
        LinearConstraint::new(coeffs, Sense::Ge, self.k_rational())
    }

    /// Exact optimum of the full exponential LP by cutting planes: solve the
    /// restricted LP, add the minimum-weight violated cut, repeat until the
    /// final iterate separates clean.
    pub fn solve(&self) -> Result<CutLpSolution, CutLpError> {
        let n = self.graph.vertex_count();
        let costs: Vec<Rational> = self.graph.edges().iter().map(|e| e.cost.clone()).collect();

        let mut rows = Vec::new();
        let mut cuts: Vec<CutSet> = Vec::new();
        match self.variant {
            LpVariant::Bounded => rows.extend(self.degree_rows()),
            LpVariant::Unbounded => {
                for v in 1..n {
                    // v = 0 is covered as the complement of {1..n-1}; keep it
                    // anyway so every singleton is an explicit starting row.
                    let cut = CutSet::from_members(n, &[v]);
                    rows.push(self.cut_row(&cut));
                    cuts.push(cut);
                }
                if n >= 2 {
                    let cut = CutSet::from_members(n, &[0]).normalize();
                    rows.push(self.cut_row(&cut));
                    cuts.push(cut);
                }
            }
        }
        if let LpVariant::Bounded = self.variant {
            for v in 1..n {
                let cut = CutSet::from_members(n, &[v]);
                cuts.push(cut);
            }
        }

        // Proper cuts exist only for n >= 2; one round per added cut.
        let round_cap = if n >= 2 { 1usize << (n - 1) } else { 1 };
        for _ in 0..round_cap {
            let outcome = lp_solve(&costs, &rows, None)?;
            match outcome.status {
                LpStatus::Infeasible => {
                    return Ok(CutLpSolution::Infeasible { empty_cut: None });
                }
                LpStatus::Unbounded => unreachable!("nonnegative costs over x >= 0"),
                LpStatus::Optimal => {}
            }
            let dense = outcome.solution.expect("optimal outcome carries a point");
            match self.separate_dense(&dense)? {
                Some(cut) => {
                    if cut_edges(&self.graph, &cut)?.is_empty() {
                        return Ok(CutLpSolution::Infeasible {
                            empty_cut: Some(cut),
                        });
                    }
                    rows.push(self.cut_row(&cut));
                    cuts.push(cut);
                }
                None => {
                    let value = outcome.value.expect("optimal outcome carries a value");
                    let solution = FractionalSolution::from_dense(self.graph.clone(), &dense)?;
                    return Ok(CutLpSolution::Optimal {
                        value,
                        solution,
                        active_cuts: cuts,
                    });
                }
            }
        }
        unreachable!("cutting planes add each cut at most once");
    }

    /// Optimal value alone, treating infeasibility as `None`.
    pub fn solve_value(&self) -> Result<Option<Rational>, CutLpError> {
        Ok(match self.solve()? {
            CutLpSolution::Optimal { value, .. } => Some(value),
            CutLpSolution::Infeasible { .. } => None,
        })
    }
}

/// Exact feasibility for the variant at level `k`: degree equalities (bounded
/// case) plus a clean separation run.
pub fn check_feasible(
    x: &FractionalSolution,
    k: u64,
    variant: LpVariant,
) -> Result<bool, CutLpError> {
    let lp = CutLp::new(x.graph(), k, variant)?;
    if let LpVariant::Bounded = variant {
        let kr = Rational::from_integer(k.into());
        for v in 0..x.graph().vertex_count() {
            if x.degree_value(v) != kr {
                return Ok(false);
            }
        }
    }
    Ok(lp.separate(x)?.is_none())
}

/// True when the graph is simple, complete, and its costs satisfy the
/// triangle inequality.
pub fn is_metric_complete(g: &MultiGraph) -> bool {
    let n = g.vertex_count();
    let mut cost = vec![vec![None::<Rational>; n]; n];
    for e in g.edges() {
        if e.mult != 1 || cost[e.u.0][e.v.0].is_some() {
            return false;
        }
        cost[e.u.0][e.v.0] = Some(e.cost.clone());
        cost[e.v.0][e.u.0] = Some(e.cost.clone());
    }
    for u in 0..n {
        for v in u + 1..n {
            if cost[u][v].is_none() {
                return false;
            }
        }
    }
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                if u == v || v == w || u == w {
                    continue;
                }
                let direct = cost[u][v].as_ref().unwrap();
                let via = cost[u][w].as_ref().unwrap() + cost[w][v].as_ref().unwrap();
                if *direct > via {
                    return false;
                }
            }
        }
    }
    true
}

/// Solves both variants on a metric instance and returns
/// `(opt_unbounded, opt_bounded)`. Equality of the two is the parsimonious
/// property; it is asserted by the test suite, not assumed here.
pub fn parsimonious_compare(
    g: &MultiGraph,
    k: u64,
) -> Result<(Rational, Rational), CutLpError> {
    if !is_metric_complete(g) {
        return Err(CutLpError::NotMetric);
    }
    let unbounded = CutLp::new(g, k, LpVariant::Unbounded)?
        .solve_value()?
        .expect("complete graphs admit feasible points");
    let bounded = CutLp::new(g, k, LpVariant::Bounded)?
        .solve_value()?
        .expect("complete graphs admit feasible points");
    Ok((unbounded, bounded))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MultiEdge;
    use crate::rational::{int, ratio};

    fn uniform(graph: &MultiGraph, value: Rational) -> FractionalSolution {
        let dense = vec![value; graph.edge_count()];
        FractionalSolution::from_dense(graph.clone(), &dense).unwrap()
    }

    #[test]
    fn separate_uniform_k4_is_clean() {
        let g = MultiGraph::complete(4);
        let lp = CutLp::new(&g, 2, LpVariant::Bounded).unwrap();
        let x = uniform(&g, ratio(2, 3));
        assert_eq!(lp.separate(&x).unwrap(), None);
    }

    #[test]
    fn separate_path_finds_leaf_bridge() {
        let g = MultiGraph::path(3);
        let lp = CutLp::new(&g, 2, LpVariant::Unbounded).unwrap();
        let x = uniform(&g, int(1));
        let cut = lp.separate(&x).unwrap().expect("a bridge cut");
        assert_eq!(cut.len(), 1);
        let dense = x.dense();
        assert_eq!(crate::graph::cut_weight(&g, &cut, &dense), int(1));
    }

    #[test]
    fn solve_bounded_k4_unit_costs() {
        let lp = CutLp::new(&MultiGraph::complete(4), 2, LpVariant::Bounded).unwrap();
        assert_eq!(lp.solve_value().unwrap(), Some(int(4)));
    }

    #[test]
    fn solve_unbounded_c5_is_integral_tour() {
        let lp = CutLp::new(&MultiGraph::cycle(5), 2, LpVariant::Unbounded).unwrap();
        let CutLpSolution::Optimal { value, solution, .. } = lp.solve().unwrap() else {
            panic!("feasible instance");
        };
        assert_eq!(value, int(5));
        for i in 0..5 {
            assert_eq!(solution.value(i), int(1));
        }
    }

    #[test]
    fn solve_unbounded_k5_k1_is_half_integral() {
        let lp = CutLp::new(&MultiGraph::complete(5), 1, LpVariant::Unbounded).unwrap();
        assert_eq!(lp.solve_value().unwrap(), Some(ratio(5, 2)));
    }

    #[test]
    fn solve_detects_empty_cut() {
        let disconnected = MultiGraph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        let lp = CutLp::new(&disconnected, 1, LpVariant::Unbounded).unwrap();
        match lp.solve().unwrap() {
            CutLpSolution::Infeasible { empty_cut } => {
                let cut = empty_cut.expect("a cut with no crossing edges");
                assert!(cut_edges(&disconnected, &cut).unwrap().is_empty());
            }
            CutLpSolution::Optimal { .. } => panic!("disconnected graphs are infeasible"),
        }
    }

    #[test]
    fn solve_detects_degree_system_infeasibility() {
        // On a path, leaf degrees force the middle vertex over quota.
        let lp = CutLp::new(&MultiGraph::path(3), 2, LpVariant::Bounded).unwrap();
        assert!(matches!(
            lp.solve().unwrap(),
            CutLpSolution::Infeasible { .. }
        ));
    }

    #[test]
    fn solve_exit_state_is_clean_and_optimal() {
        let g = MultiGraph::complete(5);
        let lp = CutLp::new(&g, 2, LpVariant::Unbounded).unwrap();
        let CutLpSolution::Optimal { value, solution, active_cuts } = lp.solve().unwrap() else {
            panic!("feasible instance");
        };
        assert_eq!(lp.separate(&solution).unwrap(), None);
        assert_eq!(solution.total_cost(), value);
        // Every active cut is satisfied exactly or slack, never violated.
        let dense = solution.dense();
        for cut in &active_cuts {
            assert!(crate::graph::cut_weight(&g, cut, &dense) >= int(2));
        }
    }

    #[test]
    fn feasibility_of_integral_tour() {
        let g = MultiGraph::cycle(6);
        let x = uniform(&g, int(1));
        assert!(check_feasible(&x, 2, LpVariant::Bounded).unwrap());
        assert!(!check_feasible(&x, 3, LpVariant::Bounded).unwrap());
        assert!(!check_feasible(&x, 3, LpVariant::Unbounded).unwrap());
    }

    #[test]
    fn scaling_matches_feasibility_levels() {
        let g = MultiGraph::cycle(4);
        let half = uniform(&g, ratio(1, 2));
        let doubled = half.scaled(&int(2)).unwrap();
        for i in 0..4 {
            assert_eq!(doubled.value(i), int(1));
        }
        assert_eq!(half.scaled(&int(1)).unwrap(), half);
        assert!(half.scaled(&int(0)).is_err());
        assert!(half.scaled(&int(-2)).is_err());

        assert!(check_feasible(&half, 1, LpVariant::Unbounded).unwrap());
        assert!(check_feasible(&doubled, 2, LpVariant::Unbounded).unwrap());
    }

    #[test]
    fn parsimonious_small_instances() {
        assert_eq!(
            parsimonious_compare(&MultiGraph::complete(4), 2).unwrap(),
            (int(4), int(4))
        );
        assert_eq!(
            parsimonious_compare(&MultiGraph::complete(3), 2).unwrap(),
            (int(3), int(3))
        );
        assert_eq!(
            parsimonious_compare(&MultiGraph::complete(5), 1).unwrap(),
            (ratio(5, 2), ratio(5, 2))
        );
    }

    #[test]
    fn parsimonious_rejects_non_metric() {
        let edges = vec![
            MultiEdge::new(0, 1, int(1), 1),
            MultiEdge::new(1, 2, int(1), 1),
            MultiEdge::new(0, 2, int(5), 1),
        ];
        let g = MultiGraph::new(3, edges).unwrap();
        assert_eq!(
            parsimonious_compare(&g, 2).unwrap_err(),
            CutLpError::NotMetric
        );
        let incomplete = MultiGraph::cycle(4);
        assert_eq!(
            parsimonious_compare(&incomplete, 2).unwrap_err(),
            CutLpError::NotMetric
        );
    }

    #[test]
    fn bounded_is_never_below_unbounded() {
        for (g, k) in [
            (MultiGraph::complete(4), 2),
            (MultiGraph::complete(5), 2),
            (MultiGraph::complete(6), 3),
        ] {
            let (unb, bnd) = parsimonious_compare(&g, k).unwrap();
            assert!(bnd >= unb);
        }
    }

    #[test]
    fn rejects_zero_k_and_bad_solutions() {
        let g = MultiGraph::cycle(3);
        assert!(matches!(
            CutLp::new(&g, 0, LpVariant::Unbounded),
            Err(CutLpError::KZero)
        ));
        let mut vals = BTreeMap::new();
        vals.insert(0usize, int(0));
        assert!(FractionalSolution::new(g.clone(), vals).is_err());
        let mut vals = BTreeMap::new();
        vals.insert(7usize, int(1));
        assert!(FractionalSolution::new(g, vals).is_err());
    }
}
