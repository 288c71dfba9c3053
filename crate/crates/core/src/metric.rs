//! Metric preprocessing and the conversion of a metric 2-edge-connected
//! multi-subgraph into a no-costlier simple one.
//!
//! The closure replaces a connected costed graph by the complete graph of
//! exact shortest-path costs; solutions on the closure expand back to the
//! original edges at equal cost. The 2-ECSM to 2-ECSS conversion first makes
//! the multiset inclusion-minimal, then repeatedly trades a parallel pair
//! plus an adjacent edge for the closing edge of their triangle, which the
//! triangle inequality makes free or better.

use crate::graph::{GraphError, MultiEdge, MultiGraph};
use crate::rational::Rational;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetricError {
    #[error("graph is disconnected; the closure needs shortest paths between all pairs")]
    Disconnected,
    #[error("edge multiset has {got} entries, expected one per record ({expected})")]
    BadMultisetShape { got: usize, expected: usize },
    #[error("closure solution references edge {0} outside the closure")]
    BadClosureEdge(usize),
    #[error("the multiset is not {0}-edge-connected")]
    NotKConnected(u64),
    #[error("conversion needs at least 3 vertices")]
    TooFewVertices,
    #[error("conversion needs metric costs on a complete graph")]
    NotMetric,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Complete graph of shortest-path costs plus one representative shortest
/// path (as original edge indices) per vertex pair.
#[derive(Clone, Debug)]
pub struct MetricClosure {
    closure: MultiGraph,
    /// Indexed like the closure's edge records.
    paths: Vec<Vec<usize>>,
}

impl MetricClosure {
    pub fn graph(&self) -> &MultiGraph {
        &self.closure
    }

    pub fn path(&self, closure_edge: usize) -> &[usize] {
        &self.paths[closure_edge]
    }
}

/// All-pairs shortest paths over exact rationals (Floyd-Warshall, ties keep
/// the first-found path, so results are deterministic).
pub fn metric_closure(g: &MultiGraph) -> Result<MetricClosure, MetricError> {
    let n = g.vertex_count();
    let mut dist = vec![vec![None::<Rational>; n]; n];
    // hop[u][v]: first edge index on the stored u-v path.
    let mut hop = vec![vec![usize::MAX; n]; n];
    for (idx, e) in g.edges().iter().enumerate() {
        for (a, b) in [(e.u.0, e.v.0), (e.v.0, e.u.0)] {
            let better = dist[a][b].as_ref().map(|d| e.cost < *d).unwrap_or(true);
            if better {
                dist[a][b] = Some(e.cost.clone());
                hop[a][b] = idx;
            }
        }
    }
    for k in 0..n {
        for u in 0..n {
            if u == k || dist[u][k].is_none() {
                continue;
            }
            for v in 0..n {
                if v == u || v == k || dist[k][v].is_none() {
                    continue;
                }
                let via = dist[u][k].clone().unwrap() + dist[k][v].as_ref().unwrap();
                let better = dist[u][v].as_ref().map(|d| via < *d).unwrap_or(true);
                if better {
                    dist[u][v] = Some(via);
                    hop[u][v] = hop[u][k];
                }
            }
        }
    }

    let mut edges = Vec::new();
    let mut paths = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let Some(cost) = dist[u][v].clone() else {
                return Err(MetricError::Disconnected);
            };
            // Walk the stored first-hop pointers to collect the path.
            let mut path = Vec::new();
            let mut at = u;
            while at != v {
                let edge = hop[at][v];
                path.push(edge);
                let e = g.edge(edge);
                at = if e.u.0 == at { e.v.0 } else { e.u.0 };
            }
            debug_assert_eq!(
                path.iter().map(|&i| g.edge(i).cost.clone()).sum::<Rational>(),
                cost
            );
            edges.push(MultiEdge::new(u, v, cost, 1));
            paths.push(path);
        }
    }
    Ok(MetricClosure {
        closure: MultiGraph::new(n, edges)?,
        paths,
    })
}

/// Replaces each closure edge of a solution multiset by its stored shortest
/// path in the original graph. Cost is preserved exactly; connectivity
/// preservation is checked by the callers' cut tests, not assumed.
pub fn expand_to_paths(
    closure: &MetricClosure,
    closure_counts: &[u32],
    original: &MultiGraph,
) -> Result<Vec<u32>, MetricError> {
    if closure_counts.len() != closure.closure.edge_count() {
        return Err(MetricError::BadMultisetShape {
            got: closure_counts.len(),
            expected: closure.closure.edge_count(),
        });
    }
    let mut counts = vec![0u32; original.edge_count()];
    for (idx, &c) in closure_counts.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for &orig_edge in closure.path(idx) {
            if orig_edge >= original.edge_count() {
                return Err(MetricError::BadClosureEdge(idx));
            }
            counts[orig_edge] += c;
        }
    }
    Ok(counts)
}

/// The sub-multigraph selected by `counts` (records with zero count drop).
pub fn multiset_graph(g: &MultiGraph, counts: &[u32]) -> Result<MultiGraph, MetricError> {
    if counts.len() != g.edge_count() {
        return Err(MetricError::BadMultisetShape {
            got: counts.len(),
            expected: g.edge_count(),
        });
    }
    let edges: Vec<MultiEdge> = g
        .edges()
        .iter()
        .zip(counts)
        .filter(|(_, &c)| c > 0)
        .map(|(e, &c)| MultiEdge::new(e.u.0, e.v.0, e.cost.clone(), c * e.mult))
        .collect();
    Ok(MultiGraph::new(g.vertex_count(), edges)?)
}

pub fn multiset_cost(g: &MultiGraph, counts: &[u32]) -> Rational {
    g.edges()
        .iter()
        .zip(counts)
        .map(|(e, &c)| &e.cost * Rational::from_integer((c * e.mult).into()))
        .sum()
}

fn is_multiset_k_connected(g: &MultiGraph, counts: &[u32], k: u64) -> Result<bool, MetricError> {
    let sub = multiset_graph(g, counts)?;
    Ok(crate::graph::is_k_edge_connected(&sub, k))
}

/// Inclusion-minimal k-edge-connected sub-multiset: candidate copies are
/// removed greedily in descending cost order (ties by record index), which
/// is deterministic; an edge that cannot be removed now never becomes
/// removable later.
pub fn minimalize(g: &MultiGraph, counts: &[u32], k: u64) -> Result<Vec<u32>, MetricError> {
    if !is_multiset_k_connected(g, counts, k)? {
        return Err(MetricError::NotKConnected(k));
    }
    let mut order: Vec<usize> = (0..g.edge_count()).filter(|&i| counts[i] > 0).collect();
    order.sort_by(|&a, &b| {
        g.edge(b)
            .cost
            .cmp(&g.edge(a).cost)
            .then(a.cmp(&b))
    });
    let mut current = counts.to_vec();
    for &idx in &order {
        while current[idx] > 0 {
            current[idx] -= 1;
            if is_multiset_k_connected(g, &current, k)? {
                continue;
            }
            current[idx] += 1;
            break;
        }
    }
    Ok(current)
}

/// Converts a metric 2-edge-connected multiset into a simple 2-edge-connected
/// edge set of no greater cost: minimalize, then while a parallel pair `uv`
/// remains, pick the lowest-index outside neighbor `w` of `u` or `v` and
/// replace one `uv` copy and the `uw` (or `vw`) edge by the closing edge.
pub fn ecsm_to_ecss(g: &MultiGraph, counts: &[u32]) -> Result<Vec<u32>, MetricError> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(MetricError::TooFewVertices);
    }
    if !crate::cutlp::is_metric_complete(g) {
        return Err(MetricError::NotMetric);
    }
    if !is_multiset_k_connected(g, counts, 2)? {
        return Err(MetricError::NotKConnected(2));
    }
    let index_of = |a: usize, b: usize| -> usize {
        g.edges()
            .iter()
            .position(|e| (e.u.0, e.v.0) == (a.min(b), a.max(b)) || (e.v.0, e.u.0) == (a.min(b), a.max(b)))
            .expect("complete ground graph")
    };
    let input_cost = multiset_cost(g, counts);

    let mut current = minimalize(g, counts, 2)?;
    loop {
        // Minimality leaves multiplicities at most 2 for k = 2.
        debug_assert!(current.iter().all(|&c| c <= 2));
        let Some(pair_idx) = (0..g.edge_count()).find(|&i| current[i] >= 2) else {
            break;
        };
        let (u, v) = {
            let e = g.edge(pair_idx);
            (e.u.0, e.v.0)
        };

        // Minimality forces the pair to be a bridge of the simplification:
        // u and v must fall apart without it.
        let mut simplified = current.clone();
        simplified[pair_idx] = 0;
        let neighbors = |x: usize, skip: usize| -> Vec<usize> {
            let mut out: Vec<usize> = (0..g.edge_count())
                .filter(|&i| simplified[i] > 0)
                .filter_map(|i| {
                    let e = g.edge(i);
                    if e.u.0 == x {
                        Some(e.v.0)
                    } else if e.v.0 == x {
                        Some(e.u.0)
                    } else {
                        None
                    }
                })
                .filter(|&w| w != skip)
                .collect();
            out.sort_unstable();
            out.dedup();
            out
        };
        assert!(
            !same_component(g, &simplified, u, v),
            "a non-bridge parallel pair contradicts minimality"
        );

        let u_side = neighbors(u, v);
        let v_side = neighbors(v, u);
        // Lowest vertex index wins; prefer the u side on equality (the two
        // sides are disjoint under the bridge assumption).
        let from_u = u_side.first().copied();
        let from_v = v_side.first().copied();
        let (w, anchor_is_u) = match (from_u, from_v) {
            (Some(a), Some(b)) => {
                if a <= b {
                    (a, true)
                } else {
                    (b, false)
                }
            }
            (Some(a), None) => (a, true),
            (None, Some(b)) => (b, false),
            (None, None) => unreachable!("a connected graph on >= 3 vertices has a neighbor"),
        };
        let (anchor, other) = if anchor_is_u { (u, v) } else { (v, u) };
        debug_assert!(!neighbors(other, anchor).contains(&w));

        // Drop one copy of the pair and the anchor-w edge; add other-w.
        current[pair_idx] -= 1;
        current[index_of(anchor, w)] -= 1;
        current[index_of(other, w)] += 1;
        current = minimalize(g, &current, 2)?;
    }

    debug_assert!(current.iter().all(|&c| c <= 1));
    debug_assert!(is_multiset_k_connected(g, &current, 2)?);
    debug_assert!(multiset_cost(g, &current) <= input_cost);
    Ok(current)
}

fn same_component(g: &MultiGraph, counts: &[u32], s: usize, t: usize) -> bool {
    let n = g.vertex_count();
    let mut reach = vec![false; n];
    reach[s] = true;
    let mut stack = vec![s];
    while let Some(v) = stack.pop() {
        for (i, e) in g.edges().iter().enumerate() {
            if counts[i] == 0 {
                continue;
            }
            let w = if e.u.0 == v {
                e.v.0
            } else if e.v.0 == v {
                e.u.0
            } else {
                continue;
            };
            if !reach[w] {
                reach[w] = true;
                stack.push(w);
            }
        }
    }
    reach[t]
}
