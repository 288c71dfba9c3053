//! Multigraph representation, cuts, and edge-connectivity primitives.
//!
//! Vertices are dense indices `0..n`; vertex 0 is the canonical root used to
//! normalize cuts (a cut set and its complement induce the same edge cut, so
//! the normalized form never contains the root). Costs and weights are exact
//! rationals throughout.

use crate::rational::{format_rational, Rational};
use num::Zero;
use std::fmt;
use thiserror::Error;

/// Dense vertex index in `[0, n)`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("negative cost on edge ({0}, {1})")]
    NegativeCost(usize, usize),
    #[error("zero multiplicity on edge ({0}, {1})")]
    ZeroMultiplicity(usize, usize),
    #[error("cut must be a proper nonempty vertex subset")]
    ImproperCut,
    #[error("cut width {0} does not match graph on {1} vertices")]
    CutWidthMismatch(usize, usize),
    #[error("no proper cut exists on fewer than 2 vertices")]
    NoProperCut,
    #[error("canonicalization bound exceeded: n = {0} > {1}")]
    CanonicalBound(usize, usize),
}

/// One multigraph edge record: endpoints, a nonnegative rational cost per
/// copy, and the number of parallel copies it stands for.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub cost: Rational,
    pub mult: u32,
}

impl MultiEdge {
    pub fn new(u: usize, v: usize, cost: Rational, mult: u32) -> Self {
        MultiEdge {
            u: VertexId(u),
            v: VertexId(v),
            cost,
            mult,
        }
    }

    /// True when the cut `s` separates the endpoints.
    pub fn crosses(&self, s: &CutSet) -> bool {
        s.contains(self.u.0) != s.contains(self.v.0)
    }
}

/// Undirected multigraph with rational edge costs.
///
/// Parallel edges may be expressed either through `mult` or by repeating
/// entries; self-loops are rejected.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<MultiEdge>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<MultiEdge>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        for e in &edges {
            if e.u.0 >= n {
                return Err(GraphError::VertexOutOfRange(e.u.0, n));
            }
            if e.v.0 >= n {
                return Err(GraphError::VertexOutOfRange(e.v.0, n));
            }
            if e.u == e.v {
                return Err(GraphError::SelfLoop(e.u.0));
            }
            if e.cost < Rational::zero() {
                return Err(GraphError::NegativeCost(e.u.0, e.v.0));
            }
            if e.mult == 0 {
                return Err(GraphError::ZeroMultiplicity(e.u.0, e.v.0));
            }
        }
        Ok(MultiGraph { n, edges })
    }

    /// Builds a graph from `(u, v)` pairs with unit costs and multiplicity 1.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let edges = pairs
            .iter()
            .map(|&(u, v)| MultiEdge::new(u, v, Rational::from_integer(1.into()), 1))
            .collect();
        MultiGraph::new(n, edges)
    }

    pub fn cycle(n: usize) -> Self {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph::from_pairs(n, &pairs).unwrap()
    }

    pub fn path(n: usize) -> Self {
        let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        MultiGraph::from_pairs(n, &pairs).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        MultiGraph::from_pairs(n, &pairs).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut pairs = Vec::new();
        for u in 0..a {
            for v in 0..b {
                pairs.push((u, a + v));
            }
        }
        MultiGraph::from_pairs(a + b, &pairs).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> &MultiEdge {
        &self.edges[idx]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Total multiplicity over all edge records.
    pub fn total_multiplicity(&self) -> u64 {
        self.edges.iter().map(|e| e.mult as u64).sum()
    }

    /// Support degree of `v`: number of incident edge copies.
    pub fn degree(&self, v: usize) -> u64 {
        self.edges
            .iter()
            .filter(|e| e.u.0 == v || e.v.0 == v)
            .map(|e| e.mult as u64)
            .sum()
    }

    /// Same graph with every record split into `mult` copies of multiplicity 1.
    pub fn expanded(&self) -> MultiGraph {
        let mut edges = Vec::new();
        for e in &self.edges {
            for _ in 0..e.mult {
                edges.push(MultiEdge {
                    u: e.u,
                    v: e.v,
                    cost: e.cost.clone(),
                    mult: 1,
                });
            }
        }
        MultiGraph {
            n: self.n,
            edges,
        }
    }

    /// Same graph with all multiplicities scaled by `factor`.
    pub fn with_multiplicities_scaled(&self, factor: u32) -> MultiGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| MultiEdge {
                u: e.u,
                v: e.v,
                cost: e.cost.clone(),
                mult: e.mult * factor,
            })
            .collect();
        MultiGraph {
            n: self.n,
            edges,
        }
    }

    /// Relabels vertices by `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabeled(&self, perm: &[usize]) -> MultiGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| MultiEdge {
                u: VertexId(perm[e.u.0]),
                v: VertexId(perm[e.v.0]),
                cost: e.cost.clone(),
                mult: e.mult,
            })
            .collect();
        MultiGraph {
            n: self.n,
            edges,
        }
    }

    /// Graphviz rendering with costs as edge labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {};\n", v));
        }
        for e in &self.edges {
            for _ in 0..e.mult {
                out.push_str(&format!(
                    "  {} -- {} [label=\"{}\"];\n",
                    e.u, e.v, format_rational(&e.cost)
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// A nonempty proper vertex subset, stored as a bitset of width `n`.
///
/// `normalize` complements the set when it contains vertex 0, so normalized
/// cuts are exactly the nonempty subsets of `V \ {0}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CutSet {
    n: usize,
    words: Vec<u64>,
}

impl CutSet {
    pub fn empty(n: usize) -> Self {
        CutSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn from_members(n: usize, members: &[usize]) -> Self {
        let mut s = CutSet::empty(n);
        for &v in members {
            assert!(v < n, "member {} out of range in cut on {} vertices", v, n);
            s.insert(v);
        }
        s
    }

    /// Interprets the low bits of `mask` as membership of vertices `0..n`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64);
        let mut s = CutSet::empty(n);
        s.words[0] = mask & if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        s
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Nonempty and not the full vertex set.
    pub fn is_proper(&self) -> bool {
        !self.is_empty() && self.len() < self.n
    }

    pub fn complement(&self) -> CutSet {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        let spare = self.words.len() * 64 - self.n;
        if spare > 0 {
            let last = words.len() - 1;
            words[last] &= u64::MAX >> spare;
        }
        CutSet {
            n: self.n,
            words,
        }
    }

    /// Root-free form: the complement is taken if vertex 0 is a member.
    pub fn normalize(&self) -> CutSet {
        if self.contains(0) {
            self.complement()
        } else {
            self.clone()
        }
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.contains(v)).collect()
    }

    pub fn is_disjoint(&self, other: &CutSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &CutSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &CutSet) -> CutSet {
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        CutSet {
            n: self.n,
            words,
        }
    }

    /// Laminar compatibility: disjoint or nested.
    pub fn laminar_with(&self, other: &CutSet) -> bool {
        self.is_disjoint(other) || self.is_subset(other) || other.is_subset(self)
    }
}

impl fmt::Display for CutSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.members()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

fn check_cut(g: &MultiGraph, s: &CutSet) -> Result<(), GraphError> {
    if s.width() != g.vertex_count() {
        return Err(GraphError::CutWidthMismatch(s.width(), g.vertex_count()));
    }
    if !s.is_proper() {
        return Err(GraphError::ImproperCut);
    }
    Ok(())
}

/// Indices of the edge records crossing the cut (multiplicities live on the
/// records themselves). Rejects empty and full vertex sets.
pub fn cut_edges(g: &MultiGraph, s: &CutSet) -> Result<Vec<usize>, GraphError> {
    check_cut(g, s)?;
    Ok((0..g.edge_count())
        .filter(|&i| g.edge(i).crosses(s))
        .collect())
}

/// Total weight crossing the cut; `weights[i]` applies to one copy of record
/// `i` and is multiplied by the record's multiplicity.
pub fn cut_weight(g: &MultiGraph, s: &CutSet, weights: &[Rational]) -> Rational {
    let mut total = Rational::zero();
    for (i, e) in g.edges().iter().enumerate() {
        if e.crosses(s) {
            total += &weights[i] * Rational::from_integer(e.mult.into());
        }
    }
    total
}

/// Deterministic global minimum cut by maximum-adjacency contraction over
/// exact rationals (ties broken by lowest vertex index). Returns a normalized
/// cut set and its weight.
pub fn global_min_cut(
    g: &MultiGraph,
    weights: &[Rational],
) -> Result<(CutSet, Rational), GraphError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(GraphError::NoProperCut);
    }
    assert_eq!(weights.len(), g.edge_count(), "one weight per edge record");

    // Pairwise weight matrix folding multiplicities into weights.
    let mut w = vec![vec![Rational::zero(); n]; n];
    for (i, e) in g.edges().iter().enumerate() {
        let contribution = &weights[i] * Rational::from_integer(e.mult.into());
        w[e.u.0][e.v.0] += &contribution;
        w[e.v.0][e.u.0] += &contribution;
    }

    // merged[v] lists the original vertices contracted into v.
    let mut merged: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best: Option<(CutSet, Rational)> = None;

    while active.len() > 1 {
        // Maximum-adjacency order starting from the lowest-index active vertex.
        let start = active[0];
        let mut in_order = vec![false; n];
        let mut key = vec![Rational::zero(); n];
        let mut order = vec![start];
        in_order[start] = true;
        for &v in &active {
            if v != start {
                key[v] = w[start][v].clone();
            }
        }
        while order.len() < active.len() {
            let mut next: Option<usize> = None;
            for &v in &active {
                if in_order[v] {
                    continue;
                }
                match next {
                    None => next = Some(v),
                    Some(cur) => {
                        if key[v] > key[cur] {
                            next = Some(v);
                        }
                    }
                }
            }
            let v = next.unwrap();
            in_order[v] = true;
            order.push(v);
            for &u in &active {
                if !in_order[u] {
                    key[u] += &w[v][u];
                }
            }
        }

        let t = *order.last().unwrap();
        let s = order[order.len() - 2];
        let phase_cut = CutSet::from_members(n, &merged[t]).normalize();
        let phase_weight = key[t].clone();
        let better = match &best {
            None => true,
            Some((_, bw)) => phase_weight < *bw,
        };
        if better {
            best = Some((phase_cut, phase_weight));
        }

        // Contract t into s.
        let t_members = std::mem::take(&mut merged[t]);
        merged[s].extend(t_members);
        merged[s].sort_unstable();
        for &u in &active {
            if u != s && u != t {
                let wtu = w[t][u].clone();
                w[s][u] += &wtu;
                w[u][s] += &wtu;
            }
        }
        active.retain(|&v| v != t);
    }

    Ok(best.unwrap())
}

/// Minimum over proper cuts of the crossing edge count, with multiplicity.
pub fn edge_connectivity(g: &MultiGraph) -> Result<u64, GraphError> {
    let unit = vec![Rational::from_integer(1.into()); g.edge_count()];
    let (_, value) = global_min_cut(g, &unit)?;
    debug_assert!(value.is_integer());
    Ok(num::ToPrimitive::to_u64(&value.to_integer()).expect("cut counts fit in u64"))
}

/// `k = 0` holds for every graph; a single vertex is only 0-edge-connected.
pub fn is_k_edge_connected(g: &MultiGraph, k: u64) -> bool {
    if k == 0 {
        return true;
    }
    if g.vertex_count() < 2 {
        return false;
    }
    edge_connectivity(g).map(|c| c >= k).unwrap_or(false)
}

pub const CANONICAL_LABEL_DEFAULT_BOUND: usize = 12;

/// Canonical form under vertex permutation, respecting multiplicities and
/// ignoring costs. Two graphs get equal labels iff they are isomorphic.
pub fn canonical_label(g: &MultiGraph) -> Result<String, GraphError> {
    canonical_label_bounded(g, CANONICAL_LABEL_DEFAULT_BOUND)
}

/// As `canonical_label` with an explicit bound on the permutation search.
pub fn canonical_label_bounded(g: &MultiGraph, max_n: usize) -> Result<String, GraphError> {
    let n = g.vertex_count();
    if n > max_n {
        return Err(GraphError::CanonicalBound(n, max_n));
    }
    let mut adj = vec![vec![0u64; n]; n];
    for e in g.edges() {
        adj[e.u.0][e.v.0] += e.mult as u64;
        adj[e.v.0][e.u.0] += e.mult as u64;
    }
    let code = canonical_adjacency_code(n, &|u, v| adj[u][v]);
    let body = code
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",");
    Ok(format!("n{};{}", n, body))
}

/// Lexicographically minimal row-major strict-upper-triangle encoding of the
/// adjacency matrix over all vertex orderings. Backtracking with degree-class
/// pruning and prefix comparison against the incumbent.
pub(crate) fn canonical_adjacency_code(n: usize, adj: &dyn Fn(usize, usize) -> u64) -> Vec<u64> {
    // Vertices may only occupy positions whose degree-signature class matches;
    // the signature is the sorted multiset of incident entry values.
    let mut signature: Vec<Vec<u64>> = (0..n)
        .map(|u| {
            let mut s: Vec<u64> = (0..n).filter(|&v| v != u).map(|v| adj(u, v)).collect();
            s.sort_unstable();
            s
        })
        .collect();
    let mut class_order: Vec<usize> = (0..n).collect();
    class_order.sort_by(|&a, &b| signature[a].cmp(&signature[b]));
    // Position p accepts only vertices whose signature equals the p-th sorted one.
    let position_sig: Vec<Vec<u64>> = class_order
        .iter()
        .map(|&v| std::mem::take(&mut signature[v]))
        .collect();
    let sigs: Vec<Vec<u64>> = (0..n)
        .map(|u| {
            let mut s: Vec<u64> = (0..n).filter(|&v| v != u).map(|v| adj(u, v)).collect();
            s.sort_unstable();
            s
        })
        .collect();

    struct Search<'a> {
        n: usize,
        adj: &'a dyn Fn(usize, usize) -> u64,
        position_sig: Vec<Vec<u64>>,
        sigs: Vec<Vec<u64>>,
        perm: Vec<usize>,
        used: Vec<bool>,
        code: Vec<u64>,
        best: Option<Vec<u64>>,
    }

    impl Search<'_> {
        fn place(&mut self, pos: usize) {
            if pos == self.n {
                if self
                    .best
                    .as_ref()
                    .map(|b| self.code < *b)
                    .unwrap_or(true)
                {
                    self.best = Some(self.code.clone());
                }
                return;
            }
            for v in 0..self.n {
                if self.used[v] || self.sigs[v] != self.position_sig[pos] {
                    continue;
                }
                let base = self.code.len();
                for p in 0..pos {
                    self.code.push((self.adj)(self.perm[p], v));
                }
                // Compare the appended segment against the incumbent prefix.
                let viable = match &self.best {
                    None => true,
                    Some(b) => self.code[..] <= b[..self.code.len()],
                };
                if viable {
                    self.used[v] = true;
                    self.perm.push(v);
                    self.place(pos + 1);
                    self.perm.pop();
                    self.used[v] = false;
                }
                self.code.truncate(base);
            }
        }
    }

    let mut search = Search {
        n,
        adj,
        position_sig,
        sigs,
        perm: Vec::new(),
        used: vec![false; n],
        code: Vec::new(),
        best: None,
    };
    search.place(0);
    search.best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn unit_weights(g: &MultiGraph) -> Vec<Rational> {
        vec![int(1); g.edge_count()]
    }

    #[test]
    fn cut_edges_on_cycle() {
        let g = MultiGraph::cycle(4);
        let s = CutSet::from_members(4, &[0, 1]);
        let idx = cut_edges(&g, &s).unwrap();
        let ends: Vec<_> = idx
            .iter()
            .map(|&i| (g.edge(i).u.0, g.edge(i).v.0))
            .collect();
        assert_eq!(idx.len(), 2);
        assert!(ends.contains(&(1, 2)));
        assert!(ends.contains(&(3, 0)));
    }

    #[test]
    fn singleton_cut_is_star() {
        let g = MultiGraph::complete(5);
        let s = CutSet::from_members(5, &[2]);
        let idx = cut_edges(&g, &s).unwrap();
        assert_eq!(idx.len(), 4);
        for &i in &idx {
            let e = g.edge(i);
            assert!(e.u.0 == 2 || e.v.0 == 2);
        }
    }

    #[test]
    fn complete_bipartition_count() {
        let g = MultiGraph::complete(4);
        let s = CutSet::from_members(4, &[0, 1]);
        assert_eq!(cut_edges(&g, &s).unwrap().len(), 4);
    }

    #[test]
    fn cut_is_symmetric_under_complement() {
        let g = MultiGraph::complete(5);
        let w: Vec<Rational> = (0..g.edge_count()).map(|i| ratio(i as i64 + 1, 3)).collect();
        let s = CutSet::from_members(5, &[1, 3]);
        assert_eq!(cut_weight(&g, &s, &w), cut_weight(&g, &s.complement(), &w));
        assert_eq!(
            cut_edges(&g, &s).unwrap(),
            cut_edges(&g, &s.complement()).unwrap()
        );
    }

    #[test]
    fn improper_cuts_rejected() {
        let g = MultiGraph::cycle(4);
        assert_eq!(
            cut_edges(&g, &CutSet::empty(4)),
            Err(GraphError::ImproperCut)
        );
        assert_eq!(
            cut_edges(&g, &CutSet::from_members(4, &[0, 1, 2, 3])),
            Err(GraphError::ImproperCut)
        );
    }

    #[test]
    fn min_cut_cycle_and_complete() {
        let c4 = MultiGraph::cycle(4);
        let (_, v) = global_min_cut(&c4, &unit_weights(&c4)).unwrap();
        assert_eq!(v, int(2));

        let k4 = MultiGraph::complete(4);
        let (cut, v) = global_min_cut(&k4, &unit_weights(&k4)).unwrap();
        assert_eq!(v, int(3));
        assert_eq!(cut.len(), 1);
    }

    #[test]
    fn min_cut_isolated_vertex() {
        let mut pairs = vec![(0, 1), (1, 2), (2, 0)];
        pairs.dedup();
        let g = MultiGraph::from_pairs(4, &pairs).unwrap();
        let (cut, v) = global_min_cut(&g, &unit_weights(&g)).unwrap();
        assert_eq!(v, int(0));
        assert!(cut.is_proper());
        assert_eq!(cut_weight(&g, &cut, &unit_weights(&g)), int(0));
    }

    #[test]
    fn min_cut_respects_weights_and_multiplicity() {
        // Double one cycle edge: the cheapest cut avoids it.
        let edges = vec![
            MultiEdge::new(0, 1, int(1), 2),
            MultiEdge::new(1, 2, int(1), 1),
            MultiEdge::new(2, 3, int(1), 1),
            MultiEdge::new(3, 0, int(1), 1),
        ];
        let g = MultiGraph::new(4, edges).unwrap();
        let (cut, v) = global_min_cut(&g, &unit_weights(&g)).unwrap();
        assert_eq!(v, int(2));
        assert!(!g.edge(0).crosses(&cut));
    }

    #[test]
    fn min_cut_errors_on_single_vertex() {
        let g = MultiGraph::new(1, vec![]).unwrap();
        assert_eq!(
            global_min_cut(&g, &[]),
            Err(GraphError::NoProperCut)
        );
    }

    #[test]
    fn edge_connectivity_basics() {
        assert_eq!(edge_connectivity(&MultiGraph::cycle(5)).unwrap(), 2);
        assert_eq!(edge_connectivity(&MultiGraph::complete(6)).unwrap(), 5);
        assert_eq!(edge_connectivity(&MultiGraph::path(4)).unwrap(), 1);
    }

    #[test]
    fn edge_connectivity_k33_matches_exhaustive_cuts() {
        let g = MultiGraph::complete_bipartite(3, 3);
        let mut best = u64::MAX;
        for mask in 1u64..(1 << 5) {
            // Normalized cuts: subsets of {1..5}, vertex 0 outside.
            let s = CutSet::from_mask(6, mask << 1);
            let count = cut_edges(&g, &s)
                .unwrap()
                .iter()
                .map(|&i| g.edge(i).mult as u64)
                .sum();
            best = best.min(count);
        }
        assert_eq!(best, 3);
        assert_eq!(edge_connectivity(&g).unwrap(), 3);
    }

    #[test]
    fn k_edge_connected_checks() {
        let tree = MultiGraph::path(4);
        assert!(!is_k_edge_connected(&tree, 2));
        assert!(is_k_edge_connected(&MultiGraph::cycle(4), 2));
        assert!(is_k_edge_connected(&tree, 0));

        let doubled_tree = tree.with_multiplicities_scaled(2);
        assert!(is_k_edge_connected(&doubled_tree, 2));
        // Exhaustive confirmation over all normalized cuts.
        for mask in 1u64..(1 << 3) {
            let s = CutSet::from_mask(4, mask << 1);
            let total: u64 = cut_edges(&doubled_tree, &s)
                .unwrap()
                .iter()
                .map(|&i| doubled_tree.edge(i).mult as u64)
                .sum();
            assert!(total >= 2);
        }
    }

    #[test]
    fn doubling_multiplicities_doubles_connectivity() {
        for g in [
            MultiGraph::cycle(5),
            MultiGraph::complete(4),
            MultiGraph::complete_bipartite(2, 3),
        ] {
            let doubled = g.with_multiplicities_scaled(2);
            assert_eq!(
                edge_connectivity(&doubled).unwrap(),
                2 * edge_connectivity(&g).unwrap()
            );
        }
    }

    #[test]
    fn canonical_label_invariant_under_relabeling() {
        let g = MultiGraph::cycle(4);
        let base = canonical_label(&g).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..4).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_label(&g.relabeled(&perm)).unwrap(), base);
        }
    }

    #[test]
    fn canonical_label_separates_cycle_from_path() {
        let c4 = MultiGraph::cycle(4);
        let p4 = MultiGraph::path(4);
        assert_ne!(canonical_label(&c4).unwrap(), canonical_label(&p4).unwrap());
    }

    #[test]
    fn canonical_label_sees_multiplicity() {
        let single = MultiGraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let mut edges = single.edges().to_vec();
        edges[0].mult = 2;
        let doubled = MultiGraph::new(3, edges).unwrap();
        assert_ne!(
            canonical_label(&single).unwrap(),
            canonical_label(&doubled).unwrap()
        );
    }

    #[test]
    fn canonical_label_bound_enforced() {
        let g = MultiGraph::cycle(13);
        assert!(matches!(
            canonical_label(&g),
            Err(GraphError::CanonicalBound(13, 12))
        ));
        assert!(canonical_label_bounded(&g, 13).is_ok());
    }

    #[test]
    fn min_cut_value_at_most_min_weighted_degree() {
        let g = MultiGraph::complete(5);
        let w: Vec<Rational> = (0..g.edge_count()).map(|i| ratio(i as i64 % 4 + 1, 2)).collect();
        let (_, v) = global_min_cut(&g, &w).unwrap();
        for vtx in 0..5 {
            let s = CutSet::from_members(5, &[vtx]);
            assert!(v <= cut_weight(&g, &s, &w));
        }
    }

    #[test]
    fn dot_export_contains_edges() {
        let g = MultiGraph::cycle(3);
        let dot = g.to_dot();
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("0 -- 1"));
        assert!(dot.contains("label=\"1\""));
    }
}
