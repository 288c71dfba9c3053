//! Brute-force reference oracles shared by the integration suites. These
//! deliberately avoid the library's solvers: connectivity is checked through
//! the public cut predicates, but optimization is raw exhaustive search.
#![allow(dead_code)] // each test binary uses its own subset

use cutgap_core::graph::{is_k_edge_connected, MultiEdge, MultiGraph};
use cutgap_core::matrix::{RationalMatrix, RowBasis, SolveOutcome};
use cutgap_core::rational::Rational;
use cutgap_core::simplex::{LinearConstraint, Sense};
use num::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Exact minimum cost of a copy selection making the graph k-edge-connected.
/// `cap[i]` bounds how many copies of record `i` may be taken (each copy
/// costs the record's cost). Plain depth-first search with an incumbent
/// bound and a degree-feasibility prune. The incumbent, when given, must be
/// the cost of a known feasible selection; `None` is returned only when
/// nothing feasible exists at all.
pub fn brute_min_cost_k_connected(
    g: &MultiGraph,
    k: u64,
    cap: &[u32],
    incumbent: Option<Rational>,
) -> Option<Rational> {
    let n = g.vertex_count();
    let m = g.edge_count();
    assert_eq!(cap.len(), m);

    // Degree potential per vertex if every remaining copy were taken.
    let mut max_degree_from = vec![vec![0u64; n]; m + 1];
    for i in (0..m).rev() {
        let e = g.edge(i);
        for v in 0..n {
            max_degree_from[i][v] = max_degree_from[i + 1][v];
        }
        max_degree_from[i][e.u.0] += cap[i] as u64;
        max_degree_from[i][e.v.0] += cap[i] as u64;
    }

    struct Search<'a> {
        g: &'a MultiGraph,
        k: u64,
        cap: &'a [u32],
        counts: Vec<u32>,
        degree: Vec<u64>,
        cost: Rational,
        best: Option<Rational>,
        max_degree_from: &'a [Vec<u64>],
    }
    impl Search<'_> {
        fn go(&mut self, depth: usize) {
            if let Some(best_cost) = &self.best {
                if self.cost >= *best_cost {
                    return;
                }
            }
            for v in 0..self.g.vertex_count() {
                if self.degree[v] + self.max_degree_from[depth][v] < self.k {
                    return;
                }
            }
            if depth == self.g.edge_count() {
                let edges: Vec<MultiEdge> = self
                    .g
                    .edges()
                    .iter()
                    .zip(&self.counts)
                    .filter(|(_, &c)| c > 0)
                    .map(|(e, &c)| MultiEdge::new(e.u.0, e.v.0, e.cost.clone(), c))
                    .collect();
                let Ok(sub) = MultiGraph::new(self.g.vertex_count(), edges) else {
                    return;
                };
                if is_k_edge_connected(&sub, self.k) {
                    self.best = Some(self.cost.clone());
                }
                return;
            }
            let e = self.g.edge(depth);
            for c in (0..=self.cap[depth]).rev() {
                self.counts[depth] = c;
                self.degree[e.u.0] += c as u64;
                self.degree[e.v.0] += c as u64;
                let added = &e.cost * Rational::from_integer(c.into());
                self.cost += &added;
                self.go(depth + 1);
                self.cost -= &added;
                self.degree[e.u.0] -= c as u64;
                self.degree[e.v.0] -= c as u64;
            }
            self.counts[depth] = 0;
        }
    }

    let mut search = Search {
        g,
        k,
        cap,
        counts: vec![0; m],
        degree: vec![0; n],
        cost: Rational::zero(),
        best: incumbent,
        max_degree_from: &max_degree_from,
    };
    search.go(0);
    search.best
}

/// k-ECSS optimum on a multigraph: every copy usable at most once.
pub fn brute_kecss(g: &MultiGraph, k: u64) -> Option<Rational> {
    let expanded = g.expanded();
    let unit_cap: Vec<u32> = expanded.edges().iter().map(|_| 1).collect();
    brute_min_cost_k_connected(&expanded, k, &unit_cap, None)
}

/// k-ECSS optimum assuming every zero-cost copy is taken (valid whenever a
/// zero-cost copy can only help), searching only over positive-cost records.
pub fn brute_kecss_zero_pruned(g: &MultiGraph, k: u64) -> Option<Rational> {
    let expanded = g.expanded();
    let positives: Vec<usize> = (0..expanded.edge_count())
        .filter(|&i| !expanded.edge(i).cost.is_zero())
        .collect();
    assert!(positives.len() <= 20, "oracle bound");
    let mut best: Option<Rational> = None;
    for mask in 0u32..(1 << positives.len()) {
        let mut counts: Vec<u32> = expanded
            .edges()
            .iter()
            .map(|e| u32::from(e.cost.is_zero()))
            .collect();
        let mut cost = Rational::zero();
        for (j, &idx) in positives.iter().enumerate() {
            if mask >> j & 1 == 1 {
                counts[idx] = 1;
                cost += &expanded.edge(idx).cost;
            }
        }
        if let Some(c) = &best {
            if cost >= *c {
                continue;
            }
        }
        let edges: Vec<MultiEdge> = expanded
            .edges()
            .iter()
            .zip(&counts)
            .filter(|(_, &c)| c > 0)
            .map(|(e, &c)| MultiEdge::new(e.u.0, e.v.0, e.cost.clone(), c))
            .collect();
        let Ok(sub) = MultiGraph::new(expanded.vertex_count(), edges) else {
            continue;
        };
        if is_k_edge_connected(&sub, k) {
            best = Some(cost);
        }
    }
    best
}

/// Minimum objective over all vertices of `min c.x : rows, x >= 0`, by
/// enumerating maximal-rank tight row subsets (constraint rows as equalities
/// plus coordinate bounds). Returns `None` when no feasible vertex exists.
pub fn brute_lp_vertex_min(
    objective: &[Rational],
    rows: &[LinearConstraint],
) -> Option<Rational> {
    let nvars = objective.len();
    // Candidate tight rows: each constraint and each bound x_i = 0.
    let mut tight_rows: Vec<(Vec<Rational>, Rational)> = rows
        .iter()
        .map(|r| (r.coeffs.clone(), r.rhs.clone()))
        .collect();
    for i in 0..nvars {
        let mut row = vec![Rational::zero(); nvars];
        row[i] = Rational::one();
        tight_rows.push((row, Rational::zero()));
    }

    let feasible = |x: &[Rational]| -> bool {
        if x.iter().any(|v| *v < Rational::zero()) {
            return false;
        }
        rows.iter().all(|r| {
            let lhs: Rational = r.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
            match r.sense {
                Sense::Le => lhs <= r.rhs,
                Sense::Eq => lhs == r.rhs,
                Sense::Ge => lhs >= r.rhs,
            }
        })
    };

    let mut best: Option<Rational> = None;
    let mut chosen: Vec<usize> = Vec::new();
    fn dfs(
        start: usize,
        nvars: usize,
        tight_rows: &[(Vec<Rational>, Rational)],
        basis: &RowBasis,
        chosen: &mut Vec<usize>,
        feasible: &dyn Fn(&[Rational]) -> bool,
        objective: &[Rational],
        best: &mut Option<Rational>,
    ) {
        if chosen.len() == nvars {
            let matrix = RationalMatrix::from_rows(
                chosen.iter().map(|&i| tight_rows[i].0.clone()).collect(),
            );
            let rhs: Vec<Rational> = chosen.iter().map(|&i| tight_rows[i].1.clone()).collect();
            if let Ok(SolveOutcome::Unique(x)) = matrix.solve_unique(&rhs) {
                if feasible(&x) {
                    let value: Rational = objective.iter().zip(&x).map(|(c, v)| c * v).sum();
                    if best.as_ref().map(|b| value < *b).unwrap_or(true) {
                        *best = Some(value);
                    }
                }
            }
            return;
        }
        for j in start..tight_rows.len() {
            if tight_rows.len() - j < nvars - chosen.len() {
                break;
            }
            if !basis.would_add(&tight_rows[j].0) {
                continue;
            }
            let mut next = basis.clone();
            next.try_add(tight_rows[j].0.clone());
            chosen.push(j);
            dfs(
                j + 1, nvars, tight_rows, &next, chosen, feasible, objective, best,
            );
            chosen.pop();
        }
    }
    dfs(
        0,
        nvars,
        &tight_rows,
        &RowBasis::new(),
        &mut chosen,
        &feasible,
        objective,
        &mut best,
    );
    best
}

/// Minimum objective over feasible basic solutions of the unbounded cut LP
/// at level `k`. Vertices are enumerated by zero set plus a laminar family
/// of tight cuts spanning the support; by uncrossing, every feasible vertex
/// arises this way, so the minimum is exact.
pub fn brute_cutlp_vertex_min(g: &MultiGraph, k: u64) -> Option<Rational> {
    let n = g.vertex_count();
    let m = g.edge_count();
    assert!(n <= 8 && m <= 16, "oracle bound");
    let kr = Rational::from_integer(k.into());
    let costs: Vec<Rational> = g.edges().iter().map(|e| e.cost.clone()).collect();
    // Normalized cuts as member masks, every size.
    let cuts: Vec<u64> = (1u64..(1 << (n - 1))).map(|mask| mask << 1).collect();
    let crosses = |members: u64, edge: usize| -> bool {
        let e = g.edge(edge);
        (members >> e.u.0 & 1) != (members >> e.v.0 & 1)
    };

    let mut best: Option<Rational> = None;
    for zmask in 0u32..(1 << m) {
        let support: Vec<usize> = (0..m).filter(|&i| zmask >> i & 1 == 0).collect();
        let s = support.len();
        // A laminar family on n-1 elements has at most 2(n-1)-1 members.
        if s > 2 * (n - 1) - 1 {
            continue;
        }
        let restricted_row = |members: u64| -> Vec<Rational> {
            support
                .iter()
                .map(|&i| {
                    if crosses(members, i) {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        };

        // DFS over laminar, independent cut subsets of size s.
        let mut stack: Vec<(usize, Vec<u64>, RowBasis)> = vec![(0, Vec::new(), RowBasis::new())];
        while let Some((start, chosen, basis)) = stack.pop() {
            if chosen.len() == s {
                let rows: Vec<Vec<Rational>> =
                    chosen.iter().map(|&c| restricted_row(c)).collect();
                let rhs = vec![kr.clone(); s];
                let Ok(SolveOutcome::Unique(x)) =
                    RationalMatrix::from_rows(rows).solve_unique(&rhs)
                else {
                    continue;
                };
                if x.iter().any(|v| *v <= Rational::zero()) {
                    continue;
                }
                let feasible = cuts.iter().all(|&members| {
                    let mut total = Rational::zero();
                    for (pos, &i) in support.iter().enumerate() {
                        if crosses(members, i) {
                            total += &x[pos];
                        }
                    }
                    total >= kr
                });
                if !feasible {
                    continue;
                }
                let value: Rational = support
                    .iter()
                    .enumerate()
                    .map(|(pos, &i)| &costs[i] * &x[pos])
                    .sum();
                if best.as_ref().map(|b| value < *b).unwrap_or(true) {
                    best = Some(value);
                }
                continue;
            }
            for j in start..cuts.len() {
                if cuts.len() - j < s - chosen.len() {
                    break;
                }
                let candidate = cuts[j];
                let laminar = chosen.iter().all(|&c| {
                    candidate & c == 0 || candidate & c == candidate || candidate & c == c
                });
                if !laminar {
                    continue;
                }
                let row = restricted_row(candidate);
                if !basis.would_add(&row) {
                    continue;
                }
                let mut next = basis.clone();
                next.try_add(row);
                let mut next_chosen = chosen.clone();
                next_chosen.push(candidate);
                stack.push((j + 1, next_chosen, next));
            }
        }
    }
    best
}

/// Uniformly random metric on a complete graph: rational closure of a random
/// connected graph with small integer costs.
pub fn random_metric_complete(rng: &mut ChaCha8Rng, n: usize) -> MultiGraph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.7) {
                    let cost = Rational::from_integer(rng.gen_range(1..=6).into());
                    edges.push(MultiEdge::new(u, v, cost, 1));
                }
            }
        }
        let Ok(g) = MultiGraph::new(n, edges) else {
            continue;
        };
        if !is_k_edge_connected(&g, 1) {
            continue;
        }
        let closure = cutgap_core::metric::metric_closure(&g).expect("connected");
        return closure.graph().clone();
    }
}

/// Random tree on `n` vertices by random attachment.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> MultiGraph {
    let mut pairs = Vec::new();
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        pairs.push((parent, v));
    }
    MultiGraph::from_pairs(n, &pairs).expect("attachment trees are valid")
}

/// A known 10-vertex extreme point with denominator 5 and maximum support
/// degree 5; construction-independent regression fixture.
pub fn ten_vertex_reference() -> cutgap_core::cutlp::FractionalSolution {
    let entries: [(usize, usize, i64, i64); 17] = [
        (0, 1, 1, 5),
        (0, 2, 1, 5),
        (0, 3, 1, 1),
        (0, 4, 2, 5),
        (0, 5, 1, 5),
        (2, 6, 1, 1),
        (6, 1, 4, 5),
        (1, 7, 1, 1),
        (7, 3, 2, 5),
        (3, 8, 3, 5),
        (8, 4, 1, 1),
        (4, 9, 3, 5),
        (9, 5, 1, 1),
        (5, 2, 4, 5),
        (6, 9, 1, 5),
        (9, 7, 1, 5),
        (7, 8, 2, 5),
    ];
    let edges: Vec<MultiEdge> = entries
        .iter()
        .map(|&(u, v, _, _)| MultiEdge::new(u, v, Rational::one(), 1))
        .collect();
    let graph = MultiGraph::new(10, edges).unwrap();
    let values = entries
        .iter()
        .enumerate()
        .map(|(i, &(_, _, p, q))| (i, Rational::new(p.into(), q.into())))
        .collect();
    cutgap_core::cutlp::FractionalSolution::new(graph, values).unwrap()
}
