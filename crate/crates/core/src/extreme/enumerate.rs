//! Exhaustive enumeration of extreme points on small vertex counts.
//!
//! Candidate support graphs are generated up to isomorphism (connected,
//! minimum degree 3, at most `2n - 3` edges, 3-vertex-connected by default;
//! a non-extreme support cannot carry a basic solution with more edges).
//! On each support, basic solutions of the degree-bounded relaxation at
//! k = 2 are enumerated by choosing laminar tight-cut subsets to full rank:
//! by uncrossing, every full-support extreme point is pinned by its degree
//! rows plus some laminar family of tight cuts, so the restriction loses
//! nothing.

use super::verify::verify_extreme;
use super::{stats, ExtremeError, SolutionStats};
use crate::cutlp::FractionalSolution;
use crate::graph::{canonical_label_bounded, MultiGraph};
use crate::matrix::{RationalMatrix, RowBasis, SolveOutcome};
use crate::rational::{format_rational, Rational};
use num::bigint::BigInt;
use num::Zero;
use std::collections::{BTreeMap, HashSet};

pub const ENUMERATION_DEFAULT_BOUND: usize = 7;

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    /// Keep only solutions whose denominator is at least this.
    pub min_denominator: Option<BigInt>,
    /// Keep only solutions whose maximum support degree is at least this.
    pub min_max_degree: Option<usize>,
    /// Restrict candidate supports to 3-vertex-connected graphs. Disabling
    /// this completeness-audit mode is allowed only for n <= 6.
    pub require_three_connected: bool,
    /// Hard bound on n; raising it past the default is an explicit opt-in.
    pub max_n: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            min_denominator: None,
            min_max_degree: None,
            require_three_connected: true,
            max_n: ENUMERATION_DEFAULT_BOUND,
        }
    }
}

/// All extreme points of the degree-bounded relaxation at k = 2 on exactly
/// `n` vertices, up to isomorphism of the valued support graph.
pub fn enumerate_extreme_points(
    n: usize,
    opts: &EnumerateOptions,
) -> Result<Vec<(FractionalSolution, SolutionStats)>, ExtremeError> {
    if n > opts.max_n {
        return Err(ExtremeError::EnumerationBound(n, opts.max_n));
    }
    if !opts.require_three_connected && n > 6 {
        return Err(ExtremeError::AuditBound(n));
    }
    if n < 3 {
        return Ok(Vec::new());
    }
    let min_degree = if opts.require_three_connected { 3 } else { 2 };
    let max_edges = 2 * n - 3;
    let min_edges = (min_degree * n).div_ceil(2);

    let pairs: Vec<(usize, usize)> = {
        let mut p = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                p.push((u, v));
            }
        }
        p
    };

    let mut seen_supports: HashSet<String> = HashSet::new();
    // Weighted canonical key -> solution; keys make the output deterministic.
    let mut found: BTreeMap<String, FractionalSolution> = BTreeMap::new();

    for mask in 1u64..(1u64 << pairs.len()) {
        let m = mask.count_ones() as usize;
        if m < min_edges || m > max_edges {
            continue;
        }
        let edges: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        if degree.iter().any(|&d| d < min_degree) {
            continue;
        }
        if !connected_without(n, &edges, 0) {
            continue;
        }
        if opts.require_three_connected && !three_connected(n, &edges) {
            continue;
        }
        let support = MultiGraph::from_pairs(n, &edges)?;
        let label = canonical_label_bounded(&support, n)?;
        if !seen_supports.insert(label) {
            continue;
        }

        for dense in support_basic_solutions(n, &edges) {
            let x = FractionalSolution::from_dense(support.clone(), &dense)?;
            if !verify_extreme(&x, 2)?.is_certificate() {
                continue;
            }
            found.entry(weighted_canonical_key(&x)).or_insert(x);
        }
    }

    let mut out = Vec::new();
    for x in found.into_values() {
        let s = stats(&x);
        if let Some(min_d) = &opts.min_denominator {
            if s.denominator < *min_d {
                continue;
            }
        }
        if let Some(min_deg) = opts.min_max_degree {
            if s.max_support_degree < min_deg {
                continue;
            }
        }
        out.push((x, s));
    }
    Ok(out)
}

/// Connectivity of the graph with the vertices of `removed` (a bitmask)
/// deleted. Vacuously true when nothing remains.
fn connected_without(n: usize, edges: &[(usize, usize)], removed: u64) -> bool {
    let alive: Vec<usize> = (0..n).filter(|&v| removed >> v & 1 == 0).collect();
    let Some(&start) = alive.first() else {
        return true;
    };
    let mut reached = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            if removed >> a & 1 == 1 || removed >> b & 1 == 1 {
                continue;
            }
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if reached >> w & 1 == 0 {
                reached |= 1 << w;
                stack.push(w);
            }
        }
    }
    alive.iter().all(|&v| reached >> v & 1 == 1)
}

fn three_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n < 4 {
        return false;
    }
    for a in 0..n {
        if !connected_without(n, edges, 1 << a) {
            return false;
        }
        for b in a + 1..n {
            if !connected_without(n, edges, 1 << a | 1 << b) {
                return false;
            }
        }
    }
    true
}

/// All basic solutions of the degree-bounded relaxation at k = 2 whose
/// support is exactly the given edge set: dense positive vectors that are
/// feasible and uniquely pinned by degrees plus a laminar tight-cut family.
fn support_basic_solutions(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<Rational>> {
    let m = edges.len();
    let two = Rational::from_integer(2.into());
    let degree_rows: Vec<Vec<Rational>> = (0..n)
        .map(|v| {
            edges
                .iter()
                .map(|&(a, b)| {
                    if a == v || b == v {
                        Rational::from_integer(1.into())
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut degree_basis = RowBasis::new();
    for row in &degree_rows {
        degree_basis.try_add(row.clone());
    }
    let deficit = m - degree_basis.rank();

    // Candidate tight sets: normalized cuts of size 2..n-2 (singletons and
    // the root complement are already degree rows).
    let mut candidates: Vec<(u64, Vec<Rational>)> = Vec::new();
    for mask in 1u64..(1u64 << (n - 1)) {
        let members = mask << 1;
        let size = members.count_ones() as usize;
        if size < 2 || size > n - 2 {
            continue;
        }
        let row: Vec<Rational> = edges
            .iter()
            .map(|&(a, b)| {
                if (members >> a & 1) != (members >> b & 1) {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                }
            })
            .collect();
        candidates.push((members, row));
    }

    let mut solutions: Vec<Vec<Rational>> = Vec::new();
    let mut seen: HashSet<Vec<Rational>> = HashSet::new();
    let mut chosen: Vec<usize> = Vec::new();

    fn dfs(
        start: usize,
        deficit: usize,
        candidates: &[(u64, Vec<Rational>)],
        degree_rows: &[Vec<Rational>],
        basis: &RowBasis,
        chosen: &mut Vec<usize>,
        edges: &[(usize, usize)],
        n: usize,
        two: &Rational,
        seen: &mut HashSet<Vec<Rational>>,
        solutions: &mut Vec<Vec<Rational>>,
    ) {
        if chosen.len() == deficit {
            let mut rows = degree_rows.to_vec();
            for &c in chosen.iter() {
                rows.push(candidates[c].1.clone());
            }
            let rhs = vec![two.clone(); rows.len()];
            let matrix = RationalMatrix::from_rows(rows);
            let Ok(SolveOutcome::Unique(sol)) = matrix.solve_unique(&rhs) else {
                return;
            };
            if sol.iter().any(|v| *v <= Rational::zero()) {
                return;
            }
            if !seen.insert(sol.clone()) {
                return;
            }
            if cut_feasible(n, edges, &sol, two) {
                solutions.push(sol);
            }
            return;
        }
        for j in start..candidates.len() {
            if candidates.len() - j < deficit - chosen.len() {
                break;
            }
            let (mask_j, row_j) = &candidates[j];
            let laminar = chosen.iter().all(|&c| {
                let mc = candidates[c].0;
                mask_j & mc == 0 || mask_j & mc == *mask_j || mask_j & mc == mc
            });
            if !laminar || !basis.would_add(row_j) {
                continue;
            }
            let mut next = basis.clone();
            next.try_add(row_j.clone());
            chosen.push(j);
            dfs(
                j + 1, deficit, candidates, degree_rows, &next, chosen, edges, n, two, seen,
                solutions,
            );
            chosen.pop();
        }
    }

    dfs(
        0,
        deficit,
        &candidates,
        &degree_rows,
        &degree_basis,
        &mut chosen,
        edges,
        n,
        &two,
        &mut seen,
        &mut solutions,
    );
    solutions
}

/// Exhaustive feasibility of all cut constraints at k = 2.
fn cut_feasible(n: usize, edges: &[(usize, usize)], dense: &[Rational], two: &Rational) -> bool {
    for mask in 1u64..(1u64 << (n - 1)) {
        let members = mask << 1;
        let mut total = Rational::zero();
        for (i, &(a, b)) in edges.iter().enumerate() {
            if (members >> a & 1) != (members >> b & 1) {
                total += &dense[i];
            }
        }
        if total < *two {
            return false;
        }
    }
    true
}

/// Canonical key of a valued support graph under vertex permutation: the
/// lexicographically least edge-list serialization over all orderings.
pub(crate) fn weighted_canonical_key(x: &FractionalSolution) -> String {
    let n = x.graph().vertex_count();
    let entries: Vec<(usize, usize, String)> = x
        .support()
        .map(|(i, v)| {
            let e = x.graph().edge(i);
            (e.u.0, e.v.0, format_rational(v))
        })
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<String> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut relabeled: Vec<(usize, usize, &str)> = entries
            .iter()
            .map(|(u, v, s)| {
                let (a, b) = (p[*u], p[*v]);
                (a.min(b), a.max(b), s.as_str())
            })
            .collect();
        relabeled.sort();
        let key = relabeled
            .iter()
            .map(|(a, b, s)| format!("{a}-{b}:{s}"))
            .collect::<Vec<_>>()
            .join(";");
        if best.as_ref().map(|b| key < *b).unwrap_or(true) {
            best = Some(key);
        }
    });
    format!("n{};{}", n, best.unwrap_or_default())
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}
