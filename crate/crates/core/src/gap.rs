//! Integrality-gap lower bounds via Hamiltonian-cycle domination.
//!
//! For a solution `x`, the gap value is the least `t >= 0` such that `x` is
//! componentwise dominated by `t` times a convex combination of Hamiltonian
//! cycle indicators. That covering LP has exponentially many columns, so it
//! is solved by column generation: an exact restricted master plus a pricing
//! oracle that finds a maximum-dual-weight Hamiltonian cycle by bitmask
//! dynamic programming (exact rationals end to end, negative costs allowed).

use crate::cutlp::FractionalSolution;
use crate::rational::Rational;
use crate::simplex::{lp_solve, LinearConstraint, LpStatus, Sense};
use num::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

pub const TSP_MAX_N: usize = 16;
const PRICING_ROUND_CAP: usize = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GapError {
    #[error("tour enumeration needs 3 <= n <= {TSP_MAX_N}, got n = {0}")]
    BadTourSize(usize),
    #[error("cost matrix has {got} entries, expected {expected} for n = {n}")]
    BadCostShape { got: usize, expected: usize, n: usize },
    #[error(transparent)]
    Lp(#[from] crate::simplex::LpError),
    #[error(transparent)]
    CutLp(#[from] crate::cutlp::CutLpError),
}

/// A Hamiltonian cycle stored as a cyclic vertex order; its indicator vector
/// over unordered pairs has exactly `n` ones.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleColumn {
    order: Vec<usize>,
}

impl CycleColumn {
    pub fn new(order: Vec<usize>) -> Self {
        debug_assert!(order.len() >= 3);
        CycleColumn { order }.canonicalized()
    }

    /// Rotates/reflects the order so equal cycles compare equal: start at
    /// vertex 0, second vertex the smaller neighbor.
    fn canonicalized(self) -> Self {
        let n = self.order.len();
        let start = self.order.iter().position(|&v| v == 0).unwrap();
        let forward: Vec<usize> = (0..n).map(|i| self.order[(start + i) % n]).collect();
        let backward: Vec<usize> = (0..n).map(|i| self.order[(start + n - i) % n]).collect();
        CycleColumn {
            order: if forward[1] <= backward[1] {
                forward
            } else {
                backward
            },
        }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order.len();
        (0..n).map(move |i| {
            let a = self.order[i];
            let b = self.order[(i + 1) % n];
            (a.min(b), a.max(b))
        })
    }

    pub fn contains_pair(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.pairs().any(|p| p == key)
    }
}

/// The optimal covering combination: `t = sum of weights` and the dominance
/// `sum weight * indicator >= x` holds exactly.
#[derive(Clone, Debug)]
pub struct GapResult {
    pub t: Rational,
    pub combination: Vec<(CycleColumn, Rational)>,
}

/// Exact minimum-cost Hamiltonian cycle under arbitrary (possibly negative)
/// rational costs, by Held-Karp bitmask dynamic programming. `cost(u, v)`
/// must be symmetric.
pub fn tsp_min_cycle(
    n: usize,
    cost: &dyn Fn(usize, usize) -> Rational,
) -> Result<(Rational, CycleColumn), GapError> {
    if !(3..=TSP_MAX_N).contains(&n) {
        return Err(GapError::BadTourSize(n));
    }
    // dp[mask][j]: cheapest path 0 -> j visiting {0} plus the mask's
    // vertices (bit i of mask = vertex i + 1), j inside the mask.
    let states = 1usize << (n - 1);
    let mut dp: Vec<Vec<Option<Rational>>> = vec![vec![None; n - 1]; states];
    let mut parent: Vec<Vec<usize>> = vec![vec![usize::MAX; n - 1]; states];
    for j in 0..n - 1 {
        dp[1 << j][j] = Some(cost(0, j + 1));
    }
    for mask in 1..states {
        for j in 0..n - 1 {
            if mask >> j & 1 == 0 {
                continue;
            }
            let Some(base) = dp[mask][j].clone() else {
                continue;
            };
            let rest = (states - 1) ^ mask;
            let mut next_bits = rest;
            while next_bits != 0 {
                let k = next_bits.trailing_zeros() as usize;
                next_bits &= next_bits - 1;
                let candidate = &base + cost(j + 1, k + 1);
                let target = &mut dp[mask | 1 << k][k];
                let better = target.as_ref().map(|t| candidate < *t).unwrap_or(true);
                if better {
                    *target = Some(candidate);
                    parent[mask | 1 << k][k] = j;
                }
            }
        }
    }
    let full = states - 1;
    let mut best: Option<(Rational, usize)> = None;
    for j in 0..n - 1 {
        let Some(path) = &dp[full][j] else { continue };
        let total = path + cost(j + 1, 0);
        if best.as_ref().map(|(b, _)| total < *b).unwrap_or(true) {
            best = Some((total, j));
        }
    }
    let (value, mut j) = best.expect("complete graph has a tour");
    let mut order = vec![0usize];
    let mut mask = full;
    loop {
        order.push(j + 1);
        let p = parent[mask][j];
        mask ^= 1 << j;
        if p == usize::MAX {
            break;
        }
        j = p;
    }
    order.reverse();
    debug_assert_eq!(order.len(), n);
    Ok((value, CycleColumn::new(order)))
}

/// Least `t >= 0` such that `x` is dominated by `t` times a convex
/// combination of Hamiltonian cycle indicators, solved exactly by column
/// generation. Termination is certified by the pricing oracle: no tour has
/// negative reduced cost at the final duals.
pub fn domination_gap(x: &FractionalSolution) -> Result<GapResult, GapError> {
    let n = x.graph().vertex_count();
    if x.support_size() == 0 {
        return Ok(GapResult {
            t: Rational::zero(),
            combination: Vec::new(),
        });
    }
    if !(3..=TSP_MAX_N).contains(&n) {
        return Err(GapError::BadTourSize(n));
    }

    // Master rows: one covering constraint per support pair.
    let support: Vec<((usize, usize), Rational)> = {
        let mut by_pair: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (idx, v) in x.support() {
            let e = x.graph().edge(idx);
            let key = (e.u.0.min(e.v.0), e.u.0.max(e.v.0));
            *by_pair.entry(key).or_insert_with(Rational::zero) += v;
        }
        by_pair.into_iter().collect()
    };

    let mut columns: Vec<CycleColumn> = Vec::new();
    let push_column = |columns: &mut Vec<CycleColumn>, c: CycleColumn| {
        if !columns.contains(&c) {
            columns.push(c);
        }
    };

    // Initial columns: the identity tour, a greedy tour from each start
    // vertex (heaviest x-value first), and one tour through each support
    // pair so the master starts feasible.
    push_column(&mut columns, CycleColumn::new((0..n).collect()));
    let pair_value = |u: usize, v: usize| -> Rational {
        let key = (u.min(v), u.max(v));
        support
            .iter()
            .find(|(p, _)| *p == key)
            .map(|(_, w)| w.clone())
            .unwrap_or_else(Rational::zero)
    };
    for start in 0..n {
        let mut order = vec![start];
        let mut used = 1u64 << start;
        while order.len() < n {
            let last = *order.last().unwrap();
            let next = (0..n)
                .filter(|&v| used >> v & 1 == 0)
                .max_by(|&a, &b| pair_value(last, a).cmp(&pair_value(last, b)))
                .unwrap();
            order.push(next);
            used |= 1 << next;
        }
        push_column(&mut columns, CycleColumn::new(order));
    }
    for &((u, v), _) in &support {
        let mut order = vec![u, v];
        order.extend((0..n).filter(|&w| w != u && w != v));
        push_column(&mut columns, CycleColumn::new(order));
    }

    let objective_of = |columns: &[CycleColumn]| vec![Rational::one(); columns.len()];
    let rows_of = |columns: &[CycleColumn]| -> Vec<LinearConstraint> {
        support
            .iter()
            .map(|((u, v), xv)| {
                let coeffs = columns
                    .iter()
                    .map(|c| {
                        if c.contains_pair(*u, *v) {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect();
                LinearConstraint::new(coeffs, Sense::Ge, xv.clone())
            })
            .collect()
    };

    for _ in 0..PRICING_ROUND_CAP {
        let outcome = lp_solve(&objective_of(&columns), &rows_of(&columns), None)?;
        assert_eq!(
            outcome.status,
            LpStatus::Optimal,
            "master is feasible once every support pair is covered"
        );
        let duals = outcome.duals.expect("optimal outcome carries duals");

        // Pricing: min over tours of 1 - sum of duals on the tour's pairs,
        // i.e. a min-cost tour under costs -dual.
        let dual_of = |u: usize, v: usize| -> Rational {
            let key = (u.min(v), u.max(v));
            support
                .iter()
                .position(|(p, _)| *p == key)
                .map(|i| duals[i].clone())
                .unwrap_or_else(Rational::zero)
        };
        let (neg_weight, tour) = tsp_min_cycle(n, &|u, v| -dual_of(u, v))?;
        let reduced = Rational::one() + neg_weight;
        if reduced >= Rational::zero() {
            let weights = outcome.solution.expect("optimal outcome carries a point");
            let t = outcome.value.expect("optimal outcome carries a value");
            let combination: Vec<(CycleColumn, Rational)> = columns
                .into_iter()
                .zip(weights)
                .filter(|(_, w)| !w.is_zero())
                .collect();
            debug_assert_eq!(
                combination.iter().map(|(_, w)| w.clone()).sum::<Rational>(),
                t
            );
            return Ok(GapResult { t, combination });
        }
        assert!(
            !columns.contains(&tour),
            "a known column cannot price negative"
        );
        columns.push(tour);
    }
    unreachable!("column generation terminates: finitely many tours");
}

/// Exact componentwise dominance check `sum weight * indicator >= x`.
pub fn dominates(result: &GapResult, x: &FractionalSolution) -> bool {
    for (idx, v) in x.support() {
        let e = x.graph().edge(idx);
        let mut covered = Rational::zero();
        for (c, w) in &result.combination {
            if c.contains_pair(e.u.0, e.v.0) {
                covered += w;
            }
        }
        if covered < *v {
            return false;
        }
    }
    true
}
