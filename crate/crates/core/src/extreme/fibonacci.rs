//! The Fibonacci family of extreme points and its canonical laminar family
//! of tight sets.
//!
//! For a parameter `t >= 3` the solution lives on `2t` vertices (0-based ids
//! for the 1-based construction labels) and has `4t - 3` support edges with
//! values of the form `F_i / F_t`; its fractionality is `1 / F_t` and its
//! maximum support degree is `t`, both exponential/linear extremes among
//! known families.

use super::ExtremeError;
use crate::cutlp::FractionalSolution;
use crate::graph::{CutSet, MultiEdge, MultiGraph};
use crate::rational::Rational;
use num::bigint::BigInt;
use num::One;
use std::collections::BTreeMap;

/// `F_1 = F_2 = 1`, `F_i = F_{i-1} + F_{i-2}`.
pub fn fibonacci_number(i: u32) -> BigInt {
    assert!(i >= 1);
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for _ in 2..i {
        let next = &a + &b;
        a = b;
        b = next;
    }
    if i == 1 {
        a
    } else {
        b
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct FibonacciParams {
    t: u32,
}

impl FibonacciParams {
    pub fn new(t: u32) -> Result<Self, ExtremeError> {
        if t < 3 {
            return Err(ExtremeError::TTooSmall(t));
        }
        Ok(FibonacciParams { t })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.t as usize
    }

    pub fn support_size(&self) -> usize {
        4 * self.t as usize - 3
    }
}

/// Builds the solution on vertices `0..2t` (construction label `i` is vertex
/// `i - 1`). Seven edge groups; all values lie in `(0, 1]`.
pub fn construct_fibonacci(params: &FibonacciParams) -> FractionalSolution {
    let t = params.t;
    let ft = fibonacci_number(t);
    let frac = |i: u32| Rational::new(fibonacci_number(i), ft.clone());
    let one_minus = |r: Rational| Rational::one() - r;

    // (label_u, label_v, value), labels 1..2t.
    let mut entries: Vec<(u32, u32, Rational)> = Vec::with_capacity(params.support_size());
    for i in 1..=t {
        entries.push((2 * i - 1, 2 * i, Rational::one()));
    }
    for i in 2..=t - 1 {
        entries.push((1, 2 * i, frac(t - i)));
    }
    entries.push((1, 2 * t, Rational::new(BigInt::one(), ft.clone())));
    for i in 3..=t {
        entries.push((2 * i - 3, 2 * i - 1, frac(t - i + 1)));
    }
    for i in 3..=t {
        entries.push((2 * i - 4, 2 * i - 1, one_minus(frac(t - i + 2))));
    }
    entries.push((2, 3, frac(t - 1)));
    entries.push((
        2 * t - 2,
        2 * t,
        one_minus(Rational::new(BigInt::one(), ft.clone())),
    ));

    let edges: Vec<MultiEdge> = entries
        .iter()
        .map(|(u, v, _)| MultiEdge::new(*u as usize - 1, *v as usize - 1, Rational::one(), 1))
        .collect();
    let graph = MultiGraph::new(params.vertex_count(), edges).expect("valid support graph");
    let values: BTreeMap<usize, Rational> = entries
        .into_iter()
        .enumerate()
        .map(|(idx, (_, _, v))| (idx, v))
        .collect();
    FractionalSolution::new(graph, values).expect("positive construction values")
}

/// A family of pairwise non-crossing vertex sets, each normalized to exclude
/// the root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaminarFamily {
    sets: Vec<CutSet>,
}

impl LaminarFamily {
    pub fn new(n: usize, sets: Vec<CutSet>) -> Result<Self, ExtremeError> {
        for (i, s) in sets.iter().enumerate() {
            if s.contains(0) || s.is_empty() {
                return Err(ExtremeError::NotLaminar);
            }
            for t in &sets[..i] {
                if s == t || !s.laminar_with(t) {
                    return Err(ExtremeError::NotLaminar);
                }
            }
        }
        if n >= 1 && sets.len() > 2 * (n - 1) - 1 {
            return Err(ExtremeError::LaminarTooLarge {
                n,
                len: sets.len(),
            });
        }
        Ok(LaminarFamily { sets })
    }

    pub fn sets(&self) -> &[CutSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// The tight-set family certifying the construction: all `2t` singletons,
/// the `t` pairs `{2i-1, 2i}`, and the `t-3` prefixes `{1..2i}` for
/// `i = 2..t-2` (construction labels). Exactly `4t - 3` sets; after
/// root-complement normalization it is a maximal laminar family.
pub fn canonical_laminar_family(params: &FibonacciParams) -> LaminarFamily {
    let t = params.t as usize;
    let n = 2 * t;
    let mut sets = Vec::with_capacity(4 * t - 3);
    for label in 1..=n {
        sets.push(CutSet::from_members(n, &[label - 1]).normalize());
    }
    for i in 1..=t {
        sets.push(CutSet::from_members(n, &[2 * i - 2, 2 * i - 1]).normalize());
    }
    for i in 2..=t.saturating_sub(2) {
        let members: Vec<usize> = (0..2 * i).collect();
        sets.push(CutSet::from_members(n, &members).normalize());
    }
    LaminarFamily::new(n, sets).expect("construction family is laminar")
}
