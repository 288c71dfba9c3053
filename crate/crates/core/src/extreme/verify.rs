//! Construction-agnostic extremeness verification.
//!
//! A feasible point of the degree-bounded relaxation is extreme iff the
//! system of its tight constraints pins it down uniquely. Restricted to the
//! support variables (zero variables are already pinned by their tight
//! nonnegativity bounds) that system consists of the tight cut rows, degree
//! singletons included, so extremeness reduces to a full-rank test of the
//! tight cut incidence over the support.

use super::fibonacci::LaminarFamily;
use super::ExtremeError;
use crate::cutlp::{check_feasible, CutLp, FractionalSolution, LpVariant};
use crate::graph::{cut_weight, CutSet};
use crate::matrix::{RationalMatrix, RowBasis};
use crate::rational::Rational;
use num::{Signed, Zero};

pub const VERIFY_CUT_ENUMERATION_BOUND: usize = 24;

/// Proof that a solution is an extreme point: a laminar basis of the tight
/// system, the rank record, and the separation transcript.
#[derive(Clone, Debug)]
pub struct ExtremenessCertificate {
    pub k: u64,
    /// Laminar subfamily of tight sets whose rows span the full tight system.
    pub tight_family: LaminarFamily,
    /// Every tight cut found by exhaustive enumeration.
    pub tight_cut_count: usize,
    /// Rank of the tight system over the support variables; equals
    /// `support_size` by definition of a certificate.
    pub rank: usize,
    pub support_size: usize,
    /// Number of normalized cuts enumerated while checking feasibility.
    pub cuts_checked: usize,
}

/// Why a solution failed verification. Non-extremeness comes with two
/// distinct feasible points averaging to the input exactly.
#[derive(Clone, Debug)]
pub enum Refutation {
    DegreeViolated {
        vertex: usize,
        value: Rational,
    },
    CutViolated {
        cut: CutSet,
        value: Rational,
    },
    NotUnique {
        point_a: FractionalSolution,
        point_b: FractionalSolution,
    },
}

#[derive(Clone, Debug)]
pub enum ExtremenessOutcome {
    Certificate(ExtremenessCertificate),
    Refutation(Refutation),
}

impl ExtremenessOutcome {
    pub fn is_certificate(&self) -> bool {
        matches!(self, ExtremenessOutcome::Certificate(_))
    }

    pub fn certificate(&self) -> Option<&ExtremenessCertificate> {
        match self {
            ExtremenessOutcome::Certificate(c) => Some(c),
            ExtremenessOutcome::Refutation(_) => None,
        }
    }
}

/// Gray-code walk over all normalized cuts (nonempty subsets of `V \ {0}`),
/// calling `visit(mask, value)` with the exact cut value of `x`.
fn for_each_normalized_cut(
    n: usize,
    adjacency: &[Vec<(usize, Rational)>],
    mut visit: impl FnMut(u64, &Rational),
) {
    debug_assert!(n >= 2 && n <= 64);
    let mut members = 0u64;
    let mut value = Rational::zero();
    let count = 1u64 << (n - 1);
    for i in 1..count {
        let bit = i.trailing_zeros() as usize;
        let v = bit + 1;
        for (u, w) in &adjacency[v] {
            let u_in = members >> *u & 1 == 1;
            let v_in = members >> v & 1 == 1;
            if u_in == v_in {
                value += w;
            } else {
                value -= w;
            }
        }
        members ^= 1 << v;
        visit(members, &value);
    }
}

fn support_adjacency(x: &FractionalSolution) -> Vec<Vec<(usize, Rational)>> {
    let n = x.graph().vertex_count();
    let mut adjacency = vec![Vec::new(); n];
    for (idx, v) in x.support() {
        let e = x.graph().edge(idx);
        adjacency[e.u.0].push((e.v.0, v.clone()));
        adjacency[e.v.0].push((e.u.0, v.clone()));
    }
    adjacency
}

/// Incidence row of a cut over the support edges, in support order.
fn support_cut_row(x: &FractionalSolution, members: u64) -> Vec<Rational> {
    x.support()
        .map(|(idx, _)| {
            let e = x.graph().edge(idx);
            let cross = (members >> e.u.0 & 1) != (members >> e.v.0 & 1);
            if cross {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// Verifies that `x` is an extreme point of the degree-bounded relaxation at
/// level `k`: (1) feasibility via degree sums and separation, (2) exhaustive
/// tight-cut collection, (3) full-rank uniqueness of the tight system over
/// the support. Non-extreme solutions are refuted constructively through a
/// nullspace direction of the tight system.
pub fn verify_extreme(
    x: &FractionalSolution,
    k: u64,
) -> Result<ExtremenessOutcome, ExtremeError> {
    let n = x.graph().vertex_count();
    if n > VERIFY_CUT_ENUMERATION_BOUND {
        return Err(ExtremeError::VerifyTooLarge(n, VERIFY_CUT_ENUMERATION_BOUND));
    }
    let k_rational = Rational::from_integer(k.into());

    // Stage 1: feasibility. Degree equalities first, then a separation run.
    for v in 0..n {
        let value = x.degree_value(v);
        if value != k_rational {
            return Ok(ExtremenessOutcome::Refutation(Refutation::DegreeViolated {
                vertex: v,
                value,
            }));
        }
    }
    let lp = CutLp::new(x.graph(), k, LpVariant::Bounded)?;
    if let Some(cut) = lp.separate(x)? {
        let value = cut_weight(x.graph(), &cut, &x.dense());
        return Ok(ExtremenessOutcome::Refutation(Refutation::CutViolated {
            cut,
            value,
        }));
    }

    // Stage 2: every tight cut, by exhaustive enumeration over normalized
    // cuts. Degree constraints are the singleton cut rows and are all tight
    // here, so the collection is the complete tight system.
    let adjacency = support_adjacency(x);
    let mut tight_masks: Vec<u64> = Vec::new();
    let mut cuts_checked = 0usize;
    for_each_normalized_cut(n, &adjacency, |mask, value| {
        cuts_checked += 1;
        if *value == k_rational {
            tight_masks.push(mask);
        }
    });

    // Stage 3: rank of the tight system over the support variables.
    let m = x.support_size();
    let mut basis = RowBasis::new();
    for &mask in &tight_masks {
        basis.try_add(support_cut_row(x, mask));
        if basis.rank() == m {
            break;
        }
    }
    let rank = basis.rank();
    if rank == m {
        let tight_family = extract_laminar_basis(x, &tight_masks, m);
        return Ok(ExtremenessOutcome::Certificate(ExtremenessCertificate {
            k,
            tight_family,
            tight_cut_count: tight_masks.len(),
            rank,
            support_size: m,
            cuts_checked,
        }));
    }

    // Rank-deficient: produce two feasible points averaging to x by stepping
    // along a nullspace direction of the tight system.
    let tight_matrix = RationalMatrix::from_rows(
        tight_masks
            .iter()
            .map(|&mask| support_cut_row(x, mask))
            .collect(),
    );
    let direction = tight_matrix
        .nullspace_vector()
        .expect("rank-deficient system has a nullspace direction");
    let epsilon = perturbation_step(x, &adjacency, &direction, &k_rational);

    let support: Vec<usize> = x.support().map(|(i, _)| i).collect();
    let mut dense_a = x.dense();
    let mut dense_b = x.dense();
    for (pos, &edge) in support.iter().enumerate() {
        let delta = &epsilon * &direction[pos];
        dense_a[edge] += &delta;
        dense_b[edge] -= &delta;
    }
    let point_a = FractionalSolution::from_dense(x.graph().clone(), &dense_a)?;
    let point_b = FractionalSolution::from_dense(x.graph().clone(), &dense_b)?;
    debug_assert!(check_feasible(&point_a, k, LpVariant::Bounded)?);
    debug_assert!(check_feasible(&point_b, k, LpVariant::Bounded)?);
    debug_assert_ne!(point_a, point_b);
    Ok(ExtremenessOutcome::Refutation(Refutation::NotUnique {
        point_a,
        point_b,
    }))
}

/// Largest exact step `eps` such that `x +- eps * z` stays feasible, halved.
/// Binding terms: entry positivity on the support and the slack of every
/// non-tight cut relative to the direction's effect on it.
fn perturbation_step(
    x: &FractionalSolution,
    adjacency: &[Vec<(usize, Rational)>],
    direction: &[Rational],
    k_rational: &Rational,
) -> Rational {
    let mut bound: Option<Rational> = None;
    let mut shrink = |candidate: Rational| {
        if bound.as_ref().map(|b| candidate < *b).unwrap_or(true) {
            bound = Some(candidate);
        }
    };
    for (pos, (_, value)) in x.support().enumerate() {
        if !direction[pos].is_zero() {
            shrink(value / direction[pos].abs());
        }
    }

    // Direction adjacency to track z(delta(S)) in the same Gray-code walk.
    let n = x.graph().vertex_count();
    let mut dir_adjacency = vec![Vec::new(); n];
    for (pos, (idx, _)) in x.support().enumerate() {
        let e = x.graph().edge(idx);
        dir_adjacency[e.u.0].push((e.v.0, direction[pos].clone()));
        dir_adjacency[e.v.0].push((e.u.0, direction[pos].clone()));
    }
    let mut members = 0u64;
    let mut x_value = Rational::zero();
    let mut z_value = Rational::zero();
    for i in 1..(1u64 << (n - 1)) {
        let bit = i.trailing_zeros() as usize;
        let v = bit + 1;
        let v_in = members >> v & 1 == 1;
        for (u, w) in &adjacency[v] {
            if (members >> *u & 1 == 1) == v_in {
                x_value += w;
            } else {
                x_value -= w;
            }
        }
        for (u, w) in &dir_adjacency[v] {
            if (members >> *u & 1 == 1) == v_in {
                z_value += w;
            } else {
                z_value -= w;
            }
        }
        members ^= 1 << v;
        if !z_value.is_zero() {
            let slack = &x_value - k_rational;
            if slack.is_positive() {
                shrink(slack / z_value.abs());
            }
        }
    }
    bound.map(|b| b / Rational::from_integer(2.into())).unwrap_or_else(|| {
        Rational::from_integer(1.into())
    })
}

/// A laminar subfamily of the tight cuts forming a basis of the tight row
/// space; exists by uncrossing on full-support solutions.
fn extract_laminar_basis(
    x: &FractionalSolution,
    tight_masks: &[u64],
    target_rank: usize,
) -> LaminarFamily {
    let n = x.graph().vertex_count();
    let mut ordered: Vec<u64> = tight_masks.to_vec();
    ordered.sort_by_key(|&mask| (mask.count_ones(), mask));

    let mut chosen_sets: Vec<CutSet> = Vec::new();
    let mut chosen_masks: Vec<u64> = Vec::new();
    let mut basis = RowBasis::new();
    for &mask in &ordered {
        let laminar = chosen_masks.iter().all(|&c| {
            mask & c == 0 || mask & c == mask || mask & c == c
        });
        if !laminar {
            continue;
        }
        if basis.try_add(support_cut_row(x, mask)) {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            chosen_sets.push(CutSet::from_members(n, &members));
            chosen_masks.push(mask);
            if basis.rank() == target_rank {
                break;
            }
        }
    }
    assert_eq!(
        basis.rank(),
        target_rank,
        "uncrossing guarantees a laminar basis of the tight system"
    );
    LaminarFamily::new(n, chosen_sets).expect("chosen sets are laminar and root-free")
}
