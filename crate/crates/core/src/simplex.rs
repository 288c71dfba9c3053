//! Exact two-phase simplex over rationals.
//!
//! Minimizes a linear objective subject to `<=` / `=` / `>=` rows and
//! per-variable lower bounds (default 0). Pivoting uses Bland's rule with
//! lowest-index tie-breaking throughout, so runs are deterministic and never
//! cycle. Returned solutions are basic; dual values are recovered from the
//! identity columns of the final tableau.

use crate::rational::Rational;
use num::{One, Signed, Zero};
use thiserror::Error;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rational>,
    pub sense: Sense,
    pub rhs: Rational,
}

impl LinearConstraint {
    pub fn new(coeffs: Vec<Rational>, sense: Sense, rhs: Rational) -> Self {
        LinearConstraint { coeffs, sense, rhs }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Outcome of an exact LP solve. `solution` and `value` are present iff
/// optimal; `duals` holds one multiplier per input row (zero for rows found
/// redundant during phase 1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub value: Option<Rational>,
    pub solution: Option<Vec<Rational>>,
    pub duals: Option<Vec<Rational>>,
}

impl LpOutcome {
    fn of_status(status: LpStatus) -> Self {
        LpOutcome {
            status,
            value: None,
            solution: None,
            duals: None,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LpError {
    #[error("constraint {row} has {got} coefficients, expected {expected}")]
    RowWidth {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("lower bound vector has {got} entries, expected {expected}")]
    BoundWidth { got: usize, expected: usize },
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
enum ColKind {
    Structural(usize),
    Slack(usize),
    Artificial(usize),
}

struct Tableau {
    ncols: usize,
    kinds: Vec<ColKind>,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Per surviving row: (original row index, sign flip applied during
    /// normalization, identity column for dual recovery).
    row_info: Vec<(usize, i8, usize)>,
    red: Vec<Rational>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, j: usize) {
        let p = self.rows[r][j].clone();
        for c in 0..self.ncols {
            self.rows[r][c] /= &p;
        }
        self.rhs[r] /= &p;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][j].is_zero() {
                continue;
            }
            let f = self.rows[i][j].clone();
            for c in 0..self.ncols {
                let delta = &self.rows[r][c] * &f;
                self.rows[i][c] -= delta;
            }
            let delta = &self.rhs[r] * &f;
            self.rhs[i] -= delta;
        }
        if !self.red[j].is_zero() {
            let f = self.red[j].clone();
            for c in 0..self.ncols {
                let delta = &self.rows[r][c] * &f;
                self.red[c] -= delta;
            }
        }
        self.basis[r] = j;
    }

    /// Reduced costs for the given column costs under the current basis.
    fn rebuild_reduced(&mut self, costs: &[Rational]) {
        self.red = costs.to_vec();
        for (r, &b) in self.basis.iter().enumerate() {
            if costs[b].is_zero() {
                continue;
            }
            let f = costs[b].clone();
            for c in 0..self.ncols {
                let delta = &self.rows[r][c] * &f;
                self.red[c] -= delta;
            }
        }
    }

    /// Bland iterations until optimal or unbounded. `allow` filters entering
    /// columns.
    fn run(&mut self, allow: impl Fn(ColKind) -> bool) -> LpStatus {
        loop {
            let entering = (0..self.ncols)
                .find(|&j| allow(self.kinds[j]) && self.red[j].is_negative());
            let Some(j) = entering else {
                return LpStatus::Optimal;
            };
            let mut leave: Option<(Rational, usize, usize)> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][j].is_positive() {
                    let ratio = &self.rhs[r] / &self.rows[r][j];
                    let replace = match &leave {
                        None => true,
                        Some((best, bvar, _)) => {
                            ratio < *best || (ratio == *best && self.basis[r] < *bvar)
                        }
                    };
                    if replace {
                        leave = Some((ratio, self.basis[r], r));
                    }
                }
            }
            let Some((_, _, r)) = leave else {
                return LpStatus::Unbounded;
            };
            self.pivot(r, j);
        }
    }
}

/// Exact optimum of `min c.x` subject to the given rows and `x >= lb`
/// (componentwise, `lb = 0` when omitted).
pub fn lp_solve(
    objective: &[Rational],
    constraints: &[LinearConstraint],
    lower_bounds: Option<&[Rational]>,
) -> Result<LpOutcome, LpError> {
    let n = objective.len();
    for (i, c) in constraints.iter().enumerate() {
        if c.coeffs.len() != n {
            return Err(LpError::RowWidth {
                row: i,
                got: c.coeffs.len(),
                expected: n,
            });
        }
    }
    let zero_bounds = vec![Rational::zero(); n];
    let lb = match lower_bounds {
        Some(b) => {
            if b.len() != n {
                return Err(LpError::BoundWidth {
                    got: b.len(),
                    expected: n,
                });
            }
            b
        }
        None => &zero_bounds,
    };

    // Shift to x = x' + lb with x' >= 0, then normalize rhs >= 0.
    let m = constraints.len();
    let mut senses = Vec::with_capacity(m);
    let mut flips = vec![1i8; m];
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    for (i, c) in constraints.iter().enumerate() {
        let mut row = c.coeffs.clone();
        let mut b = c.rhs.clone();
        for (coeff, bound) in row.iter().zip(lb) {
            b -= coeff * bound;
        }
        let mut sense = c.sense;
        if b.is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
            b = -b;
            flips[i] = -1;
            sense = match sense {
                Sense::Le => Sense::Ge,
                Sense::Eq => Sense::Eq,
                Sense::Ge => Sense::Le,
            };
        }
        senses.push(sense);
        rows.push(row);
        rhs.push(b);
    }

    // Column layout: structural, then slack/surplus, then artificials.
    let mut kinds: Vec<ColKind> = (0..n).map(ColKind::Structural).collect();
    let mut slack_col = vec![usize::MAX; m];
    for (i, s) in senses.iter().enumerate() {
        if matches!(s, Sense::Le | Sense::Ge) {
            slack_col[i] = kinds.len();
            kinds.push(ColKind::Slack(i));
        }
    }
    let mut art_col = vec![usize::MAX; m];
    for (i, s) in senses.iter().enumerate() {
        if matches!(s, Sense::Ge | Sense::Eq) {
            art_col[i] = kinds.len();
            kinds.push(ColKind::Artificial(i));
        }
    }
    let ncols = kinds.len();

    let mut tab_rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut row_info = Vec::with_capacity(m);
    for i in 0..m {
        let mut full = vec![Rational::zero(); ncols];
        full[..n].clone_from_slice(&rows[i]);
        match senses[i] {
            Sense::Le => {
                full[slack_col[i]] = Rational::one();
                basis.push(slack_col[i]);
            }
            Sense::Ge => {
                full[slack_col[i]] = -Rational::one();
                full[art_col[i]] = Rational::one();
                basis.push(art_col[i]);
            }
            Sense::Eq => {
                full[art_col[i]] = Rational::one();
                basis.push(art_col[i]);
            }
        }
        let identity_col = if art_col[i] != usize::MAX {
            art_col[i]
        } else {
            slack_col[i]
        };
        row_info.push((i, flips[i], identity_col));
        tab_rows.push(full);
    }

    let mut t = Tableau {
        ncols,
        kinds,
        rows: tab_rows,
        rhs,
        basis,
        row_info,
        red: vec![],
    };

    // Phase 1: minimize the sum of artificials.
    let needs_phase1 = t.kinds.iter().any(|k| matches!(k, ColKind::Artificial(_)));
    if needs_phase1 {
        let costs: Vec<Rational> = t
            .kinds
            .iter()
            .map(|k| {
                if matches!(k, ColKind::Artificial(_)) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        t.rebuild_reduced(&costs);
        let status = t.run(|_| true);
        debug_assert_eq!(status, LpStatus::Optimal);
        let infeasibility: Rational = t
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| matches!(t.kinds[b], ColKind::Artificial(_)))
            .map(|(r, _)| t.rhs[r].clone())
            .sum();
        if !infeasibility.is_zero() {
            return Ok(LpOutcome::of_status(LpStatus::Infeasible));
        }
        drive_out_artificials(&mut t);
    }

    // Phase 2 over the real objective; artificials may not re-enter.
    let costs: Vec<Rational> = t
        .kinds
        .iter()
        .map(|k| match k {
            ColKind::Structural(i) => objective[*i].clone(),
            _ => Rational::zero(),
        })
        .collect();
    t.rebuild_reduced(&costs);
    let status = t.run(|k| !matches!(k, ColKind::Artificial(_)));
    if status == LpStatus::Unbounded {
        return Ok(LpOutcome::of_status(LpStatus::Unbounded));
    }

    let mut solution = lb.to_vec();
    for (r, &b) in t.basis.iter().enumerate() {
        if let ColKind::Structural(i) = t.kinds[b] {
            solution[i] += &t.rhs[r];
        }
    }
    let value: Rational = objective
        .iter()
        .zip(&solution)
        .map(|(c, x)| c * x)
        .sum();
    let mut duals = vec![Rational::zero(); m];
    for &(orig, flip, id_col) in &t.row_info {
        let y = -t.red[id_col].clone();
        duals[orig] = if flip < 0 { -y } else { y };
    }
    Ok(LpOutcome {
        status: LpStatus::Optimal,
        value: Some(value),
        solution: Some(solution),
        duals: Some(duals),
    })
}

/// Pivots zero-valued basic artificials onto real columns; rows admitting no
/// such pivot are redundant and dropped.
fn drive_out_artificials(t: &mut Tableau) {
    let mut r = 0;
    while r < t.rows.len() {
        if matches!(t.kinds[t.basis[r]], ColKind::Artificial(_)) {
            debug_assert!(t.rhs[r].is_zero());
            let target = (0..t.ncols).find(|&j| {
                !matches!(t.kinds[j], ColKind::Artificial(_)) && !t.rows[r][j].is_zero()
            });
            match target {
                Some(j) => {
                    t.red = vec![Rational::zero(); t.ncols];
                    t.pivot(r, j);
                }
                None => {
                    t.rows.remove(r);
                    t.rhs.remove(r);
                    t.basis.remove(r);
                    t.row_info.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }
}
