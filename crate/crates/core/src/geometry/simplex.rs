//! Two-phase exact simplex with Bland's anti-cycling rule, plus a
//! lexicographic mode that pins a unique optimal vertex.

use super::matrix::{dot, Vector};
use super::{HPolytope, LinearFunctional, LpResult, LpStatus, Sense};
use crate::rational::Rat;
use num_traits::{One, Signed, Zero};

/// Solve `min/max objective . x + offset` over the polytope. Exact; the
/// returned point is a basic optimal solution.
pub fn lp_solve(p: &HPolytope, objective: &LinearFunctional, sense: Sense) -> LpResult {
    let primary = match sense {
        Sense::Minimize => objective.coeffs.clone(),
        Sense::Maximize => objective.coeffs.iter().map(|c| -c).collect(),
    };
    let mut result = solve_lex_min(p, &[primary]);
    if let Some(v) = result.value.as_mut() {
        if sense == Sense::Maximize {
            *v = -&*v;
        }
        *v += &objective.offset;
    }
    result
}

/// Minimize the objectives lexicographically: later objectives only break
/// ties among optima of the earlier ones. With a full coordinate basis
/// appended this isolates a single vertex deterministically.
pub fn lp_solve_lex(p: &HPolytope, objectives: &[Vector]) -> LpResult {
    solve_lex_min(p, objectives)
}

struct Tableau {
    /// Constraint rows, all equalities with nonnegative rhs.
    a: Vec<Vector>,
    b: Vector,
    /// Basic variable of each row.
    basis: Vec<usize>,
    cols: usize,
    /// Columns barred from entering (fixed nonbasic at zero).
    frozen: Vec<bool>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.a[row][col].clone();
        for x in &mut self.a[row] {
            *x = &*x / &inv;
        }
        self.b[row] = &self.b[row] / &inv;
        for i in 0..self.a.len() {
            if i == row || self.a[i][col].is_zero() {
                continue;
            }
            let f = self.a[i][col].clone();
            for c in 0..self.cols {
                if !self.a[row][c].is_zero() {
                    let delta = &f * &self.a[row][c];
                    self.a[i][c] -= delta;
                }
            }
            let delta = &f * &self.b[row];
            self.b[i] -= delta;
        }
        self.basis[row] = col;
    }

    /// Reduced costs of `cost` in the current basis.
    fn reduced_costs(&self, cost: &[Rat]) -> Vector {
        let m = self.a.len();
        let cb: Vec<&Rat> = self.basis.iter().map(|&j| &cost[j]).collect();
        (0..self.cols)
            .map(|j| {
                let mut r = cost[j].clone();
                for i in 0..m {
                    if !self.a[i][j].is_zero() {
                        r -= &*cb[i] * &self.a[i][j];
                    }
                }
                r
            })
            .collect()
    }

    /// Bland pivoting to optimality of `cost`. Ok(()) on optimal, Err on
    /// unbounded.
    fn optimize(&mut self, cost: &[Rat]) -> Result<(), ()> {
        loop {
            let reduced = self.reduced_costs(cost);
            let entering = (0..self.cols)
                .find(|&j| !self.frozen[j] && reduced[j].is_negative());
            let Some(j) = entering else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.a.len() {
                if self.a[i][j].is_positive() {
                    let ratio = &self.b[i] / &self.a[i][j];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((row, _)) = leave else {
                return Err(());
            };
            self.pivot(row, j);
        }
    }

    fn objective_value(&self, cost: &[Rat]) -> Rat {
        self.basis
            .iter()
            .zip(&self.b)
            .map(|(&j, b)| &cost[j] * b)
            .sum()
    }

    /// Freeze nonbasic columns with strictly positive reduced cost so later
    /// objectives stay on the current optimal face.
    fn freeze_optimal_face(&mut self, cost: &[Rat]) {
        let reduced = self.reduced_costs(cost);
        let basic: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &j in &self.basis {
                v[j] = true;
            }
            v
        };
        for j in 0..self.cols {
            if !basic[j] && reduced[j].is_positive() {
                self.frozen[j] = true;
            }
        }
    }
}

fn solve_lex_min(p: &HPolytope, objectives: &[Vector]) -> LpResult {
    let d = p.dim;
    let n_ineq = p.inequalities.len();
    // standard form variables: x = u - v with u, v >= 0, plus one surplus
    // per inequality
    let cols = 2 * d + n_ineq;
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vector = Vec::new();
    for (idx, (a, b)) in p.inequalities.iter().enumerate() {
        let mut row = vec![Rat::zero(); cols];
        for i in 0..d {
            row[i] = a[i].clone();
            row[d + i] = -&a[i];
        }
        row[2 * d + idx] = -Rat::one();
        rows.push(row);
        rhs.push(b.clone());
    }
    for (a, b) in &p.equalities {
        let mut row = vec![Rat::zero(); cols];
        for i in 0..d {
            row[i] = a[i].clone();
            row[d + i] = -&a[i];
        }
        rows.push(row);
        rhs.push(b.clone());
    }
    for (row, b) in rows.iter_mut().zip(rhs.iter_mut()) {
        if b.is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
            *b = -&*b;
        }
    }

    // phase 1: artificial basis
    let m = rows.len();
    let total = cols + m;
    for (i, row) in rows.iter_mut().enumerate() {
        row.resize(total, Rat::zero());
        row[cols + i] = Rat::one();
    }
    let mut t = Tableau {
        a: rows,
        b: rhs,
        basis: (cols..total).collect(),
        cols: total,
        frozen: vec![false; total],
    };
    let phase1: Vector = (0..total)
        .map(|j| if j >= cols { Rat::one() } else { Rat::zero() })
        .collect();
    t.optimize(&phase1).expect("phase 1 is bounded below by 0");
    if !t.objective_value(&phase1).is_zero() {
        return LpResult {
            status: LpStatus::Infeasible,
            value: None,
            point: None,
            active: Vec::new(),
        };
    }
    // drive artificials out of the basis; drop rows that are redundant
    let mut drop_rows = Vec::new();
    for i in 0..t.a.len() {
        if t.basis[i] >= cols {
            match (0..cols).find(|&j| !t.a[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => drop_rows.push(i),
            }
        }
    }
    for &i in drop_rows.iter().rev() {
        t.a.remove(i);
        t.b.remove(i);
        t.basis.remove(i);
    }
    for row in &mut t.a {
        row.truncate(cols);
    }
    t.cols = cols;
    t.frozen.truncate(cols);

    // phase 2: lexicographic objectives over the original variables
    let mut primary_value = None;
    for (stage, obj) in objectives.iter().enumerate() {
        let mut cost = vec![Rat::zero(); cols];
        for i in 0..d {
            cost[i] = obj[i].clone();
            cost[d + i] = -&obj[i];
        }
        if t.optimize(&cost).is_err() {
            return LpResult {
                status: LpStatus::Unbounded,
                value: None,
                point: None,
                active: Vec::new(),
            };
        }
        if stage == 0 {
            primary_value = Some(t.objective_value(&cost));
        }
        if stage + 1 < objectives.len() {
            t.freeze_optimal_face(&cost);
        }
    }

    let mut y = vec![Rat::zero(); cols];
    for (i, &j) in t.basis.iter().enumerate() {
        y[j] = t.b[i].clone();
    }
    let point: Vector = (0..d).map(|i| &y[i] - &y[d + i]).collect();
    debug_assert!(p.contains(&point));
    let active = p.tight_inequalities(&point);
    LpResult {
        status: LpStatus::Optimal,
        value: primary_value,
        point: Some(point),
        active,
    }
}

/// Brute-force oracle: minimum of an objective over an explicit point list.
pub fn brute_minimum(points: &[Vector], objective: &LinearFunctional) -> Option<Rat> {
    points.iter().map(|v| objective.eval(v)).min()
}
