//! Exact-rational polytope machinery: linear programming, affine rank,
//! facet sieving from vertices, and vertex enumeration from half-spaces.

pub mod enumerate;
pub mod matrix;
pub mod sieve;
pub mod simplex;

pub use enumerate::vertex_enumerate;
pub use sieve::{affine_hull_equations, facet_sieve};
pub use simplex::{lp_solve, lp_solve_lex};

use crate::rational::Rat;
use matrix::{dot, Matrix, Vector};
use num_traits::Zero;

/// A linear functional `x -> coeffs . x + offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearFunctional {
    pub coeffs: Vector,
    pub offset: Rat,
}

impl LinearFunctional {
    pub fn linear(coeffs: Vector) -> Self {
        LinearFunctional {
            coeffs,
            offset: Rat::zero(),
        }
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        dot(&self.coeffs, x) + &self.offset
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

/// Inequalities `normal . x >= bound` plus equalities `normal . x = value`.
#[derive(Clone, Debug, Default)]
pub struct HPolytope {
    pub dim: usize,
    pub inequalities: Vec<(Vector, Rat)>,
    pub equalities: Vec<(Vector, Rat)>,
}

impl HPolytope {
    pub fn new(dim: usize) -> Self {
        HPolytope {
            dim,
            inequalities: Vec::new(),
            equalities: Vec::new(),
        }
    }

    pub fn add_ge(&mut self, normal: Vector, bound: Rat) {
        debug_assert_eq!(normal.len(), self.dim);
        self.inequalities.push((normal, bound));
    }

    /// Add `normal . x <= bound` by negation.
    pub fn add_le(&mut self, normal: Vector, bound: Rat) {
        let neg: Vector = normal.iter().map(|c| -c).collect();
        self.inequalities.push((neg, -bound));
    }

    pub fn add_eq(&mut self, normal: Vector, value: Rat) {
        debug_assert_eq!(normal.len(), self.dim);
        self.equalities.push((normal, value));
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.inequalities.iter().all(|(a, b)| dot(a, x) >= *b)
            && self.equalities.iter().all(|(a, b)| dot(a, x) == *b)
    }

    /// Indices of inequalities tight at `x`.
    pub fn tight_inequalities(&self, x: &[Rat]) -> Vec<usize> {
        self.inequalities
            .iter()
            .enumerate()
            .filter(|(_, (a, b))| dot(a, x) == *b)
            .map(|(i, _)| i)
            .collect()
    }
}

/// A polytope as its deduplicated vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    pub dim: usize,
    pub vertices: Vec<Vector>,
}

impl VPolytope {
    pub fn new(dim: usize, mut vertices: Vec<Vector>) -> Self {
        vertices.sort();
        vertices.dedup();
        VPolytope { dim, vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug)]
pub struct LpResult {
    pub status: LpStatus,
    pub value: Option<Rat>,
    pub point: Option<Vector>,
    /// Indices of inequalities tight at the optimal point.
    pub active: Vec<usize>,
}

/// Dimension of the affine hull of a point set.
pub fn affine_rank(points: &[Vector]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let diffs: Matrix = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    matrix::rank(diffs)
}

/// True iff `x` is feasible and the normals tight at `x` (inequalities plus
/// all equalities) have full linear rank.
pub fn is_vertex_of(x: &[Rat], p: &HPolytope) -> bool {
    if !p.contains(x) {
        return false;
    }
    let mut normals: Matrix = p.equalities.iter().map(|(a, _)| a.clone()).collect();
    for (a, b) in &p.inequalities {
        if dot(a, x) == *b {
            normals.push(a.clone());
        }
    }
    matrix::rank(normals) == p.dim
}

/// Indices of the vertices attaining the exact minimum of the objective.
pub fn optimal_face(vp: &VPolytope, objective: &LinearFunctional) -> Vec<usize> {
    let mut best: Option<Rat> = None;
    for v in &vp.vertices {
        let val = objective.eval(v);
        if best.as_ref().map_or(true, |b| val < *b) {
            best = Some(val);
        }
    }
    let Some(best) = best else {
        return Vec::new();
    };
    vp.vertices
        .iter()
        .enumerate()
        .filter(|(_, v)| objective.eval(v) == best)
        .map(|(i, _)| i)
        .collect()
}

/// An affine coordinate chart `x = base + sum_i y_i basis_i`.
#[derive(Clone, Debug)]
pub struct Chart {
    pub base: Vector,
    pub basis: Vec<Vector>,
}

impl Chart {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.base.len()
    }

    /// Chart spanned by a point set (its affine hull).
    pub fn from_points(points: &[Vector]) -> Chart {
        let base = points[0].clone();
        let mut basis: Vec<Vector> = Vec::new();
        for p in &points[1..] {
            let diff: Vector = p.iter().zip(&base).map(|(a, b)| a - b).collect();
            let mut probe: Matrix = basis.clone();
            probe.push(diff.clone());
            if matrix::rank(probe) > basis.len() {
                basis.push(diff);
            }
        }
        Chart { base, basis }
    }

    /// Chart of the solution set of an equality system, or None when the
    /// system is inconsistent.
    pub fn from_equalities(dim: usize, equalities: &[(Vector, Rat)]) -> Option<Chart> {
        if equalities.is_empty() {
            let base = vec![Rat::zero(); dim];
            let basis = (0..dim)
                .map(|i| {
                    let mut e = vec![Rat::zero(); dim];
                    e[i] = Rat::from_integer(1.into());
                    e
                })
                .collect();
            return Some(Chart { base, basis });
        }
        let a: Matrix = equalities.iter().map(|(n, _)| n.clone()).collect();
        let b: Vector = equalities.iter().map(|(_, v)| v.clone()).collect();
        let base = matrix::solve(&a, &b)?;
        let basis = matrix::nullspace(&a);
        Some(Chart { base, basis })
    }

    pub fn to_ambient(&self, y: &[Rat]) -> Vector {
        let mut x = self.base.clone();
        for (coef, vec) in y.iter().zip(&self.basis) {
            for (xi, vi) in x.iter_mut().zip(vec) {
                *xi += coef * vi;
            }
        }
        x
    }

    /// Coordinates of an ambient point lying in the chart's affine span.
    pub fn to_chart(&self, x: &[Rat]) -> Option<Vector> {
        // solve sum_i y_i basis_i = x - base (transpose system)
        let ambient = self.ambient_dim();
        let a: Matrix = (0..ambient)
            .map(|row| self.basis.iter().map(|v| v[row].clone()).collect())
            .collect();
        let rhs: Vector = x.iter().zip(&self.base).map(|(a, b)| a - b).collect();
        let y = matrix::solve(&a, &rhs)?;
        // verify membership (solve ignores inconsistent rows only when they
        // pivot in the augmented column, which it reports as None)
        Some(y)
    }

    /// Reduce an ambient functional `a . x >= b` to chart coordinates.
    pub fn reduce_inequality(&self, normal: &[Rat], bound: &Rat) -> (Vector, Rat) {
        let g: Vector = self.basis.iter().map(|v| dot(normal, v)).collect();
        let h = bound - dot(normal, &self.base);
        (g, h)
    }

    /// Lift a chart functional `g . y = h` to an ambient functional
    /// agreeing with it on the chart.
    pub fn lift_functional(&self, g: &[Rat], h: &Rat) -> Option<LinearFunctional> {
        // solve basis^T f = g
        let rows: Matrix = self.basis.to_vec();
        let f = matrix::solve(&rows, g)?;
        let offset = -dot(&f, &self.base) - h;
        Some(LinearFunctional { coeffs: f, offset })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn affine_rank_examples() {
        let p0 = vec![vec![rat(1), rat(2)]];
        assert_eq!(affine_rank(&p0), 0);
        let line = vec![
            vec![rat(0), rat(0)],
            vec![rat(1), rat(1)],
            vec![rat(2), rat(2)],
        ];
        assert_eq!(affine_rank(&line), 1);
        let plane = vec![
            vec![rat(0), rat(0)],
            vec![rat(1), rat(0)],
            vec![rat(0), rat(1)],
        ];
        assert_eq!(affine_rank(&plane), 2);
    }

    #[test]
    fn chart_round_trip() {
        let points = vec![
            vec![rat(1), rat(1), rat(0)],
            vec![rat(2), rat(1), rat(0)],
            vec![rat(1), rat(3), rat(0)],
        ];
        let chart = Chart::from_points(&points);
        assert_eq!(chart.dim(), 2);
        for p in &points {
            let y = chart.to_chart(p).unwrap();
            assert_eq!(chart.to_ambient(&y), *p);
        }
    }

    #[test]
    fn optimal_face_of_zero_objective_is_everything() {
        let vp = VPolytope::new(
            2,
            vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)], vec![rat(0), rat(1)]],
        );
        let zero = LinearFunctional::linear(vec![rat(0), rat(0)]);
        assert_eq!(optimal_face(&vp, &zero).len(), 3);
    }
}
