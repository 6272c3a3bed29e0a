//! Vertex enumeration of a bounded H-polytope by scanning independent
//! subsets of tight constraints inside the equality-restricted chart.

use super::matrix::{self, dot, Vector};
use super::simplex::lp_solve;
use super::{Chart, HPolytope, LinearFunctional, LpStatus, Sense, VPolytope};
use crate::error::{Error, Result};
use crate::rational::Rat;
use num_traits::{One, Signed, Zero};
use std::collections::HashSet;

/// All vertices of the polytope. Errors on unbounded input (detected by a
/// recession ray); an infeasible system yields an empty vertex list.
pub fn vertex_enumerate(p: &HPolytope) -> Result<VPolytope> {
    let Some(chart) = Chart::from_equalities(p.dim, &p.equalities) else {
        return Ok(VPolytope::new(p.dim, Vec::new()));
    };
    let dim = chart.dim();

    // reduce inequalities to the chart and deduplicate half-spaces
    let mut rows: Vec<(Vector, Rat)> = Vec::new();
    let mut seen: HashSet<Vec<Rat>> = HashSet::new();
    for (a, b) in &p.inequalities {
        let (g, h) = chart.reduce_inequality(a, b);
        if g.iter().all(|c| c.is_zero()) {
            if h.is_positive() {
                return Ok(VPolytope::new(p.dim, Vec::new())); // infeasible
            }
            continue;
        }
        let mut joint = g.clone();
        joint.push(h.clone());
        matrix::primitive_scale(&mut joint);
        if seen.insert(joint.clone()) {
            let h = joint.pop().unwrap();
            rows.push((joint, h));
        }
    }

    if dim == 0 {
        let ok = rows.iter().all(|(_, h)| !h.is_positive());
        let vertices = if ok { vec![chart.base.clone()] } else { Vec::new() };
        return Ok(VPolytope::new(p.dim, vertices));
    }

    // feasibility, then boundedness via recession rays
    let mut reduced = HPolytope::new(dim);
    for (g, h) in &rows {
        reduced.add_ge(g.clone(), h.clone());
    }
    let zero_obj = LinearFunctional::linear(vec![Rat::zero(); dim]);
    if lp_solve(&reduced, &zero_obj, Sense::Minimize).status == LpStatus::Infeasible {
        return Ok(VPolytope::new(p.dim, Vec::new()));
    }
    for j in 0..dim {
        for sign in [Rat::one(), -Rat::one()] {
            let mut cone = HPolytope::new(dim);
            for (g, _) in &rows {
                cone.add_ge(g.clone(), Rat::zero());
            }
            let mut e = vec![Rat::zero(); dim];
            e[j] = Rat::one();
            cone.add_eq(e, sign);
            if lp_solve(&cone, &zero_obj, Sense::Minimize).status == LpStatus::Optimal {
                return Err(Error::Unbounded);
            }
        }
    }

    // walk independent row subsets, solving each full-rank system
    let mut candidates: HashSet<Vector> = HashSet::new();
    let mut echelon: Vec<Vector> = Vec::new(); // reduced rows [g | h]
    let mut pivots: Vec<usize> = Vec::new();
    descend(&rows, dim, 0, &mut echelon, &mut pivots, &mut candidates);

    let vertices: Vec<Vector> = candidates
        .into_iter()
        .filter(|y| rows.iter().all(|(g, h)| dot(g, y) >= *h))
        .map(|y| chart.to_ambient(&y))
        .collect();
    Ok(VPolytope::new(p.dim, vertices))
}

fn descend(
    rows: &[(Vector, Rat)],
    dim: usize,
    start: usize,
    echelon: &mut Vec<Vector>,
    pivots: &mut Vec<usize>,
    candidates: &mut HashSet<Vector>,
) {
    if echelon.len() == dim {
        // every column is a pivot; back-substitute in reverse order
        let mut y = vec![Rat::zero(); dim];
        for k in (0..dim).rev() {
            let row = &echelon[k];
            let mut v = row[dim].clone();
            for j in (k + 1)..dim {
                let c = pivots[j];
                if !row[c].is_zero() {
                    v -= &row[c] * &y[c];
                }
            }
            y[pivots[k]] = v;
        }
        candidates.insert(y);
        return;
    }
    let need = dim - echelon.len();
    for i in start..rows.len() {
        if rows.len() - i < need {
            break;
        }
        let mut row: Vector = rows[i].0.clone();
        row.push(rows[i].1.clone());
        for (e, &p) in echelon.iter().zip(pivots.iter()) {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for c in 0..=dim {
                    if !e[c].is_zero() {
                        let delta = &f * &e[c];
                        row[c] -= delta;
                    }
                }
            }
        }
        let Some(pivot) = (0..dim).find(|&c| !row[c].is_zero()) else {
            continue; // dependent on the prefix (or inconsistent): skip
        };
        let inv = row[pivot].clone();
        for c in 0..=dim {
            row[c] = &row[c] / &inv;
        }
        echelon.push(row);
        pivots.push(pivot);
        descend(rows, dim, i + 1, echelon, pivots, candidates);
        echelon.pop();
        pivots.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::sieve::h_polytope_from_vertices;
    use crate::rational::rat;

    #[test]
    fn unit_cube_has_eight_vertices() {
        let mut p = HPolytope::new(3);
        for i in 0..3 {
            let mut e = vec![rat(0); 3];
            e[i] = rat(1);
            p.add_ge(e.clone(), rat(0));
            p.add_le(e, rat(1));
        }
        let vp = vertex_enumerate(&p).unwrap();
        assert_eq!(vp.len(), 8);
    }

    #[test]
    fn unbounded_is_rejected() {
        let mut p = HPolytope::new(2);
        p.add_ge(vec![rat(1), rat(0)], rat(0));
        p.add_ge(vec![rat(0), rat(1)], rat(0));
        assert!(matches!(vertex_enumerate(&p), Err(Error::Unbounded)));
    }

    #[test]
    fn infeasible_gives_no_vertices() {
        let mut p = HPolytope::new(2);
        p.add_ge(vec![rat(1), rat(0)], rat(2));
        p.add_le(vec![rat(1), rat(0)], rat(1));
        p.add_ge(vec![rat(0), rat(1)], rat(0));
        p.add_le(vec![rat(0), rat(1)], rat(1));
        let vp = vertex_enumerate(&p).unwrap();
        assert!(vp.is_empty());
    }

    #[test]
    fn equality_restriction() {
        // segment: the face x+y = 1 of the unit square
        let mut p = HPolytope::new(2);
        p.add_ge(vec![rat(1), rat(0)], rat(0));
        p.add_ge(vec![rat(0), rat(1)], rat(0));
        p.add_le(vec![rat(1), rat(0)], rat(1));
        p.add_le(vec![rat(0), rat(1)], rat(1));
        p.add_eq(vec![rat(1), rat(1)], rat(1));
        let vp = vertex_enumerate(&p).unwrap();
        assert_eq!(vp.len(), 2);
        assert!(vp.vertices.contains(&vec![rat(0), rat(1)]));
        assert!(vp.vertices.contains(&vec![rat(1), rat(0)]));
    }

    #[test]
    fn round_trip_with_sieve() {
        let simplex = VPolytope::new(
            3,
            vec![
                vec![rat(0), rat(0), rat(0)],
                vec![rat(2), rat(0), rat(0)],
                vec![rat(0), rat(2), rat(0)],
                vec![rat(0), rat(0), rat(2)],
            ],
        );
        let h = h_polytope_from_vertices(&simplex).unwrap();
        let back = vertex_enumerate(&h).unwrap();
        assert_eq!(back, simplex);
    }
}
