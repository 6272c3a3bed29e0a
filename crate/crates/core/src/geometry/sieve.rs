//! Facet enumeration from a vertex list, by sieving candidate supporting
//! hyperplanes spanned by vertex subsets.

use super::matrix::{self, dot, Matrix, Vector};
use super::{Chart, HPolytope, LinearFunctional, VPolytope};
use crate::error::{Error, Result};
use crate::rational::Rat;
use num_traits::{Signed, Zero};
use std::collections::HashSet;

/// All facets of the convex hull of the vertices, as ambient functionals
/// that are nonnegative on the polytope and zero exactly on the facet.
/// Normals are canonical primitive-integer vectors; the list is sorted.
pub fn facet_sieve(vp: &VPolytope) -> Result<Vec<LinearFunctional>> {
    if vp.is_empty() {
        return Err(Error::Degenerate("no vertices".into()));
    }
    let chart = Chart::from_points(&vp.vertices);
    let dim = chart.dim();
    if dim == 0 {
        return Err(Error::Degenerate("affine rank 0".into()));
    }
    let coords: Vec<Vector> = vp
        .vertices
        .iter()
        .map(|v| chart.to_chart(v).expect("vertex lies in own hull"))
        .collect();

    let mut seen: HashSet<(Vec<Rat>, Rat)> = HashSet::new();
    let mut facets = Vec::new();
    let mut subset = Vec::with_capacity(dim);
    sieve_combinations(&coords, dim, 0, &mut subset, &mut |chosen| {
        if let Some((normal, bound)) = hyperplane_through(&coords, chosen) {
            if let Some((normal, bound)) = orient_inward(&coords, normal, bound) {
                if seen.insert((normal.clone(), bound.clone())) {
                    let tight: Vec<Vector> = coords
                        .iter()
                        .filter(|y| dot(&normal, y) == bound)
                        .cloned()
                        .collect();
                    if super::affine_rank(&tight) == dim - 1 {
                        facets.push((normal, bound));
                    }
                }
            }
        }
    });

    let mut out: Vec<LinearFunctional> = facets
        .into_iter()
        .map(|(normal, bound)| {
            let mut f = chart
                .lift_functional(&normal, &bound)
                .expect("normal lies in the chart span");
            canonicalize_functional(&mut f);
            f
        })
        .collect();
    out.sort();
    Ok(out)
}

fn sieve_combinations<F: FnMut(&[usize])>(
    coords: &[Vector],
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    emit: &mut F,
) {
    if chosen.len() == k {
        emit(chosen);
        return;
    }
    let need = k - chosen.len();
    for i in start..coords.len() {
        if coords.len() - i < need {
            break;
        }
        chosen.push(i);
        sieve_combinations(coords, k, i + 1, chosen, emit);
        chosen.pop();
    }
}

/// Unique hyperplane `normal . y = bound` through the chosen chart points,
/// or None when they are affinely dependent.
fn hyperplane_through(coords: &[Vector], chosen: &[usize]) -> Option<(Vector, Rat)> {
    let dim = chosen.len();
    let rows: Matrix = chosen
        .iter()
        .map(|&i| {
            let mut r = coords[i].clone();
            r.push(-Rat::from_integer(1.into()));
            r
        })
        .collect();
    let ns = matrix::nullspace(&rows);
    if ns.len() != 1 {
        return None;
    }
    let mut g = ns.into_iter().next().unwrap();
    let bound = g.pop().unwrap();
    debug_assert_eq!(g.len(), dim);
    Some((g, bound))
}

/// Check the hyperplane supports the polytope and orient it inward
/// (`normal . y >= bound` for every vertex), canonically scaled.
fn orient_inward(coords: &[Vector], normal: Vector, bound: Rat) -> Option<(Vector, Rat)> {
    let mut saw_pos = false;
    let mut saw_neg = false;
    for y in coords {
        let v = dot(&normal, y) - &bound;
        if v.is_positive() {
            saw_pos = true;
        } else if v.is_negative() {
            saw_neg = true;
        }
        if saw_pos && saw_neg {
            return None;
        }
    }
    let (mut normal, mut bound) = if saw_neg {
        (normal.iter().map(|c| -c).collect(), -bound)
    } else {
        (normal, bound)
    };
    let mut joint = normal.clone();
    joint.push(bound.clone());
    matrix::primitive_scale(&mut joint);
    bound = joint.pop().unwrap();
    normal = joint;
    Some((normal, bound))
}

fn canonicalize_functional(f: &mut LinearFunctional) {
    let mut joint = f.coeffs.clone();
    joint.push(f.offset.clone());
    matrix::primitive_scale(&mut joint);
    f.offset = joint.pop().unwrap();
    f.coeffs = joint;
}

/// Equations of the affine hull of the vertices: `normal . x = value` for a
/// basis of directions orthogonal to the hull.
pub fn affine_hull_equations(vp: &VPolytope) -> Vec<(Vector, Rat)> {
    if vp.vertices.len() <= 1 {
        // every coordinate direction is fixed
        return (0..vp.dim)
            .map(|i| {
                let mut a = vec![Rat::zero(); vp.dim];
                a[i] = Rat::from_integer(1.into());
                let v = vp.vertices.first().map(|v| v[i].clone()).unwrap_or_default();
                (a, v)
            })
            .collect();
    }
    let base = &vp.vertices[0];
    let diffs: Matrix = vp.vertices[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    matrix::nullspace(&diffs)
        .into_iter()
        .map(|mut a| {
            matrix::primitive_scale(&mut a);
            let v = dot(&a, base);
            (a, v)
        })
        .collect()
}

/// The facet/hull H-description of a V-polytope; the round-trip partner of
/// vertex enumeration.
pub fn h_polytope_from_vertices(vp: &VPolytope) -> Result<HPolytope> {
    let mut p = HPolytope::new(vp.dim);
    for f in facet_sieve(vp)? {
        p.add_ge(f.coeffs, -f.offset);
    }
    for (a, v) in affine_hull_equations(vp) {
        p.add_eq(a, v);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn triangle_has_three_facets() {
        let vp = VPolytope::new(
            2,
            vec![
                vec![rat(0), rat(0)],
                vec![rat(1), rat(0)],
                vec![rat(0), rat(1)],
            ],
        );
        let facets = facet_sieve(&vp).unwrap();
        assert_eq!(facets.len(), 3);
        for f in &facets {
            for v in &vp.vertices {
                assert!(f.eval(v) >= Rat::zero());
            }
        }
    }

    #[test]
    fn square_in_3d_has_hull_equation() {
        let vp = VPolytope::new(
            3,
            vec![
                vec![rat(0), rat(0), rat(2)],
                vec![rat(1), rat(0), rat(2)],
                vec![rat(0), rat(1), rat(2)],
                vec![rat(1), rat(1), rat(2)],
            ],
        );
        let facets = facet_sieve(&vp).unwrap();
        assert_eq!(facets.len(), 4);
        let eqs = affine_hull_equations(&vp);
        assert_eq!(eqs.len(), 1);
        let (a, v) = &eqs[0];
        assert_eq!(dot(a, &vp.vertices[0]), *v);
    }

    #[test]
    fn degenerate_input_rejected() {
        let vp = VPolytope::new(2, vec![vec![rat(1), rat(1)]]);
        assert!(matches!(facet_sieve(&vp), Err(Error::Degenerate(_))));
    }
}
