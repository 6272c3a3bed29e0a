//! Dense exact-rational linear algebra, desk scale.

use crate::rational::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Vector = Vec<Rat>;
pub type Matrix = Vec<Vec<Rat>>;

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Reduce to row echelon form in place; returns the pivot columns.
pub fn row_echelon(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in &mut m[r] {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for c2 in 0..cols {
                    let delta = &f * &m[r][c2];
                    m[i][c2] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(mut m: Matrix) -> usize {
    row_echelon(&mut m).len()
}

/// One solution of `A x = b`, or None when inconsistent. Free variables are
/// set to zero.
pub fn solve(a: &Matrix, b: &[Rat]) -> Option<Vector> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_echelon(&mut aug);
    if pivots.last() == Some(&cols) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// A basis of the nullspace of `A`.
pub fn nullspace(a: &Matrix) -> Vec<Vector> {
    let rows = a.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut m = a.clone();
    let pivots = row_echelon(&mut m);
    let pivot_set: Vec<Option<usize>> = {
        let mut v = vec![None; cols];
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = Some(r);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set[free].is_some() {
            continue;
        }
        let mut vec = vec![Rat::zero(); cols];
        vec[free] = Rat::one();
        for (c, slot) in pivot_set.iter().enumerate() {
            if let Some(r) = slot {
                vec[c] = -m[*r][free].clone();
            }
        }
        basis.push(vec);
    }
    basis
}

/// Scale a rational vector to a primitive integer vector, preserving sign.
pub fn primitive_scale(v: &mut [Rat]) {
    let mut denom_lcm = BigInt::one();
    for x in v.iter() {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let mut numer_gcd = BigInt::zero();
    for x in v.iter() {
        let scaled = x.numer() * (&denom_lcm / x.denom());
        numer_gcd = numer_gcd.gcd(&scaled);
    }
    if numer_gcd.is_zero() {
        return;
    }
    let factor = Rat::new(denom_lcm, numer_gcd);
    debug_assert!(factor.is_positive());
    for x in v.iter_mut() {
        *x = &*x * &factor;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    #[test]
    fn rank_and_solve() {
        let a = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(1)],
        ];
        assert_eq!(rank(a.clone()), 2);
        let x = solve(&a, &[rat(6), rat(12), rat(2)]).unwrap();
        assert_eq!(dot(&a[0], &x), rat(6));
        assert_eq!(dot(&a[2], &x), rat(2));
        assert!(solve(&a, &[rat(6), rat(13), rat(2)]).is_none());
    }

    #[test]
    fn nullspace_dimension() {
        let a = vec![vec![rat(1), rat(1), rat(0)], vec![rat(0), rat(0), rat(1)]];
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 1);
        assert!(dot(&a[0], &ns[0]).is_zero());
        assert!(dot(&a[1], &ns[0]).is_zero());
    }

    #[test]
    fn primitive_scaling() {
        let mut v = vec![frac(1, 2), frac(-3, 4), rat(0)];
        primitive_scale(&mut v);
        assert_eq!(v, vec![rat(2), rat(-3), rat(0)]);
    }
}
