//! Small exact linear algebra over the rationals, sized for ambient
//! dimension at most 6. Everything uses `Ratio<i128>`; inputs at desk
//! scale keep numerators far below overflow, and `Ratio` panics rather
//! than wrapping if that assumption is ever violated.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

pub type Q = Ratio<i128>;

pub fn qi(v: i128) -> Q {
    Ratio::from_integer(v)
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_iq(a: &[i128], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| qi(*x) * y).sum()
}

pub fn dot_ii(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn to_q(v: &[i128]) -> Vec<Q> {
    v.iter().map(|&x| qi(x)).collect()
}

/// Reduce `mat` to reduced row echelon form in place; returns the
/// pivot column indices.
pub fn rref(mat: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return vec![];
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].recip();
        for x in mat[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c];
                for j in 0..cols {
                    let t = mat[r][j] * f;
                    mat[i][j] -= t;
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

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    rref(&mut m).len()
}

pub fn rank_int(rows: &[Vec<i128>]) -> usize {
    rank(&rows.iter().map(|r| to_q(r)).collect::<Vec<_>>())
}

/// Basis of the right null space {x : A x = 0}.
pub fn nullspace(rows: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![Q::zero(); cols];
        v[f] = qi(1);
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[ri][f];
        }
        basis.push(v);
    }
    basis
}

/// One particular solution of A x = b, if the system is consistent.
pub fn solve(a: &[Vec<Q>], b: &[Q], cols: usize) -> Option<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(*rhs);
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = m[ri][cols];
    }
    Some(x)
}

/// Scale a rational direction to a primitive integer vector, keeping
/// orientation. The zero vector maps to zeros.
pub fn primitive(v: &[Q]) -> Vec<i128> {
    let mut l: i128 = 1;
    for c in v {
        l = l.lcm(c.denom());
    }
    let ints: Vec<i128> = v.iter().map(|c| (c * qi(l)).to_integer()).collect();
    let mut g: i128 = 0;
    for x in &ints {
        g = g.gcd(x);
    }
    if g == 0 {
        return ints;
    }
    ints.iter().map(|x| x / g).collect()
}

pub fn primitive_int(v: &[i128]) -> Vec<i128> {
    primitive(&to_q(v))
}

/// Does `target` lie in the linear span of `vecs`?
pub fn in_span(vecs: &[Vec<i128>], target: &[i128]) -> bool {
    let base: Vec<Vec<Q>> = vecs.iter().map(|v| to_q(v)).collect();
    let r0 = rank(&base);
    let mut ext = base;
    ext.push(to_q(target));
    rank(&ext) == r0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identifies_rank() {
        let rows = vec![to_q(&[1, 2, 3]), to_q(&[2, 4, 6]), to_q(&[0, 1, 1])];
        assert_eq!(rank(&rows), 2);
    }

    #[test]
    fn nullspace_solves_homogeneous_system() {
        let rows = vec![to_q(&[1, 1, 0]), to_q(&[0, 1, 1])];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for row in &rows {
            assert!(dot(row, &ns[0]).is_zero());
        }
    }

    #[test]
    fn solve_particular_solution() {
        let a = vec![to_q(&[1, 1]), to_q(&[1, -1])];
        let b = vec![qi(3), qi(1)];
        let x = solve(&a, &b, 2).unwrap();
        assert_eq!(x, vec![qi(2), qi(1)]);
        let inconsistent = solve(&[to_q(&[1, 1]), to_q(&[2, 2])], &[qi(1), qi(3)], 2);
        assert!(inconsistent.is_none());
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![Ratio::new(1, 2), Ratio::new(-3, 4)];
        assert_eq!(primitive(&v), vec![2, -3]);
        assert_eq!(primitive_int(&[4, -6]), vec![2, -3]);
        assert_eq!(primitive_int(&[0, 0]), vec![0, 0]);
    }

    #[test]
    fn span_membership() {
        let vecs = vec![vec![1, 0, 1], vec![0, 1, 1]];
        assert!(in_span(&vecs, &[2, 3, 5]));
        assert!(!in_span(&vecs, &[0, 0, 1]));
    }
}
