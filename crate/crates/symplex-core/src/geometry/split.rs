//! Splitting a pointed cone into a pyramid over a chosen apex ray and
//! a closed remainder, glued along a shared face.
//!
//! The apex is the colexicographically least extreme ray. A rational
//! linear functional h with h(apex) > 0 and h < 0 on the other
//! extreme rays cuts the cone; the shared face F is the section of
//! the cone by the hyperplane h = 0, generated by the crossing points
//! of edges from the positive to the negative side. The two output
//! pieces are cone(apex, F) and cone(rest, F).

use crate::error::{Error, Result};
use crate::geometry::cone::{colex_cmp, RationalCone};
use crate::geometry::linalg::{self, Q};
use num_traits::Zero;

#[derive(Debug, Clone)]
pub struct PyramidSplit {
    pub apex: Vec<i128>,
    pub delta: RationalCone,
    pub gamma: RationalCone,
    pub shared: RationalCone,
    pub functional: Vec<i128>,
}

pub fn pyramid_split(cone: &RationalCone) -> Result<PyramidSplit> {
    if !cone.is_pointed() {
        return Err(Error::Unsupported(
            "pyramid split requires a pointed cone".into(),
        ));
    }
    if cone.dim() < 2 {
        return Err(Error::TooSmall(format!(
            "cone dimension {} is below 2",
            cone.dim()
        )));
    }
    if cone.rays().len() < 3 {
        return Err(Error::TooSmall(format!(
            "cone lists {} rays; a split needs at least 3",
            cone.rays().len()
        )));
    }

    let mut extreme = cone.extreme_rays();
    extreme.sort_by(|a, b| colex_cmp(a, b));
    let apex = extreme[0].clone();
    let rest: Vec<Vec<i128>> = extreme[1..].to_vec();
    debug_assert!(!rest.is_empty());

    let h = separating_functional(cone.rank(), &apex, &rest)?;

    // crossing rays of apex-to-rest edges, plus any ray already on h
    let mut shared_rays: Vec<Vec<i128>> = Vec::new();
    let ha = linalg::dot_ii(&h, &apex);
    for w in &rest {
        let hw = linalg::dot_ii(&h, w);
        if hw == 0 {
            shared_rays.push(w.clone());
        } else {
            // ha * w - hw * apex lies on h = 0 and inside the cone
            let cross: Vec<i128> = w
                .iter()
                .zip(&apex)
                .map(|(wc, ac)| ha * wc - hw * ac)
                .collect();
            shared_rays.push(linalg::primitive_int(&cross));
        }
    }
    let shared = RationalCone::new(cone.rank(), shared_rays)?;
    let shared_ext = shared.extreme_rays();
    let shared = RationalCone::new(cone.rank(), shared_ext.clone())?;

    let mut delta_rays = shared_ext.clone();
    delta_rays.push(apex.clone());
    let delta = RationalCone::new(cone.rank(), delta_rays)?;

    let mut gamma_rays = shared_ext.clone();
    gamma_rays.extend(rest.iter().cloned());
    let gamma = RationalCone::new(cone.rank(), gamma_rays)?;

    debug_assert_eq!(delta.dim(), cone.dim());
    debug_assert_eq!(gamma.dim(), cone.dim());
    debug_assert_eq!(shared.dim(), cone.dim() - 1);
    debug_assert!(cone.contains_cone(&delta));
    debug_assert!(cone.contains_cone(&gamma));

    Ok(PyramidSplit {
        apex,
        delta,
        gamma,
        shared,
        functional: h,
    })
}

/// Find integer h with h . apex > 0 and h . w < 0 for each w. First
/// try the direct linear solve h(apex) = 1, h(w) = -1 on a greedy
/// independent subset; fall back to exact Fourier-Motzkin elimination
/// on the full inequality system.
fn separating_functional(rank: usize, apex: &[i128], rest: &[Vec<i128>]) -> Result<Vec<i128>> {
    let mut rows: Vec<Vec<Q>> = vec![linalg::to_q(apex)];
    let mut rhs: Vec<Q> = vec![linalg::qi(1)];
    for w in rest {
        let mut trial_rows = rows.clone();
        trial_rows.push(linalg::to_q(w));
        if linalg::rank(&trial_rows) == trial_rows.len() {
            rows = trial_rows;
            rhs.push(linalg::qi(-1));
        }
    }
    if let Some(h) = linalg::solve(&rows, &rhs, rank) {
        let hi = linalg::primitive(&h);
        if strictly_separates(&hi, apex, rest) {
            return Ok(hi);
        }
    }

    // Fourier-Motzkin on h . apex >= 1, -h . w >= 1: eliminate the
    // h-coordinates one by one and back-substitute any feasible point.
    let mut constraints: Vec<(Vec<Q>, Q)> = Vec::new();
    constraints.push((linalg::to_q(apex), linalg::qi(1)));
    for w in rest {
        let neg: Vec<Q> = w.iter().map(|&c| linalg::qi(-c)).collect();
        constraints.push((neg, linalg::qi(1)));
    }
    let h = fourier_motzkin(constraints, rank).ok_or_else(|| {
        Error::Internal("no separating functional for an extreme apex ray".into())
    })?;
    let hi = linalg::primitive(&h);
    if !strictly_separates(&hi, apex, rest) {
        return Err(Error::Internal(
            "separating functional failed strictness check".into(),
        ));
    }
    Ok(hi)
}

fn strictly_separates(h: &[i128], apex: &[i128], rest: &[Vec<i128>]) -> bool {
    linalg::dot_ii(h, apex) > 0 && rest.iter().all(|w| linalg::dot_ii(h, w) < 0)
}

/// Solve {a . x >= b} by eliminating variables back to front; returns
/// a feasible point if one exists.
fn fourier_motzkin(constraints: Vec<(Vec<Q>, Q)>, vars: usize) -> Option<Vec<Q>> {
    if vars == 0 {
        return if constraints.iter().all(|(_, b)| *b <= Q::zero()) {
            Some(vec![])
        } else {
            None
        };
    }
    let v = vars - 1;
    let mut lower: Vec<(Vec<Q>, Q)> = Vec::new(); // x_v >= expr
    let mut upper: Vec<(Vec<Q>, Q)> = Vec::new(); // x_v <= expr
    let mut free: Vec<(Vec<Q>, Q)> = Vec::new();
    for (a, b) in constraints {
        let c = a[v];
        if c.is_zero() {
            free.push((a[..v].to_vec(), b));
        } else if c > Q::zero() {
            // x_v >= (b - a' . x') / c
            let row: Vec<Q> = a[..v].iter().map(|x| -*x / c).collect();
            lower.push((row, b / c));
        } else {
            let row: Vec<Q> = a[..v].iter().map(|x| -*x / c).collect();
            upper.push((row, b / c));
        }
    }
    let mut reduced = free;
    for (la, lb) in &lower {
        for (ua, ub) in &upper {
            // upper bound expr >= lower bound expr
            let row: Vec<Q> = ua.iter().zip(la).map(|(u, l)| *l - *u).collect();
            let b = *lb - *ub;
            reduced.push((row, b));
        }
    }
    let tail = fourier_motzkin(reduced, v)?;
    // back-substitute: pick x_v between the bounds
    let eval = |(a, b): &(Vec<Q>, Q)| -> Q {
        let mut s = *b;
        for (c, x) in a.iter().zip(&tail) {
            s += *c * *x;
        }
        s
    };
    let lo = lower.iter().map(eval).max();
    let hi = upper.iter().map(eval).min();
    let x = match (lo, hi) {
        (Some(l), Some(u)) => {
            debug_assert!(l <= u);
            (l + u) / linalg::qi(2)
        }
        (Some(l), None) => l,
        (None, Some(u)) => u,
        (None, None) => Q::zero(),
    };
    let mut out = tail;
    out.push(x);
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn cone(rank: usize, rays: &[&[i128]]) -> RationalCone {
        RationalCone::new(rank, rays.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn planar_three_ray_split() {
        let c = cone(2, &[&[1, 0], &[1, 1], &[1, 2]]);
        let s = pyramid_split(&c).unwrap();
        assert_eq!(s.apex, vec![1, 0]);
        assert_eq!(s.shared.rays(), &[vec![1, 1]]);
        assert_eq!(s.delta.rays(), &[vec![1, 0], vec![1, 1]]);
        assert_eq!(s.gamma.rays(), &[vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn simplex_splits_over_first_axis() {
        let c = cone(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let s = pyramid_split(&c).unwrap();
        assert_eq!(s.apex, vec![1, 0, 0]);
        assert_eq!(s.shared.rays().len(), 2);
        for r in s.shared.rays() {
            assert!(c.contains_point(r));
        }
        assert_eq!(s.delta.dim(), 3);
        assert_eq!(s.gamma.dim(), 3);
    }

    #[test]
    fn degenerate_cones_error() {
        let line = cone(2, &[&[0, 1]]);
        assert!(matches!(pyramid_split(&line), Err(Error::TooSmall(_))));
        let two_rays = cone(2, &[&[1, 0], &[0, 1]]);
        assert!(matches!(pyramid_split(&two_rays), Err(Error::TooSmall(_))));
        let not_pointed = cone(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        assert!(matches!(
            pyramid_split(&not_pointed),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn split_preserves_membership_on_random_rays() {
        let c = cone(2, &[&[1, 0], &[1, 1], &[1, 2]]);
        let s = pyramid_split(&c).unwrap();
        let mut rng = SplitMix64::new(31);
        for _ in 0..1000 {
            let v = [rng.int_in(-20, 20) as i128, rng.int_in(-20, 20) as i128];
            let inside = c.contains_point(&v);
            let split_inside = s.delta.contains_point(&v) || s.gamma.contains_point(&v);
            assert_eq!(inside, split_inside, "membership differs at {v:?}");
        }
    }

    #[test]
    fn shared_face_is_a_face_of_both() {
        let c = cone(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let s = pyramid_split(&c).unwrap();
        for r in s.shared.rays() {
            assert!(s.delta.contains_point(r));
            assert!(s.gamma.contains_point(r));
        }
        // points of delta beyond the shared face are outside gamma
        assert!(s.delta.contains_point(&s.apex));
        assert!(!s.gamma.contains_point(&s.apex));
    }
}
