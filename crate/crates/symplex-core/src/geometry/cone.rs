//! Rational polyhedral cones given by generating rays, with an exact
//! H-representation computed on construction.
//!
//! Rays are stored primitive (coordinates divided by their gcd) and
//! deduplicated up to positive scaling, sorted in colexicographic
//! order (compare the last coordinate first). Colex is the canonical
//! ray order used everywhere a "least ray" is needed; it is stable
//! under listing order of the input.
//!
//! The H-representation is a list of span equations (normals `n` with
//! n . x = 0 on the span of the rays) plus facet inequalities within
//! the span. Facet normals are found by brute force over subsets of
//! rays of size dim - 1, which is exact and complete for cones whose
//! facets are generated by their rays; ambient rank is capped at 6 to
//! keep that enumeration m controlled.

use crate::error::{Error, Result};
use crate::geometry::linalg::{self, Q};
use num_traits::Zero;
use std::cmp::Ordering;

pub const MAX_RANK: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCone {
    rank: usize,
    rays: Vec<Vec<i128>>,
    span_normals: Vec<Vec<i128>>,
    facet_normals: Vec<Vec<i128>>,
    dim: usize,
    pointed: bool,
}

/// Colexicographic comparison of equal-length integer vectors.
pub fn colex_cmp(a: &[i128], b: &[i128]) -> Ordering {
    for k in (0..a.len()).rev() {
        match a[k].cmp(&b[k]) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

impl RationalCone {
    /// Build a cone from generating rays in `Z^rank`. Zero rays are
    /// rejected; parallel duplicates are merged.
    pub fn new(rank: usize, rays: Vec<Vec<i128>>) -> Result<RationalCone> {
        if rank > MAX_RANK {
            return Err(Error::RankTooLarge(rank));
        }
        let mut prim: Vec<Vec<i128>> = Vec::new();
        for r in &rays {
            if r.len() != rank {
                return Err(Error::Parse(format!(
                    "ray {r:?} has length {} but the cone rank is {rank}",
                    r.len()
                )));
            }
            if r.iter().all(|&c| c == 0) {
                return Err(Error::Parse("zero vector given as a ray".into()));
            }
            let p = linalg::primitive_int(r);
            if !prim.contains(&p) {
                prim.push(p);
            }
        }
        prim.sort_by(|a, b| colex_cmp(a, b));

        let ray_rows: Vec<Vec<Q>> = prim.iter().map(|r| linalg::to_q(r)).collect();
        let dim = linalg::rank(&ray_rows);
        let span_normals: Vec<Vec<i128>> = linalg::nullspace(&ray_rows, rank)
            .iter()
            .map(|v| linalg::primitive(v))
            .collect();

        let mut facet_normals: Vec<Vec<i128>> = Vec::new();
        if dim >= 1 {
            for subset in subsets_of_size(prim.len(), dim - 1) {
                let mut rows: Vec<Vec<Q>> =
                    subset.iter().map(|&i| ray_rows[i].clone()).collect();
                for sn in &span_normals {
                    rows.push(linalg::to_q(sn));
                }
                let ns = linalg::nullspace(&rows, rank);
                if ns.len() != 1 {
                    continue;
                }
                let mut n = linalg::primitive(&ns[0]);
                let mut pos = false;
                let mut neg = false;
                for r in &prim {
                    let d = linalg::dot_ii(&n, r);
                    if d > 0 {
                        pos = true;
                    } else if d < 0 {
                        neg = true;
                    }
                }
                if pos && neg {
                    continue;
                }
                if !pos && !neg {
                    continue;
                }
                if neg {
                    for c in n.iter_mut() {
                        *c = -*c;
                    }
                }
                if !facet_normals.contains(&n) {
                    facet_normals.push(n);
                }
            }
        }
        facet_normals.sort_by(|a, b| colex_cmp(a, b));

        let mut all_normals: Vec<Vec<Q>> = span_normals.iter().map(|v| linalg::to_q(v)).collect();
        all_normals.extend(facet_normals.iter().map(|v| linalg::to_q(v)));
        let pointed = linalg::rank(&all_normals) == rank;

        let cone = RationalCone {
            rank,
            rays: prim,
            span_normals,
            facet_normals,
            dim,
            pointed,
        };
        for r in &cone.rays {
            debug_assert!(cone.contains_point(r), "H-representation rejects a ray");
        }
        Ok(cone)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[Vec<i128>] {
        &self.rays
    }

    pub fn span_normals(&self) -> &[Vec<i128>] {
        &self.span_normals
    }

    pub fn facet_normals(&self) -> &[Vec<i128>] {
        &self.facet_normals
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    pub fn contains_point(&self, x: &[i128]) -> bool {
        self.contains_q(&linalg::to_q(x))
    }

    pub fn contains_q(&self, x: &[Q]) -> bool {
        self.span_normals
            .iter()
            .all(|n| linalg::dot_iq(n, x).is_zero())
            && self
                .facet_normals
                .iter()
                .all(|n| linalg::dot_iq(n, x) >= Q::zero())
    }

    /// Strict interior relative to the span: all facet inequalities
    /// strict. A cone without facets (a full subspace) is its own
    /// relative interior.
    pub fn contains_q_strict(&self, x: &[Q]) -> bool {
        self.span_normals
            .iter()
            .all(|n| linalg::dot_iq(n, x).is_zero())
            && self
                .facet_normals
                .iter()
                .all(|n| linalg::dot_iq(n, x) > Q::zero())
    }

    pub fn contains_cone(&self, other: &RationalCone) -> bool {
        other.rays.iter().all(|r| self.contains_point(r))
    }

    pub fn same_cone(&self, other: &RationalCone) -> bool {
        self.contains_cone(other) && other.contains_cone(self)
    }

    /// The extreme rays: listed rays not generated by the others.
    pub fn extreme_rays(&self) -> Vec<Vec<i128>> {
        if self.rays.len() <= 1 {
            return self.rays.clone();
        }
        let mut out = Vec::new();
        for (i, r) in self.rays.iter().enumerate() {
            let others: Vec<Vec<i128>> = self
                .rays
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, s)| s.clone())
                .collect();
            let sub = RationalCone::new(self.rank, others).expect("subcone of a valid cone");
            if !sub.contains_point(r) {
                out.push(r.clone());
            }
        }
        out
    }

    /// Proper faces cut out by subsets of facet normals, plus the cone
    /// itself. Each face is returned as the cone generated by the rays
    /// lying on the chosen normals.
    pub fn faces(&self) -> Vec<RationalCone> {
        let mut seen: Vec<Vec<Vec<i128>>> = Vec::new();
        let mut out: Vec<RationalCone> = vec![self.clone()];
        seen.push(self.rays.clone());
        let m = self.facet_normals.len();
        for k in 1..=m {
            for subset in subsets_of_size(m, k) {
                let rays: Vec<Vec<i128>> = self
                    .rays
                    .iter()
                    .filter(|r| {
                        subset
                            .iter()
                            .all(|&fi| linalg::dot_ii(&self.facet_normals[fi], r) == 0)
                    })
                    .cloned()
                    .collect();
                if rays.is_empty() {
                    continue;
                }
                if seen.contains(&rays) {
                    continue;
                }
                seen.push(rays.clone());
                out.push(RationalCone::new(self.rank, rays).expect("face of a valid cone"));
            }
        }
        out
    }

    /// Facets as cones: the faces cut by a single facet normal. For a
    /// one-dimensional cone the list is the cone itself.
    pub fn facet_cones(&self) -> Vec<RationalCone> {
        if self.dim <= 1 {
            return vec![self.clone()];
        }
        self.facet_normals
            .iter()
            .map(|n| {
                let rays: Vec<Vec<i128>> = self
                    .rays
                    .iter()
                    .filter(|r| linalg::dot_ii(n, r) == 0)
                    .cloned()
                    .collect();
                RationalCone::new(self.rank, rays).expect("facet of a valid cone")
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(rank: usize, rays: &[&[i128]]) -> RationalCone {
        RationalCone::new(rank, rays.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn positive_quadrant() {
        let c = cone(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(c.dim(), 2);
        assert!(c.is_pointed());
        assert_eq!(c.facet_normals().len(), 2);
        assert!(c.contains_point(&[3, 5]));
        assert!(!c.contains_point(&[-1, 2]));
        assert!(c.contains_q_strict(&linalg::to_q(&[1, 1])));
        assert!(!c.contains_q_strict(&linalg::to_q(&[1, 0])));
    }

    #[test]
    fn full_line_has_no_facets() {
        let c = cone(1, &[&[1], &[-1]]);
        assert_eq!(c.dim(), 1);
        assert!(!c.is_pointed());
        assert!(c.facet_normals().is_empty());
        assert!(c.contains_point(&[-7]));
    }

    #[test]
    fn single_ray() {
        let c = cone(2, &[&[2, 4]]);
        assert_eq!(c.rays(), &[vec![1, 2]]);
        assert_eq!(c.dim(), 1);
        assert!(c.is_pointed());
        assert!(c.contains_point(&[3, 6]));
        assert!(!c.contains_point(&[-1, -2]));
        assert!(!c.contains_point(&[1, 1]));
    }

    #[test]
    fn rays_are_sorted_colex_and_deduped() {
        let c = cone(2, &[&[0, 1], &[1, 0], &[2, 0]]);
        assert_eq!(c.rays(), &[vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn half_plane_is_not_pointed() {
        let c = cone(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(c.dim(), 2);
        assert!(!c.is_pointed());
        assert!(c.contains_point(&[-5, 3]));
        assert!(!c.contains_point(&[0, -1]));
    }

    #[test]
    fn extreme_ray_detection_drops_interior_generators() {
        let c = cone(2, &[&[1, 0], &[1, 1], &[0, 1]]);
        let ex = c.extreme_rays();
        assert_eq!(ex, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn simplex_cone_faces() {
        let c = cone(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let faces = c.faces();
        // whole cone, three facets, three edges
        assert_eq!(faces.len(), 7);
        assert_eq!(c.facet_cones().len(), 3);
    }

    #[test]
    fn one_dim_facet_convention() {
        let c = cone(2, &[&[0, 1]]);
        let fs = c.facet_cones();
        assert_eq!(fs.len(), 1);
        assert!(fs[0].same_cone(&c));
    }

    #[test]
    fn rank_cap() {
        let res = RationalCone::new(7, vec![vec![1, 0, 0, 0, 0, 0, 0]]);
        assert_eq!(res, Err(Error::RankTooLarge(7)));
    }

    #[test]
    fn lower_dimensional_cone_membership_uses_span() {
        // ray (1,1,0) inside R^3
        let c = cone(3, &[&[1, 1, 0]]);
        assert!(c.contains_point(&[2, 2, 0]));
        assert!(!c.contains_point(&[2, 2, 1]));
        assert!(!c.contains_point(&[-2, -2, 0]));
    }
}
