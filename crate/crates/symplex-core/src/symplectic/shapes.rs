//! Conservative entry-pattern membership tests for the standard
//! subgroup shapes: diagonal, monomial, and the one-sided families
//! attached to an index set.
//!
//! Every short root generator has two names: the matrix of se(i, j, t)
//! equals the matrix of se(sigma(j), sigma(i), -(-1)^(i+j) t). It
//! belongs to the family of an index set I when either name has its
//! first index in I, which makes a support position (r, c) admissible
//! exactly when r is in I or sigma(c) is in I. The family predicates
//! below accept matrices with unit diagonal whose off-diagonal support
//! is admissible; this detects single generators and the triangular
//! products produced by the splitting routines, and may return false
//! for products that scramble the diagonal. It is a pattern filter,
//! not a word-problem solver.

use crate::ring::RingElement;
use crate::symplectic::matrix::SympMatrix;
use crate::symplectic::perm::{sigma, IndexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeSpec {
    /// One-sided family of an index set: short roots whose first
    /// index (under either name) lies in the set.
    Si(IndexSet),
    /// Diagonal symplectic matrices.
    Sd,
    /// Monomial symplectic matrices.
    Sw,
    /// Same pattern as Si; a separate variant so callers can speak of
    /// the complementary family without renaming their sets.
    Sj(IndexSet),
}

/// Entry-pattern membership. The optional predicate restricts the
/// scalars: for the diagonal shape it applies to diagonal entries,
/// otherwise to every nonzero off-diagonal entry (for the monomial
/// shape, to every nonzero entry).
pub fn subgroup_shape(
    alpha: &SympMatrix,
    shape: &ShapeSpec,
    scalar_pred: Option<&dyn Fn(&RingElement) -> bool>,
) -> bool {
    match shape {
        ShapeSpec::Sd => {
            alpha.is_diagonal()
                && alpha.is_symplectic()
                && scalar_pred.map_or(true, |p| {
                    (1..=alpha.size()).all(|i| p(alpha.get(i, i)))
                })
        }
        ShapeSpec::Sw => {
            alpha.is_monomial()
                && alpha.is_symplectic()
                && scalar_pred.map_or(true, |p| {
                    (1..=alpha.size()).all(|i| {
                        (1..=alpha.size()).all(|j| {
                            let e = alpha.get(i, j);
                            e.is_zero() || p(e)
                        })
                    })
                })
        }
        ShapeSpec::Si(set) | ShapeSpec::Sj(set) => one_sided_family(alpha, set, scalar_pred),
    }
}

fn one_sided_family(
    alpha: &SympMatrix,
    set: &IndexSet,
    scalar_pred: Option<&dyn Fn(&RingElement) -> bool>,
) -> bool {
    if set.n() != alpha.n() {
        return false;
    }
    let k = alpha.size();
    for i in 1..=k {
        if !alpha.get(i, i).is_one() {
            return false;
        }
    }
    for i in 1..=k {
        for j in 1..=k {
            if i == j {
                continue;
            }
            let e = alpha.get(i, j);
            if e.is_zero() {
                continue;
            }
            let admissible = set.contains(i) || set.contains(sigma(j));
            if !admissible {
                return false;
            }
            if let Some(p) = scalar_pred {
                if !p(e) {
                    return false;
                }
            }
        }
    }
    alpha.is_symplectic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{BaseRing, MonoidSpec, RingDesc};
    use crate::symplectic::generators::{se, sw};

    #[test]
    fn diagonal_shape() {
        let ring = RingDesc::scalars(BaseRing::Rationals);
        let two = ring.from_i64(2);
        let half = two.inverse().unwrap();
        let three = ring.from_i64(3);
        let third = three.inverse().unwrap();
        let d = SympMatrix::from_fn(2, ring.clone(), |i, j| {
            if i != j {
                ring.zero()
            } else {
                match i {
                    1 => two.clone(),
                    2 => half.clone(),
                    3 => three.clone(),
                    _ => third.clone(),
                }
            }
        })
        .unwrap();
        assert!(subgroup_shape(&d, &ShapeSpec::Sd, None));
        // diag(2, 2, 3, 1/3) does not preserve the form
        let bad = SympMatrix::from_fn(2, ring.clone(), |i, j| {
            if i != j {
                ring.zero()
            } else if i <= 2 {
                two.clone()
            } else if i == 3 {
                three.clone()
            } else {
                third.clone()
            }
        })
        .unwrap();
        assert!(!subgroup_shape(&bad, &ShapeSpec::Sd, None));
    }

    #[test]
    fn monomial_shape() {
        let ring = RingDesc::scalars(BaseRing::Rationals);
        let m = sw(2, 1, 3, &ring.one()).unwrap();
        assert!(subgroup_shape(&m, &ShapeSpec::Sw, None));
        let g = se(2, 1, 3, &ring.from_i64(2)).unwrap();
        assert!(!subgroup_shape(&g, &ShapeSpec::Sw, None));
        // identity is monomial and diagonal
        let id = SympMatrix::identity(2, ring).unwrap();
        assert!(subgroup_shape(&id, &ShapeSpec::Sw, None));
        assert!(subgroup_shape(&id, &ShapeSpec::Sd, None));
    }

    #[test]
    fn one_sided_families_respect_both_generator_names() {
        let ring = RingDesc::new(BaseRing::Rationals, MonoidSpec::free_mixed(1, 0).unwrap());
        let t = ring.var(0).unwrap();
        let g = se(2, 1, 3, &t).unwrap();
        let i13 = IndexSet::new(2, &[1, 3]).unwrap();
        let i24 = IndexSet::new(2, &[2, 4]).unwrap();
        let i23 = IndexSet::new(2, &[2, 3]).unwrap();
        // first index 1: in {1,3} directly
        assert!(subgroup_shape(&g, &ShapeSpec::Si(i13), None));
        // under the other name se(4, 2, -t): first index 4 in {2,4}
        assert!(subgroup_shape(&g, &ShapeSpec::Si(i24), None));
        // neither 1 nor 4 lies in {2,3}
        assert!(!subgroup_shape(&g, &ShapeSpec::Si(i23.clone()), None));
        assert!(!subgroup_shape(&g, &ShapeSpec::Sj(i23), None));
    }

    #[test]
    fn scalar_predicate_filters_entries() {
        let ring = RingDesc::new(BaseRing::Rationals, MonoidSpec::free_mixed(1, 0).unwrap());
        let t = ring.var(0).unwrap();
        let in_ideal_t = |e: &RingElement| {
            e.terms().all(|(ev, _)| *ev.coords()[0].numer() >= 1)
        };
        let g = se(2, 1, 3, &t).unwrap();
        let i13 = IndexSet::new(2, &[1, 3]).unwrap();
        assert!(subgroup_shape(&g, &ShapeSpec::Si(i13.clone()), Some(&in_ideal_t)));
        let h = se(2, 1, 3, &ring.one()).unwrap();
        assert!(!subgroup_shape(&h, &ShapeSpec::Si(i13), Some(&in_ideal_t)));
    }
}
