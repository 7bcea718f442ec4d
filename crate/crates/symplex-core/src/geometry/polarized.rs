//! Polarized triples (P, Γ, M): an affine monoid whose cone is a
//! pyramid with apex ray P over a base Γ, together with a
//! distinguished monomial exponent t generating the apex submonoid.
//!
//! Validation reports three axioms. (i) P avoids the linear span of
//! every face of Γ, the base itself included. (ii) The pyramid over
//! P and Γ is the whole cone of M, checked as cone equality plus a
//! dimension comparison. (iii) For every facet γ of Γ, the members of
//! M inside the pyramid over γ are sums of members on the apex ray
//! and members of γ; this is an infinite statement, so it is checked
//! for all members of generator-sum at most `generation_bound` and
//! the report says "verified to bound B", never "true".

use crate::error::{Error, Result};
use crate::geometry::cone::RationalCone;
use crate::geometry::linalg;
use crate::geometry::monoid_ops::bounded_sum_representable;
use crate::ring::exponent::ExponentVector;
use crate::ring::monoid::{MonoidKind, MonoidSpec};
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct PolarizedTriple {
    pub monoid: Arc<MonoidSpec>,
    pub apex_ray: Vec<i128>,
    pub base_polytope: RationalCone,
    pub t_exponent: ExponentVector,
    pub generation_bound: u32,
}

#[derive(Debug, Clone)]
pub struct AxiomOutcome {
    pub passed: bool,
    pub detail: String,
    pub witnesses: Vec<String>,
}

impl AxiomOutcome {
    fn pass(detail: impl Into<String>) -> AxiomOutcome {
        AxiomOutcome {
            passed: true,
            detail: detail.into(),
            witnesses: vec![],
        }
    }

    fn fail(detail: impl Into<String>, witnesses: Vec<String>) -> AxiomOutcome {
        AxiomOutcome {
            passed: false,
            detail: detail.into(),
            witnesses,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PolarizedReport {
    pub axiom_i: AxiomOutcome,
    pub axiom_ii: AxiomOutcome,
    pub axiom_iii: AxiomOutcome,
    pub t_check: AxiomOutcome,
    pub all_passed: bool,
}

impl PolarizedTriple {
    pub fn new(
        monoid: Arc<MonoidSpec>,
        apex_ray: Vec<i128>,
        base_polytope: RationalCone,
        t_exponent: ExponentVector,
        generation_bound: u32,
    ) -> Result<PolarizedTriple> {
        if !matches!(monoid.kind(), MonoidKind::Affine { .. }) {
            return Err(Error::Parse(
                "polarized triples require an affine monoid".into(),
            ));
        }
        if apex_ray.len() != monoid.rank() || t_exponent.rank() != monoid.rank() {
            return Err(Error::Parse(
                "apex ray and t exponent must match the monoid rank".into(),
            ));
        }
        if apex_ray.iter().all(|&c| c == 0) {
            return Err(Error::Parse("apex ray must be nonzero".into()));
        }
        if base_polytope.rank() != monoid.rank() {
            return Err(Error::Parse("base cone rank mismatch".into()));
        }
        if !monoid.cone()?.contains_cone(&base_polytope) {
            return Err(Error::NotSubcone(
                "base polytope is not inside the monoid cone".into(),
            ));
        }
        if generation_bound == 0 {
            return Err(Error::Parse("generation bound must be positive".into()));
        }
        Ok(PolarizedTriple {
            monoid,
            apex_ray: linalg::primitive_int(&apex_ray),
            base_polytope,
            t_exponent,
            generation_bound,
        })
    }

    /// The reference example: M the affine monoid generated by e1 and
    /// e2, apex ray e1, base the ray through e2, t = (1,0).
    pub fn axis_example() -> PolarizedTriple {
        let monoid = MonoidSpec::affine(
            2,
            vec![
                ExponentVector::from_ints(&[1, 0]),
                ExponentVector::from_ints(&[0, 1]),
            ],
        )
        .expect("example monoid");
        let base = RationalCone::new(2, vec![vec![0, 1]]).expect("example base");
        PolarizedTriple::new(
            monoid,
            vec![1, 0],
            base,
            ExponentVector::from_ints(&[1, 0]),
            8,
        )
        .expect("example triple")
    }
}

pub fn validate_polarized(c: &PolarizedTriple) -> PolarizedReport {
    let axiom_i = check_axiom_i(c);
    let axiom_ii = check_axiom_ii(c);
    let axiom_iii = check_axiom_iii(c);
    let t_check = check_t(c);
    let all_passed = axiom_i.passed && axiom_ii.passed && axiom_iii.passed && t_check.passed;
    PolarizedReport {
        axiom_i,
        axiom_ii,
        axiom_iii,
        t_check,
        all_passed,
    }
}

fn check_axiom_i(c: &PolarizedTriple) -> AxiomOutcome {
    let faces = c.base_polytope.faces();
    let mut offenders = Vec::new();
    for f in &faces {
        if linalg::in_span(f.rays(), &c.apex_ray) {
            offenders.push(format!("face with rays {:?}", f.rays()));
        }
    }
    if offenders.is_empty() {
        AxiomOutcome::pass(format!(
            "apex ray avoids the span of all {} faces of the base",
            faces.len()
        ))
    } else {
        AxiomOutcome::fail("apex ray lies in the span of a base face", offenders)
    }
}

fn check_axiom_ii(c: &PolarizedTriple) -> AxiomOutcome {
    let mut rays = c.base_polytope.rays().to_vec();
    rays.push(c.apex_ray.clone());
    let pyramid = match RationalCone::new(c.monoid.rank(), rays) {
        Ok(p) => p,
        Err(e) => return AxiomOutcome::fail(format!("pyramid construction failed: {e}"), vec![]),
    };
    let mcone = c
        .monoid
        .cone()
        .expect("polarized monoids are affine and carry their cone");
    if pyramid.dim() != mcone.dim() {
        return AxiomOutcome::fail(
            "dimension mismatch",
            vec![format!(
                "pyramid over (P, base) has dimension {}, cone(M) has dimension {}",
                pyramid.dim(),
                mcone.dim()
            )],
        );
    }
    let mut witnesses = Vec::new();
    for r in mcone.rays() {
        if !pyramid.contains_point(r) {
            witnesses.push(format!("monoid cone ray {r:?} outside the pyramid"));
        }
    }
    for r in pyramid.rays() {
        if !mcone.contains_point(r) {
            witnesses.push(format!("pyramid ray {r:?} outside the monoid cone"));
        }
    }
    if witnesses.is_empty() {
        AxiomOutcome::pass("cone(M) equals the pyramid over (P, base)")
    } else {
        AxiomOutcome::fail("cone(M) differs from the pyramid over (P, base)", witnesses)
    }
}

fn check_axiom_iii(c: &PolarizedTriple) -> AxiomOutcome {
    let bound = c.generation_bound;
    let members = c.monoid.enumerate_members(bound);
    let apex_cone = match RationalCone::new(c.monoid.rank(), vec![c.apex_ray.clone()]) {
        Ok(k) => k,
        Err(e) => return AxiomOutcome::fail(format!("apex cone failed: {e}"), vec![]),
    };
    let apex_members: Vec<ExponentVector> = members
        .iter()
        .filter(|v| !v.is_zero() && apex_cone.contains_q(v.coords()))
        .cloned()
        .collect();
    let mut witnesses = Vec::new();
    for gamma in c.base_polytope.facet_cones() {
        let mut side_rays = gamma.rays().to_vec();
        side_rays.push(c.apex_ray.clone());
        let side = match RationalCone::new(c.monoid.rank(), side_rays) {
            Ok(s) => s,
            Err(e) => {
                return AxiomOutcome::fail(format!("facet pyramid failed: {e}"), vec![]);
            }
        };
        let gamma_members: Vec<ExponentVector> = members
            .iter()
            .filter(|v| !v.is_zero() && gamma.contains_q(v.coords()))
            .cloned()
            .collect();
        let mut pool: Vec<&ExponentVector> = apex_members.iter().collect();
        pool.extend(gamma_members.iter());
        for target in members
            .iter()
            .filter(|v| !v.is_zero() && side.contains_q(v.coords()))
        {
            if !bounded_sum_representable(target, &pool, bound, 1) {
                witnesses.push(format!(
                    "member {:?} of the facet pyramid over {:?} is not a sum from M({{P}}) and M(facet)",
                    target.coord_strings(),
                    gamma.rays()
                ));
            }
        }
    }
    if witnesses.is_empty() {
        AxiomOutcome::pass(format!("verified to bound {bound}"))
    } else {
        AxiomOutcome::fail(
            format!("generation failures at bound {bound}"),
            witnesses,
        )
    }
}

fn check_t(c: &PolarizedTriple) -> AxiomOutcome {
    match c.monoid.membership(&c.t_exponent) {
        Ok(true) => {}
        Ok(false) => {
            return AxiomOutcome::fail(
                "t is not a member of the monoid",
                vec![format!("{:?}", c.t_exponent.coord_strings())],
            )
        }
        Err(e) => {
            return AxiomOutcome::fail(format!("t membership inconclusive: {e}"), vec![]);
        }
    }
    let dir = linalg::primitive(c.t_exponent.coords());
    if dir != c.apex_ray {
        return AxiomOutcome::fail(
            "t does not lie on the apex ray",
            vec![format!("t direction {dir:?} vs apex {:?}", c.apex_ray)],
        );
    }
    // every member on the apex ray up to the bound is a multiple of t
    let apex_cone = match RationalCone::new(c.monoid.rank(), vec![c.apex_ray.clone()]) {
        Ok(k) => k,
        Err(e) => return AxiomOutcome::fail(format!("apex cone failed: {e}"), vec![]),
    };
    let t = &c.t_exponent;
    let mut witnesses = Vec::new();
    for v in c
        .monoid
        .enumerate_members(c.generation_bound)
        .iter()
        .filter(|v| !v.is_zero() && apex_cone.contains_q(v.coords()))
    {
        // v = k t for a nonnegative integer k?
        let k = v
            .coords()
            .iter()
            .zip(t.coords())
            .find(|(_, tc)| !num_traits::Zero::is_zero(*tc))
            .map(|(vc, tc)| vc / tc);
        let ok = match k {
            Some(k) => *k.denom() == 1 && *k.numer() >= 0 && &t.scale(k) == v,
            None => false,
        };
        if !ok {
            witnesses.push(format!("{:?}", v.coord_strings()));
        }
    }
    if witnesses.is_empty() {
        AxiomOutcome::pass(format!(
            "t generates the apex submonoid (verified to bound {})",
            c.generation_bound
        ))
    } else {
        AxiomOutcome::fail("apex-ray members outside <t>", witnesses)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_example_passes_all_axioms() {
        let triple = PolarizedTriple::axis_example();
        let report = validate_polarized(&triple);
        assert!(report.axiom_i.passed, "{:?}", report.axiom_i);
        assert!(report.axiom_ii.passed, "{:?}", report.axiom_ii);
        assert!(report.axiom_iii.passed, "{:?}", report.axiom_iii);
        assert!(report.t_check.passed, "{:?}", report.t_check);
        assert!(report.all_passed);
        assert_eq!(report.axiom_iii.detail, "verified to bound 8");
    }

    #[test]
    fn apex_in_base_span_fails_axiom_i() {
        let base = PolarizedTriple::axis_example();
        let bad = PolarizedTriple::new(
            base.monoid.clone(),
            vec![0, 1],
            base.base_polytope.clone(),
            ExponentVector::from_ints(&[0, 1]),
            8,
        )
        .unwrap();
        let report = validate_polarized(&bad);
        assert!(!report.axiom_i.passed);
        assert!(!report.axiom_i.witnesses.is_empty());
    }

    #[test]
    fn lower_dimensional_base_fails_axiom_ii_with_dimension_witness() {
        let monoid = MonoidSpec::affine(
            3,
            vec![
                ExponentVector::from_ints(&[1, 0, 0]),
                ExponentVector::from_ints(&[0, 1, 0]),
                ExponentVector::from_ints(&[0, 0, 1]),
            ],
        )
        .unwrap();
        let base = RationalCone::new(3, vec![vec![0, 0, 1]]).unwrap();
        let bad = PolarizedTriple::new(
            monoid,
            vec![1, 0, 0],
            base,
            ExponentVector::from_ints(&[1, 0, 0]),
            6,
        )
        .unwrap();
        let report = validate_polarized(&bad);
        assert!(!report.axiom_ii.passed);
        assert_eq!(report.axiom_ii.detail, "dimension mismatch");
    }

    #[test]
    fn t_off_the_apex_ray_is_reported() {
        let base = PolarizedTriple::axis_example();
        let bad = PolarizedTriple::new(
            base.monoid.clone(),
            base.apex_ray.clone(),
            base.base_polytope.clone(),
            ExponentVector::from_ints(&[0, 1]),
            8,
        )
        .unwrap();
        let report = validate_polarized(&bad);
        assert!(!report.t_check.passed);
    }

    #[test]
    fn non_affine_monoid_is_rejected_at_construction() {
        let m = MonoidSpec::free_mixed(2, 0).unwrap();
        let base = RationalCone::new(2, vec![vec![0, 1]]).unwrap();
        let res = PolarizedTriple::new(
            m,
            vec![1, 0],
            base,
            ExponentVector::from_ints(&[1, 0]),
            8,
        );
        assert!(res.is_err());
    }

    #[test]
    fn three_dimensional_simplex_triple_passes() {
        let monoid = MonoidSpec::affine(
            3,
            vec![
                ExponentVector::from_ints(&[1, 0, 0]),
                ExponentVector::from_ints(&[0, 1, 0]),
                ExponentVector::from_ints(&[0, 0, 1]),
            ],
        )
        .unwrap();
        let base = RationalCone::new(3, vec![vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let triple = PolarizedTriple::new(
            monoid,
            vec![1, 0, 0],
            base,
            ExponentVector::from_ints(&[1, 0, 0]),
            5,
        )
        .unwrap();
        let report = validate_polarized(&triple);
        assert!(report.all_passed, "{report:?}");
    }
}
