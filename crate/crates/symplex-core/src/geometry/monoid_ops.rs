//! Cone-level operations on monoids: the cone of a monoid, bounded
//! submonoid selection M(X), interior monoids, and c-divisibility
//! sampling.
//!
//! All selections are bounded enumerations: they consider monoid
//! members writable as at most `bound` generator applications. The
//! returned structures record that bound, since the results are
//! approximations of the (possibly infinite) exact objects.

use crate::error::{Error, Result};
use crate::geometry::cone::RationalCone;
use crate::ring::exponent::{exp_frac, ExponentVector};
use crate::ring::monoid::MonoidSpec;
use num_traits::{Signed, Zero};
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct MonoidInfo {
    pub rank: usize,
    pub kind: String,
    pub positive: bool,
    pub denominator_bound: u64,
    pub generators: Vec<ExponentVector>,
    /// None above the geometry rank cap.
    pub cone: Option<RationalCone>,
}

pub fn monoid_info(m: &MonoidSpec) -> MonoidInfo {
    let kind = match m.kind() {
        crate::ring::monoid::MonoidKind::FreeMixed { .. } => match m.as_free_mixed() {
            Some((poly, laurent)) => format!("free_mixed({poly},{laurent})"),
            None => {
                let free = m.free_axes().unwrap_or(&[]);
                let axes: Vec<String> = free
                    .iter()
                    .map(|f| if *f { "Z".into() } else { "Z+".into() })
                    .collect();
                format!("free_mixed[{}]", axes.join(","))
            }
        },
        crate::ring::monoid::MonoidKind::Affine { generators } => {
            format!("affine({} generators)", generators.len())
        }
        crate::ring::monoid::MonoidKind::CDivisibleTruncation { c, level, .. } => {
            format!("c_divisible(c={c},level={level})")
        }
    };
    MonoidInfo {
        rank: m.rank(),
        kind,
        positive: m.is_positive(),
        denominator_bound: m.denominator_bound(),
        generators: m.generator_list(),
        cone: m.cone().ok().cloned(),
    }
}

pub fn cone_of(m: &MonoidSpec) -> Result<RationalCone> {
    Ok(m.cone()?.clone())
}

/// A bounded generating set for a submonoid, with the bound recorded:
/// the generators reproduce the exact submonoid only up to that
/// enumeration depth.
#[derive(Debug, Clone)]
pub struct BoundedSubmonoid {
    pub monoid: Arc<MonoidSpec>,
    pub bound: u32,
}

/// Select M(X) = {m in M \ 0 : ray(m) in X} + {0}, generated to the
/// given bound and reduced to a minimal generating list.
pub fn submonoid_select(
    m: &MonoidSpec,
    x: &RationalCone,
    bound: u32,
) -> Result<BoundedSubmonoid> {
    let cone = m.cone()?;
    for r in x.rays() {
        if !cone.contains_point(r) {
            return Err(Error::NotSubcone(format!(
                "ray {r:?} of the selection cone lies outside the monoid cone"
            )));
        }
    }
    let picked: Vec<ExponentVector> = m
        .enumerate_members(bound)
        .into_iter()
        .filter(|v| !v.is_zero() && x.contains_q(v.coords()))
        .collect();
    let gens = minimalize(picked, bound);
    Ok(BoundedSubmonoid {
        monoid: MonoidSpec::affine(m.rank(), gens)?,
        bound,
    })
}

/// The interior monoid M_*: elements strictly inside every facet of
/// the cone, plus 0. A monoid whose cone has no facets (a full
/// subspace) is its own interior.
pub fn interior_monoid(m: &MonoidSpec, bound: u32) -> Result<BoundedSubmonoid> {
    let cone = m.cone()?;
    if cone.facet_normals().is_empty() {
        return Ok(BoundedSubmonoid {
            monoid: Arc::new(m.clone()),
            bound,
        });
    }
    let picked: Vec<ExponentVector> = m
        .enumerate_members(bound)
        .into_iter()
        .filter(|v| !v.is_zero() && cone.contains_q_strict(v.coords()))
        .collect();
    let gens = minimalize(picked, bound);
    Ok(BoundedSubmonoid {
        monoid: MonoidSpec::affine(m.rank(), gens)?,
        bound,
    })
}

/// Drop elements that are sums of two or more others from the list.
/// Inconclusive decompositions keep the element (conservative).
fn minimalize(mut elems: Vec<ExponentVector>, bound: u32) -> Vec<ExponentVector> {
    elems.sort();
    elems.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for (i, g) in elems.iter().enumerate() {
        let pool: Vec<&ExponentVector> = elems
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, e)| e)
            .collect();
        if !decomposable(g, &pool, bound) {
            kept.push(g.clone());
        }
    }
    kept
}

fn decomposable(g: &ExponentVector, pool: &[&ExponentVector], bound: u32) -> bool {
    bounded_sum_representable(g, pool, bound, 2)
}

/// Can the target be written as a sum of at least `min_parts` pool
/// elements (with repetition), using at most `bound` parts? Bounded
/// search; a `false` from an exhausted budget is conservative.
pub(crate) fn bounded_sum_representable(
    g: &ExponentVector,
    pool: &[&ExponentVector],
    bound: u32,
    min_parts: u32,
) -> bool {
    fn rec(
        target: &ExponentVector,
        pool: &[&ExponentVector],
        from: usize,
        parts: u32,
        budget: u32,
        min_parts: u32,
    ) -> bool {
        if target.is_zero() {
            return parts >= min_parts;
        }
        if budget == 0 {
            return false;
        }
        for (k, e) in pool.iter().enumerate().skip(from) {
            // subtraction may leave the candidate region; the zero
            // test above is the only success condition
            let rest = target.add(&e.neg());
            if rest
                .coords()
                .iter()
                .zip(target.coords())
                .any(|(r, t)| r.abs() > t.abs() && r.signum() != t.signum() && !r.is_zero())
            {
                // crude sign prune: overshoot in a coordinate
                continue;
            }
            if rec(&rest, pool, k, parts + 1, budget - 1, min_parts) {
                return true;
            }
        }
        false
    }
    rec(g, pool, 0, 0, bound, min_parts)
}

#[derive(Debug, Clone)]
pub struct DivisibilityReport {
    pub c: u32,
    pub bound: u32,
    pub checked: usize,
    pub witnesses: Vec<(ExponentVector, ExponentVector)>,
    pub failures: Vec<ExponentVector>,
    pub inconclusive: Vec<ExponentVector>,
    pub holds_on_sample: bool,
}

/// For every member m of generator-sum <= bound, look for n with
/// c * n = m. Failures are reported per element; a failure at the
/// truncation level of a c-divisible approximation is expected data,
/// not a global verdict.
pub fn is_c_divisible(m: &MonoidSpec, c: u32, bound: u32) -> Result<DivisibilityReport> {
    if c < 2 {
        return Err(Error::Parse(format!("divisibility constant c = {c} must be > 1")));
    }
    let mut witnesses = Vec::new();
    let mut failures = Vec::new();
    let mut inconclusive = Vec::new();
    let members = m.enumerate_members(bound);
    let checked = members.len();
    for v in members {
        let half = v.scale(exp_frac(1, c as i128));
        match m.membership(&half) {
            Ok(true) => witnesses.push((v, half)),
            Ok(false) => failures.push(v),
            Err(_) => inconclusive.push(v),
        }
    }
    let holds_on_sample = failures.is_empty() && inconclusive.is_empty();
    Ok(DivisibilityReport {
        c,
        bound,
        checked,
        witnesses,
        failures,
        inconclusive,
        holds_on_sample,
    })
}
