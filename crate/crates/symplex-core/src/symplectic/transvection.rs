//! Transvections on the split module P + R^2, where P is free of even
//! rank carrying the standard alternating form.
//!
//! A vector is a triple (p, a, b). The combined form of two triples is
//! the form value of the p parts plus the determinant pairing of the
//! (a, b) parts. For each q in P two automorphisms act:
//!
//! delta_q: (p, a, b) -> (p + b q, a - <p, q> + b, b)
//! gamma_q: (p, a, b) -> (p + a q, a, b + <p, q> - a)
//!
//! Both preserve the combined form exactly; the tests check this as a
//! polynomial identity and on randomized prime-field instances.

use crate::error::{Error, Result};
use crate::ring::RingElement;
use crate::symplectic::generators::form_value;

/// An element of P + R^2 with P of rank 2k.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitVector {
    pub p: Vec<RingElement>,
    pub a: RingElement,
    pub b: RingElement,
}

impl SplitVector {
    pub fn new(p: Vec<RingElement>, a: RingElement, b: RingElement) -> Result<SplitVector> {
        if p.is_empty() || p.len() % 2 != 0 {
            return Err(Error::DimensionMismatch(format!(
                "P part must have even positive length, got {}",
                p.len()
            )));
        }
        for e in &p {
            if e.ring() != a.ring() || e.ring() != b.ring() {
                return Err(Error::MixedRing("split vector across rings".into()));
            }
        }
        Ok(SplitVector { p, a, b })
    }
}

/// The form value <p, q> = p^T psi q.
pub fn phi_q(q: &[RingElement], p: &[RingElement]) -> Result<RingElement> {
    form_value(p, q)
}

/// Combined form on P + R^2: <p1, p2> + (a1 b2 - a2 b1).
pub fn combined_form(v1: &SplitVector, v2: &SplitVector) -> Result<RingElement> {
    if v1.p.len() != v2.p.len() {
        return Err(Error::DimensionMismatch(format!(
            "P parts of lengths {} and {}",
            v1.p.len(),
            v2.p.len()
        )));
    }
    let inner = form_value(&v1.p, &v2.p)?;
    let det = v1.a.mul(&v2.b)?.sub(&v2.a.mul(&v1.b)?)?;
    inner.add(&det)
}

fn check_q(q: &[RingElement], v: &SplitVector) -> Result<()> {
    if q.len() != v.p.len() {
        return Err(Error::DimensionMismatch(format!(
            "q of length {} against P part of length {}",
            q.len(),
            v.p.len()
        )));
    }
    Ok(())
}

/// (p, a, b) -> (p + b q, a - <p, q> + b, b).
pub fn transvection_delta(q: &[RingElement], v: &SplitVector) -> Result<SplitVector> {
    check_q(q, v)?;
    let p: Vec<RingElement> = v
        .p
        .iter()
        .zip(q)
        .map(|(pi, qi)| pi.add(&v.b.mul(qi)?))
        .collect::<Result<_>>()?;
    let inner = phi_q(q, &v.p)?;
    let a = v.a.sub(&inner)?.add(&v.b)?;
    Ok(SplitVector { p, a, b: v.b.clone() })
}

/// (p, a, b) -> (p + a q, a, b + <p, q> - a).
pub fn transvection_gamma(q: &[RingElement], v: &SplitVector) -> Result<SplitVector> {
    check_q(q, v)?;
    let p: Vec<RingElement> = v
        .p
        .iter()
        .zip(q)
        .map(|(pi, qi)| pi.add(&v.a.mul(qi)?))
        .collect::<Result<_>>()?;
    let inner = phi_q(q, &v.p)?;
    let b = v.b.add(&inner)?.sub(&v.a)?;
    Ok(SplitVector { p, a: v.a.clone(), b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{BaseRing, MonoidSpec, RingDesc};
    use crate::rng::SplitMix64;

    #[test]
    fn zero_q_shears_the_appended_plane_and_b_zero_fixes_p() {
        // At q = 0 both maps still move the appended pair: delta sends
        // a to a + b and gamma sends b to b - a. Only p is fixed.
        let ring = RingDesc::scalars(BaseRing::Rationals);
        let q = vec![ring.zero(), ring.zero(), ring.zero(), ring.zero()];
        let v = SplitVector::new(
            vec![ring.from_i64(1), ring.from_i64(2), ring.from_i64(3), ring.from_i64(4)],
            ring.from_i64(5),
            ring.from_i64(6),
        )
        .unwrap();
        let d = transvection_delta(&q, &v).unwrap();
        assert_eq!(d.p, v.p);
        assert_eq!(d.a, ring.from_i64(11));
        assert_eq!(d.b, v.b);
        let g = transvection_gamma(&q, &v).unwrap();
        assert_eq!(g.p, v.p);
        assert_eq!(g.a, v.a);
        assert_eq!(g.b, ring.from_i64(1));

        let q1 = vec![ring.one(), ring.zero(), ring.zero(), ring.zero()];
        let v0 = SplitVector::new(v.p.clone(), v.a.clone(), ring.zero()).unwrap();
        let out = transvection_delta(&q1, &v0).unwrap();
        assert_eq!(out.p, v0.p);
        // a shifts by -<p, q> (+ b = 0)
        let shift = phi_q(&q1, &v0.p).unwrap();
        assert_eq!(out.a, v0.a.sub(&shift).unwrap());
    }

    #[test]
    fn phi_is_alternating_and_linear() {
        let ring = RingDesc::scalars(BaseRing::Rationals);
        let e1 = vec![ring.one(), ring.zero()];
        let e2 = vec![ring.zero(), ring.one()];
        assert!(phi_q(&e1, &e1).unwrap().is_zero());
        // <e1, e2> with the standard form on rank 2
        assert!(phi_q(&e2, &e1).unwrap().is_one());
        let mut rng = SplitMix64::new(77);
        for _ in 0..30 {
            let u: Vec<_> = (0..2).map(|_| ring.from_i64(rng.int_in(-9, 9))).collect();
            let v: Vec<_> = (0..2).map(|_| ring.from_i64(rng.int_in(-9, 9))).collect();
            let w: Vec<_> = (0..2).map(|_| ring.from_i64(rng.int_in(-9, 9))).collect();
            let vw: Vec<_> = v.iter().zip(&w).map(|(x, y)| x.add(y).unwrap()).collect();
            let lhs = phi_q(&u, &vw).unwrap();
            let rhs = phi_q(&u, &v).unwrap().add(&phi_q(&u, &w).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn form_preservation_randomized_gf11() {
        let ring = RingDesc::scalars(BaseRing::prime_field(11).unwrap());
        let mut rng = SplitMix64::new(1104);
        for trial in 0..200 {
            let rand_vec = |rng: &mut SplitMix64| -> Vec<RingElement> {
                (0..4).map(|_| ring.from_i64(rng.int_in(0, 10))).collect()
            };
            let q = rand_vec(&mut rng);
            let v1 = SplitVector::new(
                rand_vec(&mut rng),
                ring.from_i64(rng.int_in(0, 10)),
                ring.from_i64(rng.int_in(0, 10)),
            )
            .unwrap();
            let v2 = SplitVector::new(
                rand_vec(&mut rng),
                ring.from_i64(rng.int_in(0, 10)),
                ring.from_i64(rng.int_in(0, 10)),
            )
            .unwrap();
            let before = combined_form(&v1, &v2).unwrap();
            let d = combined_form(
                &transvection_delta(&q, &v1).unwrap(),
                &transvection_delta(&q, &v2).unwrap(),
            )
            .unwrap();
            let g = combined_form(
                &transvection_gamma(&q, &v1).unwrap(),
                &transvection_gamma(&q, &v2).unwrap(),
            )
            .unwrap();
            assert_eq!(d, before, "delta trial {trial}");
            assert_eq!(g, before, "gamma trial {trial}");
        }
    }

    #[test]
    fn form_preservation_is_a_polynomial_identity() {
        // full symbolic instance for rank 4: variables are the four
        // coordinates of q, of p1, of p2, and the four scalars
        let nvars = 4 + 4 + 4 + 4;
        let ring = RingDesc::new(
            BaseRing::Rationals,
            MonoidSpec::free_mixed(nvars, 0).unwrap(),
        );
        let var = |k: usize| ring.var(k).unwrap();
        let q: Vec<_> = (0..4).map(var).collect();
        let v1 = SplitVector::new(
            (4..8).map(var).collect(),
            var(12),
            var(13),
        )
        .unwrap();
        let v2 = SplitVector::new(
            (8..12).map(var).collect(),
            var(14),
            var(15),
        )
        .unwrap();
        let before = combined_form(&v1, &v2).unwrap();
        let after_d = combined_form(
            &transvection_delta(&q, &v1).unwrap(),
            &transvection_delta(&q, &v2).unwrap(),
        )
        .unwrap();
        let after_g = combined_form(
            &transvection_gamma(&q, &v1).unwrap(),
            &transvection_gamma(&q, &v2).unwrap(),
        )
        .unwrap();
        assert_eq!(after_d, before);
        assert_eq!(after_g, before);
    }

    #[test]
    fn dimension_mismatches_are_rejected() {
        let ring = RingDesc::scalars(BaseRing::Rationals);
        let v = SplitVector::new(vec![ring.one(), ring.zero()], ring.zero(), ring.zero()).unwrap();
        let q = vec![ring.one(); 4];
        assert!(matches!(
            transvection_delta(&q, &v),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            SplitVector::new(vec![ring.one()], ring.zero(), ring.zero()),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
