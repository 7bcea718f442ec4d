//! Factorization over the integers localized at a prime.
//!
//! Input matrices carry rational scalar entries whose denominators
//! are coprime to the chosen prime p. Pivoting is the field routine
//! with the unit test replaced by p-unit: a nonzero rational whose
//! numerator and denominator both avoid p.

use crate::error::{Error, Result};
use crate::factor::field::unit_pivot_factor;
use crate::factor::{require_symplectic, FactorizationResult};
use crate::ring::{BaseRing, Coeff, RingElement};
use crate::symplectic::matrix::SympMatrix;
use num_bigint::BigInt;
use num_integer::Integer;

fn rational_parts(e: &RingElement) -> Option<(BigInt, BigInt)> {
    if !e.is_constant() {
        return None;
    }
    match e.constant_coeff() {
        Coeff::Rat(q) => Some((q.numer().clone(), q.denom().clone())),
        Coeff::Int(v) => Some((v, BigInt::from(1))),
        _ => None,
    }
}

pub fn local_ring_factor(alpha: &SympMatrix, p: u64) -> Result<FactorizationResult> {
    // validates primality as a side effect
    BaseRing::prime_field(p)?;
    let ring = alpha.ring();
    if ring.base != BaseRing::Rationals || !ring.monoid.is_constants() {
        return Err(Error::Unsupported(
            "localization needs rational scalar entries".into(),
        ));
    }
    require_symplectic(alpha)?;
    let big_p = BigInt::from(p);
    for i in 1..=alpha.size() {
        for j in 1..=alpha.size() {
            let e = alpha.get(i, j);
            if e.is_zero() {
                continue;
            }
            let (_, den) = rational_parts(e)
                .ok_or_else(|| Error::Internal("rational entry expected".into()))?;
            if den.is_multiple_of(&big_p) {
                return Err(Error::Parse(format!(
                    "entry ({i}, {j}) has a denominator divisible by {p}"
                )));
            }
        }
    }
    let is_pivot = move |e: &RingElement| -> bool {
        if e.is_zero() {
            return false;
        }
        match rational_parts(e) {
            Some((num, den)) => !num.is_multiple_of(&big_p) && !den.is_multiple_of(&big_p),
            None => false,
        }
    };
    unit_pivot_factor(alpha, &is_pivot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDesc;
    use crate::symplectic::word::{word_eval, GenWord, Token, WordContext};

    fn qring() -> RingDesc {
        RingDesc::scalars(BaseRing::Rationals)
    }

    fn frac(ring: &RingDesc, n: i64, d: i64) -> RingElement {
        ring.from_i64(n)
            .divide_by_coeff(&ring.from_i64(d).constant_coeff())
            .unwrap()
    }

    #[test]
    fn identity_gives_the_empty_word() {
        let alpha = SympMatrix::identity(2, qring()).unwrap();
        let out = local_ring_factor(&alpha, 5).unwrap();
        assert!(out.is_complete());
        assert!(out.word.is_empty());
    }

    #[test]
    fn non_prime_moduli_are_rejected() {
        let alpha = SympMatrix::identity(1, qring()).unwrap();
        assert!(matches!(
            local_ring_factor(&alpha, 6),
            Err(Error::NonPrimeModulus(6))
        ));
    }

    #[test]
    fn denominators_hitting_the_prime_are_rejected() {
        let ring = qring();
        let g = crate::symplectic::generators::se_diag(1, 1, &frac(&ring, 1, 3)).unwrap();
        assert!(matches!(
            local_ring_factor(&g, 3),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn fraction_words_round_trip_with_p_integral_tokens() {
        let ring = qring();
        let ctx = WordContext::plain(ring.clone());
        let p = 3u64;
        let big_p = BigInt::from(p);
        let lams = [
            frac(&ring, 1, 2),
            frac(&ring, -2, 5),
            frac(&ring, 7, 4),
            frac(&ring, 1, 1),
        ];
        let mut w = GenWord::empty(2);
        w.push(Token::Se {
            i: 1,
            j: 3,
            lam: lams[0].clone(),
        });
        w.push(Token::SeDiag {
            i: 2,
            lam: lams[1].clone(),
        });
        w.push(Token::Se {
            i: 4,
            j: 1,
            lam: lams[2].clone(),
        });
        w.push(Token::SeDiag {
            i: 3,
            lam: lams[3].clone(),
        });
        let alpha = word_eval(&w, &ctx).unwrap();
        let out = local_ring_factor(&alpha, p).unwrap();
        assert!(out.is_complete());
        assert_eq!(word_eval(&out.word, &ctx).unwrap(), alpha);
        for tok in &out.word.tokens {
            let lam = match &tok.token {
                Token::Se { lam, .. } => lam,
                Token::SeDiag { lam, .. } => lam,
                other => panic!("unexpected token {other:?}"),
            };
            if lam.is_zero() {
                continue;
            }
            let (_, den) = rational_parts(lam).unwrap();
            assert!(
                !den.is_multiple_of(&big_p),
                "token coefficient {lam:?} is not {p}-integral"
            );
        }
    }

    #[test]
    fn non_unit_corner_forces_a_pivot_bump() {
        let ring = qring();
        let alpha = SympMatrix::from_fn(1, ring.clone(), |i, j| match (i, j) {
            (1, 1) => ring.one(),
            (1, 2) => ring.one(),
            (2, 1) => ring.from_i64(2),
            (2, 2) => ring.from_i64(3),
            _ => unreachable!(),
        })
        .unwrap();
        let out = local_ring_factor(&alpha, 3).unwrap();
        assert!(out.is_complete());
        assert!(out.stats.pivot_steps >= 1);
        match &out.word.tokens[0].token {
            Token::SeDiag { i, lam } => {
                assert_eq!(*i, 2);
                assert_eq!(*lam, ring.from_i64(-1));
            }
            other => panic!("unexpected first token {other:?}"),
        }
        let ctx = WordContext::plain(ring);
        assert_eq!(word_eval(&out.word, &ctx).unwrap(), alpha);
    }
}
