//! Words in the elementary generators, their evaluation, and a
//! deterministic random word source for batch tests.

use crate::error::{Error, Result};
use crate::ring::{BaseRing, RingDesc, RingElement, UnitAnswer};
use crate::rng::SplitMix64;
use crate::symplectic::delta::{delta, DeltaPair};
use crate::symplectic::generators::{se, se_diag, sw};
use crate::symplectic::matrix::SympMatrix;
use crate::symplectic::perm::{sigma, IndexSet};

/// One generator occurrence. Scalars are carried inside the token;
/// the diagonal conjugator only names its index set and direction,
/// the scaling element comes from the evaluation context.
#[derive(Debug, Clone, PartialEq)]
pub enum Token {
    Se {
        i: usize,
        j: usize,
        lam: RingElement,
    },
    SeDiag {
        i: usize,
        lam: RingElement,
    },
    Sw {
        i: usize,
        j: usize,
        u: RingElement,
    },
    DeltaConj {
        set: IndexSet,
        direction: i32,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct WordToken {
    pub token: Token,
    pub inv: bool,
}

impl WordToken {
    pub fn plain(token: Token) -> WordToken {
        WordToken { token, inv: false }
    }

    pub fn inverse(token: Token) -> WordToken {
        WordToken { token, inv: true }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenWord {
    pub n: usize,
    pub tokens: Vec<WordToken>,
}

impl GenWord {
    pub fn empty(n: usize) -> GenWord {
        GenWord { n, tokens: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn push(&mut self, token: Token) {
        self.tokens.push(WordToken::plain(token));
    }

    fn uses_delta(&self) -> bool {
        self.tokens
            .iter()
            .any(|t| matches!(t.token, Token::DeltaConj { .. }))
    }
}

/// Evaluation context: the ambient ring and, when the word contains
/// diagonal conjugator tokens, the monomial scaling element.
#[derive(Debug, Clone)]
pub struct WordContext {
    pub ring: RingDesc,
    pub t: Option<RingElement>,
}

impl WordContext {
    pub fn plain(ring: RingDesc) -> WordContext {
        WordContext { ring, t: None }
    }

    pub fn with_scale(ring: RingDesc, t: RingElement) -> WordContext {
        WordContext { ring, t: Some(t) }
    }
}

/// Left-to-right product of the token matrices. Words with diagonal
/// conjugator tokens are evaluated over the Laurent extension where
/// the scaling element is invertible; all token scalars are
/// transported there.
pub fn word_eval(w: &GenWord, ctx: &WordContext) -> Result<SympMatrix> {
    let mut delta_pair: Option<DeltaPair> = None;
    let eval_ring = if w.uses_delta() {
        let t = ctx
            .t
            .as_ref()
            .ok_or_else(|| Error::MissingScale("word contains a diagonal conjugator".into()))?;
        let pair = delta(&IndexSet::odds(w.n), t)?;
        let ring = pair.ring().clone();
        delta_pair = Some(pair);
        ring
    } else {
        ctx.ring.clone()
    };
    let mut acc = SympMatrix::identity(w.n, eval_ring.clone())?;
    for wt in &w.tokens {
        let m = token_matrix(w.n, wt, &eval_ring, delta_pair.as_ref())?;
        acc = acc.mul(&m)?;
    }
    Ok(acc)
}

fn token_matrix(
    n: usize,
    wt: &WordToken,
    ring: &RingDesc,
    pair: Option<&DeltaPair>,
) -> Result<SympMatrix> {
    let flip = |lam: &RingElement| -> Result<RingElement> {
        let lam = lam.transport(ring)?;
        Ok(if wt.inv { lam.neg() } else { lam })
    };
    match &wt.token {
        Token::Se { i, j, lam } => se(n, *i, *j, &flip(lam)?),
        Token::SeDiag { i, lam } => se_diag(n, *i, &flip(lam)?),
        Token::Sw { i, j, u } => sw(n, *i, *j, &flip(u)?),
        Token::DeltaConj { set, direction } => {
            let pair = pair.ok_or_else(|| {
                Error::MissingScale("diagonal conjugator outside a scaled context".into())
            })?;
            let dir = if wt.inv { -direction } else { *direction };
            let one_sided = delta(set, pair.t())?;
            Ok(if dir == 1 {
                one_sided.forward().clone()
            } else {
                one_sided.backward().clone()
            })
        }
    }
}

/// Reverse the token order and flip every inversion flag;
/// word_eval of the result is the inverse of word_eval of the input.
pub fn word_invert(w: &GenWord) -> GenWord {
    GenWord {
        n: w.n,
        tokens: w
            .tokens
            .iter()
            .rev()
            .map(|t| WordToken {
                token: t.token.clone(),
                inv: !t.inv,
            })
            .collect(),
    }
}

/// Deterministic pseudo-random generator word. The token stream is a
/// pure function of (n, length, ring, seed): each position draws a
/// kind (short root, long root, or monomial swap), indices, and a
/// small scalar from the documented splitmix generator. Swap units
/// are drawn from the nonzero field elements over a prime field and
/// from {1, -1} otherwise.
pub fn random_word(n: usize, length: usize, ring: &RingDesc, seed: u64) -> GenWord {
    let mut rng = SplitMix64::new(seed).derive(&format!("word-n{n}-{}", ring.label()));
    let mut w = GenWord::empty(n);
    for _ in 0..length {
        let kind = rng.below(3);
        let token = match kind {
            0 => {
                let (i, j) = random_pair(&mut rng, n);
                let lam = ring.from_i64(rng.int_in(-3, 3));
                Token::Se { i, j, lam }
            }
            1 => {
                let i = 1 + rng.below(2 * n as u64) as usize;
                let lam = ring.from_i64(rng.int_in(-3, 3));
                Token::SeDiag { i, lam }
            }
            _ => {
                let (i, j) = random_pair(&mut rng, n);
                let u = random_unit(&mut rng, ring);
                Token::Sw { i, j, u }
            }
        };
        let inv = rng.below(2) == 1;
        w.tokens.push(WordToken { token, inv });
    }
    w
}

fn random_pair(rng: &mut SplitMix64, n: usize) -> (usize, usize) {
    loop {
        let i = 1 + rng.below(2 * n as u64) as usize;
        let j = 1 + rng.below(2 * n as u64) as usize;
        if i != j && sigma(i) != j {
            return (i, j);
        }
    }
}

fn random_unit(rng: &mut SplitMix64, ring: &RingDesc) -> RingElement {
    if let BaseRing::PrimeField(p) = ring.base {
        let v = 1 + rng.below(p as u64 - 1) as i64;
        let u = ring.from_i64(v);
        debug_assert!(matches!(u.is_unit(), UnitAnswer::Yes(_)));
        return u;
    }
    ring.from_i64(if rng.below(2) == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::MonoidSpec;

    fn gf7() -> RingDesc {
        RingDesc::scalars(BaseRing::prime_field(7).unwrap())
    }

    #[test]
    fn empty_word_evaluates_to_identity() {
        let ring = gf7();
        let ctx = WordContext::plain(ring.clone());
        let m = word_eval(&GenWord::empty(2), &ctx).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn single_token_matches_the_generator() {
        let ring = gf7();
        let ctx = WordContext::plain(ring.clone());
        let lam = ring.from_i64(3);
        let mut w = GenWord::empty(2);
        w.push(Token::Se { i: 1, j: 4, lam: lam.clone() });
        assert_eq!(word_eval(&w, &ctx).unwrap(), se(2, 1, 4, &lam).unwrap());
    }

    #[test]
    fn inverse_word_cancels_on_random_words() {
        for n in 2..=3 {
            let ring = gf7();
            let ctx = WordContext::plain(ring.clone());
            let id = SympMatrix::identity(n, ring.clone()).unwrap();
            for trial in 0..100 {
                let w = random_word(n, 5, &ring, 1000 + trial);
                let m = word_eval(&w, &ctx).unwrap();
                assert!(m.is_symplectic(), "trial {trial}");
                let mi = word_eval(&word_invert(&w), &ctx).unwrap();
                assert_eq!(m.mul(&mi).unwrap(), id, "trial {trial} n = {n}");
            }
        }
    }

    #[test]
    fn scaled_words_need_a_scale() {
        let ring = gf7();
        let mut w = GenWord::empty(2);
        w.push(Token::DeltaConj {
            set: IndexSet::odds(2),
            direction: 1,
        });
        let ctx = WordContext::plain(ring);
        assert!(matches!(word_eval(&w, &ctx), Err(Error::MissingScale(_))));
    }

    #[test]
    fn conjugation_word_matches_the_direct_conjugation() {
        let ring = RingDesc::new(BaseRing::Rationals, MonoidSpec::free_mixed(1, 0).unwrap());
        let t = ring.var(0).unwrap();
        let set = IndexSet::new(2, &[1, 4]).unwrap();
        let c = ring.from_i64(2);
        let mut w = GenWord::empty(2);
        w.push(Token::DeltaConj { set: set.clone(), direction: 1 });
        w.push(Token::Se { i: 1, j: 3, lam: c.clone() });
        w.push(Token::DeltaConj { set: set.clone(), direction: -1 });
        let ctx = WordContext::with_scale(ring.clone(), t.clone());
        let via_word = word_eval(&w, &ctx).unwrap();
        let pair = delta(&set, &t).unwrap();
        let g = se(2, 1, 3, &c).unwrap();
        let direct = crate::symplectic::delta::delta_conjugate(&pair, &g, 1).unwrap();
        assert_eq!(via_word, direct);
    }

    #[test]
    fn random_words_are_deterministic() {
        let ring = gf7();
        let a = random_word(2, 8, &ring, 42);
        let b = random_word(2, 8, &ring, 42);
        assert_eq!(a, b);
        let c = random_word(2, 8, &ring, 43);
        assert_ne!(a, c);
    }
}
