//! Factorization over a field by symplectic Gaussian elimination.
//!
//! Pairs are processed from the outside in. For the active pair
//! (2k-1, 2k) the last column is reduced to a unit multiple of its
//! basis vector with row operations, then the paired column, whose
//! pivot is forced to the inverse unit by the form, is cleared the
//! same way. Once both columns of a pair are clean the two rows are
//! clean as well (the inverse formula turns column facts about a
//! matrix into row facts), so the elimination recurses on the leading
//! block and finishes by unwinding the diagonal units.

use crate::error::{Error, Result};
use crate::factor::{clear_diagonal_pair, require_symplectic, ElimState, FactorStats,
    FactorizationResult};
use crate::ring::RingElement;
use crate::symplectic::matrix::SympMatrix;
use crate::symplectic::perm::sigma;

pub fn factor_over_field(alpha: &SympMatrix) -> Result<FactorizationResult> {
    if !alpha.ring().base.is_field() {
        return Err(Error::NotAField(alpha.ring().label()));
    }
    for row in alpha.rows() {
        for e in row {
            if !e.is_constant() {
                return Err(Error::NotAField(format!(
                    "entries lie in {}, not in the coefficient field",
                    alpha.ring().label()
                )));
            }
        }
    }
    require_symplectic(alpha)?;
    unit_pivot_factor(alpha, &|e: &RingElement| !e.is_zero())
}

/// Shared driver for rings in which pivoting is a matter of finding
/// an invertible entry: fields (any nonzero entry) and localizations
/// (entries with unit image). The predicate decides pivot
/// eligibility; arithmetic runs in the ambient ring.
pub(crate) fn unit_pivot_factor(
    alpha: &SympMatrix,
    is_pivot: &dyn Fn(&RingElement) -> bool,
) -> Result<FactorizationResult> {
    let n = alpha.n();
    let mut st = ElimState::new(alpha);
    for k in (1..=n).rev() {
        let hi = 2 * k;
        let lo = hi - 1;
        // Bring a pivot to position (hi, hi). Any unimodular column
        // over these rings has an eligible entry, so absence of one
        // means the input certificate lied.
        if !is_pivot(st.entry(hi, hi)) {
            let one = RingElement::one(st.entry(1, 1).ring().clone());
            let r = (1..=hi - 1)
                .find(|&r| is_pivot(st.entry(r, hi)))
                .ok_or_else(|| {
                    Error::Internal("no eligible pivot in a unimodular column".into())
                })?;
            if r == sigma(hi) {
                st.row_long(hi, &one)?;
            } else {
                st.row_short(hi, r, &one)?;
            }
            st.pivot_steps += 1;
        }
        st.pivot_steps += 1;
        clear_column_with_unit_pivot(&mut st, hi, k)?;
        // The paired column now holds the inverse unit at (lo, lo).
        st.pivot_steps += 1;
        clear_column_with_unit_pivot(&mut st, lo, k)?;
    }
    for k in 1..=n {
        clear_diagonal_pair(&mut st, k)?;
    }
    let residual = st.to_matrix()?;
    if !residual.is_identity() {
        return Err(Error::Internal(
            "elimination finished away from the identity".into(),
        ));
    }
    let word = st.left_word();
    let stats = FactorStats {
        token_count: word.len(),
        pivot_steps: st.pivot_steps,
    };
    Ok(FactorizationResult {
        word,
        residual,
        stats,
    })
}

/// Clear column `col` of the active leading 2k block to a multiple of
/// its own basis vector, using the diagonal entry as pivot. Rows
/// outside the pair go first (their mirrors only disturb the partner
/// row), the partner row last via the long generator.
fn clear_column_with_unit_pivot(st: &mut ElimState, col: usize, k: usize) -> Result<()> {
    let partner = sigma(col);
    let ci = st.entry(col, col).clone().inverse()?;
    for i in 1..=2 * k {
        if i == col || i == partner {
            continue;
        }
        let e = st.entry(i, col);
        if e.is_zero() {
            continue;
        }
        let lam = e.mul(&ci)?.neg();
        st.row_short(i, col, &lam)?;
    }
    let e = st.entry(partner, col);
    if !e.is_zero() {
        let lam = e.mul(&ci)?.neg();
        st.row_long(partner, &lam)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{BaseRing, MonoidSpec, RingDesc};
    use crate::symplectic::word::{random_word, word_eval, WordContext};

    fn gf(p: u64) -> RingDesc {
        RingDesc::scalars(BaseRing::prime_field(p).unwrap())
    }

    #[test]
    fn identity_factors_to_the_empty_word() {
        let ring = gf(7);
        let alpha = SympMatrix::identity(2, ring).unwrap();
        let out = factor_over_field(&alpha).unwrap();
        assert!(out.word.is_empty());
        assert!(out.is_complete());
        assert_eq!(out.stats.token_count, 0);
    }

    #[test]
    fn diagonal_unit_pair_needs_at_most_four_long_tokens() {
        let ring = gf(5);
        let alpha = SympMatrix::from_fn(1, ring.clone(), |i, j| match (i, j) {
            (1, 1) => ring.from_i64(2),
            (2, 2) => ring.from_i64(3),
            _ => ring.zero(),
        })
        .unwrap();
        assert!(alpha.is_symplectic());
        let out = factor_over_field(&alpha).unwrap();
        assert!(out.word.len() <= 4);
        assert!(out
            .word
            .tokens
            .iter()
            .all(|t| matches!(t.token, crate::symplectic::word::Token::SeDiag { .. })));
        let ctx = WordContext::plain(ring);
        assert_eq!(word_eval(&out.word, &ctx).unwrap(), alpha);
        assert!(out.is_complete());
    }

    #[test]
    fn round_trip_on_random_words() {
        for n in 2..=3 {
            let ring = gf(7);
            let ctx = WordContext::plain(ring.clone());
            for trial in 0..30 {
                let w = random_word(n, 6, &ring, 9000 + trial);
                let alpha = word_eval(&w, &ctx).unwrap();
                let out = factor_over_field(&alpha).unwrap();
                assert!(out.is_complete(), "n = {n} trial = {trial}");
                assert_eq!(
                    word_eval(&out.word, &ctx).unwrap(),
                    alpha,
                    "n = {n} trial = {trial}"
                );
            }
        }
    }

    #[test]
    fn conjugated_words_factor_too() {
        let ring = gf(7);
        let ctx = WordContext::plain(ring.clone());
        let psi = SympMatrix::psi(2, ring.clone()).unwrap();
        let psi_inv = psi.inverse_symplectic().unwrap();
        let w = random_word(2, 6, &ring, 77);
        let alpha = psi
            .mul(&word_eval(&w, &ctx).unwrap())
            .unwrap()
            .mul(&psi_inv)
            .unwrap();
        let out = factor_over_field(&alpha).unwrap();
        assert!(out.is_complete());
        assert_eq!(word_eval(&out.word, &ctx).unwrap(), alpha);
    }

    #[test]
    fn rings_that_are_not_fields_are_rejected() {
        let zint = RingDesc::scalars(BaseRing::Integers);
        let alpha = SympMatrix::identity(2, zint).unwrap();
        assert!(matches!(
            factor_over_field(&alpha),
            Err(Error::NotAField(_))
        ));

        let qt = RingDesc::new(BaseRing::Rationals, MonoidSpec::free_mixed(1, 0).unwrap());
        let t = qt.var(0).unwrap();
        let alpha = crate::symplectic::generators::se(2, 1, 3, &t).unwrap();
        assert!(matches!(
            factor_over_field(&alpha),
            Err(Error::NotAField(_))
        ));
    }

    #[test]
    fn non_symplectic_inputs_are_rejected() {
        let ring = gf(7);
        let alpha = SympMatrix::from_fn(1, ring.clone(), |i, j| {
            if i == j { ring.from_i64(2) } else { ring.zero() }
        })
        .unwrap();
        assert!(matches!(
            factor_over_field(&alpha),
            Err(Error::NotSymplectic(_))
        ));
    }
}
