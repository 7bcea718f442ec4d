//! Factorization over euclidean rings: the integers and univariate
//! polynomials over a field.
//!
//! The last column of the active pair is funneled to a single unit by
//! norm descent. The descent runs inside each coordinate pair first,
//! using only the mirror-free long generators, and then across pairs
//! against the target slot; cross-pair short operations are safe at
//! that point because every mirror picks up a multiple of an already
//! zeroed partner entry. The gcd of a unimodular column is a unit, so
//! the column ends as a unit multiple of its basis vector and the
//! paired column is cleared with exact divisions as in the field
//! case.

use crate::error::{Error, Result};
use crate::factor::{clear_diagonal_pair, require_symplectic, ElimState, FactorStats,
    FactorizationResult};
use crate::ring::{BaseRing, Coeff, RingDesc, RingElement};
use crate::symplectic::matrix::SympMatrix;
use num_traits::{Signed, ToPrimitive};

pub fn factor_over_euclidean(alpha: &SympMatrix) -> Result<FactorizationResult> {
    let ring = alpha.ring();
    if !has_division_algorithm(ring) {
        return Err(Error::NotEuclidean(ring.label()));
    }
    require_symplectic(alpha)?;
    let n = alpha.n();
    let mut st = ElimState::new(alpha);
    for k in (1..=n).rev() {
        let hi = 2 * k;
        let lo = hi - 1;
        // Norm descent inside each pair of the active block.
        for pj in 1..=k {
            descend_pair(&mut st, 2 * pj - 1, 2 * pj, hi)?;
        }
        // Park the surviving pair-k entry in the corner slot.
        if st.entry(hi, hi).is_zero() && !st.entry(lo, hi).is_zero() {
            let one = one_of(&st);
            st.row_long(hi, &one)?;
            let q = exact_quotient(st.entry(lo, hi), st.entry(hi, hi))?;
            st.row_long(lo, &q.neg())?;
            st.pivot_steps += 1;
        }
        // Fold the other pair survivors into the corner.
        for pj in 1..k {
            for r in [2 * pj - 1, 2 * pj] {
                if !st.entry(r, hi).is_zero() {
                    descend_across(&mut st, r, hi)?;
                }
            }
        }
        let u = st.entry(hi, hi).clone();
        u.inverse()
            .map_err(|_| Error::Internal("column gcd of a unimodular column is not a unit".into()))?;
        // The paired column has the inverse unit at (lo, lo); divisions
        // by it are exact, so no descent is needed.
        for i in 1..=2 * k {
            if i == lo || i == hi {
                continue;
            }
            let e = st.entry(i, lo);
            if e.is_zero() {
                continue;
            }
            let lam = e.mul(&u)?.neg();
            st.row_short(i, lo, &lam)?;
        }
        let e = st.entry(hi, lo);
        if !e.is_zero() {
            let lam = e.mul(&u)?.neg();
            st.row_long(hi, &lam)?;
        }
    }
    for k in 1..=n {
        clear_diagonal_pair(&mut st, k)?;
    }
    let residual = st.to_matrix()?;
    if !residual.is_identity() {
        return Err(Error::Internal(
            "euclidean elimination finished away from the identity".into(),
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

fn has_division_algorithm(ring: &RingDesc) -> bool {
    if ring.base == BaseRing::Integers && ring.monoid.is_constants() {
        return true;
    }
    ring.base.is_field() && ring.monoid.as_free_mixed() == Some((1, 0))
}

fn one_of(st: &ElimState) -> RingElement {
    RingElement::one(st.entry(1, 1).ring().clone())
}

fn exact_quotient(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    let (q, r) = a.euclidean_divmod(b)?;
    if !r.is_zero() {
        return Err(Error::Internal("expected an exact division".into()));
    }
    Ok(q)
}

/// Norm of an entry for descent ordering: absolute value over the
/// integers, degree for polynomials, zero for field scalars. None
/// marks the zero element.
fn norm(e: &RingElement) -> Option<u128> {
    if e.is_zero() {
        return None;
    }
    if e.ring().monoid.is_constants() {
        return Some(match e.constant_coeff() {
            Coeff::Int(v) => v.abs().to_u128().unwrap_or(u128::MAX),
            _ => 0,
        });
    }
    let deg = e
        .terms()
        .map(|(exp, _)| exp.coords()[0].to_integer())
        .max()
        .unwrap_or(0);
    Some(deg.max(0) as u128)
}

/// Euclid inside the pair (r1, r2) on column `col`, long generators
/// only. Ends with at most one nonzero entry in the pair. Ties go to
/// the lower row as divisor.
fn descend_pair(st: &mut ElimState, r1: usize, r2: usize, col: usize) -> Result<()> {
    loop {
        let nx = norm(st.entry(r1, col));
        let ny = norm(st.entry(r2, col));
        let (reduce, by) = match (nx, ny) {
            (None, _) | (_, None) => break,
            (Some(a), Some(b)) => {
                if a >= b {
                    (r1, r2)
                } else {
                    (r2, r1)
                }
            }
        };
        let (q, _) = st.entry(reduce, col).euclidean_divmod(st.entry(by, col))?;
        if q.is_zero() {
            return Err(Error::Internal("descent stalled".into()));
        }
        st.row_long(reduce, &q.neg())?;
        st.pivot_steps += 1;
    }
    Ok(())
}

/// Euclid between row r (whose partner entry is zero) and the corner
/// row, short generators; the mirrors hit only zeroed partner slots.
/// Ends with the gcd in the corner and zero at r.
fn descend_across(st: &mut ElimState, r: usize, hi: usize) -> Result<()> {
    let col = hi;
    loop {
        let nx = norm(st.entry(r, col));
        let ny = norm(st.entry(hi, col));
        match (nx, ny) {
            (None, _) => return Ok(()),
            (Some(_), None) => {
                // move the survivor into the corner
                let one = one_of(st);
                st.row_short(hi, r, &one)?;
                let q = exact_quotient(st.entry(r, col), st.entry(hi, col))?;
                st.row_short(r, hi, &q.neg())?;
                st.pivot_steps += 1;
                return Ok(());
            }
            (Some(a), Some(b)) => {
                let (reduce, by) = if a > b { (r, hi) } else { (hi, r) };
                let (q, _) = st.entry(reduce, col).euclidean_divmod(st.entry(by, col))?;
                if q.is_zero() {
                    return Err(Error::Internal("descent stalled".into()));
                }
                st.row_short(reduce, by, &q.neg())?;
                st.pivot_steps += 1;
            }
        }
    }
}
