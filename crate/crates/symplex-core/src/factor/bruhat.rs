//! Monomial-core decomposition alpha = beta1 * beta2 * beta3 with the
//! outer words drawn from restricted generator families.
//!
//! A short generator token (i, j) belongs to the family of an index
//! set S when i is a member or the partner of j is; a long token (i)
//! needs i itself. The sweep orders coordinates so that members of
//! the row set come first and their partners last, then processes the
//! partner rows from the back. Each processed row is reduced to its
//! latest-position nonzero entry by column operations (the partner
//! column of the pivot last, through a long token), and the pivot
//! column is then cleared by row operations. Every token is checked
//! against its family before it is applied; the defaults, the odd
//! coordinates against the even ones, always pass.

use crate::error::{Error, Result};
use crate::factor::{require_symplectic, ElimState};
use crate::ring::RingElement;
use crate::symplectic::matrix::SympMatrix;
use crate::symplectic::perm::{sigma, IndexSet};
use crate::symplectic::word::GenWord;

#[derive(Debug, Clone)]
pub struct BruhatSplit {
    pub beta1: GenWord,
    pub beta2: SympMatrix,
    pub beta3: GenWord,
}

fn short_namable(set: &IndexSet, i: usize, j: usize) -> bool {
    set.contains(i) || set.contains(sigma(j))
}

fn fail(p: usize, q: usize) -> Error {
    Error::DecompositionFailed(format!("pivot ({p}, {q})"))
}

pub fn bruhat_decompose(
    alpha: &SympMatrix,
    i_set: &IndexSet,
    j_set: &IndexSet,
) -> Result<BruhatSplit> {
    let n = alpha.n();
    if i_set.n() != n || j_set.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "index sets for half-size {} against a matrix of half-size {n}",
            i_set.n()
        )));
    }
    let ring = alpha.ring();
    if !ring.base.is_field() {
        return Err(Error::NotAField(ring.label()));
    }
    for i in 1..=2 * n {
        for j in 1..=2 * n {
            if !alpha.get(i, j).is_constant() {
                return Err(Error::NotAField(format!(
                    "entries lie in {}, not in the coefficient field",
                    ring.label()
                )));
            }
        }
    }
    require_symplectic(alpha)?;

    // Coordinate positions: members of the row set in ascending order
    // take 1..n, partners mirror to 2n..n+1.
    let mut pos = vec![0usize; 2 * n + 1];
    for (k, &m) in i_set.members().iter().enumerate() {
        pos[m] = k + 1;
        pos[sigma(m)] = 2 * n - k;
    }

    let mut st = ElimState::new(alpha);
    let order: Vec<usize> = i_set.members().iter().map(|&m| sigma(m)).collect();
    for &p in &order {
        let pivot_col = {
            let mut best: Option<usize> = None;
            for q in 1..=2 * n {
                if st.entry(p, q).is_zero() {
                    continue;
                }
                if best.map_or(true, |b| pos[q] > pos[b]) {
                    best = Some(q);
                }
            }
            best.ok_or_else(|| Error::Internal("zero row in an invertible matrix".into()))?
        };
        let piv_inv = pivot_inverse(&st, p, pivot_col)?;

        // clear row p with column operations
        for q in 1..=2 * n {
            if q == pivot_col || q == sigma(pivot_col) {
                continue;
            }
            let e = st.entry(p, q);
            if e.is_zero() {
                continue;
            }
            if !short_namable(j_set, pivot_col, q) {
                return Err(fail(p, pivot_col));
            }
            let lam = e.mul(&piv_inv)?.neg();
            st.col_short(pivot_col, q, &lam)?;
        }
        let e = st.entry(p, sigma(pivot_col));
        if !e.is_zero() {
            if !j_set.contains(pivot_col) {
                return Err(fail(p, pivot_col));
            }
            let lam = e.mul(&piv_inv)?.neg();
            st.col_long(pivot_col, &lam)?;
        }

        // clear column pivot_col with row operations
        for i in 1..=2 * n {
            if i == p || i == sigma(p) {
                continue;
            }
            let e = st.entry(i, pivot_col);
            if e.is_zero() {
                continue;
            }
            if !short_namable(i_set, i, p) {
                return Err(fail(p, pivot_col));
            }
            let lam = e.mul(&piv_inv)?.neg();
            st.row_short(i, p, &lam)?;
        }
        let e = st.entry(sigma(p), pivot_col);
        if !e.is_zero() {
            if !i_set.contains(sigma(p)) {
                return Err(fail(p, pivot_col));
            }
            let lam = e.mul(&piv_inv)?.neg();
            st.row_long(sigma(p), &lam)?;
        }
        st.pivot_steps += 1;
    }

    let beta2 = st.to_matrix()?;
    if !beta2.is_monomial() {
        return Err(Error::Internal(
            "sweep finished on a core that is not monomial".into(),
        ));
    }
    Ok(BruhatSplit {
        beta1: st.left_word(),
        beta2,
        beta3: st.right_word(),
    })
}

fn pivot_inverse(st: &ElimState, p: usize, q: usize) -> Result<RingElement> {
    st.entry(p, q)
        .inverse()
        .map_err(|_| Error::Internal("field entry without an inverse".into()))
}
