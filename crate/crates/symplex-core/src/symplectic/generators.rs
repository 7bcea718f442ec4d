//! Elementary symplectic generators and the tilde pairing.
//!
//! Two families generate the elementary subgroup: for indices in
//! different pairs, se(i, j, t) adds t into position (i, j) and the
//! compensating term into (sigma(j), sigma(i)); for a single index,
//! se_diag(i, t) is the long root move putting t into (i, sigma(i)).
//! sw combines three se factors into a monomial matrix that swaps a
//! coordinate pair, the symplectic analogue of a signed permutation.

use crate::error::{Error, Result};
use crate::ring::{RingElement, UnitAnswer};
use crate::symplectic::matrix::SympMatrix;
use crate::symplectic::perm::sigma;
use std::sync::atomic::{AtomicU64, Ordering};

/// Validate generator indices: both in range, in different
/// sigma-pairs. Either order of (i, j) is accepted; the matrix for
/// (sigma(j), sigma(i)) with an adjusted sign is the same, so each
/// generator simply has two names.
fn check_se_indices(n: usize, i: usize, j: usize) -> Result<()> {
    let k = 2 * n;
    if i < 1 || i > k || j < 1 || j > k {
        return Err(Error::BadIndices(format!("({i}, {j}) out of 1..{k}")));
    }
    if i == j || sigma(i) == j {
        return Err(Error::BadIndices(format!(
            "({i}, {j}) must come from different coordinate pairs"
        )));
    }
    Ok(())
}

/// The sign (-1)^(i+j) as an i32.
fn parity_sign(i: usize, j: usize) -> i32 {
    if (i + j) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Short root generator: Id + t e_ij - (-1)^(i+j) t e_(sigma(j) sigma(i)).
pub fn se(n: usize, i: usize, j: usize, t: &RingElement) -> Result<SympMatrix> {
    check_se_indices(n, i, j)?;
    let ring = t.ring().clone();
    let minus_t = t.neg();
    let mirror = if parity_sign(i, j) == 1 { &minus_t } else { t };
    SympMatrix::from_fn(n, ring.clone(), |r, c| {
        if r == c {
            ring.one()
        } else if (r, c) == (i, j) {
            t.clone()
        } else if (r, c) == (sigma(j), sigma(i)) {
            mirror.clone()
        } else {
            ring.zero()
        }
    })
}

/// Long root generator: Id + t e_(i sigma(i)).
pub fn se_diag(n: usize, i: usize, t: &RingElement) -> Result<SympMatrix> {
    if i < 1 || i > 2 * n {
        return Err(Error::BadIndices(format!("{i} out of 1..{}", 2 * n)));
    }
    let ring = t.ring().clone();
    SympMatrix::from_fn(n, ring.clone(), |r, c| {
        if r == c {
            ring.one()
        } else if (r, c) == (i, sigma(i)) {
            t.clone()
        } else {
            ring.zero()
        }
    })
}

static SW_FAULTS: AtomicU64 = AtomicU64::new(0);

/// Number of times sw had to abandon the (-1)^(i+j) middle sign and
/// fall back to +1 to obtain a monomial matrix. Expected to stay 0.
pub fn sw_fault_count() -> u64 {
    SW_FAULTS.load(Ordering::Relaxed)
}

fn sw_with_sign(
    n: usize,
    i: usize,
    j: usize,
    u: &RingElement,
    u_inv: &RingElement,
    sign: i32,
) -> Result<SympMatrix> {
    let outer = se(n, i, j, u)?;
    let mid_arg = if sign == 1 { u_inv.clone() } else { u_inv.neg() };
    let middle = se(n, sigma(i), sigma(j), &mid_arg)?;
    outer.mul(&middle)?.mul(&outer)
}

/// The monomial generator se_ij(u) se_(sigma(i) sigma(j))((-1)^(i+j) u^-1)
/// se_ij(u). The middle sign makes the product land on exactly one
/// nonzero entry per row and column; if it ever failed to, the
/// alternative sign +1 would be tried and the event counted, and an
/// error raised only if neither produced a monomial matrix.
pub fn sw(n: usize, i: usize, j: usize, u: &RingElement) -> Result<SympMatrix> {
    check_se_indices(n, i, j)?;
    let u_inv = match u.is_unit() {
        UnitAnswer::Yes(inv) => *inv,
        UnitAnswer::No => return Err(Error::NotUnit(u.to_string())),
        UnitAnswer::Unknown(why) => {
            return Err(Error::NotUnit(format!("{u} (membership inconclusive: {why})")))
        }
    };
    let primary = sw_with_sign(n, i, j, u, &u_inv, parity_sign(i, j))?;
    if primary.is_monomial() {
        return Ok(primary);
    }
    SW_FAULTS.fetch_add(1, Ordering::Relaxed);
    let fallback = sw_with_sign(n, i, j, u, &u_inv, 1)?;
    if fallback.is_monomial() {
        return Ok(fallback);
    }
    Err(Error::SignConventionFault(format!(
        "sw({i}, {j}) is not monomial under either middle sign"
    )))
}

/// The pairing u -> u^T psi on column vectors of length 2n, returned
/// as the vector of row entries: out[j] = (-1)^(j+1) ... concretely
/// out_(2k-1) = -u_(2k) and out_(2k) = u_(2k-1).
pub fn tilde(u: &[RingElement]) -> Result<Vec<RingElement>> {
    if u.is_empty() || u.len() % 2 != 0 {
        return Err(Error::DimensionMismatch(format!(
            "tilde needs even positive length, got {}",
            u.len()
        )));
    }
    let ring = u[0].ring();
    for e in u {
        if e.ring() != ring {
            return Err(Error::MixedRing("tilde over mixed rings".into()));
        }
    }
    let mut out = Vec::with_capacity(u.len());
    for j in 1..=u.len() {
        // column j of psi has a single nonzero entry at row sigma(j)
        let v = &u[sigma(j) - 1];
        out.push(if j % 2 == 1 { v.neg() } else { v.clone() });
    }
    Ok(out)
}

/// The form value u^T psi v of two column vectors.
pub fn form_value(u: &[RingElement], v: &[RingElement]) -> Result<RingElement> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch(format!(
            "form over lengths {} and {}",
            u.len(),
            v.len()
        )));
    }
    let tu = tilde(u)?;
    let mut acc = tu[0].ring().zero();
    for (a, b) in tu.iter().zip(v) {
        acc = acc.add(&a.mul(b)?)?;
    }
    Ok(acc)
}
