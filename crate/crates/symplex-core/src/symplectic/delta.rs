//! Diagonal conjugators indexed by one-per-pair index sets.
//!
//! For an index set I and a monomial t, delta_I is the diagonal
//! matrix with t at the I positions and 1 elsewhere. It is not
//! symplectic in general, but conjugation by it scales matrix entries
//! by a three-case rule that is the engine behind the generator
//! conjugation table: entry (i, j) picks up t when i is in I and j is
//! not, 1/t in the mirrored case, and is untouched otherwise.

use crate::error::{Error, Result};
use crate::ring::{RingDesc, RingElement};
use crate::symplectic::matrix::SympMatrix;
use crate::symplectic::perm::IndexSet;

/// A conjugator pair over the smallest ring extension in which t is
/// invertible: the diagonal matrix, its inverse, and the transported
/// scaling element.
#[derive(Debug, Clone)]
pub struct DeltaPair {
    set: IndexSet,
    ring: RingDesc,
    forward: SympMatrix,
    backward: SympMatrix,
    t: RingElement,
    t_inv: RingElement,
}

/// Build delta_I and its inverse from a nonzero monomial t. The
/// element's monoid is extended just enough to invert t; if t is
/// already invertible the ring is reused as is.
pub fn delta(set: &IndexSet, t: &RingElement) -> Result<DeltaPair> {
    let (exp, _) = t
        .as_monomial()
        .ok_or_else(|| Error::NotMonomial(t.to_string()))?;
    let exp = exp.clone();
    let monoid = t.monoid().laurent_extension(&exp)?;
    let ring = RingDesc::new(t.base().clone(), monoid);
    let t_ext = t.transport(&ring)?;
    let t_inv = t_ext.inverse()?;
    let n = set.n();
    let forward = diagonal_for(n, &ring, set, &t_ext)?;
    let backward = diagonal_for(n, &ring, set, &t_inv)?;
    Ok(DeltaPair {
        set: set.clone(),
        ring,
        forward,
        backward,
        t: t_ext,
        t_inv,
    })
}

fn diagonal_for(
    n: usize,
    ring: &RingDesc,
    set: &IndexSet,
    scale: &RingElement,
) -> Result<SympMatrix> {
    SympMatrix::from_fn(n, ring.clone(), |i, j| {
        if i != j {
            ring.zero()
        } else if set.contains(i) {
            scale.clone()
        } else {
            ring.one()
        }
    })
}

impl DeltaPair {
    pub fn set(&self) -> &IndexSet {
        &self.set
    }

    /// The extended ring where t is invertible.
    pub fn ring(&self) -> &RingDesc {
        &self.ring
    }

    pub fn forward(&self) -> &SympMatrix {
        &self.forward
    }

    pub fn backward(&self) -> &SympMatrix {
        &self.backward
    }

    pub fn t(&self) -> &RingElement {
        &self.t
    }

    pub fn t_inv(&self) -> &RingElement {
        &self.t_inv
    }
}

/// Conjugation by delta_I, computed by the entrywise three-case rule
/// and cross-checked against the literal triple product; a mismatch
/// between the two routes is an internal error, never a silent
/// answer. Direction +1 computes delta alpha delta^-1, direction -1
/// the inverse conjugation.
pub fn delta_conjugate(
    pair: &DeltaPair,
    alpha: &SympMatrix,
    direction: i32,
) -> Result<SympMatrix> {
    if direction != 1 && direction != -1 {
        return Err(Error::Parse(format!("direction {direction} must be +1 or -1")));
    }
    let ring = pair.ring.clone();
    let alpha = alpha.map_entries(ring.clone(), |_, _, e| e.transport(&ring))?;
    let (up, down) = if direction == 1 {
        (&pair.t, &pair.t_inv)
    } else {
        (&pair.t_inv, &pair.t)
    };
    let patterned = alpha.map_entries(ring.clone(), |i, j, e| {
        let in_i = pair.set.contains(i);
        let in_j = pair.set.contains(j);
        if in_i && !in_j {
            e.mul(up)
        } else if !in_i && in_j {
            e.mul(down)
        } else {
            Ok(e.clone())
        }
    })?;
    let (left, right) = if direction == 1 {
        (&pair.forward, &pair.backward)
    } else {
        (&pair.backward, &pair.forward)
    };
    let literal = left.mul(&alpha)?.mul(right)?;
    if literal != patterned {
        return Err(Error::Internal(
            "entrywise conjugation pattern disagrees with the literal product".into(),
        ));
    }
    Ok(patterned)
}
