//! Dense 2n x 2n matrices over a monoid algebra, with the standard
//! alternating form and a cached form-preservation certificate.

use crate::error::{Error, Result};
use crate::ring::{RingDesc, RingElement};
use std::fmt;
use std::sync::OnceLock;

/// Largest supported half-size. Entries are sparse polynomials, so
/// dense storage is cheap at these dimensions.
pub const MAX_HALF_SIZE: usize = 8;

/// A 2n x 2n matrix over a fixed ring. Most values of this type are
/// symplectic; whether the form identity holds is computed once on
/// demand and cached.
#[derive(Debug, Clone)]
pub struct SympMatrix {
    n: usize,
    ring: RingDesc,
    /// Row-major, length (2n)^2.
    entries: Vec<RingElement>,
    cert: OnceLock<bool>,
}

impl PartialEq for SympMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.ring == other.ring && self.entries == other.entries
    }
}

impl Eq for SympMatrix {}

impl SympMatrix {
    fn check_size(n: usize) -> Result<()> {
        if n == 0 || n > MAX_HALF_SIZE {
            return Err(Error::Unsupported(format!(
                "half-size {n} outside 1..={MAX_HALF_SIZE}"
            )));
        }
        Ok(())
    }

    /// Build from a row-major entry list of length (2n)^2.
    pub fn new(n: usize, ring: RingDesc, entries: Vec<RingElement>) -> Result<SympMatrix> {
        SympMatrix::check_size(n)?;
        let k = 2 * n;
        if entries.len() != k * k {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries, got {}",
                k * k,
                entries.len()
            )));
        }
        for e in &entries {
            if e.ring() != &ring {
                return Err(Error::MixedRing("matrix entry outside the ambient ring".into()));
            }
        }
        Ok(SympMatrix {
            n,
            ring,
            entries,
            cert: OnceLock::new(),
        })
    }

    /// Build entrywise from a closure over 1-based (row, col).
    pub fn from_fn<F>(n: usize, ring: RingDesc, mut f: F) -> Result<SympMatrix>
    where
        F: FnMut(usize, usize) -> RingElement,
    {
        SympMatrix::check_size(n)?;
        let k = 2 * n;
        let mut entries = Vec::with_capacity(k * k);
        for i in 1..=k {
            for j in 1..=k {
                entries.push(f(i, j));
            }
        }
        SympMatrix::new(n, ring, entries)
    }

    pub fn identity(n: usize, ring: RingDesc) -> Result<SympMatrix> {
        let one = ring.one();
        let zero = ring.zero();
        let m = SympMatrix::from_fn(n, ring, |i, j| if i == j { one.clone() } else { zero.clone() })?;
        let _ = m.cert.set(true);
        Ok(m)
    }

    /// The standard alternating form: the block diagonal sum of n
    /// copies of [[0, 1], [-1, 0]] on consecutive coordinate pairs.
    pub fn psi(n: usize, ring: RingDesc) -> Result<SympMatrix> {
        let one = ring.one();
        let zero = ring.zero();
        SympMatrix::from_fn(n, ring, |i, j| {
            if i % 2 == 1 && j == i + 1 {
                one.clone()
            } else if i % 2 == 0 && j == i - 1 {
                one.neg()
            } else {
                zero.clone()
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Full row/column count, 2n.
    pub fn size(&self) -> usize {
        2 * self.n
    }

    pub fn ring(&self) -> &RingDesc {
        &self.ring
    }

    /// 1-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        assert!(i >= 1 && i <= 2 * self.n && j >= 1 && j <= 2 * self.n);
        &self.entries[(i - 1) * 2 * self.n + (j - 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[RingElement]> {
        self.entries.chunks(2 * self.n)
    }

    /// 1-based column as an owned vector.
    pub fn column(&self, j: usize) -> Vec<RingElement> {
        (1..=2 * self.n).map(|i| self.get(i, j).clone()).collect()
    }

    /// 1-based row as an owned vector.
    pub fn row(&self, i: usize) -> Vec<RingElement> {
        (1..=2 * self.n).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &SympMatrix) -> Result<SympMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "half-sizes {} and {}",
                self.n, other.n
            )));
        }
        if self.ring != other.ring {
            return Err(Error::MixedRing("matrix product across rings".into()));
        }
        let k = 2 * self.n;
        let mut entries = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                let mut acc = self.ring.zero();
                for l in 0..k {
                    let a = &self.entries[i * k + l];
                    if a.is_zero() {
                        continue;
                    }
                    let b = &other.entries[l * k + j];
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b)?)?;
                }
                entries.push(acc);
            }
        }
        SympMatrix::new(self.n, self.ring.clone(), entries)
    }

    pub fn add(&self, other: &SympMatrix) -> Result<SympMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "half-sizes {} and {}",
                self.n, other.n
            )));
        }
        let k = 2 * self.n;
        let mut entries = Vec::with_capacity(k * k);
        for (a, b) in self.entries.iter().zip(&other.entries) {
            entries.push(a.add(b)?);
        }
        SympMatrix::new(self.n, self.ring.clone(), entries)
    }

    pub fn transpose(&self) -> SympMatrix {
        let k = 2 * self.n;
        let mut entries = Vec::with_capacity(k * k);
        for j in 0..k {
            for i in 0..k {
                entries.push(self.entries[i * k + j].clone());
            }
        }
        SympMatrix {
            n: self.n,
            ring: self.ring.clone(),
            entries,
            cert: OnceLock::new(),
        }
    }

    pub fn neg(&self) -> SympMatrix {
        SympMatrix {
            n: self.n,
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|e| e.neg()).collect(),
            cert: OnceLock::new(),
        }
    }

    /// Rebuild every entry through a fallible map, e.g. a ring
    /// transport or an entry scaling.
    pub fn map_entries<F>(&self, ring: RingDesc, mut f: F) -> Result<SympMatrix>
    where
        F: FnMut(usize, usize, &RingElement) -> Result<RingElement>,
    {
        let k = 2 * self.n;
        let mut entries = Vec::with_capacity(k * k);
        for i in 1..=k {
            for j in 1..=k {
                entries.push(f(i, j, self.get(i, j))?);
            }
        }
        SympMatrix::new(self.n, ring, entries)
    }

    pub fn is_identity(&self) -> bool {
        let k = 2 * self.n;
        self.entries.iter().enumerate().all(|(idx, e)| {
            if idx / k == idx % k {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    }

    /// The form identity for this matrix, computed once and cached.
    /// Concurrent callers may duplicate the computation but observe a
    /// single consistent value.
    pub fn is_symplectic(&self) -> bool {
        *self.cert.get_or_init(|| {
            let psi = match SympMatrix::psi(self.n, self.ring.clone()) {
                Ok(p) => p,
                Err(_) => return false,
            };
            match self.transpose().mul(&psi).and_then(|m| m.mul(self)) {
                Ok(prod) => prod == psi,
                Err(_) => false,
            }
        })
    }

    /// For a form-preserving matrix the inverse has the closed form
    /// -psi a^T psi; no elimination is needed.
    pub fn inverse_symplectic(&self) -> Result<SympMatrix> {
        if !self.is_symplectic() {
            return Err(Error::NotSymplectic("inverse requested".into()));
        }
        let psi = SympMatrix::psi(self.n, self.ring.clone())?;
        Ok(psi.mul(&self.transpose())?.mul(&psi)?.neg())
    }

    /// Exactly one nonzero entry in every row and every column.
    pub fn is_monomial(&self) -> bool {
        let k = 2 * self.n;
        let mut row_count = vec![0usize; k];
        let mut col_count = vec![0usize; k];
        for i in 0..k {
            for j in 0..k {
                if !self.entries[i * k + j].is_zero() {
                    row_count[i] += 1;
                    col_count[j] += 1;
                }
            }
        }
        row_count.iter().all(|c| *c == 1) && col_count.iter().all(|c| *c == 1)
    }

    pub fn is_diagonal(&self) -> bool {
        let k = 2 * self.n;
        (0..k).all(|i| (0..k).all(|j| i == j || self.entries[i * k + j].is_zero()))
    }

    /// Count of nonzero off-diagonal entries; a crude progress
    /// measure for elimination drivers.
    pub fn off_diagonal_support(&self) -> usize {
        let k = 2 * self.n;
        let mut count = 0;
        for i in 0..k {
            for j in 0..k {
                if i != j && !self.entries[i * k + j].is_zero() {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for SympMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=2 * self.n {
            write!(f, "[")?;
            for j in 1..=2 * self.n {
                if j > 1 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{BaseRing, MonoidSpec};

    fn scalars(base: BaseRing) -> RingDesc {
        RingDesc::new(base, MonoidSpec::constants())
    }

    #[test]
    fn form_axioms_hold_up_to_the_size_cap() {
        for base in [BaseRing::Integers, BaseRing::Rationals] {
            for n in 1..=6 {
                let ring = scalars(base.clone());
                let psi = SympMatrix::psi(n, ring.clone()).unwrap();
                assert_eq!(psi.transpose(), psi.neg(), "n = {n}");
                let sq = psi.mul(&psi).unwrap();
                let id = SympMatrix::identity(n, ring).unwrap();
                assert_eq!(sq, id.neg(), "n = {n}");
                assert!(psi.is_symplectic());
                assert!(psi.is_monomial());
                assert!(!psi.is_diagonal());
            }
        }
    }

    #[test]
    fn small_form_checks() {
        let ring = scalars(BaseRing::Rationals);
        // the 2x2 unipotent [[1,1],[0,1]] preserves the form
        let id = SympMatrix::identity(1, ring.clone()).unwrap();
        let u = SympMatrix::from_fn(1, ring.clone(), |i, j| {
            if i == j || (i, j) == (1, 2) {
                ring.one()
            } else {
                ring.zero()
            }
        })
        .unwrap();
        assert!(u.is_symplectic());
        // a lone (1,3) entry on top of the identity does not (n = 2)
        let bad = SympMatrix::from_fn(2, ring.clone(), |i, j| {
            if i == j || (i, j) == (1, 3) {
                ring.one()
            } else {
                ring.zero()
            }
        })
        .unwrap();
        assert!(!bad.is_symplectic());
        assert!(id.is_identity());
        assert!(!u.is_identity());
    }

    #[test]
    fn closed_form_inverse_matches_multiplication() {
        let ring = scalars(BaseRing::Rationals);
        let psi = SympMatrix::psi(2, ring.clone()).unwrap();
        let inv = psi.inverse_symplectic().unwrap();
        let id = SympMatrix::identity(2, ring.clone()).unwrap();
        assert_eq!(psi.mul(&inv).unwrap(), id);
        assert_eq!(inv.mul(&psi).unwrap(), id);
        // psi^-1 = -psi
        assert_eq!(inv, psi.neg());
    }

    #[test]
    fn transpose_and_product_shapes() {
        let ring = scalars(BaseRing::Integers);
        let psi = SympMatrix::psi(3, ring.clone()).unwrap();
        assert_eq!(psi.transpose().transpose(), psi);
        let id = SympMatrix::identity(3, ring.clone()).unwrap();
        assert_eq!(psi.mul(&id).unwrap(), psi);
        assert_eq!(id.mul(&psi).unwrap(), psi);
        assert_eq!(psi.off_diagonal_support(), 6);
    }

    #[test]
    fn size_cap_and_shape_validation() {
        let ring = scalars(BaseRing::Rationals);
        assert!(matches!(
            SympMatrix::identity(9, ring.clone()),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            SympMatrix::new(1, ring.clone(), vec![ring.zero(); 3]),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
