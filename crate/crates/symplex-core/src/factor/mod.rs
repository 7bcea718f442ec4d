//! Constructive factorization of symplectic matrices into elementary
//! generator words, and the one-sided/monomial/one-sided splitting.
//!
//! All algorithms work by applying elementary row (and, for the
//! splitting, column) operations to a working copy of the input while
//! recording the inverse of every operation. The recorded word then
//! satisfies word_eval(word) * residual = input at every step, so a
//! run that ends at the identity yields an exact factorization with
//! no separate reconstruction pass.

mod bruhat;
mod euclidean;
mod field;
mod local;

pub use bruhat::{bruhat_decompose, BruhatSplit};
pub use euclidean::factor_over_euclidean;
pub use field::factor_over_field;
pub use local::local_ring_factor;

use crate::error::{Error, Result};
use crate::ring::{RingDesc, RingElement};
use crate::symplectic::matrix::SympMatrix;
use crate::symplectic::perm::sigma;
use crate::symplectic::word::{GenWord, Token, WordToken};

/// Counters reported alongside a factorization word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorStats {
    pub token_count: usize,
    pub pivot_steps: usize,
}

/// A factorization word together with the matrix left over when the
/// elimination stopped. On success the residual is the identity and
/// the word evaluates to the input exactly.
#[derive(Debug, Clone)]
pub struct FactorizationResult {
    pub word: GenWord,
    pub residual: SympMatrix,
    pub stats: FactorStats,
}

impl FactorizationResult {
    pub fn is_complete(&self) -> bool {
        self.residual.is_identity()
    }
}

/// Working state of an elimination: a mutable copy of the matrix plus
/// the recorded inverses of the applied operations. Row operations
/// multiply on the left, column operations on the right, and both
/// apply the full two-entry generator (short roots carry their mirror
/// term; long roots are single-entry).
pub(crate) struct ElimState {
    n: usize,
    ring: RingDesc,
    rows: Vec<Vec<RingElement>>,
    left: Vec<WordToken>,
    right: Vec<WordToken>,
    pub pivot_steps: usize,
}

impl ElimState {
    pub fn new(alpha: &SympMatrix) -> ElimState {
        ElimState {
            n: alpha.n(),
            ring: alpha.ring().clone(),
            rows: alpha.rows().map(|r| r.to_vec()).collect(),
            left: Vec::new(),
            right: Vec::new(),
            pivot_steps: 0,
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &RingElement {
        &self.rows[i - 1][j - 1]
    }

    fn mirror_coeff(i: usize, j: usize, lam: &RingElement) -> RingElement {
        if (i + j) % 2 == 0 {
            lam.neg()
        } else {
            lam.clone()
        }
    }

    fn add_into_row(&mut self, target: usize, source: usize, lam: &RingElement) -> Result<()> {
        let src = self.rows[source - 1].clone();
        let dst = &mut self.rows[target - 1];
        for (d, s) in dst.iter_mut().zip(src.iter()) {
            *d = d.add(&s.mul(lam)?)?;
        }
        Ok(())
    }

    fn add_into_col(&mut self, target: usize, source: usize, lam: &RingElement) -> Result<()> {
        for row in &mut self.rows {
            let bump = row[source - 1].mul(lam)?;
            row[target - 1] = row[target - 1].add(&bump)?;
        }
        Ok(())
    }

    /// Left-multiply by the short generator with indices (i, j):
    /// row i += lam * row j, with the mirror row update.
    pub fn row_short(&mut self, i: usize, j: usize, lam: &RingElement) -> Result<()> {
        if i == j || j == sigma(i) {
            return Err(Error::Internal(format!(
                "short row operation with indices ({i}, {j})"
            )));
        }
        if lam.is_zero() {
            return Ok(());
        }
        self.add_into_row(i, j, lam)?;
        let mu = Self::mirror_coeff(i, j, lam);
        self.add_into_row(sigma(j), sigma(i), &mu)?;
        self.left.push(WordToken::plain(Token::Se {
            i,
            j,
            lam: lam.neg(),
        }));
        Ok(())
    }

    /// Left-multiply by the long generator at i: row i += lam * row sigma(i).
    pub fn row_long(&mut self, i: usize, lam: &RingElement) -> Result<()> {
        if lam.is_zero() {
            return Ok(());
        }
        self.add_into_row(i, sigma(i), lam)?;
        self.left.push(WordToken::plain(Token::SeDiag { i, lam: lam.neg() }));
        Ok(())
    }

    /// Right-multiply by the short generator with indices (i, j):
    /// col j += lam * col i, with the mirror column update.
    pub fn col_short(&mut self, i: usize, j: usize, lam: &RingElement) -> Result<()> {
        if i == j || j == sigma(i) {
            return Err(Error::Internal(format!(
                "short column operation with indices ({i}, {j})"
            )));
        }
        if lam.is_zero() {
            return Ok(());
        }
        self.add_into_col(j, i, lam)?;
        let mu = Self::mirror_coeff(i, j, lam);
        self.add_into_col(sigma(i), sigma(j), &mu)?;
        self.right.push(WordToken::plain(Token::Se {
            i,
            j,
            lam: lam.neg(),
        }));
        Ok(())
    }

    /// Right-multiply by the long generator at i: col sigma(i) += lam * col i.
    pub fn col_long(&mut self, i: usize, lam: &RingElement) -> Result<()> {
        if lam.is_zero() {
            return Ok(());
        }
        self.add_into_col(sigma(i), i, lam)?;
        self.right.push(WordToken::plain(Token::SeDiag { i, lam: lam.neg() }));
        Ok(())
    }

    /// The recorded left word: inverses of the applied row operations
    /// in application order, so eval(left) * current = original when
    /// no column operations were used.
    pub fn left_word(&self) -> GenWord {
        GenWord {
            n: self.n,
            tokens: self.left.clone(),
        }
    }

    /// The recorded right word: inverses of the applied column
    /// operations in reverse application order, so
    /// eval(left) * current * eval(right) = original.
    pub fn right_word(&self) -> GenWord {
        GenWord {
            n: self.n,
            tokens: self.right.iter().rev().cloned().collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<SympMatrix> {
        let entries: Vec<RingElement> = self.rows.iter().flatten().cloned().collect();
        SympMatrix::new(self.n, self.ring.clone(), entries)
    }
}

/// Clear the trailing pair block diag(a, 1/a) down to the identity
/// with four long row operations, recording them like any other step.
/// Used by the unit-pivot and euclidean drivers after all columns are
/// reduced to their diagonal unit.
pub(crate) fn clear_diagonal_pair(st: &mut ElimState, k: usize) -> Result<()> {
    let lo = 2 * k - 1;
    let hi = 2 * k;
    let a = st.entry(lo, lo).clone();
    if a.is_one() {
        return Ok(());
    }
    let ai = a.inverse()?;
    let one = RingElement::one(a.ring().clone());
    // diag(1/a, a) = U(1/a - 1) L(1) U(a - 1) L(-1/a) with
    // U(x) = long(lo, x) and L(x) = long(hi, x); applying the four
    // factors right-to-left multiplies the block by diag(1/a, a).
    st.row_long(hi, &ai.neg())?;
    st.row_long(lo, &a.sub(&one)?)?;
    st.row_long(hi, &one)?;
    st.row_long(lo, &ai.sub(&one)?)?;
    Ok(())
}

pub(crate) fn require_symplectic(alpha: &SympMatrix) -> Result<()> {
    if !alpha.is_symplectic() {
        return Err(Error::NotSymplectic(
            "factorization needs a symplectic input".into(),
        ));
    }
    Ok(())
}
