//! Python bindings. Matrices are first-class objects; everything
//! composite (words, factorizations, reports, cones) crosses the
//! boundary as the same canonical JSON the command line tool speaks,
//! so Python can hand documents back and forth without a second
//! serialization format.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use symplex_core::factor::{bruhat_decompose, factor_over_euclidean, factor_over_field};
use symplex_core::geometry::polarized::validate_polarized;
use symplex_core::geometry::split;
use symplex_core::geometry::monoid_ops;
use symplex_core::ring::{BaseRing, RingDesc};
use symplex_core::symplectic::{
    self, delta, delta_conjugate, word_eval, IndexSet, SympMatrix, WordContext,
};
use symplex_core::{jsonio, lab};

fn err(e: symplex_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_json(text: &str) -> PyResult<serde_json::Value> {
    serde_json::from_str(text).map_err(|e| PyValueError::new_err(format!("invalid json: {e}")))
}

fn scalar_ring(label: &str) -> PyResult<RingDesc> {
    Ok(RingDesc::scalars(BaseRing::parse(label).map_err(err)?))
}

fn constant(ring: &RingDesc, coeff: &str) -> PyResult<symplex_core::ring::RingElement> {
    let c = ring.base.parse_coeff(coeff).map_err(err)?;
    Ok(ring.one().scalar_mul(&c))
}

/// A square matrix of even size with exact entries.
#[pyclass]
#[derive(Clone)]
struct Matrix {
    inner: SympMatrix,
}

#[pymethods]
impl Matrix {
    /// Parse the canonical matrix document.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Matrix> {
        let value = parse_json(text)?;
        Ok(Matrix {
            inner: jsonio::matrix_from_value(&value).map_err(err)?,
        })
    }

    #[staticmethod]
    fn identity(n: usize, ring: &str) -> PyResult<Matrix> {
        Ok(Matrix {
            inner: SympMatrix::identity(n, scalar_ring(ring)?).map_err(err)?,
        })
    }

    /// The alternating form the whole library is built around.
    #[staticmethod]
    fn psi(n: usize, ring: &str) -> PyResult<Matrix> {
        Ok(Matrix {
            inner: SympMatrix::psi(n, scalar_ring(ring)?).map_err(err)?,
        })
    }

    /// Elementary generator with a constant scalar, e.g. se(2, 1, 3, "5", "Fp:7").
    #[staticmethod]
    fn se(n: usize, i: usize, j: usize, lam: &str, ring: &str) -> PyResult<Matrix> {
        let ring = scalar_ring(ring)?;
        let lam = constant(&ring, lam)?;
        Ok(Matrix {
            inner: symplectic::se(n, i, j, &lam).map_err(err)?,
        })
    }

    #[staticmethod]
    fn se_diag(n: usize, i: usize, lam: &str, ring: &str) -> PyResult<Matrix> {
        let ring = scalar_ring(ring)?;
        let lam = constant(&ring, lam)?;
        Ok(Matrix {
            inner: symplectic::se_diag(n, i, &lam).map_err(err)?,
        })
    }

    #[staticmethod]
    fn sw(n: usize, i: usize, j: usize, u: &str, ring: &str) -> PyResult<Matrix> {
        let ring = scalar_ring(ring)?;
        let u = constant(&ring, u)?;
        Ok(Matrix {
            inner: symplectic::sw(n, i, j, &u).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn to_json(&self) -> String {
        jsonio::to_canonical_string(&jsonio::matrix_to_value(&self.inner))
    }

    fn is_symplectic(&self) -> bool {
        self.inner.is_symplectic()
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    fn is_monomial(&self) -> bool {
        self.inner.is_monomial()
    }

    /// Inverse computed through the form; requires a symplectic matrix.
    fn inverse(&self) -> PyResult<Matrix> {
        Ok(Matrix {
            inner: self.inner.inverse_symplectic().map_err(err)?,
        })
    }

    fn transpose(&self) -> Matrix {
        Matrix {
            inner: self.inner.transpose(),
        }
    }

    /// Factor into elementary generators; returns the factorization
    /// document (word, residual, stats).
    fn factor(&self) -> PyResult<String> {
        let ring = self.inner.ring();
        let res = if ring.base.is_field() && ring.monoid.is_constants() {
            factor_over_field(&self.inner).map_err(err)?
        } else {
            factor_over_euclidean(&self.inner).map_err(err)?
        };
        Ok(jsonio::to_canonical_string(&jsonio::factorization_to_value(
            &res,
        )))
    }

    /// Three-part splitting with a monomial core; index sets are given
    /// by their members, one per pair.
    fn bruhat(&self, i_members: Vec<usize>, j_members: Vec<usize>) -> PyResult<String> {
        let n = self.inner.n();
        let i_set = IndexSet::new(n, &i_members).map_err(err)?;
        let j_set = IndexSet::new(n, &j_members).map_err(err)?;
        let split = bruhat_decompose(&self.inner, &i_set, &j_set).map_err(err)?;
        Ok(jsonio::to_canonical_string(&jsonio::bruhat_split_to_value(
            &split,
        )))
    }

    /// Conjugate by the scaling matrix of an index set; t is a
    /// monomial element document, direction is 1 or -1.
    fn delta_conjugate(
        &self,
        set_members: Vec<usize>,
        t_json: &str,
        direction: i32,
    ) -> PyResult<Matrix> {
        let set = IndexSet::new(self.inner.n(), &set_members).map_err(err)?;
        let t = jsonio::element_from_value(&parse_json(t_json)?).map_err(err)?;
        let pair = delta(&set, &t).map_err(err)?;
        Ok(Matrix {
            inner: delta_conjugate(&pair, &self.inner, direction).map_err(err)?,
        })
    }

    fn __matmul__(&self, other: &Matrix) -> PyResult<Matrix> {
        Ok(Matrix {
            inner: self.inner.mul(&other.inner).map_err(err)?,
        })
    }

    fn __eq__(&self, other: &Matrix) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "Matrix(n={}, ring={}, symplectic={})",
            self.inner.n(),
            self.inner.ring().label(),
            self.inner.is_symplectic()
        )
    }
}

/// Deterministic pseudo-random generator word as a word document.
#[pyfunction]
#[pyo3(signature = (n=2, length=6, ring="Z", seed=0))]
fn random_word(n: usize, length: usize, ring: &str, seed: u64) -> PyResult<String> {
    let ring = scalar_ring(ring)?;
    let w = symplectic::random_word(n, length, &ring, seed);
    Ok(jsonio::to_canonical_string(&jsonio::word_to_value(&w, &ring)))
}

/// Multiply out a word document into a Matrix.
#[pyfunction]
fn eval_word(word_json: &str) -> PyResult<Matrix> {
    let (w, ring) = jsonio::word_from_value(&parse_json(word_json)?).map_err(err)?;
    let ctx = WordContext::plain(ring);
    Ok(Matrix {
        inner: word_eval(&w, &ctx).map_err(err)?,
    })
}

/// Run verification suites; `lemma=None` runs all of them. Returns the
/// report document.
#[pyfunction]
#[pyo3(signature = (lemma=None, seed=0))]
fn verify(lemma: Option<&str>, seed: u64) -> PyResult<String> {
    let reports = match lemma {
        Some(id) => lab::run_suite(&[id], seed).map_err(err)?,
        None => lab::run_all(seed).map_err(err)?,
    };
    Ok(jsonio::to_canonical_string(&jsonio::report_set_to_value(
        &reports, seed,
    )))
}

#[pyfunction]
fn lemma_ids() -> Vec<String> {
    lab::LEMMA_IDS.iter().map(|s| s.to_string()).collect()
}

/// Describe a monoid document: rank, positivity, generators, cone.
#[pyfunction]
fn monoid_info(monoid_json: &str) -> PyResult<String> {
    let m = jsonio::monoid_from_value(&parse_json(monoid_json)?).map_err(err)?;
    let info = monoid_ops::monoid_info(&m);
    Ok(jsonio::to_canonical_string(&jsonio::monoid_info_to_value(
        &info,
    )))
}

/// Validate a polarized triple document; returns the axiom report.
#[pyfunction]
fn polarized_check(triple_json: &str) -> PyResult<String> {
    let triple = jsonio::polarized_from_value(&parse_json(triple_json)?).map_err(err)?;
    let report = validate_polarized(&triple);
    Ok(jsonio::to_canonical_string(
        &jsonio::polarized_report_to_value(&report),
    ))
}

/// Split a pointed cone document into pyramid, remainder, shared face.
#[pyfunction]
fn pyramid_split(cone_json: &str) -> PyResult<String> {
    let cone = jsonio::cone_from_value(&parse_json(cone_json)?).map_err(err)?;
    let s = split::pyramid_split(&cone).map_err(err)?;
    Ok(jsonio::to_canonical_string(&jsonio::pyramid_split_to_value(
        &s,
    )))
}

#[pymodule]
fn symplex(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Matrix>()?;
    m.add_function(wrap_pyfunction!(random_word, m)?)?;
    m.add_function(wrap_pyfunction!(eval_word, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_ids, m)?)?;
    m.add_function(wrap_pyfunction!(monoid_info, m)?)?;
    m.add_function(wrap_pyfunction!(polarized_check, m)?)?;
    m.add_function(wrap_pyfunction!(pyramid_split, m)?)?;
    Ok(())
}
