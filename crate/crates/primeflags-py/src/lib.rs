//! Python bindings for `primeflags`.

use num_bigint::{BigInt, BigUint};
use pf::compositions::Composition;
use pf::quantum;
use pf::sequences::{self, SequenceKind};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(primeflags, PrimeflagsError, PyValueError);
create_exception!(primeflags, SizeGuardError, PrimeflagsError);

fn to_py(e: pf::Error) -> PyErr {
    match e {
        pf::Error::SizeGuard(_) => SizeGuardError::new_err(e.to_string()),
        _ => PrimeflagsError::new_err(e.to_string()),
    }
}

fn kind(name: &str) -> PyResult<SequenceKind> {
    name.parse().map_err(to_py)
}

/// A composition λ = (λ_1, …, λ_N) indexing a partial flag variety.
#[pyclass(name = "Flag", module = "primeflags", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Flag {
    inner: Composition,
}

#[pymethods]
impl Flag {
    #[new]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        Ok(Flag { inner: Composition::new(parts).map_err(to_py)? })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Flag { inner: text.parse().map_err(to_py)? })
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.inner.parts().to_vec()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Flag({:?})", self.inner.parts())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn is_prime_type(&self) -> bool {
        pf::compositions::is_prime_type(&self.inner)
    }

    /// Weight basis as strings, in matrix order.
    fn weight_basis(&self) -> PyResult<Vec<String>> {
        Ok(quantum::weight_basis(&self.inner).map_err(to_py)?.iter().map(ToString::to_string).collect())
    }

    /// Characteristic polynomial of quantum c1 in `zeta`, `q1..`.
    fn char_poly(&self, py: Python<'_>) -> PyResult<String> {
        let lam = self.inner.clone();
        py.detach(move || quantum::quantum_char_poly(&lam)).map(|p| p.to_string()).map_err(to_py)
    }

    /// Integer coefficients (constant term first) at integer quantum parameters.
    fn char_poly_at(&self, py: Python<'_>, q: Vec<BigInt>) -> PyResult<Vec<BigInt>> {
        let lam = self.inner.clone();
        py.detach(move || quantum::quantum_char_poly_at(&lam, &q)).map(|p| p.coeffs().to_vec()).map_err(to_py)
    }

    /// The i-th semiclassical characteristic polynomial (1-based pair index).
    fn semiclassical(&self, i: usize) -> PyResult<String> {
        quantum::semiclassical_char_poly(&self.inner, i).map(|p| p.to_string()).map_err(to_py)
    }

    /// Returns `(arithmetic, spectral)`; spectral is None when skipped.
    fn classify(&self, i: usize) -> PyResult<(String, Option<String>)> {
        let c = quantum::classify_semiclassical(&self.inner, i).map_err(to_py)?;
        Ok((c.arithmetic.to_string(), c.spectral.map(|s| s.to_string())))
    }

    fn is_simple_at_one(&self, py: Python<'_>) -> PyResult<bool> {
        let lam = self.inner.clone();
        py.detach(move || quantum::simplicity_at_one(&lam)).map_err(to_py)
    }

    /// Companion matrix entries as strings, row-major.
    fn companion(&self) -> Vec<Vec<String>> {
        let m = quantum::companion_matrix_a(&self.inner).matrix;
        (0..m.dim()).map(|r| (0..m.dim()).map(|c| m.get(r, c).to_string()).collect()).collect()
    }

    /// Dynamical matrix X_i entries as strings, row-major.
    fn dynamical_matrix(&self, i: usize) -> PyResult<Vec<Vec<String>>> {
        let m = quantum::dynamical_matrix(&self.inner, i).map_err(to_py)?.matrix;
        Ok((0..m.dim()).map(|r| (0..m.dim()).map(|c| m.get(r, c).to_string()).collect()).collect())
    }
}

fn uint(x: BigUint) -> BigInt {
    x.into()
}

#[pyfunction]
fn lcyr(n: usize, parts: usize) -> BigInt {
    uint(sequences::lcyr(n, parts))
}

#[pyfunction]
fn tlcyr(n: usize, parts: usize) -> BigInt {
    uint(sequences::tlcyr(n, parts))
}

#[pyfunction]
fn ell(n: usize, parts: usize) -> BigInt {
    uint(sequences::ell(n, parts))
}

/// CSV table of `kind` for n ≤ n_max.
#[pyfunction]
fn sequence_table(kind_name: &str, n_max: usize) -> PyResult<String> {
    Ok(sequences::SequenceTable::compute(kind(kind_name)?, n_max).to_csv())
}

#[pyfunction]
fn ogf(kind_name: &str, parts: usize, degree: usize) -> PyResult<Vec<BigInt>> {
    let t = sequences::ogf_truncation(kind(kind_name)?, parts, degree).map_err(to_py)?;
    Ok(t.coefficients.into_iter().map(uint).collect())
}

#[pyfunction]
fn asymptotic_ratio(parts: usize, x: u64) -> PyResult<f64> {
    sequences::asymptotic_ratio(parts, x).map_err(to_py)
}

/// Returns `(holds, first_failure)`.
#[pyfunction]
fn dirichlet_check(bound: u64) -> (bool, Option<u64>) {
    let r = sequences::dirichlet_coeff_identity_check(bound);
    (r.holds, r.first_failure)
}

/// Returns `(polynomial, threshold)` for the k-th diagonal.
#[pyfunction]
fn diagonal_polynomial(kind_name: &str, k: usize) -> PyResult<(String, i64)> {
    let e = pf::diagonals::diagonal_polynomial(kind(kind_name)?, k).map_err(to_py)?;
    Ok((e.polynomial.display_in("N"), e.threshold))
}

/// A prime-type composition of n into `parts` parts, or None.
#[pyfunction]
fn witness(n: usize, parts: usize) -> Option<(Flag, String)> {
    pf::witnesses::witness(n, parts).map(|w| (Flag { inner: w.lambda }, w.source.name().to_string()))
}

/// Returns `(holds, omega)`.
#[pyfunction]
fn goldbach_report(py: Python<'_>, n_max: usize) -> (bool, Vec<usize>) {
    let r = py.detach(move || pf::witnesses::goldbach_report(n_max));
    (r.holds(), r.omega)
}

/// Returns the probe as a full-precision decimal string.
#[pyfunction]
#[pyo3(signature = (n, m, divisions = 10, precision_bits = None))]
fn fabry_lindelof(py: Python<'_>, n: usize, m: u64, divisions: u64, precision_bits: Option<usize>) -> PyResult<String> {
    let bits = precision_bits.unwrap_or(n + 128);
    py.detach(move || pf::boundary::fabry_lindelof(n, m, divisions, bits)).map(|b| b.to_decimal()).map_err(to_py)
}

#[pyfunction]
fn eulerian_polynomial(k: usize) -> Vec<BigInt> {
    pf::arith::eulerian_polynomial(k).coefficients
}

#[pymodule]
#[pyo3(name = "primeflags")]
pub fn primeflags_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("PrimeflagsError", m.py().get_type::<PrimeflagsError>())?;
    m.add("SizeGuardError", m.py().get_type::<SizeGuardError>())?;
    m.add_class::<Flag>()?;
    m.add_function(wrap_pyfunction!(lcyr, m)?)?;
    m.add_function(wrap_pyfunction!(tlcyr, m)?)?;
    m.add_function(wrap_pyfunction!(ell, m)?)?;
    m.add_function(wrap_pyfunction!(sequence_table, m)?)?;
    m.add_function(wrap_pyfunction!(ogf, m)?)?;
    m.add_function(wrap_pyfunction!(asymptotic_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(dirichlet_check, m)?)?;
    m.add_function(wrap_pyfunction!(diagonal_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(goldbach_report, m)?)?;
    m.add_function(wrap_pyfunction!(fabry_lindelof, m)?)?;
    m.add_function(wrap_pyfunction!(eulerian_polynomial, m)?)?;
    Ok(())
}
