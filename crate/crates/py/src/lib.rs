//! Python bindings. Rationals cross the boundary as `fractions.Fraction`
//! on the way out and as anything whose `str()` is `"p/q"` or `"p"` on the
//! way in (ints, `Fraction`, strings).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

use gga_core::contraction::{
    catalog_sets, enumerate_nice, orbit_classify, verify_contraction, ContractionSpec, NiceSet,
};
use gga_core::linalg::{format_scalar, parse_scalar, Matrix, Scalar};
use gga_core::reps::{
    intertwiner_dim as rep_intertwiner_dim, verify_homomorphism, verify_irreducible, RepKind, Representation,
};
use gga_core::{catalog_algebra, AlgebraKind, GGAlgebra, MaskKind};

fn py_err(e: gga_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, x: &Scalar) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((format_scalar(x),))
}

fn fractions<'py>(py: Python<'py>, v: &[Scalar]) -> PyResult<Bound<'py, PyList>> {
    let items = v.iter().map(|x| fraction(py, x)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn matrix<'py>(py: Python<'py>, m: &Matrix) -> PyResult<Bound<'py, PyList>> {
    let rows = m.to_rows().iter().map(|r| fractions(py, r)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, rows)
}

fn scalars(values: &Bound<'_, PyAny>) -> PyResult<Vec<Scalar>> {
    values
        .try_iter()?
        .map(|item| {
            let text = item?.str()?.to_string();
            parse_scalar(&text).map_err(py_err)
        })
        .collect()
}

fn json_value<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// A generalized group algebra `V^σ[G]` over `G = Z2^3`.
#[pyclass(name = "Algebra", module = "pygga", frozen)]
struct PyAlgebra {
    inner: GGAlgebra,
}

#[pymethods]
impl PyAlgebra {
    /// `kind` is `"d4"`, `"b3"` or `"g2"`; `mask` is `"full"` or `"gx"`.
    #[staticmethod]
    #[pyo3(signature = (kind, mask = "full"))]
    fn catalog(kind: &str, mask: &str) -> PyResult<Self> {
        let kind: AlgebraKind = kind.parse().map_err(py_err)?;
        let mask: MaskKind = mask.parse().map_err(py_err)?;
        Ok(PyAlgebra { inner: catalog_algebra(kind, mask) })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        GGAlgebra::from_json(text).map(|inner| PyAlgebra { inner }).map_err(py_err)
    }

    fn to_json(&self) -> PyResult<String> {
        self.inner.to_json().map_err(py_err)
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn coeff_dim(&self) -> usize {
        self.inner.coeff_dim()
    }

    #[getter]
    fn mask(&self) -> Vec<usize> {
        self.inner.mask().indices()
    }

    /// Basis labels `"e{p}g{i}"` in flat-coordinate order.
    fn basis_labels(&self) -> Vec<String> {
        self.inner.basis_labels().iter().map(ToString::to_string).collect()
    }

    /// Bracket of two elements given by flat coordinates.
    fn bracket<'py>(
        &self,
        py: Python<'py>,
        x: &Bound<'py, PyAny>,
        y: &Bound<'py, PyAny>,
    ) -> PyResult<Bound<'py, PyList>> {
        let (x, y) = (scalars(x)?, scalars(y)?);
        let n = self.inner.dim();
        if x.len() != n || y.len() != n {
            return Err(PyValueError::new_err(format!("expected {n} coordinates")));
        }
        fractions(py, &self.inner.structure().bracket(&x, &y))
    }

    fn is_lie(&self) -> bool {
        self.inner.is_lie()
    }

    fn center_dim(&self) -> usize {
        self.inner.center().dim()
    }

    fn derived_series(&self) -> Vec<usize> {
        self.inner.derived_series().iter().map(|s| s.dim()).collect()
    }

    fn lower_central_series(&self) -> Vec<usize> {
        self.inner.lower_central_series().iter().map(|s| s.dim()).collect()
    }

    /// Gram matrix of the Killing form on the flat basis.
    fn killing<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        matrix(py, &self.inner.killing())
    }

    fn killing_radical_dim(&self) -> usize {
        self.inner.killing_radical().dim()
    }

    fn fingerprint<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let text =
            serde_json::to_string(&self.inner.fingerprint()).map_err(|e| PyValueError::new_err(e.to_string()))?;
        json_value(py, &text)
    }

    /// Whether the twist agrees with commutators of skew-symmetric matrices.
    fn oracle_match(&self) -> PyResult<bool> {
        gga_core::oracle::oracle_compare(&self.inner).map(|r| r.is_match()).map_err(py_err)
    }

    /// Contraction by `T<n>`, `eta:<q>`, `mu:<q>` or `beta:<q>,<q>`.
    fn contract(&self, spec: &str) -> PyResult<PyAlgebra> {
        let spec: ContractionSpec = spec.parse().map_err(py_err)?;
        gga_core::contraction::contract(&self.inner, &spec.build()).map(|inner| PyAlgebra { inner }).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra(name={:?}, dim={}, mask={:?})",
            self.inner.name(),
            self.inner.dim(),
            self.inner.mask().indices()
        )
    }
}

/// Number of nice subsets of the 21 index pairs.
#[pyfunction]
fn nice_set_count() -> usize {
    enumerate_nice().len()
}

/// Collineation orbits of nice sets as `(canonical set, orbit size)`.
#[pyfunction]
fn nice_set_orbits() -> Vec<(String, usize)> {
    orbit_classify(&enumerate_nice()).iter().map(|o| (o.canonical.to_string(), o.members.len())).collect()
}

/// `T1 … T24` as lists of pairs.
#[pyfunction]
fn catalog_nice_sets() -> Vec<Vec<(usize, usize)>> {
    catalog_sets().iter().map(|t| t.pairs()).collect()
}

#[pyfunction]
fn is_nice(pairs: Vec<(usize, usize)>) -> PyResult<bool> {
    NiceSet::from_pairs(&pairs).map(NiceSet::is_nice).map_err(py_err)
}

/// Whether a catalog map satisfies the graded contraction conditions.
#[pyfunction]
fn verify_map(spec: &str) -> PyResult<bool> {
    let spec: ContractionSpec = spec.parse().map_err(py_err)?;
    Ok(verify_contraction(&spec.build()).is_ok())
}

/// Homomorphism and irreducibility of `rho1`, `rho2`, `rho3`, `b3` or `g2`.
#[pyfunction]
fn check_representation(which: &str) -> PyResult<(bool, bool, usize)> {
    let kind: RepKind = which.parse().map_err(py_err)?;
    let (rep, alg) = Representation::catalog(kind).map_err(py_err)?;
    let hom = verify_homomorphism(&rep, alg.structure()).map_err(py_err)?.is_empty();
    Ok((hom, verify_irreducible(&rep), rep.module_dim))
}

#[pyfunction]
fn intertwiner_dim(a: &str, b: &str) -> PyResult<usize> {
    let rep = |s: &str| -> PyResult<Representation> {
        let kind: RepKind = s.parse().map_err(py_err)?;
        Representation::catalog(kind).map(|(r, _)| r).map_err(py_err)
    };
    rep_intertwiner_dim(&rep(a)?, &rep(b)?).map_err(py_err)
}

/// Dimension of the subalgebra of `d4` on `G^×` fixed by triality.
#[pyfunction]
fn triality_fixed_dim() -> PyResult<usize> {
    let d4 = catalog_algebra(AlgebraKind::D4, MaskKind::NonNeutral);
    let theta = gga_core::reps::degree_wise_matrix(&d4, &gga_core::reps::triality_matrix()).map_err(py_err)?;
    gga_core::reps::fixed_subalgebra(&d4, &theta).map(|s| s.dim()).map_err(py_err)
}

/// Largest deviation in the floating-point `gl_n` commutator check.
#[pyfunction]
fn gln_deviation(n: usize) -> PyResult<f64> {
    gga_core::scalar_twist::gln_check(n).map(|r| r.max_deviation).map_err(py_err)
}

#[pymodule]
fn pygga(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(nice_set_count, m)?)?;
    m.add_function(wrap_pyfunction!(nice_set_orbits, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_nice_sets, m)?)?;
    m.add_function(wrap_pyfunction!(is_nice, m)?)?;
    m.add_function(wrap_pyfunction!(verify_map, m)?)?;
    m.add_function(wrap_pyfunction!(check_representation, m)?)?;
    m.add_function(wrap_pyfunction!(intertwiner_dim, m)?)?;
    m.add_function(wrap_pyfunction!(triality_fixed_dim, m)?)?;
    m.add_function(wrap_pyfunction!(gln_deviation, m)?)?;
    Ok(())
}
