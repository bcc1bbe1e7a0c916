use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use turan_core::count::{self, CompositionSpace};
use turan_core::cyclic;
use turan_core::numerics::{self, QuadratureConfig};
use turan_core::report::{self, OutputFormat, ReportConfig};
use turan_core::verify::{self, VerificationReport};
use turan_core::{Error, SizeCaps};

create_exception!(turan, GuardError, PyException, "An enumeration would exceed its size cap.");

fn to_py(e: Error) -> PyErr {
    match e {
        Error::SizeGuard { .. } => GuardError::new_err(e.to_string()),
        Error::Quadrature { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn space(s: u64, k: u64, h: u64) -> PyResult<CompositionSpace> {
    CompositionSpace::new(s, k, h).map_err(to_py)
}

fn quad(tol: Option<f64>) -> PyResult<QuadratureConfig> {
    match tol {
        Some(t) => QuadratureConfig::new(t, QuadratureConfig::default().max_depth).map_err(to_py),
        None => Ok(QuadratureConfig::default()),
    }
}

fn caps(cap: Option<u64>) -> SizeCaps {
    cap.map(SizeCaps::uniform).unwrap_or_default()
}

/// A subset of Z_n with sorted, distinct residues.
#[pyclass(name = "CyclicSubset", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyCyclicSubset(cyclic::CyclicSubset);

#[pymethods]
impl PyCyclicSubset {
    #[new]
    fn new(n: usize, elements: Vec<usize>) -> PyResult<Self> {
        cyclic::CyclicSubset::new(n, elements).map(Self).map_err(to_py)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn elements(&self) -> Vec<usize> {
        self.0.elements().to_vec()
    }

    /// (gaps, max_gap)
    fn gap_profile(&self) -> PyResult<(Vec<usize>, usize)> {
        let p = cyclic::gap_profile(&self.0).map_err(to_py)?;
        Ok((p.gaps, p.max_gap))
    }

    fn phi(&self, j: usize) -> usize {
        cyclic::phi(j, &self.0)
    }

    fn cover_witness(&self, j: usize) -> PyResult<Self> {
        cyclic::cover_witness(&self.0, j).map(Self).map_err(to_py)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("CyclicSubset(n={}, elements=[{}])", self.0.n(), self.0)
    }
}

#[pyfunction]
fn binomial(a: i64, b: i64) -> BigUint {
    count::binomial(a, b).0
}

#[pyfunction]
fn mu_closed(s: u64, k: u64, h: u64) -> PyResult<BigUint> {
    Ok(count::mu_closed(space(s, k, h)?).0)
}

#[pyfunction]
#[pyo3(signature = (s, k, h, cap=None))]
fn mu_oracle(s: u64, k: u64, h: u64, cap: Option<u64>) -> PyResult<BigUint> {
    let cap = cap.unwrap_or(count::DEFAULT_COMPOSITION_CAP);
    count::mu_oracle(space(s, k, h)?, cap).map(|v| v.0).map_err(to_py)
}

#[pyfunction]
fn lambda_count(s: u64, k: u64, h: u64) -> PyResult<BigUint> {
    Ok(count::lambda_count(space(s, k, h)?).0)
}

#[pyfunction]
#[pyo3(signature = (s, k, h, cap=None))]
fn lambda_oracle(s: u64, k: u64, h: u64, cap: Option<u64>) -> PyResult<BigUint> {
    let cap = cap.unwrap_or(count::DEFAULT_COMPOSITION_CAP);
    count::lambda_oracle(space(s, k, h)?, cap).map(|v| v.0).map_err(to_py)
}

#[pyfunction]
fn weighted_gap_sum(n: u64, k: u64) -> PyResult<BigUint> {
    count::weighted_gap_sum(n, k).map(|v| v.0).map_err(to_py)
}

/// Members of L_j as lists of residues, in lexicographic order.
#[pyfunction]
#[pyo3(signature = (n, k, j, cap=None))]
fn build_family(n: usize, k: usize, j: usize, cap: Option<u64>) -> PyResult<Vec<Vec<usize>>> {
    let fam = cyclic::build_family(n, k, j, &caps(cap)).map_err(to_py)?;
    Ok(fam.members.iter().map(|m| m.elements().to_vec()).collect())
}

#[pyfunction]
#[pyo3(signature = (n, k, r, cap=None))]
fn partition_family(n: usize, k: usize, r: usize, cap: Option<u64>) -> PyResult<Vec<Vec<usize>>> {
    let fam = cyclic::partition_family(n, k, r, &caps(cap)).map_err(to_py)?;
    Ok(fam.members.iter().map(|m| m.elements().to_vec()).collect())
}

/// Dict with `sizes`, `min`, `argmin` and the exact mean as `(num, den)`.
#[pyfunction]
#[pyo3(signature = (n, k, cap=None))]
fn family_size_stats<'py>(py: Python<'py>, n: usize, k: usize, cap: Option<u64>) -> PyResult<Bound<'py, PyDict>> {
    let s = cyclic::family_size_stats(n, k, &caps(cap)).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("sizes", s.sizes.clone())?;
    d.set_item("min", s.min)?;
    d.set_item("argmin", s.argmin)?;
    d.set_item("mean", (*s.mean.numer(), *s.mean.denom()))?;
    Ok(d)
}

fn report_dict<'py>(py: Python<'py>, r: &VerificationReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("mode", r.mode.to_string())?;
    d.set_item("checked", r.checked)?;
    d.set_item("failures", r.failures.iter().map(|f| f.elements().to_vec()).collect::<Vec<_>>())?;
    d.set_item("summary", r.summary_line())?;
    Ok(d)
}

/// Exhaustive coverage check of an arbitrary family of k-subsets.
#[pyfunction]
#[pyo3(signature = (n, k, r, members, cap=None))]
fn is_turan_family<'py>(
    py: Python<'py>,
    n: usize,
    k: usize,
    r: usize,
    members: Vec<Vec<usize>>,
    cap: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let members = members
        .into_iter()
        .map(|m| cyclic::CyclicSubset::new(n, m))
        .collect::<Result<Vec<_>, _>>()
        .map_err(to_py)?;
    let fam = cyclic::TuranFamily {
        n,
        k,
        r,
        provenance: cyclic::Provenance::Partition { parts: vec![n] },
        members,
    };
    let rep = verify::is_turan_family(&fam, &caps(cap)).map_err(to_py)?;
    report_dict(py, &rep)
}

#[pyfunction]
#[pyo3(signature = (n, k, j, cap=None))]
fn witness_verify<'py>(py: Python<'py>, n: usize, k: usize, j: usize, cap: Option<u64>) -> PyResult<Bound<'py, PyDict>> {
    let rep = verify::witness_verify(n, k, j, &caps(cap)).map_err(to_py)?;
    report_dict(py, &rep)
}

/// `(numerator, denominator)` of `(1/n) sum_j |L_j|`.
#[pyfunction]
#[pyo3(signature = (n, k, cap=None))]
fn averaging_bound(n: usize, k: usize, cap: Option<u64>) -> PyResult<(u64, u64)> {
    let r = verify::averaging_bound(n, k, &caps(cap)).map_err(to_py)?;
    Ok((*r.numer(), *r.denom()))
}

#[pyfunction]
#[pyo3(signature = (k, tol=None))]
fn c0(k: u32, tol: Option<f64>) -> PyResult<f64> {
    numerics::c0(k, &quad(tol)?).map_err(to_py)
}

#[pyfunction]
fn c1(k: u32) -> PyResult<f64> {
    numerics::c1(k).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (t, tol=None))]
fn tau_integral(t: f64, tol: Option<f64>) -> PyResult<f64> {
    numerics::tau_integral(t, &quad(tol)?).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (k, tol=None))]
fn tau_closed(k: u32, tol: Option<f64>) -> PyResult<f64> {
    numerics::tau_closed(k, &quad(tol)?).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (t, tol=None))]
fn tau1(t: f64, tol: Option<f64>) -> PyResult<f64> {
    numerics::tau1(t, &quad(tol)?).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (k, tol=None))]
fn theorem1_coefficient(k: u32, tol: Option<f64>) -> PyResult<f64> {
    numerics::theorem1_coefficient(k, &quad(tol)?).map_err(to_py)
}

#[pyfunction]
fn bound_lower(n: u64, k: u64, r: u64) -> PyResult<f64> {
    numerics::bound_lower(n, k, r).map(|b| b.absolute).map_err(to_py)
}

#[pyfunction]
fn bound_partition(n: u64, k: u64, r: u64) -> PyResult<f64> {
    numerics::bound_partition(n, k, r).map(|b| b.bound.absolute).map_err(to_py)
}

#[pyfunction]
fn bound_kim_roush(n: u64, k: u32) -> PyResult<f64> {
    numerics::bound_kim_roush(n, k).map(|b| b.coefficient).map_err(to_py)
}

#[pyfunction]
fn bound_frankl_rodl(n: u64, k: u32) -> PyResult<f64> {
    numerics::bound_frankl_rodl(n, k).map(|b| b.coefficient).map_err(to_py)
}

/// Renders one of the CLI tables (`list1`, `list2`, `list3`, `bounds`,
/// `verify`, `mu`) and returns the text.
#[pyfunction]
#[pyo3(signature = (table, n=32, k_min=2, k_max=10, j=None, format="csv"))]
fn render_table(table: &str, n: usize, k_min: usize, k_max: usize, j: Option<usize>, format: &str) -> PyResult<String> {
    let cfg = ReportConfig {
        n,
        j,
        format: format.parse::<OutputFormat>().map_err(to_py)?,
        ..ReportConfig::default()
    }
    .with_k_range(k_min, k_max);
    let t = match table {
        "list1" => report::cmd_list1(&cfg),
        "list2" => report::cmd_list2(&cfg),
        "list3" => report::cmd_list3(&cfg),
        "bounds" => report::cmd_bounds(&cfg),
        "verify" => report::cmd_verify(&cfg),
        "mu" => report::cmd_mu(&cfg),
        other => return Err(PyValueError::new_err(format!("unknown table {other:?}"))),
    }
    .map_err(to_py)?;
    Ok(t.render(cfg.format))
}

#[pymodule]
fn turan(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("GuardError", m.py().get_type::<GuardError>())?;
    m.add_class::<PyCyclicSubset>()?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(mu_closed, m)?)?;
    m.add_function(wrap_pyfunction!(mu_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_count, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(weighted_gap_sum, m)?)?;
    m.add_function(wrap_pyfunction!(build_family, m)?)?;
    m.add_function(wrap_pyfunction!(partition_family, m)?)?;
    m.add_function(wrap_pyfunction!(family_size_stats, m)?)?;
    m.add_function(wrap_pyfunction!(is_turan_family, m)?)?;
    m.add_function(wrap_pyfunction!(witness_verify, m)?)?;
    m.add_function(wrap_pyfunction!(averaging_bound, m)?)?;
    m.add_function(wrap_pyfunction!(c0, m)?)?;
    m.add_function(wrap_pyfunction!(c1, m)?)?;
    m.add_function(wrap_pyfunction!(tau_integral, m)?)?;
    m.add_function(wrap_pyfunction!(tau_closed, m)?)?;
    m.add_function(wrap_pyfunction!(tau1, m)?)?;
    m.add_function(wrap_pyfunction!(theorem1_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(bound_lower, m)?)?;
    m.add_function(wrap_pyfunction!(bound_partition, m)?)?;
    m.add_function(wrap_pyfunction!(bound_kim_roush, m)?)?;
    m.add_function(wrap_pyfunction!(bound_frankl_rodl, m)?)?;
    m.add_function(wrap_pyfunction!(render_table, m)?)?;
    Ok(())
}
