//! Python bindings. Words cross the boundary as `bytes`; "exceeds k" is `None`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyBytes;

use aperiod::recovery::{self, RecoveryParams};
use aperiod::{corpus, kangaroo, naive, wraparound};

fn value_err(e: aperiod::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_epsilon(epsilon: &str) -> PyResult<RecoveryParams> {
    epsilon.parse().map_err(value_err)
}

#[pyclass(name = "PeriodReport", frozen, from_py_object)]
#[derive(Clone)]
struct PyPeriodReport {
    inner: recovery::PeriodReport,
}

#[pymethods]
impl PyPeriodReport {
    #[getter]
    fn word<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
        PyBytes::new(py, &self.inner.word)
    }

    #[getter]
    fn p(&self) -> usize {
        self.inner.p
    }

    #[getter]
    fn distance(&self) -> usize {
        self.inner.distance
    }

    #[getter]
    fn tau(&self) -> u64 {
        self.inner.tau
    }

    #[getter]
    fn provenance(&self) -> (usize, usize) {
        (self.inner.block, self.inner.offset)
    }

    fn __repr__(&self) -> String {
        format!(
            "PeriodReport(word={:?}, p={}, distance={}, tau={})",
            recovery::word_to_string(&self.inner.word),
            self.inner.p,
            self.inner.distance,
            self.inner.tau
        )
    }
}

/// Index over `s # p_word^r` answering lcp queries in constant time.
#[pyclass(name = "LcpIndex", frozen)]
struct PyLcpIndex {
    inner: aperiod::LcpIndex,
}

#[pymethods]
impl PyLcpIndex {
    #[new]
    fn new(s: &[u8], p_word: &[u8]) -> PyResult<Self> {
        Ok(Self {
            inner: aperiod::LcpIndex::build(s, p_word).map_err(value_err)?,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.text().len()
    }

    fn lcp_suffixes(&self, a: usize, b: usize) -> PyResult<usize> {
        self.inner.lcp_suffixes(a, b).map_err(value_err)
    }

    fn lcp_text_vs_periodic(&self, i: usize, j: usize) -> PyResult<usize> {
        self.inner.lcp_text_vs_periodic(i, j).map_err(value_err)
    }
}

/// All approximate word-periods of `s`, sorted by length then word.
#[pyfunction]
#[pyo3(signature = (s, epsilon = "1/20", jobs = 1))]
fn recover(py: Python<'_>, s: &[u8], epsilon: &str, jobs: usize) -> PyResult<Vec<PyPeriodReport>> {
    let params = parse_epsilon(epsilon)?;
    let found = py.detach(|| recovery::recover_with_jobs(s, params, jobs));
    Ok(found.into_iter().map(|inner| PyPeriodReport { inner }).collect())
}

#[pyfunction]
#[pyo3(signature = (n, p, epsilon = "1/20"))]
fn tau(n: usize, p: usize, epsilon: &str) -> PyResult<u64> {
    Ok(recovery::tau(n, p, parse_epsilon(epsilon)?))
}

#[pyfunction]
fn primitive(word: &[u8]) -> PyResult<bool> {
    recovery::primitive(word).map_err(value_err)
}

#[pyfunction]
fn canonical_rotation(word: &[u8]) -> usize {
    recovery::canonical_rotation(word)
}

#[pyfunction]
#[pyo3(signature = (s, p, epsilon = "1/20"))]
fn candidate_rotation_classes<'py>(
    py: Python<'py>,
    s: &[u8],
    p: usize,
    epsilon: &str,
) -> PyResult<Vec<Bound<'py, PyBytes>>> {
    let classes = recovery::candidate_rotation_classes(s, p, parse_epsilon(epsilon)?).map_err(value_err)?;
    Ok(classes.iter().map(|c| PyBytes::new(py, &c.canonical)).collect())
}

/// Last row of the wrap-around table, `None` where the value exceeds `k`.
#[pyfunction]
fn last_row_thresholded(s: &[u8], p_word: &[u8], k: usize) -> PyResult<Vec<Option<usize>>> {
    Ok(kangaroo::last_row_thresholded(s, p_word, k).map_err(value_err)?.per_column)
}

/// Distance to each rotation's infinite power, `None` where it exceeds `k`.
#[pyfunction]
fn rotation_distances(s: &[u8], p_word: &[u8], k: usize) -> PyResult<Vec<Option<usize>>> {
    Ok(kangaroo::rotation_distances(s, p_word, k).map_err(value_err)?.per_rotation)
}

/// The whole wrap-around table as a list of rows.
#[pyfunction]
fn full_table(s: &[u8], p_word: &[u8]) -> PyResult<Vec<Vec<u32>>> {
    let t = wraparound::full_table(s, p_word).map_err(value_err)?;
    Ok((0..t.rows()).map(|i| t.row(i).to_vec()).collect())
}

#[pyfunction]
fn edit_distance(a: &[u8], b: &[u8]) -> usize {
    naive::edit_distance(a, b)
}

#[pyfunction]
fn ed_to_prefix(s: &[u8], u: &[u8]) -> PyResult<usize> {
    naive::ed_to_prefix(s, u).map_err(value_err)
}

/// Exhaustive reference for `recover`: list of `(word, distance)`.
#[pyfunction]
#[pyo3(signature = (s, epsilon = "1/20"))]
fn brute_apr<'py>(py: Python<'py>, s: &[u8], epsilon: &str) -> PyResult<Vec<(Bound<'py, PyBytes>, usize)>> {
    let found = naive::brute_apr(s, parse_epsilon(epsilon)?);
    Ok(found.iter().map(|(w, d)| (PyBytes::new(py, w), *d)).collect())
}

/// Seeded periodic corpus with `edits` random edits.
#[pyfunction]
#[pyo3(signature = (p, n, edits = 0, sigma = 4, seed = 0))]
fn generate<'py>(
    py: Python<'py>,
    p: usize,
    n: usize,
    edits: usize,
    sigma: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyBytes>> {
    let spec = corpus::GenSpec {
        p,
        n,
        edits,
        alphabet_size: sigma,
        seed,
    };
    let bytes = corpus::generate(&spec).map_err(value_err)?;
    Ok(PyBytes::new(py, &bytes))
}

#[pymodule]
#[pyo3(name = "aperiod")]
fn aperiod_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPeriodReport>()?;
    m.add_class::<PyLcpIndex>()?;
    m.add_function(wrap_pyfunction!(recover, m)?)?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(primitive, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_rotation, m)?)?;
    m.add_function(wrap_pyfunction!(candidate_rotation_classes, m)?)?;
    m.add_function(wrap_pyfunction!(last_row_thresholded, m)?)?;
    m.add_function(wrap_pyfunction!(rotation_distances, m)?)?;
    m.add_function(wrap_pyfunction!(full_table, m)?)?;
    m.add_function(wrap_pyfunction!(edit_distance, m)?)?;
    m.add_function(wrap_pyfunction!(ed_to_prefix, m)?)?;
    m.add_function(wrap_pyfunction!(brute_apr, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    Ok(())
}
