//! Python bindings: the counting functions, first-hit searches, enumeration,
//! and table reproduction, with values crossing the boundary as Python ints.
//!
//! Stickers are passed in their canonical text syntax: plain digit strings
//! for bases up to 10 ("12"), colon-separated digit values above ("1:0:15").

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use archive_label::counting;
use archive_label::numerals::{self, Natural};
use archive_label::search::{self, Searcher};
use archive_label::sequences;
use archive_label::{Base, Sticker};

fn base_of(b: u32) -> PyResult<Base> {
    Base::new(b).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn sticker_of(text: &str, b: u32) -> PyResult<Sticker> {
    Sticker::parse(text, base_of(b)?).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// A digit string in a base; validates digits and the no-leading-zero rule.
#[pyclass(name = "Sticker")]
struct PySticker {
    inner: Sticker,
}

#[pymethods]
impl PySticker {
    #[new]
    #[pyo3(signature = (text, base = 10))]
    fn new(text: &str, base: u32) -> PyResult<Self> {
        Ok(PySticker {
            inner: sticker_of(text, base)?,
        })
    }

    #[getter]
    fn base(&self) -> u32 {
        self.inner.base().get()
    }

    #[getter]
    fn digits(&self) -> Vec<u32> {
        self.inner.digits().to_vec()
    }

    #[getter]
    fn width(&self) -> usize {
        self.inner.width()
    }

    #[getter]
    fn value(&self) -> Natural {
        self.inner.value()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Sticker({:?}, base={})",
            self.inner.to_string(),
            self.inner.base().get()
        )
    }
}

/// Outcome of a search: status "FOUND" / "NOT_EXISTS" / "UNRESOLVED",
/// the value or certificate, and evaluation statistics.
#[pyclass(name = "SearchOutcome")]
struct PyOutcome {
    #[pyo3(get)]
    status: String,
    #[pyo3(get)]
    value: Option<Natural>,
    #[pyo3(get)]
    certificate: Option<Natural>,
    #[pyo3(get)]
    bound_used: Natural,
    #[pyo3(get)]
    evaluations: u64,
    #[pyo3(get)]
    elapsed: f64,
}

impl From<search::SearchOutcome> for PyOutcome {
    fn from(out: search::SearchOutcome) -> Self {
        PyOutcome {
            status: out.status.to_string(),
            value: out.value,
            certificate: out.certificate,
            bound_used: out.bound_used,
            evaluations: out.evaluations,
            elapsed: out.elapsed,
        }
    }
}

#[pymethods]
impl PyOutcome {
    fn __repr__(&self) -> String {
        match &self.value {
            Some(v) => format!("SearchOutcome({}, value={})", self.status, v),
            None => format!("SearchOutcome({})", self.status),
        }
    }
}

/// All solutions of f_d(x) = x up to a bound.
#[pyclass(name = "Enumeration")]
struct PyEnumeration {
    #[pyo3(get)]
    solutions: Vec<Natural>,
    #[pyo3(get)]
    count: usize,
    #[pyo3(get)]
    max: Option<Natural>,
    #[pyo3(get)]
    bound_used: Natural,
    #[pyo3(get)]
    complete: bool,
}

/// f_d(x, b): occurrences of the sticker in the numerals of 1..=x,
/// via the per-place closed form.
#[pyfunction]
#[pyo3(signature = (x, sticker, base = 10))]
fn count(x: Natural, sticker: &str, base: u32) -> PyResult<Natural> {
    Ok(counting::f(&x, &sticker_of(sticker, base)?))
}

/// Same count by writing every numeral out; the verification oracle.
#[pyfunction]
#[pyo3(signature = (x, sticker, base = 10))]
fn count_brute(x: Natural, sticker: &str, base: u32) -> PyResult<Natural> {
    Ok(numerals::f_brute(&x, &sticker_of(sticker, base)?))
}

/// Overlapping occurrences of the sticker inside the numeral of x (x >= 1).
#[pyfunction]
#[pyo3(signature = (x, sticker, base = 10))]
fn occurrences(x: Natural, sticker: &str, base: u32) -> PyResult<Natural> {
    numerals::occurrences_in(&x, &sticker_of(sticker, base)?)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Digits of x in the base, most significant first; 0 has no digits.
#[pyfunction]
fn to_digits(x: Natural, base: u32) -> PyResult<Vec<u32>> {
    Ok(numerals::to_digits(&x, base_of(base)?))
}

/// Rebuild a value from most-significant-first digits.
#[pyfunction]
fn from_digits(digits: Vec<u32>, base: u32) -> PyResult<Natural> {
    numerals::from_digits(&digits, base_of(base)?)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Least x with f_d(x) >= x ("ge"), > x ("gt"), or = x ("eq").
///
/// min_x defaults to 2 for "eq" (the convention that skips x = 1) and 1
/// otherwise; bound defaults to the sticker's solution bound.
#[pyfunction]
#[pyo3(signature = (relation, sticker, base = 10, min_x = None, bound = None))]
fn find(
    relation: &str,
    sticker: &str,
    base: u32,
    min_x: Option<Natural>,
    bound: Option<Natural>,
) -> PyResult<PyOutcome> {
    let d = sticker_of(sticker, base)?;
    let mut s = Searcher::new();
    let out = match relation {
        "ge" => s.find_a_ge(&d, &min_x.unwrap_or_else(|| Natural::from(1u32))),
        "gt" => s.find_a_gt(&d),
        "eq" => {
            let min = min_x.unwrap_or_else(|| Natural::from(2u32));
            let bound = bound.unwrap_or_else(|| search::solution_bound(&d));
            s.find_a_eq(&d, &min, &bound)
                .map_err(|e| PyValueError::new_err(e.to_string()))?
        }
        other => {
            return Err(PyValueError::new_err(format!(
                "relation must be ge, gt, or eq; got {other:?}"
            )))
        }
    };
    Ok(out.into())
}

/// All solutions of f_d(x) = x up to the bound (default: the sticker's
/// solution bound).
#[pyfunction]
#[pyo3(signature = (sticker, base = 10, bound = None))]
fn enumerate_solutions(sticker: &str, base: u32, bound: Option<Natural>) -> PyResult<PyEnumeration> {
    let d = sticker_of(sticker, base)?;
    let bound = bound.unwrap_or_else(|| search::solution_bound(&d));
    let res = search::enumerate_solutions(&d, &bound);
    Ok(PyEnumeration {
        solutions: res.solutions,
        count: res.count,
        max: res.max,
        bound_used: res.bound_used,
        complete: res.complete,
    })
}

/// Decide a_=(0, b): FOUND with the least solution, or NOT_EXISTS with a
/// certificate.
#[pyfunction]
fn zero_status(base: u32) -> PyResult<PyOutcome> {
    Ok(search::classify_zero(base_of(base)?).into())
}

/// Default search bound for the sticker's equality solutions.
#[pyfunction]
#[pyo3(signature = (sticker, base = 10))]
fn solution_bound(sticker: &str, base: u32) -> PyResult<Natural> {
    Ok(search::solution_bound(&sticker_of(sticker, base)?))
}

/// "GE_EQUALS_GT", "EQ_BEFORE_GT", or "NO_EQ" for the sticker.
#[pyfunction]
#[pyo3(signature = (sticker, base = 10))]
fn classify_relation(sticker: &str, base: u32) -> PyResult<String> {
    let class = search::classify_relation(&sticker_of(sticker, base)?)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(match class {
        search::RelationClass::GeEqualsGt => "GE_EQUALS_GT",
        search::RelationClass::EqBeforeGt => "EQ_BEFORE_GT",
        search::RelationClass::NoEq => "NO_EQ",
    }
    .to_string())
}

/// Recompute a named table as rows of cell strings.
#[pyfunction]
#[pyo3(signature = (name, long = false))]
fn table(name: &str, long: bool) -> PyResult<Vec<Vec<String>>> {
    let table_name: sequences::TableName = name
        .parse()
        .map_err(|e: archive_label::Error| PyValueError::new_err(e.to_string()))?;
    Ok(sequences::table(table_name, long).rows)
}

/// Generate a registered OEIS sequence as (index, value) pairs.
#[pyfunction]
#[pyo3(signature = (seq_id, from_index = None, count = 10))]
fn sequence(seq_id: &str, from_index: Option<u64>, count: u64) -> PyResult<Vec<(u64, Natural)>> {
    sequences::generate(seq_id, from_index, count)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Bases 2..=b_max in which a_=(0, b) has no solution.
#[pyfunction]
fn bases_without_zero_solution(b_max: u32) -> PyResult<Vec<u32>> {
    Ok(sequences::bases_without_zero_solution(b_max))
}

#[pymodule]
fn archive_label_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySticker>()?;
    m.add_class::<PyOutcome>()?;
    m.add_class::<PyEnumeration>()?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(count_brute, m)?)?;
    m.add_function(wrap_pyfunction!(occurrences, m)?)?;
    m.add_function(wrap_pyfunction!(to_digits, m)?)?;
    m.add_function(wrap_pyfunction!(from_digits, m)?)?;
    m.add_function(wrap_pyfunction!(find, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_solutions, m)?)?;
    m.add_function(wrap_pyfunction!(zero_status, m)?)?;
    m.add_function(wrap_pyfunction!(solution_bound, m)?)?;
    m.add_function(wrap_pyfunction!(classify_relation, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(sequence, m)?)?;
    m.add_function(wrap_pyfunction!(bases_without_zero_solution, m)?)?;
    Ok(())
}
