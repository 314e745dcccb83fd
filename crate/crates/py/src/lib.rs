//! Python bindings: groups, group determinants and their
//! factorizations, quaternionic Study determinants, and the seeded
//! verification suites.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use studydet::error::Error;
use studydet::groupdet::{
    abelian_characters, dedekind_factorize, extension_check, frobenius_verify,
    group_determinant, theta_relative,
};
use studydet::rings::{Ring, Value};
use studydet::sdet::{study_det_is_real, study_invertibility};
use studydet::tga::FiniteGroupTable;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn render_factors(report: &studydet::groupdet::FactorizationReport) -> Vec<String> {
    report
        .factors
        .iter()
        .map(|(f, mult)| {
            let body = match f {
                Value::Poly(p) => p.to_string(),
                other => other.to_string(),
            };
            if *mult == 1 {
                body
            } else {
                format!("({body})^{mult}")
            }
        })
        .collect()
}

/// A finite group given by its Cayley table.
#[pyclass]
struct Group {
    inner: FiniteGroupTable,
}

#[pymethods]
impl Group {
    /// Parse and validate a group from the JSON file format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Group> {
        let file = studydet::io::GroupFile::from_json_str(text).map_err(py_err)?;
        let (group, _) = file.into_group().map_err(py_err)?;
        Ok(Group { inner: group })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.inner.element_names().to_vec()
    }

    #[getter]
    fn is_abelian(&self) -> bool {
        self.inner.is_abelian()
    }

    /// Names of the subgroups listed in the file.
    fn subgroups(&self) -> Vec<String> {
        self.inner.subgroups().keys().cloned().collect()
    }

    /// Theta(G) in canonical polynomial text form.
    fn determinant(&self) -> PyResult<String> {
        Ok(group_determinant(&self.inner).map_err(py_err)?.to_string())
    }

    /// Dedekind factorization: (linear factors, product check).
    fn dedekind(&self) -> PyResult<(Vec<String>, bool)> {
        let report = dedekind_factorize(&self.inner).map_err(py_err)?;
        Ok((render_factors(&report), report.product_ok))
    }

    /// The relative determinant Theta(G:H) for a named subgroup.
    fn theta_relative(&self, subgroup: &str) -> PyResult<String> {
        let sub = self.subgroup_indices(subgroup)?;
        Ok(theta_relative(&self.inner, &sub).map_err(py_err)?.to_string())
    }

    /// Extension-of-Dedekind factorization through a named abelian
    /// subgroup: (factors, product check).
    fn extension(&self, subgroup: &str) -> PyResult<(Vec<String>, bool)> {
        let sub = self.subgroup_indices(subgroup)?;
        let report = extension_check(&self.inner, &sub).map_err(py_err)?;
        Ok((render_factors(&report), report.product_ok))
    }

    /// Frobenius factorization with representations from the irreps JSON
    /// format: (factors, degrees, product check).
    fn frobenius(&self, irreps_json: &str) -> PyResult<(Vec<String>, Vec<usize>, bool)> {
        let reps =
            studydet::io::irreps_from_json_str(irreps_json, &self.inner).map_err(py_err)?;
        let report = frobenius_verify(&self.inner, &reps).map_err(py_err)?;
        Ok((
            render_factors(&report),
            report.degrees.clone(),
            report.product_ok,
        ))
    }

    /// Character table of an abelian group: rows of cyclotomic values in
    /// canonical text form.
    fn characters(&self) -> PyResult<Vec<Vec<String>>> {
        let table = abelian_characters(&self.inner).map_err(py_err)?;
        Ok(table
            .chars
            .iter()
            .map(|chi| chi.iter().map(|v| v.to_string()).collect())
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("Group(name={:?}, order={})", self.inner.name(), self.inner.order())
    }
}

impl Group {
    fn subgroup_indices(&self, name: &str) -> PyResult<Vec<usize>> {
        self.inner
            .subgroup(name)
            .map(|s| s.to_vec())
            .ok_or_else(|| PyValueError::new_err(format!("no subgroup named {name:?}")))
    }
}

/// Study determinant of a quaternionic matrix given as rows of
/// [w, x, y, z] rational strings: returns (sdet, invertible, real).
#[pyfunction]
fn study_determinant(entries: Vec<Vec<[String; 4]>>) -> PyResult<(String, bool, bool)> {
    let r = entries.len();
    let file = studydet::io::QuaternionMatrixFile { r, entries };
    let m = file.into_matrix().map_err(py_err)?;
    let basis = studydet::fixtures::quaternion_tower(Ring::Rational).map_err(py_err)?;
    let (sdet_value, invertible) = study_invertibility(&basis, &m).map_err(py_err)?;
    let real = study_det_is_real(&sdet_value);
    let rendered = match &sdet_value {
        Value::Cyc(c) => match c.as_rational() {
            Some(r) => r.to_string(),
            None => c.to_string(),
        },
        other => other.to_string(),
    };
    Ok((rendered, invertible, real))
}

/// Run a verification suite; returns (property, pass, total, ok) rows.
#[pyfunction]
#[pyo3(signature = (suite, seed = 0, trials = 100))]
fn verify_suite(suite: &str, seed: u64, trials: usize) -> PyResult<Vec<(String, usize, usize, bool)>> {
    let results = studydet::suites::run_suite(suite, seed, trials).map_err(py_err)?;
    Ok(results
        .into_iter()
        .map(|r| {
            let ok = r.passed();
            (r.name, r.pass, r.total, ok)
        })
        .collect())
}

/// Names of the available verification suites.
#[pyfunction]
fn suite_names() -> Vec<String> {
    studydet::suites::suite_names()
        .iter()
        .map(|s| s.to_string())
        .collect()
}

#[pymodule]
fn studydet_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_function(wrap_pyfunction!(study_determinant, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    m.add_function(wrap_pyfunction!(suite_names, m)?)?;
    Ok(())
}
