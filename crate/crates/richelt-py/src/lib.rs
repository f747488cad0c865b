//! Python bindings for the richelt core: classification, construction and
//! verification of normal-form Richardson elements, plus the exceptional
//! tables and the simple-support search.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use richelt::chevalley::ChevalleyAlgebra;
use richelt::parabolic::BlockParabolic;
use richelt::recipe::{build_xr, is_star_form};
use richelt::roots::{LieFamily, LieType, RootSystem};
use richelt::tables::{load_table, search_simple_support as core_search, verify_row};
use richelt::verify::{
    bracket_image_dim, centralizer_dim_direct, centralizer_dim_formula, generic_centralizer_dim,
    is_richardson, jordan_data,
};
use serde_json::Value;

fn err(e: richelt::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Recursively convert a serde_json value into native Python objects.
fn json_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else {
                n.as_f64()
                    .expect("JSON number is i64 or f64")
                    .into_pyobject(py)?
                    .into_any()
            }
        }
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(a) => {
            let list = PyList::empty(py);
            for item in a {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(o) => {
            let dict = PyDict::new(py);
            for (k, item) in o {
                dict.set_item(k, json_to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

fn serialize_to_py<'py, T: serde::Serialize>(py: Python<'py>, t: &T) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(t).map_err(|e| PyValueError::new_err(e.to_string()))?;
    json_to_py(py, &v)
}

fn parse_case(case: &str) -> PyResult<(LieType, Vec<u8>)> {
    let (t, u) = case
        .split_once(':')
        .ok_or_else(|| PyValueError::new_err(format!("expected TYPE:TUPLE, got {case:?}")))?;
    let t = LieType::parse(t).map_err(err)?;
    let tuple: Vec<u8> = u
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(PyValueError::new_err(format!("tuple digit {other:?}"))),
        })
        .collect::<PyResult<_>>()?;
    if tuple.len() != t.rank {
        return Err(PyValueError::new_err(format!(
            "{t} needs a tuple of length {}",
            t.rank
        )));
    }
    Ok((t, tuple))
}

/// A parabolic subalgebra of a classical simple Lie algebra, given by the
/// block lengths of its standard Levi factor.
#[pyclass(frozen)]
struct Parabolic {
    inner: BlockParabolic,
}

#[pymethods]
impl Parabolic {
    #[new]
    #[pyo3(signature = (lie_type, blocks=None, tuple=None))]
    fn new(lie_type: &str, blocks: Option<Vec<usize>>, tuple: Option<Vec<u8>>) -> PyResult<Self> {
        let inner = match (blocks, tuple) {
            (Some(blocks), None) => {
                let t = if lie_type.len() == 1 {
                    let family = LieFamily::parse(lie_type).map_err(err)?;
                    let n: usize = blocks.iter().sum();
                    let rank = match family {
                        LieFamily::A => n - 1,
                        LieFamily::B => (n - 1) / 2,
                        LieFamily::C | LieFamily::D => n / 2,
                        _ => {
                            return Err(PyValueError::new_err(
                                "exceptional types take tuple=, not blocks=",
                            ))
                        }
                    };
                    LieType::new(family, rank).map_err(err)?
                } else {
                    LieType::parse(lie_type).map_err(err)?
                };
                BlockParabolic::new(t, blocks).map_err(err)?
            }
            (None, Some(tuple)) => {
                let t = if lie_type.len() == 1 {
                    LieType::new(LieFamily::parse(lie_type).map_err(err)?, tuple.len())
                        .map_err(err)?
                } else {
                    LieType::parse(lie_type).map_err(err)?
                };
                BlockParabolic::from_tuple(t, &tuple).map_err(err)?
            }
            _ => {
                return Err(PyValueError::new_err(
                    "give exactly one of blocks= or tuple=",
                ))
            }
        };
        Ok(Parabolic { inner })
    }

    #[getter]
    fn lie_type(&self) -> String {
        self.inner.lie_type().to_string()
    }

    #[getter]
    fn blocks(&self) -> Vec<usize> {
        self.inner.blocks.clone()
    }

    fn tuple(&self) -> PyResult<Vec<u32>> {
        // Vec<u8> would surface as Python bytes; widen to get a list
        Ok(self.inner.tuple().map_err(err)?.iter().map(|&u| u as u32).collect())
    }

    fn is_nice(&self) -> bool {
        self.inner.is_nice()
    }

    fn levi_dim(&self) -> usize {
        self.inner.levi_dim()
    }

    fn nilradical_dim(&self) -> usize {
        self.inner.nilradical_dim()
    }

    /// Centralizer dimension of a generic g_1 element (seeded oracle).
    #[pyo3(signature = (seeds=vec![1, 2, 3]))]
    fn generic_centralizer_dim(&self, seeds: Vec<u64>) -> PyResult<usize> {
        generic_centralizer_dim(&self.inner, &seeds).map_err(err)
    }

    /// Build the normal-form element X_R and return its report as a dict.
    fn construct<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let x = build_xr(&self.inner).map_err(err)?;
        serialize_to_py(py, &x.report(true))
    }

    /// Build X_R and verify it exactly; returns Jordan data, centralizer
    /// dimensions and the Richardson verdict.
    fn verify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let p = &self.inner;
        let x = build_xr(p).map_err(err)?;
        let m = x.matrix();
        let jd = jordan_data(&m).map_err(err)?;
        let dict = PyDict::new(py);
        dict.set_item("jordan", serialize_to_py(py, &jd)?)?;
        dict.set_item(
            "centralizer_direct",
            centralizer_dim_direct(&p.model, &m).map_err(err)?,
        )?;
        dict.set_item(
            "centralizer_formula",
            centralizer_dim_formula(p.lie_type().family, &jd.partition).map_err(err)?,
        )?;
        dict.set_item("levi_dim", p.levi_dim())?;
        dict.set_item("bracket_image_dim", bracket_image_dim(p, &m).map_err(err)?)?;
        dict.set_item("nilradical_dim", p.nilradical_dim())?;
        dict.set_item("richardson", is_richardson(p, &m).map_err(err)?)?;
        Ok(dict.into_any())
    }

    /// Root-system structure of the support of X_R.
    fn support<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let p = &self.inner;
        let x = build_xr(p).map_err(err)?;
        let rs = RootSystem::build(p.lie_type());
        let ss = rs.support_set(x.support());
        let dict = PyDict::new(py);
        dict.set_item(
            "support",
            x.support().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        )?;
        dict.set_item("simple_system", ss.is_simple_system())?;
        dict.set_item(
            "factors",
            ss.factor_decomposition()
                .iter()
                .map(|c| c.lie_type.map_or_else(|| "?".into(), |t| t.to_string()))
                .collect::<Vec<_>>(),
        )?;
        let star = match p.lie_type().family {
            LieFamily::B | LieFamily::D => Some(is_star_form(p).map_err(err)?),
            _ => None,
        };
        dict.set_item("star_form", star)?;
        dict.set_item(
            "subtracting_pair",
            ss.subtracting_pair()
                .map(|(a, b)| vec![a.to_string(), b.to_string()]),
        )?;
        Ok(dict.into_any())
    }

    fn __repr__(&self) -> String {
        format!(
            "Parabolic({}, blocks={:?})",
            self.inner.lie_type(),
            self.inner.blocks
        )
    }
}

/// All nice parabolics of the given type, in deterministic order.
#[pyfunction]
fn enumerate_nice(lie_type: &str) -> PyResult<Vec<Parabolic>> {
    let t = LieType::parse(lie_type).map_err(err)?;
    Ok(richelt::parabolic::enumerate_nice(t)
        .map_err(err)?
        .into_iter()
        .map(|inner| Parabolic { inner })
        .collect())
}

/// Verify one exceptional-table row, e.g. "F4:0001".
#[pyfunction]
fn verify_exceptional<'py>(py: Python<'py>, case: &str) -> PyResult<Bound<'py, PyAny>> {
    let (t, tuple) = parse_case(case)?;
    let table = load_table().map_err(err)?;
    let row = table
        .iter()
        .find(|r| r.algebra == t.to_string() && r.tuple == tuple)
        .ok_or_else(|| PyValueError::new_err(format!("no table row for {case}")))?;
    if row.expects_none {
        let dict = PyDict::new(py);
        dict.set_item("expects_none", true)?;
        return Ok(dict.into_any());
    }
    let alg = ChevalleyAlgebra::build(t).map_err(err)?;
    serialize_to_py(py, &verify_row(&alg, row).map_err(err)?)
}

/// Exhaustive bounded search for a simple-support Richardson element in
/// g_1, e.g. search_simple_support("G2:10", 1000000).
#[pyfunction]
#[pyo3(signature = (case, cutoff=1_000_000))]
fn search_simple_support<'py>(py: Python<'py>, case: &str, cutoff: u64) -> PyResult<Bound<'py, PyAny>> {
    let (t, tuple) = parse_case(case)?;
    let alg = ChevalleyAlgebra::build(t).map_err(err)?;
    serialize_to_py(py, &core_search(&alg, &tuple, cutoff).map_err(err)?)
}

#[pymodule]
fn richelt_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Parabolic>()?;
    m.add_function(wrap_pyfunction!(enumerate_nice, m)?)?;
    m.add_function(wrap_pyfunction!(verify_exceptional, m)?)?;
    m.add_function(wrap_pyfunction!(search_simple_support, m)?)?;
    Ok(())
}
