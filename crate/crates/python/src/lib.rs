//! Python bindings. Rationals cross the boundary as `fractions.Fraction` on
//! output; inputs may be `int`, `Fraction` or strings such as `"5/3"`.

use std::sync::Arc;

use cosetlab::bilinear::{Level as CoreLevel, ScWeight};
use cosetlab::charflow::{
    cflemma_check, emit_character, eta_power as core_eta_power, fermionize_character, roundtrip_check, validate_seed,
    AfCharacter, SeedDoc,
};
use cosetlab::lattice::{
    build_e_minus_lattice, build_e_plus_lattice, build_l_minus, build_l_plus, build_qsc_dual_lattice,
    discriminant_group as core_disc, enumerate_by_norm as core_enum, kernel_k, IntegralLattice,
};
use cosetlab::linalg::QMatrix;
use cosetlab::ope::{verify_all, verify_fst_homomorphism, verify_hminus_heisenberg, verify_jalpha_heisenberg};
use cosetlab::rational::parse_q;
use cosetlab::rootsys::{RootSystem as CoreRootSystem, Weight};
use cosetlab::Q;
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn err(e: cosetlab::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_q(obj: &Bound<'_, PyAny>) -> PyResult<Q> {
    parse_q(&obj.str()?.to_cow()?).map_err(err)
}

fn to_qs(objs: &Bound<'_, PyAny>) -> PyResult<Vec<Q>> {
    objs.try_iter()?.map(|o| to_q(&o?)).collect()
}

fn frac<'py>(py: Python<'py>, x: &Q) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((x.numer().clone(), x.denom().clone()))
}

fn frac_list<'py>(py: Python<'py>, v: &[Q]) -> PyResult<Bound<'py, PyList>> {
    let items = v.iter().map(|x| frac(py, x)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn frac_matrix<'py>(py: Python<'py>, m: &QMatrix) -> PyResult<Bound<'py, PyList>> {
    let rows = m.to_rows().iter().map(|r| frac_list(py, r)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, rows)
}

fn weight(rs: &CoreRootSystem, v: &Bound<'_, PyAny>) -> PyResult<Weight> {
    let w = to_qs(v)?;
    if w.len() != rs.rank() {
        return Err(PyValueError::new_err(format!("expected {} coordinates, got {}", rs.rank(), w.len())));
    }
    Ok(Weight(w))
}

/// A finite root system with the normalised form (long roots have norm 2).
#[pyclass(frozen)]
struct RootSystem {
    inner: CoreRootSystem,
}

#[pymethods]
impl RootSystem {
    #[new]
    fn new(series: &str, rank: usize) -> PyResult<Self> {
        Ok(RootSystem { inner: CoreRootSystem::build(series, rank).map_err(err)? })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn num_positive(&self) -> usize {
        self.inner.num_positive()
    }

    #[getter]
    fn dual_coxeter(&self) -> i64 {
        self.inner.dual_coxeter()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Positive roots in simple-root coordinates, simple roots first.
    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner.positive_roots().to_vec()
    }

    fn normalized_form<'py>(&self, py: Python<'py>, a: &Bound<'py, PyAny>, b: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        frac(py, &self.inner.normalized_form(&weight(&self.inner, a)?, &weight(&self.inner, b)?))
    }

    fn fundamental_weight<'py>(&self, py: Python<'py>, i: usize) -> PyResult<Bound<'py, PyList>> {
        if i >= self.inner.rank() {
            return Err(PyValueError::new_err("index out of range"));
        }
        frac_list(py, &self.inner.fundamental_weight(i).0)
    }

    /// Whether `Σ_{α>0} (λ,α)α = h∨ λ`.
    fn check_hvee_identity(&self, lam: &Bound<'_, PyAny>) -> PyResult<bool> {
        Ok(self.inner.check_hvee_identity(&weight(&self.inner, lam)?).holds)
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}')", self.inner.cartan_type())
    }
}

/// A root system at level `k`, with the Gram matrices and weight maps.
#[pyclass(frozen)]
struct Level {
    inner: Arc<CoreLevel>,
}

impl Level {
    fn sc(&self, jstar: &Bound<'_, PyAny>) -> PyResult<ScWeight> {
        let v = to_qs(jstar)?;
        if v.len() != self.inner.rs().num_positive() {
            return Err(PyValueError::new_err("expected one J*-value per positive root"));
        }
        Ok(self.inner.sc_from_jstar(v))
    }
}

#[pymethods]
impl Level {
    #[new]
    fn new(series: &str, rank: usize, k: &Bound<'_, PyAny>) -> PyResult<Self> {
        let rs = CoreRootSystem::build(series, rank).map_err(err)?;
        Ok(Level { inner: Arc::new(CoreLevel::new(&rs, to_q(k)?).map_err(err)?) })
    }

    #[getter]
    fn k<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        frac(py, self.inner.k())
    }

    fn root_system(&self) -> RootSystem {
        RootSystem { inner: self.inner.rs().clone() }
    }

    fn g<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        frac_matrix(py, self.inner.g())
    }

    fn g_star<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        frac_matrix(py, self.inner.g_star())
    }

    fn big_g<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        frac_matrix(py, self.inner.big_g())
    }

    fn big_g_star<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        frac_matrix(py, self.inner.big_g_star())
    }

    /// `(c_af, c_sc)`.
    fn central_charges<'py>(&self, py: Python<'py>) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
        let c = self.inner.central_charges();
        Ok((frac(py, &c.c_af)?, frac(py, &c.c_sc)?))
    }

    /// J*-values of `μ_sc` for `μ` in simple-root coordinates.
    fn weight_to_sc<'py>(&self, py: Python<'py>, mu: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyList>> {
        let w = weight(self.inner.rs(), mu)?;
        frac_list(py, self.inner.weight_to_sc(&w).jstar_values())
    }

    fn sc_weight_to_af<'py>(&self, py: Python<'py>, jstar: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyList>> {
        frac_list(py, &self.inner.sc_weight_to_af(&self.sc(jstar)?).0)
    }

    fn conformal_weight<'py>(&self, py: Python<'py>, mu: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        frac(py, &self.inner.conformal_weight_plus(&weight(self.inner.rs(), mu)?))
    }

    /// `{"hypothesis_holds", "verdict", "violations"}` for a weight given by J*-values.
    fn converse_check<'py>(&self, py: Python<'py>, jstar: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyDict>> {
        let r = self.inner.converse_congruence_check(&self.sc(jstar)?);
        let d = PyDict::new(py);
        d.set_item("hypothesis_holds", r.hypothesis_holds)?;
        d.set_item("verdict", r.verdict)?;
        let viol = r.violations.iter().map(|v| Ok((v.root.clone(), frac(py, &v.value)?))).collect::<PyResult<Vec<_>>>()?;
        d.set_item("violations", viol)?;
        Ok(d)
    }

    /// Runs an OPE check (`"jalpha"`, `"hminus"`, `"fst"` or `"all"`); returns
    /// `{"passed", "pairs_checked", "mismatches"}`.
    #[pyo3(signature = (check = "all"))]
    fn verify_ope<'py>(&self, py: Python<'py>, check: &str) -> PyResult<Bound<'py, PyDict>> {
        let r = match check {
            "jalpha" => verify_jalpha_heisenberg(&self.inner),
            "hminus" => verify_hminus_heisenberg(&self.inner),
            "fst" => verify_fst_homomorphism(&self.inner),
            "all" => verify_all(&self.inner),
            other => return Err(PyValueError::new_err(format!("unknown check {other:?}"))),
        }
        .map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("passed", r.passed())?;
        d.set_item("pairs_checked", r.pairs_checked)?;
        let mism: Vec<String> = r.mismatches.iter().map(|m| format!("{} x {} pole {}", m.left, m.right, m.pole)).collect();
        d.set_item("mismatches", mism)?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!("Level('{}', k={})", self.inner.rs().cartan_type(), self.inner.k())
    }
}

/// An affine-side formal character loaded from a seed document.
#[pyclass(frozen)]
struct Character {
    inner: AfCharacter,
}

#[pymethods]
impl Character {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = SeedDoc::from_json(text).map_err(err)?;
        Ok(Character { inner: validate_seed(&doc).map_err(err)? })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&emit_character(&self.inner).to_json_value()).expect("documents serialize")
    }

    #[getter]
    fn num_weights(&self) -> usize {
        self.inner.strings.len()
    }

    /// Fermionized character as a JSON document with `"side": "sc"`.
    #[pyo3(signature = (t, mu = None))]
    fn fermionize(&self, t: &Bound<'_, PyAny>, mu: Option<&Bound<'_, PyAny>>) -> PyResult<String> {
        let mu = self.mu(mu)?;
        let out = fermionize_character(&self.inner, &mu, &to_q(t)?).map_err(err)?;
        Ok(serde_json::to_string(&emit_character(&out).to_json_value()).expect("documents serialize"))
    }

    /// Whether defermionize(fermionize(ch)) reproduces `ch` on the certified range.
    #[pyo3(signature = (t, mu = None))]
    fn roundtrip(&self, t: &Bound<'_, PyAny>, mu: Option<&Bound<'_, PyAny>>) -> PyResult<bool> {
        let mu = self.mu(mu)?;
        Ok(roundtrip_check(&self.inner, &mu, &to_q(t)?).map_err(err)?.holds)
    }

    #[pyo3(signature = (gamma, t, bound = 9, mu = None))]
    fn cflemma(&self, gamma: &Bound<'_, PyAny>, t: &Bound<'_, PyAny>, bound: i64, mu: Option<&Bound<'_, PyAny>>) -> PyResult<bool> {
        let mu = self.mu(mu)?;
        let g = weight(self.inner.level.rs(), gamma)?;
        Ok(cflemma_check(&self.inner, &g, &mu, &to_q(t)?, bound).map_err(err)?.holds)
    }
}

impl Character {
    fn mu(&self, mu: Option<&Bound<'_, PyAny>>) -> PyResult<Weight> {
        match mu {
            Some(m) => weight(self.inner.level.rs(), m),
            None => Ok(self.inner.base.clone()),
        }
    }
}

fn named_lattice(kind: &str, series: &str, rank: usize, k: Option<&Bound<'_, PyAny>>) -> PyResult<IntegralLattice> {
    let rs = CoreRootSystem::build(series, rank).map_err(err)?;
    let level = || -> PyResult<Q> {
        match k {
            Some(k) => to_q(k),
            None => Err(PyValueError::new_err("this lattice needs a level")),
        }
    };
    match kind {
        "l-plus" => Ok(build_l_plus(&rs)),
        "l-minus" => Ok(build_l_minus(&rs)),
        "kernel" => Ok(kernel_k(&rs).lattice),
        "qsc-dual" => build_qsc_dual_lattice(&rs).map_err(err),
        "e-plus" => build_e_plus_lattice(&rs, &level()?).map_err(err),
        "e-minus" => build_e_minus_lattice(&rs, &level()?).map_err(err),
        other => Err(PyValueError::new_err(format!("unknown lattice {other:?}"))),
    }
}

/// Gram matrix of a named lattice.
#[pyfunction]
#[pyo3(signature = (kind, series, rank, k = None))]
fn lattice_gram(kind: &str, series: &str, rank: usize, k: Option<&Bound<'_, PyAny>>) -> PyResult<Vec<Vec<i64>>> {
    Ok(named_lattice(kind, series, rank, k)?.gram().to_vec())
}

/// Elementary divisors of the discriminant group of a named lattice.
#[pyfunction]
#[pyo3(signature = (kind, series, rank, k = None))]
fn discriminant_group(kind: &str, series: &str, rank: usize, k: Option<&Bound<'_, PyAny>>) -> PyResult<Vec<BigInt>> {
    core_disc(&named_lattice(kind, series, rank, k)?).map_err(err)
}

/// All vectors of `|norm| ≤ bound` in the lattice with the given Gram matrix.
#[pyfunction]
fn enumerate_by_norm(gram: Vec<Vec<i64>>, bound: &Bound<'_, PyAny>) -> PyResult<Vec<Vec<i64>>> {
    let labels = (0..gram.len()).map(|i| format!("e{}", i + 1)).collect();
    let l = IntegralLattice::with_standard_cocycle(labels, gram).map_err(err)?;
    Ok(core_enum(&l, &to_q(bound)?).map_err(err)?.into_iter().map(|v| v.0).collect())
}

/// `η(q)^m` up to `q^t`, as a list of `(exponent, coefficient)` pairs.
#[pyfunction]
fn eta_power<'py>(py: Python<'py>, m: i64, t: &Bound<'py, PyAny>) -> PyResult<Vec<(Bound<'py, PyAny>, Bound<'py, PyAny>)>> {
    core_eta_power(m, &to_q(t)?).terms().map(|(e, c)| Ok((frac(py, e)?, frac(py, c)?))).collect()
}

#[pymodule]
fn pycosetlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<RootSystem>()?;
    m.add_class::<Level>()?;
    m.add_class::<Character>()?;
    m.add_function(wrap_pyfunction!(lattice_gram, m)?)?;
    m.add_function(wrap_pyfunction!(discriminant_group, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_by_norm, m)?)?;
    m.add_function(wrap_pyfunction!(eta_power, m)?)?;
    Ok(())
}
