//! Python bindings: `vkp.Term`, `vkp.Formula` and the checking, reduction
//! and proof-search operations of the core crate.

use std::collections::HashMap;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use vkp_core::normalize::budget_from_env;
use vkp_core::oracle::{find_countermodel, ipc_provable_with, GenConfig, Generator, ProverConfig, Verdict};
use vkp_core::{Calculus, Formula, Normalizer, Strategy, TypingContext};

create_exception!(vkp, VkpError, PyException);
create_exception!(vkp, ParseError, VkpError);
create_exception!(vkp, TypeCheckError, VkpError);

fn vkp_err(e: impl ToString) -> PyErr {
    VkpError::new_err(e.to_string())
}

fn parse_calculus(name: &str) -> PyResult<Calculus> {
    name.parse().map_err(|e: vkp_core::syntax::UnknownCalculus| PyErr::new::<pyo3::exceptions::PyValueError, _>(e.to_string()))
}

fn context(entries: Option<HashMap<String, String>>) -> PyResult<TypingContext> {
    entries
        .unwrap_or_default()
        .into_iter()
        .map(|(x, f)| Ok((x, vkp_core::parse_formula(&f).map_err(|e| ParseError::new_err(e.to_string()))?)))
        .collect()
}

/// A formula. Constructed from its concrete syntax, e.g. `Formula("~A -> B")`.
#[pyclass(name = "Formula", module = "vkp", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyFormula(Formula);

#[pymethods]
impl PyFormula {
    #[new]
    fn new(source: &str) -> PyResult<Self> {
        vkp_core::parse_formula(source).map(Self).map_err(|e| ParseError::new_err(e.to_string()))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Formula({:?})", self.0.to_string())
    }

    fn atoms(&self) -> Vec<String> {
        self.0.atoms().into_iter().collect()
    }
}

/// A proof term. Equality is alpha-equivalence.
#[pyclass(name = "Term", module = "vkp", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyTerm(vkp_core::Term);

#[pymethods]
impl PyTerm {
    #[new]
    fn new(source: &str) -> PyResult<Self> {
        vkp_core::parse_term(source).map(Self).map_err(|e| ParseError::new_err(e.to_string()))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Term({:?})", self.0.to_string())
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn depth(&self) -> usize {
        self.0.depth()
    }

    fn free_vars(&self) -> Vec<String> {
        self.0.free_vars().into_iter().collect()
    }

    fn is_closed(&self) -> bool {
        self.0.is_closed()
    }

    fn is_normal(&self) -> bool {
        vkp_core::reduction::is_normal(&self.0)
    }

    fn contains_visser(&self) -> bool {
        self.0.contains_visser()
    }

    fn contains_harrop(&self) -> bool {
        self.0.contains_harrop()
    }
}

#[pyfunction]
#[pyo3(signature = (term, calculus = "IPC", context = None))]
fn infer(term: &PyTerm, calculus: &str, context: Option<HashMap<String, String>>) -> PyResult<PyFormula> {
    let ctx = self::context(context)?;
    vkp_core::infer(&ctx, &term.0, parse_calculus(calculus)?)
        .map(PyFormula)
        .map_err(|e| TypeCheckError::new_err(e.to_string()))
}

/// Raises `TypeCheckError` unless `term` has type `formula`.
#[pyfunction]
#[pyo3(signature = (term, formula, calculus = "IPC", context = None))]
fn check(term: &PyTerm, formula: &PyFormula, calculus: &str, context: Option<HashMap<String, String>>) -> PyResult<()> {
    let ctx = self::context(context)?;
    vkp_core::check(&ctx, &term.0, &formula.0, parse_calculus(calculus)?).map_err(|e| TypeCheckError::new_err(e.to_string()))
}

/// All one-step reducts as `(path, rule, term)` triples.
#[pyfunction]
#[pyo3(signature = (term, calculus = "IPC", context = None))]
fn step(term: &PyTerm, calculus: &str, context: Option<HashMap<String, String>>) -> PyResult<Vec<(Vec<usize>, String, PyTerm)>> {
    let ctx = self::context(context)?;
    let reducts = vkp_core::step_anywhere(&ctx, &term.0, parse_calculus(calculus)?).map_err(vkp_err)?;
    Ok(reducts
        .into_iter()
        .map(|r| (r.path, r.rule.name().to_string(), PyTerm(r.term)))
        .collect())
}

/// Reduces with `strategy` (`"full"` or `"weakhead"`) after type-checking.
#[pyfunction]
#[pyo3(signature = (term, calculus = "KP", strategy = "full", context = None, budget = None))]
fn normalize(
    term: &PyTerm,
    calculus: &str,
    strategy: &str,
    context: Option<HashMap<String, String>>,
    budget: Option<u64>,
) -> PyResult<PyTerm> {
    let ctx = self::context(context)?;
    let strategy = match strategy {
        "full" => Strategy::Full,
        "weakhead" => Strategy::WeakHead,
        other => {
            return Err(PyErr::new::<pyo3::exceptions::PyValueError, _>(format!(
                "unknown strategy `{other}` (expected full or weakhead)"
            )))
        }
    };
    Normalizer::new(parse_calculus(calculus)?)
        .strategy(strategy)
        .budget(budget.unwrap_or_else(budget_from_env))
        .run(&ctx, &term.0)
        .map(|o| PyTerm(o.term))
        .map_err(vkp_err)
}

#[pyfunction]
#[pyo3(signature = (term, context = None))]
fn eval_v(term: &PyTerm, context: Option<HashMap<String, String>>) -> PyResult<PyTerm> {
    let ctx = self::context(context)?;
    vkp_core::eval_v(&ctx, &term.0).map(PyTerm).map_err(vkp_err)
}

/// `("Left" | "Right", witness)` for a closed proof of a disjunction.
#[pyfunction]
#[pyo3(signature = (term, calculus = "KP"))]
fn extract(term: &PyTerm, calculus: &str) -> PyResult<(String, PyTerm)> {
    vkp_core::extract_disjunct(&term.0, parse_calculus(calculus)?)
        .map(|(side, w)| (side.name().to_string(), PyTerm(w)))
        .map_err(vkp_err)
}

/// An IPC proof of `formula`, or `None` when it has a Kripke countermodel.
#[pyfunction]
#[pyo3(signature = (formula, max_worlds = 6))]
fn prove(formula: &PyFormula, max_worlds: usize) -> PyResult<Option<PyTerm>> {
    let config = ProverConfig {
        max_worlds,
        ..ProverConfig::default()
    };
    match ipc_provable_with(&formula.0, config).map_err(vkp_err)? {
        Verdict::Provable(t) => Ok(Some(PyTerm(t))),
        Verdict::NotProvable(_) => Ok(None),
    }
}

/// A description of a smallest Kripke model refuting `formula`, if any.
#[pyfunction]
#[pyo3(signature = (formula, max_worlds = 6))]
fn countermodel(formula: &PyFormula, max_worlds: usize) -> Option<String> {
    find_countermodel(&formula.0, max_worlds).map(|m| m.to_string())
}

/// Checks a script; one `(name, ok, formula or error)` entry per definition.
#[pyfunction]
fn check_script(source: &str) -> PyResult<Vec<(String, bool, String)>> {
    let script = vkp_core::parse_script(source).map_err(|e| ParseError::new_err(e.to_string()))?;
    Ok(script
        .declarations
        .iter()
        .map(|d| match vkp_core::check(&TypingContext::new(), &d.body, &d.claimed, d.calculus) {
            Ok(()) => (d.name.clone(), true, d.claimed.to_string()),
            Err(e) => (d.name.clone(), false, e.to_string()),
        })
        .collect())
}

/// A random well-typed `(context, term, formula)`.
#[pyfunction]
#[pyo3(signature = (calculus = "KP", seed = 0, depth = 5, atoms = 3))]
fn generate(calculus: &str, seed: u64, depth: usize, atoms: usize) -> PyResult<(HashMap<String, String>, PyTerm, PyFormula)> {
    let sample = Generator::new(GenConfig::new(parse_calculus(calculus)?, depth, atoms))
        .sample(seed)
        .map_err(vkp_err)?;
    let ctx = sample.ctx.iter().map(|(x, f)| (x.to_string(), f.to_string())).collect();
    Ok((ctx, PyTerm(sample.term), PyFormula(sample.formula)))
}

#[pymodule]
fn vkp(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("VkpError", py.get_type::<VkpError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("TypeCheckError", py.get_type::<TypeCheckError>())?;
    m.add_class::<PyFormula>()?;
    m.add_class::<PyTerm>()?;
    m.add_function(wrap_pyfunction!(infer, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(step, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(eval_v, m)?)?;
    m.add_function(wrap_pyfunction!(extract, m)?)?;
    m.add_function(wrap_pyfunction!(prove, m)?)?;
    m.add_function(wrap_pyfunction!(countermodel, m)?)?;
    m.add_function(wrap_pyfunction!(check_script, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    Ok(())
}
