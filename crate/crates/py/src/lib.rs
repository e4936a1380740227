//! Python bindings for the orbit-closure calculus in the `borbits` crate.
//!
//! The module wraps the library surface instead of re-deriving anything:
//! wrapper classes hold the core types and forward to them, matrices cross
//! the boundary as lists of `fractions.Fraction` rows, and report-shaped
//! values (verification reports, generator sets, cover kinds) arrive as
//! plain dicts carrying the same JSON the CLI prints.

use std::str::FromStr;

use borbits::error::Error;
use borbits::ideal::Pruning;
use borbits::involution::{Involution as CoreInvolution, NilpotentMatrix};
use borbits::laurent::degeneration_limit;
use borbits::oracle;
use borbits::poset::{self, Guard};
use borbits::rank::{Partition, RankMatrix, ShapeMatrix};
use borbits::rational::{Rational, RationalMatrix};
use borbits::tableau::{self, TwoColumnTableau as CoreTableau};
use borbits::verify;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn pyerr(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn guard(ceiling: Option<usize>) -> Guard {
    ceiling.map(Guard::new).unwrap_or_default()
}

/// Hand a serde value to Python by parsing its text with `json.loads`.
fn json_to_py(py: Python<'_>, value: &serde_json::Value) -> PyResult<PyObject> {
    let loads = py.import("json")?.getattr("loads")?;
    Ok(loads.call1((value.to_string(),))?.unbind())
}

/// Exact rational rows as `fractions.Fraction` entries.
fn rows_to_fractions(py: Python<'_>, rows: &[Vec<Rational>]) -> PyResult<Vec<Vec<PyObject>>> {
    let fraction = py.import("fractions")?.getattr("Fraction")?;
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|v| Ok(fraction.call1((v.to_string(),))?.unbind()))
                .collect::<PyResult<Vec<_>>>()
        })
        .collect()
}

/// Parse matrix entries from anything whose `str()` reads as `a` or `a/b`,
/// which covers ints and `fractions.Fraction`.
fn rational_rows(py: Python<'_>, rows: Vec<Vec<PyObject>>) -> PyResult<Vec<Vec<Rational>>> {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|value| {
                    let text: String = value.bind(py).str()?.extract()?;
                    Rational::from_str(&text).map_err(|_| {
                        PyValueError::new_err(format!(
                            "matrix entries must be integers or fractions, got {text:?}"
                        ))
                    })
                })
                .collect::<PyResult<Vec<_>>>()
        })
        .collect()
}

fn rational_matrix(py: Python<'_>, rows: Vec<Vec<PyObject>>) -> PyResult<RationalMatrix> {
    RationalMatrix::from_rows(rational_rows(py, rows)?).map_err(pyerr)
}

fn nilpotent_matrix(py: Python<'_>, rows: Vec<Vec<PyObject>>) -> PyResult<NilpotentMatrix> {
    NilpotentMatrix::new(rational_rows(py, rows)?).map_err(pyerr)
}

fn wrap_involutions(items: Vec<CoreInvolution>) -> Vec<Involution> {
    items.into_iter().map(|inner| Involution { inner }).collect()
}

fn wrap_tableaux(items: Vec<CoreTableau>) -> Vec<Tableau> {
    items.into_iter().map(|inner| Tableau { inner }).collect()
}

/// An involution of `{1, .., n}` given by its disjoint 2-cycles, standing
/// for the B-orbit of the 0/1 square-zero matrix with ones at those
/// positions.
#[pyclass(frozen, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Involution {
    inner: CoreInvolution,
}

#[pymethods]
impl Involution {
    #[new]
    fn py_new(n: usize, cycles: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Involution {
            inner: CoreInvolution::new(n, cycles).map_err(pyerr)?,
        })
    }

    /// The identity involution (no cycles): the zero-matrix orbit.
    #[staticmethod]
    fn identity(n: usize) -> Self {
        Involution {
            inner: CoreInvolution::identity(n),
        }
    }

    /// Parse `"(1,4)(2,3)"`, `"id"`, or the JSON object form.
    #[staticmethod]
    #[pyo3(signature = (text, n = None))]
    fn parse(text: &str, n: Option<usize>) -> PyResult<Self> {
        Ok(Involution {
            inner: CoreInvolution::parse(text, n).map_err(pyerr)?,
        })
    }

    /// All involutions of `{1, .., n}`.
    #[staticmethod]
    fn enumerate(n: usize) -> Vec<Involution> {
        wrap_involutions(CoreInvolution::enumerate(n))
    }

    /// How many involutions of `{1, .., n}` there are.
    #[staticmethod]
    fn count(n: usize) -> u128 {
        CoreInvolution::count(n)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn cycles(&self) -> Vec<(usize, usize)> {
        self.inner.cycles().to_vec()
    }

    #[getter]
    fn num_cycles(&self) -> usize {
        self.inner.num_cycles()
    }

    /// Correction terms `r_2, .., r_k` of the dimension formula.
    fn r_values(&self) -> Vec<usize> {
        self.inner.r_values()
    }

    /// Jordan shape of the representative: `[n]` or `[n - k, k]`.
    fn orbit_shape(&self) -> Vec<usize> {
        self.inner.orbit_shape()
    }

    /// Orbit dimension by the closed formula.
    fn dimension(&self) -> usize {
        self.inner.orbit_dimension()
    }

    /// Window ranks `rank(u[i..j])` as an upper-triangular integer grid.
    fn rank_matrix(&self) -> Vec<Vec<u32>> {
        RankMatrix::of_involution(&self.inner).rows().to_vec()
    }

    /// The 0/1 representative matrix, rows of `fractions.Fraction`.
    fn matrix(&self, py: Python<'_>) -> PyResult<Vec<Vec<PyObject>>> {
        rows_to_fractions(py, self.inner.matrix().rows())
    }

    /// Orbits covered by this one in the closure order.
    fn lower_covers(&self) -> Vec<Involution> {
        wrap_involutions(poset::lower_covers(&self.inner))
    }

    /// Covers together with the move that produced each one.
    fn cover_moves(&self) -> Vec<CoverMove> {
        poset::cover_moves(&self.inner)
            .into_iter()
            .map(|inner| CoverMove { inner })
            .collect()
    }

    /// Every involution weakly below this one in the closure order.
    #[pyo3(signature = (ceiling = None))]
    fn closure(&self, ceiling: Option<usize>) -> PyResult<Vec<Involution>> {
        Ok(wrap_involutions(
            poset::closure(&self.inner, guard(ceiling)).map_err(pyerr)?,
        ))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Involution.parse('{}', n={})", self.inner, self.inner.n())
    }
}

/// A single cover in the closure order with the move that produced it.
#[pyclass(frozen)]
#[derive(Clone)]
struct CoverMove {
    inner: poset::CoverMove,
}

#[pymethods]
impl CoverMove {
    #[getter]
    fn source(&self) -> Involution {
        Involution {
            inner: self.inner.source.clone(),
        }
    }

    #[getter]
    fn target(&self) -> Involution {
        Involution {
            inner: self.inner.target.clone(),
        }
    }

    /// The move family and its parameters as a dict.
    #[getter]
    fn kind(&self, py: Python<'_>) -> PyResult<PyObject> {
        json_to_py(
            py,
            &serde_json::to_value(&self.inner.kind).expect("serializable"),
        )
    }

    /// Human-readable one-liner naming the family and its parameters.
    fn describe(&self) -> String {
        self.inner.kind.describe()
    }

    /// One-parameter conjugation limit: the source representative
    /// degenerates onto this matrix, which lies in the target orbit.
    fn limit(&self, py: Python<'_>) -> PyResult<Vec<Vec<PyObject>>> {
        let matrix = degeneration_limit(&self.inner).map_err(pyerr)?;
        rows_to_fractions(py, matrix.rows())
    }

    fn __repr__(&self) -> String {
        format!(
            "CoverMove({} -> {}: {})",
            self.inner.source,
            self.inner.target,
            self.inner.kind.describe()
        )
    }
}

/// A standard Young tableau with at most two columns, labelling an orbital
/// variety of the square-zero locus.
#[pyclass(name = "TwoColumnTableau", frozen, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Tableau {
    inner: CoreTableau,
}

#[pymethods]
impl Tableau {
    #[new]
    fn py_new(col1: Vec<usize>, col2: Vec<usize>) -> PyResult<Self> {
        Ok(Tableau {
            inner: CoreTableau::new(col1, col2).map_err(pyerr)?,
        })
    }

    #[staticmethod]
    fn single_column(n: usize) -> Self {
        Tableau {
            inner: CoreTableau::single_column(n),
        }
    }

    /// Parse the compact `"1,2,3,6/4,5,7,8"` or the JSON column form.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Tableau {
            inner: CoreTableau::parse(text).map_err(pyerr)?,
        })
    }

    /// All two-column standard tableaux with `n` boxes.
    #[staticmethod]
    fn enumerate(n: usize) -> Vec<Tableau> {
        wrap_tableaux(CoreTableau::enumerate(n))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn col1(&self) -> Vec<usize> {
        self.inner.col1().to_vec()
    }

    #[getter]
    fn col2(&self) -> Vec<usize> {
        self.inner.col2().to_vec()
    }

    #[getter]
    fn shape(&self) -> Vec<usize> {
        self.inner.shape()
    }

    /// Second-column pairing used to read off the involution.
    fn greedy_pairs(&self) -> Vec<(usize, usize)> {
        self.inner.greedy_pairs()
    }

    /// The involution whose orbit closure carries this variety.
    fn involution(&self) -> Involution {
        Involution {
            inner: self.inner.involution(),
        }
    }

    /// Move the second-column entry of row `s` (1-based) to the first column.
    fn move_row(&self, s: usize) -> PyResult<Tableau> {
        Ok(Tableau {
            inner: self.inner.move_row(s).map_err(pyerr)?,
        })
    }

    /// Move the second-column entry `e` to the first column.
    fn move_entry(&self, e: usize) -> PyResult<Tableau> {
        Ok(Tableau {
            inner: self.inner.move_entry(e).map_err(pyerr)?,
        })
    }

    /// Tableaux covering this one: the moved tableaux passing the letter
    /// condition.
    fn covers(&self) -> Vec<Tableau> {
        wrap_tableaux(tableau::tableau_covers(&self.inner))
    }

    /// True when this tableau lies weakly below `other`: the rank matrices
    /// of the associated involutions compare entrywise.
    fn leq(&self, other: &Tableau) -> PyResult<bool> {
        tableau::tableau_leq(&self.inner, &other.inner).map_err(pyerr)
    }

    /// All tableaux weakly below this one.
    #[pyo3(signature = (ceiling = None))]
    fn closure(&self, ceiling: Option<usize>) -> PyResult<Vec<Tableau>> {
        Ok(wrap_tableaux(
            tableau::orbital_closure(&self.inner, guard(ceiling)).map_err(pyerr)?,
        ))
    }

    /// Orbits whose union is the orbital variety labelled by this tableau.
    #[pyo3(signature = (ceiling = None))]
    fn variety_orbits(&self, ceiling: Option<usize>) -> PyResult<Vec<Involution>> {
        Ok(wrap_involutions(
            tableau::orbital_variety_orbits(&self.inner, guard(ceiling)).map_err(pyerr)?,
        ))
    }

    /// Aligned two-column rendering.
    fn render(&self) -> String {
        self.inner.render_columns()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("TwoColumnTableau.parse('{}')", self.inner)
    }
}

/// Nodes and cover edges of the closure order on involutions of fixed `n`.
#[pyclass(frozen)]
struct HasseDiagram {
    inner: poset::HasseDiagram,
}

#[pymethods]
impl HasseDiagram {
    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn nodes(&self) -> Vec<Involution> {
        wrap_involutions(self.inner.nodes().to_vec())
    }

    /// Directed cover edges as `(higher, lower)` node indices.
    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn to_json(&self, py: Python<'_>) -> PyResult<PyObject> {
        json_to_py(py, &self.inner.to_json())
    }

    fn __repr__(&self) -> String {
        format!(
            "HasseDiagram(n={}, nodes={}, edges={})",
            self.inner.n(),
            self.inner.nodes().len(),
            self.inner.edges().len()
        )
    }
}

/// Covers of `sigma` found by scanning the full poset, for cross-checking
/// the constructive move families.
#[pyfunction]
#[pyo3(signature = (sigma, ceiling = None))]
fn brute_force_lower_covers(
    sigma: &Involution,
    ceiling: Option<usize>,
) -> PyResult<Vec<Involution>> {
    Ok(wrap_involutions(
        poset::brute_force_lower_covers(&sigma.inner, guard(ceiling)).map_err(pyerr)?,
    ))
}

/// The closure order: entrywise comparison of window-rank matrices.
#[pyfunction]
fn closure_leq(a: &Involution, b: &Involution) -> PyResult<bool> {
    RankMatrix::of_involution(&a.inner)
        .leq(&RankMatrix::of_involution(&b.inner))
        .map_err(pyerr)
}

/// Entrywise comparison: `"less"`, `"equal"`, `"greater"`, or
/// `"incomparable"`.
#[pyfunction]
fn closure_compare(a: &Involution, b: &Involution) -> PyResult<String> {
    let relation = RankMatrix::of_involution(&a.inner)
        .compare(&RankMatrix::of_involution(&b.inner))
        .map_err(pyerr)?;
    match serde_json::to_value(relation).expect("serializable") {
        serde_json::Value::String(s) => Ok(s),
        other => Ok(other.to_string()),
    }
}

/// Recover the involution from a valid window-rank grid.
#[pyfunction]
fn rank_to_involution(rows: Vec<Vec<u32>>) -> PyResult<Involution> {
    let matrix = RankMatrix::from_rows(rows).map_err(pyerr)?;
    if !matrix.is_valid() {
        return Err(PyValueError::new_err(
            "not the window-rank matrix of any involution",
        ));
    }
    Ok(Involution {
        inner: matrix.to_involution().map_err(pyerr)?,
    })
}

/// Window ranks of an explicit strictly upper-triangular matrix.
#[pyfunction]
fn rank_matrix_of_point(py: Python<'_>, rows: Vec<Vec<PyObject>>) -> PyResult<Vec<Vec<u32>>> {
    let point = nilpotent_matrix(py, rows)?;
    Ok(RankMatrix::of_matrix(&point).rows().to_vec())
}

/// The full closure-order poset for one `n`.
#[pyfunction]
#[pyo3(signature = (n, ceiling = None))]
fn hasse_diagram(n: usize, ceiling: Option<usize>) -> PyResult<HasseDiagram> {
    Ok(HasseDiagram {
        inner: poset::hasse_diagram(n, guard(ceiling)).map_err(pyerr)?,
    })
}

/// Determinantal generators of the orbit-closure ideal, as the dict the CLI
/// prints in JSON mode: square-zero quadratics plus windowed minors with
/// provenance.
#[pyfunction]
#[pyo3(signature = (sigma, pruned = true))]
fn ideal_generators(py: Python<'_>, sigma: &Involution, pruned: bool) -> PyResult<PyObject> {
    let mode = if pruned { Pruning::Pruned } else { Pruning::Full };
    let set = borbits::ideal::ideal_generators(&sigma.inner, mode);
    json_to_py(py, &serde_json::to_value(&set).expect("serializable"))
}

/// True when every ideal generator vanishes at the point.
#[pyfunction]
#[pyo3(signature = (sigma, rows, pruned = true))]
fn ideal_vanishes_at(
    py: Python<'_>,
    sigma: &Involution,
    rows: Vec<Vec<PyObject>>,
    pruned: bool,
) -> PyResult<bool> {
    let mode = if pruned { Pruning::Pruned } else { Pruning::Full };
    let set = borbits::ideal::ideal_generators(&sigma.inner, mode);
    Ok(set.vanishes_at(&rational_matrix(py, rows)?))
}

/// Orbit dimension the slow way: `dim B` minus the centralizer dimension at
/// the representative, by exact nullspace computation.
#[pyfunction]
fn orbit_dimension_oracle(sigma: &Involution) -> usize {
    oracle::orbit_dimension_oracle(&sigma.inner)
}

/// Pseudo-random point of the orbit, reproducible from `seed`.
#[pyfunction]
#[pyo3(signature = (sigma, seed = 0))]
fn random_orbit_point(
    py: Python<'_>,
    sigma: &Involution,
    seed: u64,
) -> PyResult<Vec<Vec<PyObject>>> {
    rows_to_fractions(py, oracle::random_orbit_point(&sigma.inner, seed).rows())
}

/// Whether the strictly upper-triangular point lies in the orbit closure:
/// square-zero with window ranks entrywise at most those of `sigma`.
#[pyfunction]
fn closure_membership(
    py: Python<'_>,
    rows: Vec<Vec<PyObject>>,
    sigma: &Involution,
) -> PyResult<bool> {
    let point = nilpotent_matrix(py, rows)?;
    oracle::closure_membership(&point, &sigma.inner).map_err(pyerr)
}

/// Dimension of the Borel centralizer of an arbitrary square matrix.
#[pyfunction]
fn centralizer_dimension(py: Python<'_>, rows: Vec<Vec<PyObject>>) -> PyResult<usize> {
    Ok(oracle::centralizer_dimension(&rational_matrix(py, rows)?))
}

/// The pair of points witnessing that entrywise shape dominance is strictly
/// coarser than closure containment.
#[pyfunction]
fn shape_order_gap_example(
    py: Python<'_>,
) -> PyResult<(Vec<Vec<PyObject>>, Vec<Vec<PyObject>>)> {
    let (m, n) = borbits::rank::shape_order_gap_example();
    Ok((
        rows_to_fractions(py, m.rows())?,
        rows_to_fractions(py, n.rows())?,
    ))
}

/// Windowed Jordan types of a strictly upper-triangular point, one
/// partition per window `[i, j]`.
#[pyfunction]
fn shape_matrix_of_point(
    py: Python<'_>,
    rows: Vec<Vec<PyObject>>,
) -> PyResult<Vec<Vec<Partition>>> {
    let point = nilpotent_matrix(py, rows)?;
    Ok(ShapeMatrix::of_matrix(&point).into())
}

/// Entrywise dominance of the windowed Jordan types of two points.
#[pyfunction]
fn shape_dominance_leq(
    py: Python<'_>,
    rows_a: Vec<Vec<PyObject>>,
    rows_b: Vec<Vec<PyObject>>,
) -> PyResult<bool> {
    let a = ShapeMatrix::of_matrix(&nilpotent_matrix(py, rows_a)?);
    let b = ShapeMatrix::of_matrix(&nilpotent_matrix(py, rows_b)?);
    borbits::rank::shape_dominance_leq(&a, &b).map_err(pyerr)
}

/// Two-column standard tableaux of shape `(a, b)` counted by the ballot
/// difference of binomials.
#[pyfunction]
fn shape_count_by_ballot(a: usize, b: usize) -> PyResult<u128> {
    if b > a {
        return Err(PyValueError::new_err(
            "shape must list the longer column first",
        ));
    }
    Ok(tableau::shape_count_by_ballot(a, b))
}

/// The same count by the hook-length formula, for cross-checking.
#[pyfunction]
fn shape_count_by_hooks(a: usize, b: usize) -> PyResult<u128> {
    if b > a {
        return Err(PyValueError::new_err(
            "shape must list the longer column first",
        ));
    }
    Ok(tableau::shape_count_by_hooks(a, b))
}

/// Run one verification suite and return its report as a dict.
#[pyfunction]
#[pyo3(signature = (suite, max_n, seed = 0, ceiling = None))]
fn run_suite(
    py: Python<'_>,
    suite: &str,
    max_n: usize,
    seed: u64,
    ceiling: Option<usize>,
) -> PyResult<PyObject> {
    let report = verify::run_suite(suite, max_n, seed, guard(ceiling)).map_err(pyerr)?;
    json_to_py(py, &report.to_json())
}

#[pymodule]
fn borbits_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Involution>()?;
    m.add_class::<CoverMove>()?;
    m.add_class::<Tableau>()?;
    m.add_class::<HasseDiagram>()?;
    m.add("SUITE_NAMES", verify::SUITE_NAMES.to_vec())?;
    m.add_function(wrap_pyfunction!(brute_force_lower_covers, m)?)?;
    m.add_function(wrap_pyfunction!(closure_leq, m)?)?;
    m.add_function(wrap_pyfunction!(closure_compare, m)?)?;
    m.add_function(wrap_pyfunction!(rank_to_involution, m)?)?;
    m.add_function(wrap_pyfunction!(rank_matrix_of_point, m)?)?;
    m.add_function(wrap_pyfunction!(hasse_diagram, m)?)?;
    m.add_function(wrap_pyfunction!(ideal_generators, m)?)?;
    m.add_function(wrap_pyfunction!(ideal_vanishes_at, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_dimension_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(random_orbit_point, m)?)?;
    m.add_function(wrap_pyfunction!(closure_membership, m)?)?;
    m.add_function(wrap_pyfunction!(centralizer_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(shape_order_gap_example, m)?)?;
    m.add_function(wrap_pyfunction!(shape_matrix_of_point, m)?)?;
    m.add_function(wrap_pyfunction!(shape_dominance_leq, m)?)?;
    m.add_function(wrap_pyfunction!(shape_count_by_ballot, m)?)?;
    m.add_function(wrap_pyfunction!(shape_count_by_hooks, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use crate::borbits_py;
    use pyo3::prelude::*;

    /// Boot an embedded interpreter with the module on the init tab and walk
    /// one example through every corner of the binding surface.
    #[test]
    fn python_module_round_trips_the_core_operations() {
        pyo3::append_to_inittab!(borbits_py);
        pyo3::prepare_freethreaded_python();
        Python::with_gil(|py| {
            let m = py.import("borbits_py").unwrap();
            let involution = m.getattr("Involution").unwrap();

            let sigma = involution
                .call_method1("parse", ("(1,6)(3,4)(5,7)", 7))
                .unwrap();
            assert_eq!(
                sigma
                    .call_method0("r_values")
                    .unwrap()
                    .extract::<Vec<usize>>()
                    .unwrap(),
                vec![0, 3]
            );
            assert_eq!(
                sigma
                    .call_method0("dimension")
                    .unwrap()
                    .extract::<usize>()
                    .unwrap(),
                10
            );
            assert_eq!(
                m.call_method1("orbit_dimension_oracle", (&sigma,))
                    .unwrap()
                    .extract::<usize>()
                    .unwrap(),
                10
            );
            assert_eq!(
                involution
                    .call_method1("count", (10,))
                    .unwrap()
                    .extract::<u128>()
                    .unwrap(),
                9496
            );

            let point = m.call_method1("random_orbit_point", (&sigma, 5)).unwrap();
            assert!(m
                .call_method1("closure_membership", (&point, &sigma))
                .unwrap()
                .extract::<bool>()
                .unwrap());
            assert!(m
                .call_method1("ideal_vanishes_at", (&sigma, &point))
                .unwrap()
                .extract::<bool>()
                .unwrap());

            let small = involution.call_method1("parse", ("(2,3)", 3)).unwrap();
            let moves = small.call_method0("cover_moves").unwrap();
            assert_eq!(moves.len().unwrap(), 2);
            let drop = moves.get_item(0).unwrap();
            assert_eq!(
                drop.call_method0("describe")
                    .unwrap()
                    .extract::<String>()
                    .unwrap(),
                "drop cycle 1"
            );
            let limit = drop.call_method0("limit").unwrap();
            assert!(m
                .call_method1(
                    "closure_membership",
                    (&limit, drop.getattr("target").unwrap())
                )
                .unwrap()
                .extract::<bool>()
                .unwrap());

            let rank = sigma.call_method0("rank_matrix").unwrap();
            let back = m.call_method1("rank_to_involution", (&rank,)).unwrap();
            assert!(back.eq(&sigma).unwrap());

            let tableau_class = m.getattr("TwoColumnTableau").unwrap();
            let t = tableau_class
                .call_method1("parse", ("1,2,3,6/4,5,7,8",))
                .unwrap();
            assert_eq!(
                t.call_method0("involution")
                    .unwrap()
                    .str()
                    .unwrap()
                    .extract::<String>()
                    .unwrap(),
                "(1,8)(2,5)(3,4)(6,7)"
            );
            let moved = t.call_method1("move_entry", (8,)).unwrap();
            assert!(moved
                .call_method1("leq", (&t,))
                .unwrap()
                .extract::<bool>()
                .unwrap());

            let diagram = m.call_method1("hasse_diagram", (3,)).unwrap();
            assert_eq!(diagram.getattr("nodes").unwrap().len().unwrap(), 4);
            assert!(diagram
                .call_method0("to_dot")
                .unwrap()
                .extract::<String>()
                .unwrap()
                .starts_with("digraph closure_order"));

            let report = m.call_method1("run_suite", ("counts", 4)).unwrap();
            assert!(report
                .get_item("passed")
                .unwrap()
                .extract::<bool>()
                .unwrap());
        });
    }
}
