//! Python bindings. Integers map to `int`, exact rationals to `fractions.Fraction`.

use std::sync::Arc;

use higgs_core::criterion;
use higgs_core::hn::{self, HNFactor, HNType};
use higgs_core::proj_bundle;
use higgs_core::{
    ChowClass as CoreChow, Error, HiggsNumerics, NSVector, QNSVector, Rational, SpectralCover as CoreCover,
    SurfaceFile, SurfaceGeometry,
};
use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(higgs_numerics, HiggsError, PyValueError);

fn err(e: Error) -> PyErr {
    HiggsError::new_err(e.to_string())
}

trait OrRaise<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrRaise<T> for higgs_core::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(err)
    }
}

fn coords(v: &NSVector) -> Vec<BigInt> {
    v.coords().to_vec()
}

fn qcoords(v: &QNSVector) -> Vec<Rational> {
    v.coords().to_vec()
}

fn numerics(x: &SurfaceGeometry, r: u32, c1: Vec<BigInt>, c2: BigInt) -> PyResult<HiggsNumerics> {
    let c1 = NSVector(c1);
    x.lattice().check_dim(&c1).py()?;
    HiggsNumerics::new(r, c1, c2).py()
}

/// A polarized surface: Néron–Severi lattice, canonical class, polarization L and c₂(T_X).
#[pyclass(name = "Surface", module = "higgs_numerics", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Surface {
    inner: Arc<SurfaceGeometry>,
}

#[pymethods]
impl Surface {
    #[new]
    #[pyo3(signature = (name, gram, canonical, polarization, c2_top))]
    fn new(
        name: String,
        gram: Vec<Vec<i64>>,
        canonical: Vec<i64>,
        polarization: Vec<i64>,
        c2_top: i64,
    ) -> PyResult<Self> {
        let file = SurfaceFile {
            name,
            ns_rank: gram.len(),
            gram,
            canonical,
            polarization,
            c2_top,
            basis_labels: None,
        };
        Ok(Surface { inner: Arc::new(file.to_geometry().py()?) })
    }

    /// `"p2"`, `"p1xp1"`, `"hypersurface:d"`, or a path to a surface JSON file.
    #[staticmethod]
    fn load(spec: &str) -> PyResult<Self> {
        Ok(Surface { inner: Arc::new(higgs_core::load_surface(spec).py()?) })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file = SurfaceFile::from_json(text).py()?;
        Ok(Surface { inner: Arc::new(file.to_geometry().py()?) })
    }

    fn to_json(&self) -> PyResult<String> {
        let file = SurfaceFile::from_geometry(&self.inner).py()?;
        file.to_json().py()
    }

    #[getter]
    fn name(&self) -> &str {
        self.inner.name()
    }

    #[getter]
    fn ns_rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn gram(&self) -> Vec<Vec<BigInt>> {
        self.inner.lattice().gram().to_vec()
    }

    #[getter]
    fn canonical(&self) -> Vec<BigInt> {
        coords(self.inner.canonical())
    }

    #[getter]
    fn polarization(&self) -> Vec<BigInt> {
        coords(self.inner.polarization())
    }

    #[getter]
    fn c2_top(&self) -> BigInt {
        self.inner.c2_top().clone()
    }

    #[getter]
    fn chi_o(&self) -> BigInt {
        self.inner.chi_o().clone()
    }

    #[getter]
    fn k_squared(&self) -> BigInt {
        self.inner.k_squared()
    }

    #[getter]
    fn k_dot_l(&self) -> BigInt {
        self.inner.k_dot_l()
    }

    #[getter]
    fn l_squared(&self) -> BigInt {
        self.inner.l_squared()
    }

    #[getter]
    fn signature(&self) -> (usize, usize) {
        self.inner.lattice().signature()
    }

    fn pair(&self, v: Vec<Rational>, w: Vec<Rational>) -> PyResult<Rational> {
        self.inner.lattice().pair(&QNSVector(v), &QNSVector(w)).py()
    }

    fn todd(&self) -> ChowClass {
        ChowClass { inner: self.inner.todd_surface() }
    }

    fn line_bundle_ch(&self, divisor: Vec<Rational>) -> PyResult<ChowClass> {
        let d = QNSVector(divisor);
        self.inner.lattice().check_dim(&d).py()?;
        Ok(ChowClass { inner: self.inner.line_bundle_ch(&d).py()? })
    }

    fn mul(&self, a: &ChowClass, b: &ChowClass) -> PyResult<ChowClass> {
        Ok(ChowClass { inner: self.inner.chow_mul(&a.inner, &b.inner).py()? })
    }

    fn inverse(&self, a: &ChowClass) -> PyResult<ChowClass> {
        Ok(ChowClass { inner: self.inner.chow_inverse(&a.inner).py()? })
    }

    /// Euler characteristic by Hirzebruch–Riemann–Roch.
    fn chi(&self, ch: &ChowClass) -> PyResult<Rational> {
        self.inner.chi(&ch.inner).py()
    }

    /// Coefficients `[a0, a1, a2]` of `χ(F ⊗ L^n) = a0 + a1·n + a2·n²`.
    fn hilbert_coefficients(&self, ch: &ChowClass) -> PyResult<Vec<Rational>> {
        Ok(self.inner.hilbert_coefficients(&ch.inner).py()?.to_vec())
    }

    fn chern_character(&self, r: u32, c1: Vec<BigInt>, c2: BigInt) -> PyResult<ChowClass> {
        let h = numerics(&self.inner, r, c1, c2)?;
        Ok(ChowClass { inner: self.inner.chern_character(&h).py()? })
    }

    fn discriminant(&self, r: u32, c1: Vec<BigInt>, c2: BigInt) -> PyResult<BigInt> {
        let h = numerics(&self.inner, r, c1, c2)?;
        self.inner.discriminant(&h).py()
    }

    /// Degree of `η³` on the projective completion `P(L^∨ ⊕ O)`.
    fn eta_cubed_degree(&self) -> PyResult<Rational> {
        proj_bundle::eta_cubed_degree(&self.inner).py()
    }

    /// `K_Y + [X_s]` restricted to the degree-`r` spectral surface.
    fn adjunction_restriction(&self, r: u32) -> PyResult<ChowClass> {
        let omega = proj_bundle::canonical_y(&self.inner);
        let xs = proj_bundle::spectral_divisor_class(&self.inner, r).py()?;
        Ok(ChowClass { inner: (&omega + &xs).restrict_to_spectral(r).py()? })
    }

    fn __repr__(&self) -> String {
        format!("Surface({:?}, ns_rank={})", self.inner.name(), self.inner.rank())
    }
}

/// Truncated class `deg0 + deg1 + deg2` in the rational Chow ring of a surface.
#[pyclass(name = "ChowClass", module = "higgs_numerics", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct ChowClass {
    inner: CoreChow,
}

#[pymethods]
impl ChowClass {
    #[new]
    fn new(deg0: Rational, deg1: Vec<Rational>, deg2: Rational) -> Self {
        ChowClass { inner: CoreChow::new(deg0, QNSVector(deg1), deg2) }
    }

    #[getter]
    fn deg0(&self) -> Rational {
        self.inner.deg0.clone()
    }

    #[getter]
    fn deg1(&self) -> Vec<Rational> {
        qcoords(&self.inner.deg1)
    }

    #[getter]
    fn deg2(&self) -> Rational {
        self.inner.deg2.clone()
    }

    fn __add__(&self, other: &ChowClass) -> PyResult<ChowClass> {
        self.same_rank(other)?;
        Ok(ChowClass { inner: &self.inner + &other.inner })
    }

    fn __sub__(&self, other: &ChowClass) -> PyResult<ChowClass> {
        self.same_rank(other)?;
        Ok(ChowClass { inner: &self.inner - &other.inner })
    }

    fn __neg__(&self) -> ChowClass {
        ChowClass { inner: -&self.inner }
    }

    fn __repr__(&self) -> String {
        let show = |q: &Rational| higgs_core::exact::format_rational(q);
        let d1: Vec<String> = self.inner.deg1.coords().iter().map(show).collect();
        format!("ChowClass({}, [{}], {})", show(&self.inner.deg0), d1.join(", "), show(&self.inner.deg2))
    }
}

impl ChowClass {
    fn same_rank(&self, other: &ChowClass) -> PyResult<()> {
        if self.inner.rank() != other.inner.rank() {
            return Err(err(Error::DimensionMismatch { expected: self.inner.rank(), found: other.inner.rank() }));
        }
        Ok(())
    }
}

/// Degree-`r` spectral surface `X_s → X` inside `P(L^∨ ⊕ O)`.
#[pyclass(name = "SpectralCover", module = "higgs_numerics", frozen)]
struct SpectralCover {
    inner: CoreCover,
}

#[pymethods]
impl SpectralCover {
    #[new]
    fn new(surface: &Surface, r: u32) -> PyResult<Self> {
        Ok(SpectralCover { inner: CoreCover::new((*surface.inner).clone(), r).py()? })
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.inner.degree()
    }

    /// `K + (r-1)L`, as a class pulled back from the base.
    fn canonical_class(&self) -> Vec<BigInt> {
        coords(&self.inner.spectral_canonical())
    }

    fn canonical_squared(&self) -> PyResult<Rational> {
        self.inner.canonical_squared().py()
    }

    fn c2_tangent(&self) -> Rational {
        self.inner.spectral_c2_tangent()
    }

    fn euler_number(&self) -> Rational {
        self.inner.euler_number()
    }

    fn todd(&self) -> ChowClass {
        ChowClass { inner: self.inner.spectral_todd() }
    }

    fn cotangent_ch(&self) -> PyResult<ChowClass> {
        Ok(ChowClass { inner: self.inner.spectral_cotangent_ch().py()? })
    }

    fn chi_structure_sheaf(&self) -> Rational {
        self.inner.chi_structure_sheaf()
    }

    fn noether_chi(&self) -> PyResult<Rational> {
        self.inner.noether_chi().py()
    }

    fn pushforward_structure_ch(&self) -> PyResult<ChowClass> {
        Ok(ChowClass { inner: self.inner.pushforward_structure_ch().py()? })
    }

    /// `ch(π_*(O(δ) ⊗ I_𝔇))` for a length-`points` subscheme 𝔇.
    #[pyo3(signature = (delta, points = 0))]
    fn grr_pushforward(&self, delta: Vec<BigInt>, points: u64) -> PyResult<ChowClass> {
        let delta = self.vector(delta)?;
        Ok(ChowClass { inner: self.inner.grr_pushforward(&delta, points).py()? })
    }

    /// `χ` computed on the spectral surface and on the base after pushforward.
    #[pyo3(signature = (delta, points = 0))]
    fn chi_two_ways(&self, delta: Vec<BigInt>, points: u64) -> PyResult<(Rational, Rational)> {
        let delta = self.vector(delta)?;
        self.inner.chi_two_ways(&delta, points).py()
    }
}

impl SpectralCover {
    fn vector(&self, v: Vec<BigInt>) -> PyResult<NSVector> {
        let v = NSVector(v);
        self.inner.base().lattice().check_dim(&v).py()?;
        Ok(v)
    }
}

/// Regime of the generic Hitchin fiber for numerics `(r, c1, c2)`.
#[pyfunction]
fn classify<'py>(py: Python<'py>, surface: &Surface, r: u32, c1: Vec<BigInt>, c2: BigInt) -> PyResult<Bound<'py, PyDict>> {
    let h = numerics(&surface.inner, r, c1, c2)?;
    let report = criterion::classify(&surface.inner, &h).py()?;
    let out = PyDict::new(py);
    out.set_item("regime", report.regime.as_str())?;
    out.set_item("c2_gbun", report.c2_gbun.value)?;
    out.set_item("c2_gbun_integral", report.c2_gbun.integral)?;
    out.set_item("delta", report.witness.as_ref().map(|w| coords(&w.delta)))?;
    out.set_item("n_points", report.witness.map(|w| w.n_points))?;
    out.set_item(
        "boundary_graded_c1",
        report.boundary_graded_c1.map(|v| v.iter().map(coords).collect::<Vec<_>>()),
    )?;
    Ok(out)
}

/// `(value, integral)` of the generic-bundle threshold `c₂^{g.bun}`.
#[pyfunction]
fn c2_gbun(surface: &Surface, r: u32, c1: Vec<BigInt>) -> PyResult<(Rational, bool)> {
    let h = numerics(&surface.inner, r, c1, BigInt::from(0))?;
    let t = criterion::c2_gbun(&surface.inner, &h).py()?;
    Ok((t.value, t.integral))
}

#[pyfunction]
fn n_points(surface: &Surface, r: u32, c1: Vec<BigInt>, c2: BigInt) -> PyResult<Rational> {
    let h = numerics(&surface.inner, r, c1, c2)?;
    criterion::n_points(&surface.inner, &h).py()
}

#[pyfunction]
fn solve_delta(surface: &Surface, r: u32, c1: Vec<BigInt>) -> PyResult<Option<Vec<BigInt>>> {
    let h = numerics(&surface.inner, r, c1, BigInt::from(0))?;
    Ok(criterion::solve_delta(&surface.inner, &h).py()?.as_ref().map(coords))
}

/// Monopole-branch component candidates; an empty list outside the non-empty regimes.
#[pyfunction]
fn monopole_components<'py>(
    py: Python<'py>,
    surface: &Surface,
    r: u32,
    c1: Vec<BigInt>,
    c2: BigInt,
) -> PyResult<Bound<'py, PyDict>> {
    let h = numerics(&surface.inner, r, c1, c2)?;
    let out = PyDict::new(py);
    match hn::monopole_components(&surface.inner, &h) {
        Ok(m) => {
            out.set_item("regime", m.regime.as_str())?;
            out.set_item("delta", coords(&m.delta))?;
            out.set_item("betas", m.betas.iter().map(coords).collect::<Vec<_>>())?;
            out.set_item("total_points", m.total_points)?;
            out.set_item("components", m.components)?;
        }
        Err(Error::WrongRegime { regime }) => {
            out.set_item("regime", regime.as_str())?;
            out.set_item("components", Vec::<Vec<u64>>::new())?;
        }
        Err(e) => return Err(err(e)),
    }
    Ok(out)
}

/// Rank-2 torus-fixed components with `c₁ = c₁(L)`.
#[pyfunction]
fn rank2_fixed_components<'py>(py: Python<'py>, surface: &Surface, c2: i64) -> PyResult<Bound<'py, PyDict>> {
    let report = hn::rank2_fixed_components(&surface.inner, c2).py()?;
    let out = PyDict::new(py);
    out.set_item("regime", report.regime.as_str())?;
    out.set_item("discriminant", report.discriminant)?;
    out.set_item("instanton_candidate", report.instanton_candidate)?;
    out.set_item("components", report.components)?;
    Ok(out)
}

/// Both sides of the discriminant identity for an HN type given as `[(rank, c1, c2), ...]`.
#[pyfunction]
fn discriminant_identity(surface: &Surface, factors: Vec<(u32, Vec<BigInt>, BigInt)>) -> PyResult<(Rational, Rational)> {
    let factors = factors
        .into_iter()
        .map(|(rank, c1, c2)| {
            let c1 = NSVector(c1);
            surface.inner.lattice().check_dim(&c1).py()?;
            Ok(HNFactor::new(rank, c1, c2))
        })
        .collect::<PyResult<Vec<_>>>()?;
    let t = HNType::new(factors).py()?;
    hn::discriminant_identity(&surface.inner, &t).py()
}

/// `(rank, compositions, max, bound, holds)`.
type OlympicRow = (u32, u64, u64, u64, bool);

/// One row per rank in `1..=r_max`.
#[pyfunction]
fn olympic_verify(r_max: u32) -> PyResult<Vec<OlympicRow>> {
    let report = hn::olympic_verify(r_max).py()?;
    Ok(report.rows.into_iter().map(|row| (row.rank, row.compositions, row.max, row.bound, row.holds)).collect())
}

#[pyfunction]
fn olympic_sum(composition: Vec<u32>) -> PyResult<u64> {
    hn::olympic_sum(&composition).py()
}

/// Partitions of `n` into at most `k` parts.
#[pyfunction]
fn partition_count(n: u64, k: u32) -> BigInt {
    hn::partition_count(n, k)
}

#[pymodule]
fn higgs_numerics(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("HiggsError", m.py().get_type::<HiggsError>())?;
    m.add_class::<Surface>()?;
    m.add_class::<ChowClass>()?;
    m.add_class::<SpectralCover>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(c2_gbun, m)?)?;
    m.add_function(wrap_pyfunction!(n_points, m)?)?;
    m.add_function(wrap_pyfunction!(solve_delta, m)?)?;
    m.add_function(wrap_pyfunction!(monopole_components, m)?)?;
    m.add_function(wrap_pyfunction!(rank2_fixed_components, m)?)?;
    m.add_function(wrap_pyfunction!(discriminant_identity, m)?)?;
    m.add_function(wrap_pyfunction!(olympic_verify, m)?)?;
    m.add_function(wrap_pyfunction!(olympic_sum, m)?)?;
    m.add_function(wrap_pyfunction!(partition_count, m)?)?;
    Ok(())
}
