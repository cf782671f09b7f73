//! Python bindings. Screws and twists cross the boundary as 6-element
//! sequences (angular part first), matrices as nested lists.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use screwmotion::interp::{self, BoundaryData, InterpolationCurve};
use screwmotion::lie::{self, Matrix6, MetricWeights, Rotation, ScrewVector, Vector3};
use screwmotion::magnus::{self, TwistJet};
use screwmotion::Error;

create_exception!(screwmotion, DomainError, PyValueError, "Log or dexp singularity.");

fn to_py(e: Error) -> PyErr {
    if e.is_domain_error() {
        DomainError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn screw(v: [f64; 6]) -> ScrewVector {
    ScrewVector::from_array(v)
}

fn rows6(m: &Matrix6) -> Vec<Vec<f64>> {
    (0..6).map(|i| (0..6).map(|j| m[(i, j)]).collect()).collect()
}

fn jet(derivatives: Vec<[f64; 6]>) -> TwistJet {
    TwistJet::new(derivatives.into_iter().map(screw).collect())
}

fn base(c0: Option<&Pose>) -> lie::Pose {
    c0.map(|p| p.0).unwrap_or_default()
}

/// Rigid body configuration: rotation and translation.
#[pyclass(frozen, skip_from_py_object, module = "screwmotion")]
#[derive(Clone)]
pub struct Pose(lie::Pose);

#[pymethods]
impl Pose {
    /// `rotation` is row-major (9 values), defaulting to the identity.
    #[new]
    #[pyo3(signature = (rotation=None, translation=None))]
    fn new(rotation: Option<[f64; 9]>, translation: Option<[f64; 3]>) -> PyResult<Self> {
        let r = match rotation {
            Some(v) => Rotation::from_row_slice(&v).map_err(to_py)?,
            None => Rotation::identity(),
        };
        Ok(Pose(lie::Pose::new(r, Vector3::from(translation.unwrap_or([0.0; 3])))))
    }

    #[getter]
    fn rotation(&self) -> [f64; 9] {
        self.0.rotation.to_row_array()
    }

    #[getter]
    fn translation(&self) -> [f64; 3] {
        self.0.translation.into()
    }

    /// 4×4 homogeneous matrix.
    fn matrix(&self) -> Vec<Vec<f64>> {
        let h = self.0.to_homogeneous();
        (0..4).map(|i| (0..4).map(|j| h[(i, j)]).collect()).collect()
    }

    fn inverse(&self) -> Pose {
        Pose(self.0.inverse())
    }

    fn __mul__(&self, other: &Pose) -> Pose {
        Pose(self.0 * other.0)
    }

    fn __repr__(&self) -> String {
        format!("Pose(rotation={:?}, translation={:?})", self.rotation(), self.translation())
    }
}

/// Interpolating motion `exp(X(τ)) C₀` over `[0, duration]`.
#[pyclass(frozen, module = "screwmotion")]
pub struct Curve(InterpolationCurve);

#[pymethods]
impl Curve {
    #[getter]
    fn duration(&self) -> f64 {
        self.0.duration()
    }

    /// Screw coordinates at normalized time `tau`.
    fn coordinates(&self, tau: f64) -> [f64; 6] {
        self.0.coordinates(tau).to_array()
    }

    /// `(X, pose)` at physical time `t`.
    fn eval(&self, t: f64) -> PyResult<([f64; 6], Pose)> {
        let (x, c) = interp::curve_eval(&self.0, t).map_err(to_py)?;
        Ok((x.to_array(), Pose(c)))
    }

    /// Spatial twist at physical time `t`.
    fn twist(&self, t: f64) -> PyResult<[f64; 6]> {
        interp::curve_twist(&self.0, t).map(|v| v.to_array()).map_err(to_py)
    }

    /// Body-fixed twist at physical time `t`.
    fn body_twist(&self, t: f64) -> PyResult<[f64; 6]> {
        interp::curve_body_twist(&self.0, t).map(|v| v.to_array()).map_err(to_py)
    }

    /// `samples + 1` rows of `(tau, X, pose, twist)`.
    fn sample(&self, samples: usize) -> PyResult<Vec<(f64, [f64; 6], Pose, [f64; 6])>> {
        if samples == 0 {
            return Err(PyValueError::new_err("samples must be positive"));
        }
        let t_end = self.0.duration();
        (0..=samples)
            .map(|i| {
                let tau = i as f64 / samples as f64;
                let t = if i == samples { t_end } else { tau * t_end };
                let (x, c) = interp::curve_eval(&self.0, t).map_err(to_py)?;
                let v = interp::curve_twist(&self.0, t).map_err(to_py)?;
                Ok((tau, x.to_array(), Pose(c), v.to_array()))
            })
            .collect()
    }
}

#[pyfunction]
fn exp_pose(x: [f64; 6]) -> Pose {
    Pose(lie::exp_pose(&screw(x)))
}

#[pyfunction]
fn log_pose(c: &Pose) -> PyResult<[f64; 6]> {
    lie::log_pose(&c.0).map(|x| x.to_array()).map_err(to_py)
}

#[pyfunction]
fn bracket(a: [f64; 6], b: [f64; 6]) -> [f64; 6] {
    lie::bracket(&screw(a), &screw(b)).to_array()
}

#[pyfunction]
fn dexp(x: [f64; 6]) -> Vec<Vec<f64>> {
    rows6(&lie::dexp_closed(&screw(x)))
}

#[pyfunction]
fn dexpinv(x: [f64; 6]) -> PyResult<Vec<Vec<f64>>> {
    lie::dexpinv_closed(&screw(x)).map(|m| rows6(&m)).map_err(to_py)
}

/// `(weighted, rotational, translational)`.
#[pyfunction]
#[pyo3(signature = (c1, c2, alpha=1.0, beta=1.0))]
fn distance(c1: &Pose, c2: &Pose, alpha: f64, beta: f64) -> PyResult<(f64, f64, f64)> {
    let w = MetricWeights::new(alpha, beta).map_err(to_py)?;
    let (d, parts) = lie::distance(&c1.0, &c2.0, &w).map_err(to_py)?;
    Ok((d, parts.rotational, parts.translational))
}

/// Series coefficients `X₁..X_k` from the twist derivatives at zero.
#[pyfunction]
fn magnus_coefficients(derivatives: Vec<[f64; 6]>, k: usize) -> PyResult<Vec<[f64; 6]>> {
    let c = magnus::magnus_coefficients(&jet(derivatives), k).map_err(to_py)?;
    Ok(c.coefficients().iter().map(|x| x.to_array()).collect())
}

#[pyfunction]
#[pyo3(signature = (xt, duration, c0=None))]
fn geodesic(xt: [f64; 6], duration: f64, c0: Option<PyRef<'_, Pose>>) -> PyResult<Curve> {
    interp::geodesic(&screw(xt), duration, &base(c0.as_deref())).map(Curve).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (xt, duration, c0=None))]
fn min_acceleration(xt: [f64; 6], duration: f64, c0: Option<PyRef<'_, Pose>>) -> PyResult<Curve> {
    interp::min_acceleration(&screw(xt), duration, &base(c0.as_deref())).map(Curve).map_err(to_py)
}

/// `k`-th order initial-value interpolation; `derivatives` holds `V₀, V̇₀, ...` (k-1 entries).
#[pyfunction]
#[pyo3(signature = (k, xt, duration, derivatives, c0=None))]
fn iv_tip(
    k: usize,
    xt: [f64; 6],
    duration: f64,
    derivatives: Vec<[f64; 6]>,
    c0: Option<PyRef<'_, Pose>>,
) -> PyResult<Curve> {
    interp::iv_tip(k, &screw(xt), duration, &jet(derivatives), &base(c0.as_deref()))
        .map(Curve)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (xt, v0, vt, duration, c0=None))]
fn bv_tip_cubic(
    xt: [f64; 6],
    v0: [f64; 6],
    vt: [f64; 6],
    duration: f64,
    c0: Option<PyRef<'_, Pose>>,
) -> PyResult<Curve> {
    let b = BoundaryData::new(screw(xt), screw(v0), screw(vt)).map_err(to_py)?;
    interp::bv_tip_cubic(&b, duration, &base(c0.as_deref())).map(Curve).map_err(to_py)
}

#[pyfunction]
fn cubic_terminal_twist(xt: [f64; 6], duration: f64, v0: [f64; 6], vdot0: [f64; 6]) -> PyResult<[f64; 6]> {
    interp::cubic_terminal_twist(&screw(xt), duration, &screw(v0), &screw(vdot0))
        .map(|v| v.to_array())
        .map_err(to_py)
}

#[pymodule]
#[pyo3(name = "screwmotion")]
fn screwmotion_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Pose>()?;
    m.add_class::<Curve>()?;
    m.add("DomainError", m.py().get_type::<DomainError>())?;
    m.add_function(wrap_pyfunction!(exp_pose, m)?)?;
    m.add_function(wrap_pyfunction!(log_pose, m)?)?;
    m.add_function(wrap_pyfunction!(bracket, m)?)?;
    m.add_function(wrap_pyfunction!(dexp, m)?)?;
    m.add_function(wrap_pyfunction!(dexpinv, m)?)?;
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(magnus_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(geodesic, m)?)?;
    m.add_function(wrap_pyfunction!(min_acceleration, m)?)?;
    m.add_function(wrap_pyfunction!(iv_tip, m)?)?;
    m.add_function(wrap_pyfunction!(bv_tip_cubic, m)?)?;
    m.add_function(wrap_pyfunction!(cubic_terminal_twist, m)?)?;
    Ok(())
}
