//! Reference computations that avoid the library's closed forms: generic
//! matrix exponentials on 4×4 and 8×8 embeddings.
#![allow(dead_code)]

use nalgebra::{Matrix3, Matrix4, SMatrix, Vector3};
use screwmotion::{Pose, Rotation, ScrewVector};

pub fn skew(v: &Vector3<f64>) -> Matrix3<f64> {
    Matrix3::new(0.0, -v.z, v.y, v.z, 0.0, -v.x, -v.y, v.x, 0.0)
}

/// 4×4 embedding of an angular-first screw.
pub fn twist_matrix(x: &ScrewVector) -> Matrix4<f64> {
    let mut m = Matrix4::zeros();
    m.fixed_view_mut::<3, 3>(0, 0).copy_from(&skew(&x.angular()));
    m.fixed_view_mut::<3, 1>(0, 3).copy_from(&x.linear());
    m
}

pub fn untwist(m: &Matrix4<f64>) -> ScrewVector {
    let w = Vector3::new(
        0.5 * (m[(2, 1)] - m[(1, 2)]),
        0.5 * (m[(0, 2)] - m[(2, 0)]),
        0.5 * (m[(1, 0)] - m[(0, 1)]),
    );
    ScrewVector::new(w, m.fixed_view::<3, 1>(0, 3).into_owned())
}

pub fn pose_from_matrix(m: &Matrix4<f64>) -> Pose {
    let r = Rotation::new(m.fixed_view::<3, 3>(0, 0).into_owned()).expect("rotation block");
    Pose::new(r, m.fixed_view::<3, 1>(0, 3).into_owned())
}

/// `exp` through the generic matrix exponential.
pub fn expm_pose(x: &ScrewVector) -> Pose {
    pose_from_matrix(&twist_matrix(x).exp())
}

/// Spatial twist `vee(Ċ C⁻¹)` of `C(t) = exp(X(t))`, with `Ċ` taken from the
/// upper-right block of `exp([[X̂, Ẋ̂], [0, X̂]])`.
pub fn spatial_twist(x: &ScrewVector, xdot: &ScrewVector) -> ScrewVector {
    let a = twist_matrix(x);
    let mut block = SMatrix::<f64, 8, 8>::zeros();
    block.fixed_view_mut::<4, 4>(0, 0).copy_from(&a);
    block.fixed_view_mut::<4, 4>(4, 4).copy_from(&a);
    block.fixed_view_mut::<4, 4>(0, 4).copy_from(&twist_matrix(xdot));
    let e = block.exp();
    let c = e.fixed_view::<4, 4>(0, 0).into_owned();
    let cdot = e.fixed_view::<4, 4>(0, 4).into_owned();
    untwist(&(cdot * c.try_inverse().expect("invertible")))
}

pub fn pose_gap(a: &Pose, b: &Pose) -> f64 {
    (a.to_homogeneous() - b.to_homogeneous()).amax()
}

pub fn seed() -> u64 {
    screwmotion::validate::seed_from_env()
}
