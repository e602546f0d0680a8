//! Rotation-group primitives on SO(3).
//!
//! Attitude is represented everywhere as a proper rotation matrix wrapped in
//! [`RotationMatrix`]. Axis-angle vectors (`Vector3<f64>`, radians) serve as
//! the tangent-space representation: the direction is the rotation axis and
//! the magnitude is the angle. The exponential and logarithm maps convert
//! between the two, with dedicated small-angle and near-pi branches.
//!
//! # Euler convention
//!
//! `to_euler` / `from_euler` use the intrinsic Z-Y-X (yaw-pitch-roll)
//! convention and report the triple as `(roll, pitch, yaw)`:
//!
//! ```text
//! R = Rz(yaw) * Ry(pitch) * Rx(roll)
//! ```
//!
//! A rotation by -pi about z therefore reports as `(0, 0, -pi)`. Every Euler
//! triple emitted by the toolkit (logs, plot files, summaries) uses this
//! convention; comparisons of angle triples are only meaningful under it.
//!
//! At the pitch singularity (`|pitch| = pi/2`) only the sum/difference of
//! roll and yaw is observable; the yaw component is set to zero and the
//! remaining rotation is reported as roll.

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};

/// Tolerance on `|R^T R - I|_F` and `|det R - 1|` for a valid rotation.
pub const ROTATION_TOL: f64 = 1e-9;

/// Angles below this are handled by series expansions in `exp`/`log`.
const SMALL_ANGLE: f64 = 1e-6;

/// Angles above `pi - NEAR_PI` use the largest-diagonal axis extraction.
const NEAR_PI: f64 = 1e-4;

/// A proper rotation matrix (orthonormal, determinant +1).
///
/// The wrapped matrix maps body-frame coordinates to the parent frame for
/// attitude states (`B` matrices), but the type itself is frame-agnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationMatrix(Matrix3<f64>);

impl RotationMatrix {
    /// Identity rotation.
    pub fn identity() -> Self {
        RotationMatrix(Matrix3::identity())
    }

    /// Validates orthonormality and determinant before wrapping.
    pub fn from_matrix(m: Matrix3<f64>) -> Result<Self> {
        let defect = (m.transpose() * m - Matrix3::identity()).norm();
        if !defect.is_finite() || defect > ROTATION_TOL {
            return Err(Error::InvalidRotation(format!(
                "orthonormality defect {defect:.3e} exceeds {ROTATION_TOL:.0e}"
            )));
        }
        let det = m.determinant();
        if (det - 1.0).abs() > ROTATION_TOL {
            return Err(Error::InvalidRotation(format!(
                "determinant {det} is not +1 within {ROTATION_TOL:.0e}"
            )));
        }
        Ok(RotationMatrix(m))
    }

    /// Wraps without validation. The caller guarantees the invariants.
    pub fn from_matrix_unchecked(m: Matrix3<f64>) -> Self {
        RotationMatrix(m)
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.0
    }

    /// Inverse rotation (transpose).
    pub fn transpose(&self) -> Self {
        RotationMatrix(self.0.transpose())
    }

    /// Applies the rotation to a vector.
    pub fn rotate(&self, v: &Vector3<f64>) -> Vector3<f64> {
        self.0 * v
    }

    /// Applies the inverse rotation to a vector.
    pub fn rotate_back(&self, v: &Vector3<f64>) -> Vector3<f64> {
        self.0.transpose() * v
    }

    /// Composition `self * other`.
    pub fn compose(&self, other: &Self) -> Self {
        RotationMatrix(self.0 * other.0)
    }

    /// Frobenius norm of `R^T R - I`.
    pub fn orthonormality_defect(&self) -> f64 {
        (self.0.transpose() * self.0 - Matrix3::identity()).norm()
    }

    /// True when both rotation invariants hold within [`ROTATION_TOL`].
    pub fn is_valid(&self) -> bool {
        self.orthonormality_defect() <= ROTATION_TOL
            && (self.0.determinant() - 1.0).abs() <= ROTATION_TOL
    }
}

impl std::ops::Mul for RotationMatrix {
    type Output = RotationMatrix;
    fn mul(self, rhs: RotationMatrix) -> RotationMatrix {
        self.compose(&rhs)
    }
}

/// Skew-symmetric (cross-product) matrix of a vector.
///
/// `skew(a) * b == a x b` for all `b`. Layout:
///
/// ```text
/// [   0  -a.z   a.y ]
/// [  a.z    0  -a.x ]
/// [ -a.y   a.x    0 ]
/// ```
pub fn skew(v: &Vector3<f64>) -> Result<Matrix3<f64>> {
    if !(v.x.is_finite() && v.y.is_finite() && v.z.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "skew requires finite components, got {v:?}"
        )));
    }
    Ok(skew_unchecked(v))
}

/// Infallible skew for internal use on already-validated state.
pub(crate) fn skew_unchecked(v: &Vector3<f64>) -> Matrix3<f64> {
    Matrix3::new(0.0, -v.z, v.y, v.z, 0.0, -v.x, -v.y, v.x, 0.0)
}

/// Exponential map: axis-angle vector to rotation matrix (Rodrigues form).
///
/// Uses the series expansions of `sin(t)/t` and `(1-cos(t))/t^2` below
/// `1e-6` rad so the map is smooth through zero.
pub fn exp(v: &Vector3<f64>) -> Result<RotationMatrix> {
    if !(v.x.is_finite() && v.y.is_finite() && v.z.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "exp requires finite components, got {v:?}"
        )));
    }
    Ok(exp_unchecked(v))
}

pub(crate) fn exp_unchecked(v: &Vector3<f64>) -> RotationMatrix {
    let theta2 = v.norm_squared();
    let theta = theta2.sqrt();
    let k = skew_unchecked(v);
    // a = sin(t)/t, b = (1-cos(t))/t^2
    let (a, b) = if theta < SMALL_ANGLE {
        (
            1.0 - theta2 / 6.0 * (1.0 - theta2 / 20.0),
            0.5 * (1.0 - theta2 / 12.0 * (1.0 - theta2 / 30.0)),
        )
    } else {
        (theta.sin() / theta, (1.0 - theta.cos()) / theta2)
    };
    RotationMatrix(Matrix3::identity() + a * k + b * (k * k))
}

/// Logarithm map: rotation matrix to principal axis-angle vector.
///
/// The returned vector satisfies `|v| <= pi`. The angle comes from the
/// trace; the axis from the antisymmetric part, with a series branch near
/// zero and a largest-diagonal extraction branch near pi. At exactly pi the
/// axis sign is chosen so its largest-magnitude component is positive.
pub fn log(r: &RotationMatrix) -> Result<Vector3<f64>> {
    if !r.is_valid() {
        return Err(Error::InvalidRotation(format!(
            "log requires a valid rotation, defect {:.3e}",
            r.orthonormality_defect()
        )));
    }
    let m = &r.0;
    let trace = m[(0, 0)] + m[(1, 1)] + m[(2, 2)];
    let cos_theta = ((trace - 1.0) / 2.0).clamp(-1.0, 1.0);
    let theta = cos_theta.acos();

    // vee(R - R^T) / 2 = sin(theta) * axis
    let w = Vector3::new(
        (m[(2, 1)] - m[(1, 2)]) / 2.0,
        (m[(0, 2)] - m[(2, 0)]) / 2.0,
        (m[(1, 0)] - m[(0, 1)]) / 2.0,
    );

    if theta < SMALL_ANGLE {
        // v = w * theta/sin(theta) ~ w * (1 + t^2/6 + 7 t^4/360)
        let t2 = theta * theta;
        return Ok(w * (1.0 + t2 / 6.0 + 7.0 * t2 * t2 / 360.0));
    }

    if theta < std::f64::consts::PI - NEAR_PI {
        return Ok(w * (theta / theta.sin()));
    }

    // Near pi: sin(theta) is tiny, recover the axis from the symmetric part
    // R + I = 2 (cos(theta) I + (1-cos(theta)) aa^T) + antisym; use the
    // largest diagonal of aa^T ~ (R + I) / (1 + cos is near 0) for stability.
    let one_minus = 1.0 - cos_theta; // close to 2
    let diag = [
        (m[(0, 0)] - cos_theta) / one_minus,
        (m[(1, 1)] - cos_theta) / one_minus,
        (m[(2, 2)] - cos_theta) / one_minus,
    ];
    let i = if diag[0] >= diag[1] && diag[0] >= diag[2] {
        0
    } else if diag[1] >= diag[2] {
        1
    } else {
        2
    };
    let mut axis = Vector3::zeros();
    axis[i] = diag[i].max(0.0).sqrt();
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    axis[j] = (m[(i, j)] + m[(j, i)]) / (2.0 * one_minus * axis[i]);
    axis[k] = (m[(i, k)] + m[(k, i)]) / (2.0 * one_minus * axis[i]);
    axis.normalize_mut();

    // Orient the axis: with sin(theta) still meaningful, match w; at the
    // antipode make the largest-magnitude component positive (deterministic).
    let sin_theta = theta.sin();
    if sin_theta.abs() > 1e-12 && w.norm() > 1e-12 {
        if axis.dot(&w) < 0.0 {
            axis = -axis;
        }
    } else {
        let mut big = 0;
        for c in 1..3 {
            if axis[c].abs() > axis[big].abs() {
                big = c;
            }
        }
        if axis[big] < 0.0 {
            axis = -axis;
        }
    }
    Ok(axis * theta)
}

/// Wraps an axis-angle vector to its principal representation (`|v| <= pi`).
pub fn canonicalize(v: &Vector3<f64>) -> Vector3<f64> {
    let theta = v.norm();
    if theta <= std::f64::consts::PI || theta == 0.0 {
        return *v;
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let wrapped = theta - two_pi * (theta / two_pi).round();
    v * (wrapped / theta)
}

/// Euler angles `(roll, pitch, yaw)` of a rotation under the intrinsic
/// Z-Y-X convention (`R = Rz(yaw) Ry(pitch) Rx(roll)`).
///
/// Within `1e-9` of the pitch singularity the yaw is set to zero and the
/// residual rotation is absorbed into roll.
pub fn to_euler(r: &RotationMatrix) -> Vector3<f64> {
    let m = &r.0;
    let sin_pitch = (-m[(2, 0)]).clamp(-1.0, 1.0);
    let pitch = sin_pitch.asin();
    if (sin_pitch.abs() - 1.0).abs() < 1e-9 {
        // Gimbal lock: R reduces to Rz(yaw -/+ roll) Ry(+-pi/2); set yaw = 0.
        let roll = (-sin_pitch * m[(0, 1)]).atan2(m[(1, 1)]);
        return Vector3::new(roll, pitch, 0.0);
    }
    let roll = m[(2, 1)].atan2(m[(2, 2)]);
    let yaw = m[(1, 0)].atan2(m[(0, 0)]);
    Vector3::new(roll, pitch, yaw)
}

/// Builds a rotation from `(roll, pitch, yaw)` under the same Z-Y-X
/// convention as [`to_euler`].
pub fn from_euler(angles: &Vector3<f64>) -> RotationMatrix {
    let (roll, pitch, yaw) = (angles.x, angles.y, angles.z);
    let rz = Matrix3::new(
        yaw.cos(),
        -yaw.sin(),
        0.0,
        yaw.sin(),
        yaw.cos(),
        0.0,
        0.0,
        0.0,
        1.0,
    );
    let ry = Matrix3::new(
        pitch.cos(),
        0.0,
        pitch.sin(),
        0.0,
        1.0,
        0.0,
        -pitch.sin(),
        0.0,
        pitch.cos(),
    );
    let rx = Matrix3::new(
        1.0,
        0.0,
        0.0,
        0.0,
        roll.cos(),
        -roll.sin(),
        0.0,
        roll.sin(),
        roll.cos(),
    );
    RotationMatrix(rz * ry * rx)
}

/// Projects a matrix with positive determinant onto the nearest rotation
/// (polar decomposition via SVD). Idempotent on valid rotations.
pub fn orthonormalize(m: &Matrix3<f64>) -> Result<RotationMatrix> {
    let det = m.determinant();
    if !det.is_finite() || det <= 0.0 {
        return Err(Error::DegenerateMatrix(format!(
            "determinant {det} is not positive"
        )));
    }
    let svd = m.svd(true, true);
    let u = svd.u.ok_or_else(|| Error::DegenerateMatrix("SVD failed".into()))?;
    let v_t = svd
        .v_t
        .ok_or_else(|| Error::DegenerateMatrix("SVD failed".into()))?;
    let mut r = u * v_t;
    if r.determinant() < 0.0 {
        // Flip the singular direction with the smallest singular value.
        let mut u2 = u;
        u2.column_mut(2).neg_mut();
        r = u2 * v_t;
    }
    Ok(RotationMatrix(r))
}

/// Inverse of the right Jacobian of the exponential map.
///
/// Maps the rate of change of the log-map vector to the body angular
/// velocity: `d/dt log(R) = jr_inv(log R) * omega`. Used by the optional
/// exact log-derivative mode of the controller; the first-order
/// identification drops this correction entirely.
pub fn right_jacobian_inverse(v: &Vector3<f64>) -> Matrix3<f64> {
    let theta2 = v.norm_squared();
    let theta = theta2.sqrt();
    let k = skew_unchecked(v);
    let coeff = if theta < SMALL_ANGLE {
        1.0 / 12.0 + theta2 / 720.0
    } else {
        (1.0 / theta2) - (1.0 + theta.cos()) / (2.0 * theta * theta.sin())
    };
    Matrix3::identity() + 0.5 * k + coeff * (k * k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    /// Independent Rodrigues oracle: cos(t) I + sin(t) K + (1-cos(t)) aa^T.
    fn rodrigues_oracle(axis: &Vector3<f64>, angle: f64) -> Matrix3<f64> {
        let a = axis.normalize();
        let k = skew_unchecked(&a);
        Matrix3::identity() * angle.cos()
            + k * angle.sin()
            + (a * a.transpose()) * (1.0 - angle.cos())
    }

    fn random_axis_angle(rng: &mut impl Rng, max_angle: f64) -> Vector3<f64> {
        loop {
            let v = Vector3::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            );
            let n = v.norm();
            if n > 1e-3 {
                return v / n * rng.gen_range(1e-6..max_angle);
            }
        }
    }

    #[test]
    fn skew_zero_is_zero_matrix() {
        assert_eq!(skew(&Vector3::zeros()).unwrap(), Matrix3::zeros());
    }

    #[test]
    fn skew_matches_printed_layout() {
        let m = skew(&Vector3::new(1.0, 2.0, 3.0)).unwrap();
        let expected = Matrix3::new(0.0, -3.0, 2.0, 3.0, 0.0, -1.0, -2.0, 1.0, 0.0);
        assert_eq!(m, expected);
    }

    #[test]
    fn skew_equals_cross_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let a = Vector3::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5) * 10.0;
            let b = Vector3::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5) * 10.0;
            let diff = (skew_unchecked(&a) * b - a.cross(&b)).amax();
            assert!(diff < 1e-12, "skew/cross mismatch {diff}");
        }
    }

    #[test]
    fn skew_rejects_non_finite() {
        assert!(skew(&Vector3::new(f64::NAN, 0.0, 0.0)).is_err());
        assert!(exp(&Vector3::new(f64::INFINITY, 0.0, 0.0)).is_err());
    }

    #[test]
    fn exp_zero_is_identity() {
        let r = exp(&Vector3::zeros()).unwrap();
        assert_eq!(*r.matrix(), Matrix3::identity());
    }

    #[test]
    fn exp_quarter_turn_about_z_maps_x_to_y() {
        let r = exp(&Vector3::new(0.0, 0.0, PI / 2.0)).unwrap();
        let y = r.rotate(&Vector3::x());
        assert_relative_eq!(y.x, 0.0, epsilon = 1e-12);
        assert_relative_eq!(y.y, 1.0, epsilon = 1e-12);
        // Cross-check against the independent Rodrigues construction.
        let oracle = rodrigues_oracle(&Vector3::z(), PI / 2.0);
        assert!((r.matrix() - oracle).norm() < 1e-12);
    }

    #[test]
    fn exp_matches_rodrigues_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let v = random_axis_angle(&mut rng, PI - 1e-3);
            let r = exp(&v).unwrap();
            let oracle = rodrigues_oracle(&v.normalize(), v.norm());
            assert!((r.matrix() - oracle).norm() < 1e-12);
            assert!(r.is_valid());
        }
    }

    #[test]
    fn log_identity_is_zero() {
        assert_eq!(log(&RotationMatrix::identity()).unwrap(), Vector3::zeros());
    }

    #[test]
    fn log_half_turn_about_z() {
        let r = RotationMatrix::from_matrix_unchecked(rodrigues_oracle(&Vector3::z(), PI));
        let v = log(&r).unwrap();
        // Axis sign is canonical (largest component positive) at the antipode.
        assert_relative_eq!(v.norm(), PI, epsilon = 1e-9);
        assert_relative_eq!(v.z.abs(), PI, epsilon = 1e-9);
        assert!(v.z > 0.0);
    }

    #[test]
    fn exp_log_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let v = random_axis_angle(&mut rng, PI - 1e-3);
            let back = log(&exp(&v).unwrap()).unwrap();
            assert!((back - v).norm() < 1e-9, "roundtrip error {:e}", (back - v).norm());
        }
    }

    #[test]
    fn log_exp_roundtrip_on_rotations() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let v = random_axis_angle(&mut rng, PI - 1e-3);
            let r = exp(&v).unwrap();
            let r2 = exp(&log(&r).unwrap()).unwrap();
            assert!((r.matrix() - r2.matrix()).norm() < 1e-9);
        }
    }

    #[test]
    fn log_near_pi_branch_is_accurate() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..50 {
            let v = random_axis_angle(&mut rng, 1.0).normalize() * (PI - 1e-6);
            let back = log(&exp(&v).unwrap()).unwrap();
            // Sign of the axis may flip at the antipode; compare as rotations.
            let err = (exp(&back).unwrap().matrix() - exp(&v).unwrap().matrix()).norm();
            assert!(err < 1e-9, "near-pi log error {err:e}");
        }
    }

    #[test]
    fn log_rejects_invalid_matrix() {
        let bad = RotationMatrix::from_matrix_unchecked(Matrix3::identity() * 1.1);
        assert!(matches!(log(&bad), Err(Error::InvalidRotation(_))));
    }

    #[test]
    fn euler_identity_is_zero() {
        assert_eq!(to_euler(&RotationMatrix::identity()), Vector3::zeros());
    }

    #[test]
    fn euler_of_minus_pi_about_z() {
        let r = exp(&Vector3::new(0.0, 0.0, -PI)).unwrap();
        let e = to_euler(&r);
        assert_relative_eq!(e.x, 0.0, epsilon = 1e-9);
        assert_relative_eq!(e.y, 0.0, epsilon = 1e-9);
        assert_relative_eq!(e.z.abs(), PI, epsilon = 1e-9);
    }

    #[test]
    fn euler_roundtrip_away_from_gimbal_lock() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100 {
            let angles = Vector3::new(
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-1.4..1.4),
                rng.gen_range(-3.0..3.0),
            );
            let r = from_euler(&angles);
            assert!(r.is_valid());
            let back = to_euler(&r);
            assert!((back - angles).norm() < 1e-9, "euler roundtrip {:?} -> {:?}", angles, back);
        }
    }

    #[test]
    fn euler_gimbal_lock_sets_yaw_to_zero() {
        let angles = Vector3::new(0.3, PI / 2.0, 0.2);
        let r = from_euler(&angles);
        let e = to_euler(&r);
        assert_eq!(e.z, 0.0);
        // The reported triple must reproduce the same rotation.
        let r2 = from_euler(&e);
        assert!((r.matrix() - r2.matrix()).norm() < 1e-9);
    }

    #[test]
    fn orthonormalize_is_identity_on_rotations() {
        let r = exp(&Vector3::new(0.4, -0.2, 0.9)).unwrap();
        let fixed = orthonormalize(r.matrix()).unwrap();
        assert!((fixed.matrix() - r.matrix()).norm() < 1e-12);
    }

    #[test]
    fn orthonormalize_repairs_small_perturbations() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..50 {
            let r = exp(&random_axis_angle(&mut rng, 3.0)).unwrap();
            let mut noisy = *r.matrix();
            for i in 0..3 {
                for j in 0..3 {
                    noisy[(i, j)] += 1e-6 * (rng.gen::<f64>() - 0.5);
                }
            }
            let fixed = orthonormalize(&noisy).unwrap();
            assert!(fixed.is_valid());
            assert!((fixed.matrix() - r.matrix()).norm() < 1e-5);
            // Polar characterization: fixed^T * noisy must be symmetric
            // positive-definite, which pins `fixed` as the nearest rotation.
            let p = fixed.matrix().transpose() * noisy;
            assert!((p - p.transpose()).norm() < 1e-9);
            assert!(p.symmetric_eigenvalues().min() > 0.0);
        }
    }

    #[test]
    fn orthonormalize_rejects_zero_matrix() {
        assert!(matches!(
            orthonormalize(&Matrix3::zeros()),
            Err(Error::DegenerateMatrix(_))
        ));
    }

    #[test]
    fn canonicalize_wraps_long_vectors() {
        let v = Vector3::new(0.0, 0.0, 1.5 * PI);
        let w = canonicalize(&v);
        assert!(w.norm() <= PI + 1e-12);
        // Same rotation.
        assert!((exp(&v).unwrap().matrix() - exp(&w).unwrap().matrix()).norm() < 1e-12);
    }

    #[test]
    fn right_jacobian_inverse_matches_log_derivative() {
        // d/dt log(R(t)) with R(t) = R0 * exp(t*omega) at t=0, central difference.
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..20 {
            let v = random_axis_angle(&mut rng, 2.5);
            let omega = random_axis_angle(&mut rng, 1.0);
            let r0 = exp(&v).unwrap();
            let h = 1e-6;
            let plus = log(&r0.compose(&exp_unchecked(&(omega * h)))).unwrap();
            let minus = log(&r0.compose(&exp_unchecked(&(omega * -h)))).unwrap();
            let fd = (plus - minus) / (2.0 * h);
            let analytic = right_jacobian_inverse(&v) * omega;
            assert!((fd - analytic).norm() < 1e-6 * (1.0 + analytic.norm()));
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn vec3(max: f64) -> impl Strategy<Value = Vector3<f64>> {
            (-max..max, -max..max, -max..max).prop_map(|(x, y, z)| Vector3::new(x, y, z))
        }

        proptest! {
            #[test]
            fn skew_is_linear_and_annihilates_self(a in vec3(10.0), b in vec3(10.0)) {
                let lhs = skew_unchecked(&(a + b));
                let rhs = skew_unchecked(&a) + skew_unchecked(&b);
                prop_assert!((lhs - rhs).norm() < 1e-12);
                prop_assert!((skew_unchecked(&a) * a).norm() < 1e-12 * (1.0 + a.norm_squared()));
            }

            #[test]
            fn exp_always_yields_valid_rotation(v in vec3(3.0)) {
                let r = exp(&v).unwrap();
                prop_assert!(r.is_valid());
            }

            #[test]
            fn log_norm_is_at_most_pi(v in vec3(3.0)) {
                let r = exp(&v).unwrap();
                let w = log(&r).unwrap();
                prop_assert!(w.norm() <= std::f64::consts::PI + 1e-12);
            }
        }
    }
}
