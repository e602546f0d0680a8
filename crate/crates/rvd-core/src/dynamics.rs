//! Rigid-body derivative functions for the target and chaser satellites and
//! the relative kinematics/dynamics of the chaser with respect to the
//! target (or a desired tracking pose).
//!
//! # Frame contract
//!
//! The state of record is inertial: [`RigidBodyState::position`] and
//! [`RigidBodyState::velocity`] are ICRF coordinates in meters and m/s, so
//! the translational kinematics reduce to `p_dot = v` with `v_dot` assembled
//! from forces rotated into the inertial frame. [`RigidBodyState::attitude`]
//! maps body to inertial and [`RigidBodyState::angular_velocity`] is the
//! body-frame rate, with kinematics `B_dot = B * skew(omega)` handled by the
//! integrator. Body-frame transport terms appear only inside the relative
//! dynamics and the control laws, which operate on body-frame resolutions of
//! the same vectors:
//!
//! - relative position error: chaser-minus-target displacement resolved in
//!   the chaser body frame,
//! - relative velocity error: the same resolution of the velocity
//!   difference,
//! - attitude error: the SO(3) logarithm of the reference-to-chaser
//!   relative rotation,
//! - angular-velocity error: chaser rate minus the reference rate expressed
//!   in the chaser frame.
//!
//! Disturbance forces/torques act in the body frame of the satellite they
//! disturb; gravity and J2 are evaluated in the inertial frame.

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::astro::{self, EnvironmentParams, M_PER_KM};
use crate::error::{Error, Result};
use crate::so3::{self, skew_unchecked, RotationMatrix};

/// Translational and rotational state of one satellite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidBodyState {
    /// Position, m, inertial frame.
    pub position: Vector3<f64>,
    /// Velocity, m/s, inertial frame.
    pub velocity: Vector3<f64>,
    /// Attitude rotation matrix, body frame to inertial frame.
    pub attitude: RotationMatrix,
    /// Angular velocity, rad/s, body frame.
    pub angular_velocity: Vector3<f64>,
}

impl RigidBodyState {
    pub fn is_finite(&self) -> bool {
        self.position.iter().all(|x| x.is_finite())
            && self.velocity.iter().all(|x| x.is_finite())
            && self.angular_velocity.iter().all(|x| x.is_finite())
            && self.attitude.matrix().iter().all(|x| x.is_finite())
    }
}

/// Mass properties of one satellite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BodyParams {
    pub mass: f64,
    pub inertia: Matrix3<f64>,
    inertia_inv: Matrix3<f64>,
}

impl BodyParams {
    /// Validates mass positivity and inertia symmetry/positive-definiteness.
    pub fn new(mass: f64, inertia: Matrix3<f64>) -> Result<Self> {
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(Error::InvalidArgument(format!("mass {mass} must be positive")));
        }
        if (inertia - inertia.transpose()).norm() > 1e-12 * (1.0 + inertia.norm()) {
            return Err(Error::InvalidInertia("inertia matrix must be symmetric".into()));
        }
        if inertia.symmetric_eigenvalues().min() <= 0.0 {
            return Err(Error::InvalidInertia(
                "inertia matrix must be positive-definite".into(),
            ));
        }
        let inertia_inv = inertia
            .try_inverse()
            .ok_or_else(|| Error::InvalidInertia("inertia matrix is singular".into()))?;
        Ok(BodyParams {
            mass,
            inertia,
            inertia_inv,
        })
    }

    pub fn inertia_inverse(&self) -> &Matrix3<f64> {
        &self.inertia_inv
    }
}

/// Control force and torque applied to the chaser, in its body frame.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ControlInput {
    /// Force, N, chaser body frame.
    pub force: Vector3<f64>,
    /// Torque, N m, chaser body frame.
    pub torque: Vector3<f64>,
}

impl ControlInput {
    pub fn zero() -> Self {
        Self::default()
    }
}

/// Relative state of the chaser with respect to a reference pose (the
/// target for reporting, or the commanded docking trajectory for control).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct RelativeState {
    /// Relative position error, m, chaser body frame.
    pub position: Vector3<f64>,
    /// Relative velocity error, m/s, chaser body frame.
    pub velocity: Vector3<f64>,
    /// Attitude error as an axis-angle vector, rad (`|v| <= pi`).
    pub attitude: Vector3<f64>,
    /// Angular velocity error, rad/s, chaser body frame.
    pub angular_velocity: Vector3<f64>,
}

/// Time derivative of a rigid-body state. The attitude derivative is implied
/// by `angular_velocity` through `B_dot = B * skew(omega)` and is applied by
/// the integrator.
#[derive(Debug, Clone, Copy)]
pub struct RigidBodyDerivative {
    /// d(position)/dt = velocity, m/s.
    pub velocity: Vector3<f64>,
    /// d(velocity)/dt, m/s^2, inertial frame.
    pub acceleration: Vector3<f64>,
    /// d(angular_velocity)/dt, rad/s^2, body frame.
    pub angular_acceleration: Vector3<f64>,
}

/// Derivative of the uncontrolled target under gravity, J2, gravity-gradient
/// torque, and the configured disturbances.
///
/// Inertial record: `p_dot = v`; the acceleration is gravity (inertial) plus
/// the body-frame disturbance force rotated into the inertial frame. The
/// rotational channel is the Euler equation in the body frame.
pub fn target_derivative(
    state: &RigidBodyState,
    body: &BodyParams,
    env: &EnvironmentParams,
    t: f64,
) -> RigidBodyDerivative {
    let gravity = astro::gravity_j2_accel_si(&state.position, env);
    let dist_force = env.disturbance_force(t);
    let acceleration = gravity + state.attitude.rotate(&dist_force) / body.mass;

    let torque = gravity_gradient_torque_si(state, body, env) + env.disturbance_torque(t);
    let omega = state.angular_velocity;
    let angular_acceleration =
        body.inertia_inverse() * (-omega.cross(&(body.inertia * omega)) + torque);

    RigidBodyDerivative {
        velocity: state.velocity,
        acceleration,
        angular_acceleration,
    }
}

/// Derivative of the controlled chaser: the target dynamics plus the control
/// force/torque applied in the chaser body frame.
pub fn chaser_derivative(
    state: &RigidBodyState,
    body: &BodyParams,
    control: &ControlInput,
    env: &EnvironmentParams,
    t: f64,
) -> RigidBodyDerivative {
    let mut d = target_derivative(state, body, env, t);
    d.acceleration += state.attitude.rotate(&control.force) / body.mass;
    d.angular_acceleration += body.inertia_inverse() * control.torque;
    d
}

/// Gravity-gradient torque in SI units for a state held in meters.
pub fn gravity_gradient_torque_si(
    state: &RigidBodyState,
    body: &BodyParams,
    env: &EnvironmentParams,
) -> Vector3<f64> {
    let p_km = state.position / M_PER_KM;
    astro::gravity_gradient_torque(&state.attitude, &p_km, &body.inertia, env)
        .unwrap_or_else(|_| Vector3::zeros())
}

/// Relative state of `chaser` with respect to `reference` (exact evaluation
/// of the four error definitions, with the reference-to-chaser rotation
/// `(B_c)^T B_ref`).
pub fn relative_state(chaser: &RigidBodyState, reference: &RigidBodyState) -> RelativeState {
    let b_c_t = chaser.attitude.transpose();
    let rel_rot = reference.attitude.transpose().compose(&chaser.attitude);
    let attitude = so3::log(&rel_rot).unwrap_or_else(|_| {
        // Integration keeps attitudes within tolerance; re-orthonormalize
        // defensively if a caller hands in a drifted matrix.
        let fixed = so3::orthonormalize(rel_rot.matrix()).expect("attitude defect");
        so3::log(&fixed).expect("canonical log")
    });
    let ref_to_chaser = b_c_t.compose(&reference.attitude);
    RelativeState {
        position: b_c_t.rotate(&(chaser.position - reference.position)),
        velocity: b_c_t.rotate(&(chaser.velocity - reference.velocity)),
        attitude,
        angular_velocity: chaser.angular_velocity
            - ref_to_chaser.rotate(&reference.angular_velocity),
    }
}

/// Exact time derivative of the relative position error.
///
/// Differentiating the chaser-frame resolution of the displacement gives
/// `e_p_dot = e_v - omega_c x e_p` (the transport term of the rotating
/// chaser frame).
pub fn relative_position_rate(rel: &RelativeState, chaser_omega: &Vector3<f64>) -> Vector3<f64> {
    rel.velocity - chaser_omega.cross(&rel.position)
}

/// Rate of the attitude error vector.
///
/// The relative rotation satisfies `R_dot = R * skew(e_omega)`, so the exact
/// log derivative is `jr_inv(e_r) * e_omega`. The controller identifies the
/// rate with `e_omega` itself by default (first-order in `|e_r|`); set
/// `exact` for the right-Jacobian correction.
pub fn attitude_error_rate(rel: &RelativeState, exact: bool) -> Vector3<f64> {
    if exact {
        so3::right_jacobian_inverse(&rel.attitude) * rel.angular_velocity
    } else {
        rel.angular_velocity
    }
}

/// Relative translational dynamics: the time derivative of the relative
/// velocity error for the true plant.
///
/// Derived by differentiating the chaser-frame velocity error under the
/// inertial equations of motion:
///
/// ```text
/// e_v_dot = -omega_c x e_v
///           + [F_c + F_j2,c + F_dc] / M_c
///           - R_tc [F_j2,t + F_dt] / M_t
/// ```
///
/// with every force resolved in the frame of the satellite it acts on and
/// `R_tc` the target-to-chaser rotation. The target's gravity term appears
/// alongside its disturbance: both enter through the target's acceleration.
pub fn relative_translational_dynamics(
    rel: &RelativeState,
    chaser: &RigidBodyState,
    target: &RigidBodyState,
    body_c: &BodyParams,
    body_t: &BodyParams,
    control: &ControlInput,
    env: &EnvironmentParams,
    t: f64,
) -> Vector3<f64> {
    let b_c_t = chaser.attitude.transpose();
    // Chaser forces in its own body frame.
    let gravity_c = b_c_t.rotate(&astro::gravity_j2_accel_si(&chaser.position, env));
    let accel_c = gravity_c + (env.disturbance_force(t) + control.force) / body_c.mass;
    // Target acceleration resolved in the chaser frame.
    let gravity_t = astro::gravity_j2_accel_si(&target.position, env);
    let dist_t = target.attitude.rotate(&env.disturbance_force(t)) / body_t.mass;
    let accel_t = b_c_t.rotate(&(gravity_t + dist_t));

    -chaser.angular_velocity.cross(&rel.velocity) + accel_c - accel_t
}

/// Relative rotational dynamics: the time derivative of the angular-velocity
/// error against a desired attitude trajectory.
///
/// `rel.angular_velocity` must be the error against the same desired frame
/// described by `b_d_c` (desired-to-chaser rotation), `desired_omega` and
/// `desired_omega_dot` (desired frame rates). Evaluates
///
/// ```text
/// e_omega_dot = omega_c_dot + e_omega x (R_dc omega_d) - R_dc omega_d_dot
/// ```
///
/// where `omega_c_dot` comes from the chaser Euler equation under `control`,
/// and the cross term uses the identity
/// `omega_c x (R_dc omega_d) = e_omega x (R_dc omega_d)`.
#[allow(clippy::too_many_arguments)]
pub fn relative_rotational_dynamics(
    rel: &RelativeState,
    chaser: &RigidBodyState,
    desired_omega: &Vector3<f64>,
    desired_omega_dot: &Vector3<f64>,
    b_d_c: &RotationMatrix,
    body_c: &BodyParams,
    control: &ControlInput,
    env: &EnvironmentParams,
    t: f64,
) -> Vector3<f64> {
    let omega = chaser.angular_velocity;
    let torque = gravity_gradient_torque_si(chaser, body_c, env)
        + env.disturbance_torque(t)
        + control.torque;
    let omega_dot = body_c.inertia_inverse() * (-omega.cross(&(body_c.inertia * omega)) + torque);

    let omega_d_in_c = b_d_c.rotate(desired_omega);
    omega_dot + rel.angular_velocity.cross(&omega_d_in_c) - b_d_c.rotate(desired_omega_dot)
}

/// Skew re-export used by the controller's term-by-term law evaluation.
pub(crate) fn skew3(v: &Vector3<f64>) -> Matrix3<f64> {
    skew_unchecked(v)
}
