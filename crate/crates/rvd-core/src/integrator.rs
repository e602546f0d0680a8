//! Fixed-step explicit integration of coupled translational/rotational
//! states, impulsive velocity changes, and event-located propagation.
//!
//! The classical RK4 scheme advances the vector part of each rigid-body
//! state (position, velocity, body rate). The attitude is advanced on the
//! rotation manifold, either by an exponential-map update built from the
//! RK4 stage combination of the body rate (default) or by integrating the
//! matrix ODE `B_dot = B skew(omega)` directly and re-orthonormalizing.
//! Both modes repair orthonormality drift after every step.

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::dynamics::{RigidBodyDerivative, RigidBodyState};
use crate::error::{Error, Result};
use crate::so3::{self, skew_unchecked, RotationMatrix};

/// Attitude propagation scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum AttitudeUpdate {
    /// `B <- B * exp(h * omega_eff)` with `omega_eff` from the RK4 stage
    /// combination of the body rate. Stays on SO(3) by construction.
    #[default]
    ExpMap,
    /// Integrate the nine matrix entries with RK4, then project back onto
    /// SO(3) by polar decomposition.
    MatrixOdeWithReorthonormalization,
}

/// Fixed-step integrator configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegratorConfig {
    /// Step size, s.
    pub step: f64,
    #[serde(default)]
    pub attitude_update: AttitudeUpdate,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        IntegratorConfig {
            step: 1.0,
            attitude_update: AttitudeUpdate::ExpMap,
        }
    }
}

impl IntegratorConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.step > 0.0) || !self.step.is_finite() {
            return Err(Error::Schema("integrator.step must be positive".into()));
        }
        Ok(())
    }
}

/// Derivative of a multi-body system at time `t`. Implementations write one
/// [`RigidBodyDerivative`] per body into `out`.
pub trait System {
    fn derivative(&self, t: f64, states: &[RigidBodyState], out: &mut Vec<RigidBodyDerivative>);
}

impl<F> System for F
where
    F: Fn(f64, &[RigidBodyState], &mut Vec<RigidBodyDerivative>),
{
    fn derivative(&self, t: f64, states: &[RigidBodyState], out: &mut Vec<RigidBodyDerivative>) {
        self(t, states, out)
    }
}

/// One classical RK4 step on a plain vector ODE `y' = f(t, y)`.
///
/// Shared Runge-Kutta core; the rigid-body stepper applies the same stage
/// arithmetic to the vector part of each body state.
pub fn rk4_step_vec<F>(f: &F, t: f64, y: &[f64], h: f64) -> Vec<f64>
where
    F: Fn(f64, &[f64]) -> Vec<f64>,
{
    let n = y.len();
    let k1 = f(t, y);
    let mut y2 = vec![0.0; n];
    for i in 0..n {
        y2[i] = y[i] + 0.5 * h * k1[i];
    }
    let k2 = f(t + 0.5 * h, &y2);
    let mut y3 = vec![0.0; n];
    for i in 0..n {
        y3[i] = y[i] + 0.5 * h * k2[i];
    }
    let k3 = f(t + 0.5 * h, &y3);
    let mut y4 = vec![0.0; n];
    for i in 0..n {
        y4[i] = y[i] + h * k3[i];
    }
    let k4 = f(t + h, &y4);
    let mut out = vec![0.0; n];
    for i in 0..n {
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

/// Scratch buffers reused across steps to keep the hot loop allocation-free.
#[derive(Default)]
pub struct StepScratch {
    k: [Vec<RigidBodyDerivative>; 4],
    stage: Vec<RigidBodyState>,
}

/// One RK4 step of a multi-body rigid system from `t` to `t + h`.
///
/// Attitude at the internal stages is approximated by
/// `B(t + c h) = B(t) * exp(c h * omega_stage)`; the final attitude follows
/// the configured [`AttitudeUpdate`]. Non-finite derivatives abort with an
/// integration-failure error carrying `t`.
pub fn rk4_step<S: System>(
    system: &S,
    t: f64,
    states: &[RigidBodyState],
    h: f64,
    cfg: &IntegratorConfig,
    scratch: &mut StepScratch,
) -> Result<Vec<RigidBodyState>> {
    let n = states.len();
    scratch.stage.clear();
    scratch.stage.extend_from_slice(states);

    // Matrix-ODE mode integrates the attitude entries alongside; collect the
    // stage attitude derivatives as B * skew(omega).
    let mut b_stages: Vec<[Matrix3<f64>; 4]> = Vec::new();
    if cfg.attitude_update == AttitudeUpdate::MatrixOdeWithReorthonormalization {
        b_stages.resize(n, [Matrix3::zeros(); 4]);
    }

    let coeffs = [0.0, 0.5, 0.5, 1.0];
    for s in 0..4 {
        let ts = t + coeffs[s] * h;
        if s > 0 {
            let c = coeffs[s] * h;
            for (i, base) in states.iter().enumerate() {
                let prev = &scratch.k[s - 1][i];
                let omega_stage = base.angular_velocity + c * prev.angular_acceleration;
                scratch.stage[i] = RigidBodyState {
                    position: base.position + c * prev.velocity,
                    velocity: base.velocity + c * prev.acceleration,
                    attitude: stage_attitude(base, c, cfg),
                    angular_velocity: omega_stage,
                };
            }
        }
        let (head, tail) = scratch.k.split_at_mut(s);
        let _ = head;
        tail[0].clear();
        system.derivative(ts, &scratch.stage, &mut tail[0]);
        if tail[0].len() != n {
            return Err(Error::IntegrationFailure {
                t: ts,
                reason: format!("derivative returned {} bodies, expected {n}", tail[0].len()),
            });
        }
        for (i, d) in tail[0].iter().enumerate() {
            if !(d.velocity.iter().all(|x| x.is_finite())
                && d.acceleration.iter().all(|x| x.is_finite())
                && d.angular_acceleration.iter().all(|x| x.is_finite()))
            {
                return Err(Error::IntegrationFailure {
                    t: ts,
                    reason: format!("non-finite derivative for body {i}"),
                });
            }
            if !b_stages.is_empty() {
                b_stages[i][s] =
                    scratch.stage[i].attitude.matrix() * skew_unchecked(&scratch.stage[i].angular_velocity);
            }
        }
    }

    let mut next = Vec::with_capacity(n);
    for i in 0..n {
        let (k1, k2, k3, k4) = (
            &scratch.k[0][i],
            &scratch.k[1][i],
            &scratch.k[2][i],
            &scratch.k[3][i],
        );
        let position = states[i].position
            + h / 6.0 * (k1.velocity + 2.0 * k2.velocity + 2.0 * k3.velocity + k4.velocity);
        let velocity = states[i].velocity
            + h / 6.0
                * (k1.acceleration
                    + 2.0 * k2.acceleration
                    + 2.0 * k3.acceleration
                    + k4.acceleration);
        let angular_velocity = states[i].angular_velocity
            + h / 6.0
                * (k1.angular_acceleration
                    + 2.0 * k2.angular_acceleration
                    + 2.0 * k3.angular_acceleration
                    + k4.angular_acceleration);

        let attitude = match cfg.attitude_update {
            AttitudeUpdate::ExpMap => {
                // Stage combination of the body rate drives the exp update.
                let w1 = states[i].angular_velocity;
                let w2 = states[i].angular_velocity + 0.5 * h * k1.angular_acceleration;
                let w3 = states[i].angular_velocity + 0.5 * h * k2.angular_acceleration;
                let w4 = states[i].angular_velocity + h * k3.angular_acceleration;
                let omega_eff = (w1 + 2.0 * w2 + 2.0 * w3 + w4) / 6.0;
                let step_rot = so3::exp_unchecked(&(omega_eff * h));
                fast_reorthonormalize(states[i].attitude.compose(&step_rot))
            }
            AttitudeUpdate::MatrixOdeWithReorthonormalization => {
                let ks = &b_stages[i];
                let m = states[i].attitude.matrix()
                    + h / 6.0 * (ks[0] + 2.0 * ks[1] + 2.0 * ks[2] + ks[3]);
                so3::orthonormalize(&m)?
            }
        };

        next.push(RigidBodyState {
            position,
            velocity,
            attitude,
            angular_velocity,
        });
    }
    Ok(next)
}

fn stage_attitude(base: &RigidBodyState, c: f64, cfg: &IntegratorConfig) -> RotationMatrix {
    let _ = cfg;
    base.attitude
        .compose(&so3::exp_unchecked(&(base.angular_velocity * c)))
}

/// One Newton iteration of the polar projection, `R (3I - R^T R) / 2`.
/// Removes the per-step rounding drift of the exp-map composition.
fn fast_reorthonormalize(r: RotationMatrix) -> RotationMatrix {
    let m = r.matrix();
    let fixed = m * (Matrix3::identity() * 3.0 - m.transpose() * m) * 0.5;
    RotationMatrix::from_matrix_unchecked(fixed)
}

/// Instantaneous velocity change.
///
/// `dv` is expressed in the chaser body frame and rotated through the
/// attitude into the inertial velocity; the position is unchanged at the
/// impulse instant (continuous propagation supplies the displacement
/// between impulses).
pub fn apply_impulse(state: &RigidBodyState, dv_body: &Vector3<f64>) -> RigidBodyState {
    let mut next = *state;
    next.velocity += state.attitude.rotate(dv_body);
    next
}

/// Sampled trajectory produced by [`propagate`].
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<Vec<RigidBodyState>>,
    /// First time at which the event predicate crossed to `<= 0`, located by
    /// bisection to 1e-3 s.
    pub event_time: Option<f64>,
}

/// Tolerance of the bisection-based event location, s.
pub const EVENT_TOL_S: f64 = 1e-3;

/// Fixed-step march from `t0` to `t1` (final partial step included),
/// recording every sample. If `event` is given and its value crosses from
/// positive to non-positive inside a step, the crossing time is located by
/// bisection and the march stops at the event.
pub fn propagate<S: System>(
    system: &S,
    initial: &[RigidBodyState],
    t0: f64,
    t1: f64,
    cfg: &IntegratorConfig,
    event: Option<&dyn Fn(f64, &[RigidBodyState]) -> f64>,
) -> Result<Trajectory> {
    if t1 < t0 {
        return Err(Error::InvalidArgument(format!(
            "propagate requires t1 >= t0, got {t0} > {t1}"
        )));
    }
    let mut scratch = StepScratch::default();
    let mut times = vec![t0];
    let mut states = vec![initial.to_vec()];
    let mut t = t0;
    let mut event_time = None;
    let mut prev_event = event.map(|f| f(t0, initial));

    while t < t1 - 1e-12 {
        let h = cfg.step.min(t1 - t);
        let current = states.last().unwrap().clone();
        let next = rk4_step(system, t, &current, h, cfg, &mut scratch)?;
        let t_next = t + h;

        if let (Some(f), Some(prev)) = (event, prev_event) {
            let value = f(t_next, &next);
            if prev > 0.0 && value <= 0.0 {
                let (te, se) = locate_event(system, &current, t, h, cfg, f, &mut scratch)?;
                times.push(te);
                states.push(se);
                event_time = Some(te);
                break;
            }
            prev_event = Some(value);
        }

        times.push(t_next);
        states.push(next);
        t = t_next;
    }

    Ok(Trajectory {
        times,
        states,
        event_time,
    })
}

/// Bisection on the step [t, t+h] for the event crossing; each probe
/// re-integrates a partial RK4 step from the bracket-left state.
fn locate_event<S: System>(
    system: &S,
    from: &[RigidBodyState],
    t: f64,
    h: f64,
    cfg: &IntegratorConfig,
    f: &dyn Fn(f64, &[RigidBodyState]) -> f64,
    scratch: &mut StepScratch,
) -> Result<(f64, Vec<RigidBodyState>)> {
    let mut lo = 0.0;
    let mut hi = h;
    while hi - lo > EVENT_TOL_S {
        let mid = 0.5 * (lo + hi);
        let probe = rk4_step(system, t, from, mid, cfg, scratch)?;
        if f(t + mid, &probe) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let state = rk4_step(system, t, from, hi, cfg, scratch)?;
    Ok((t + hi, state))
}
