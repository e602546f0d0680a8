//! Environmental models: Keplerian element conversion, two-body plus J2
//! gravity, gravity-gradient torque, and configurable disturbance generators.
//!
//! Orbital-level quantities (elements, `mu`, Earth radius) are in km and
//! km/s. Everything consumed by the dynamics and controller layers is SI
//! (m, m/s, N, N m); [`state_si_from_orbital`] is the single conversion
//! point between the two unit systems.

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::so3::RotationMatrix;

/// Meters per kilometer; the only unit-conversion constant in the crate.
pub const M_PER_KM: f64 = 1000.0;

/// Classical orbital elements. Angles in radians internally; the scenario
/// layer converts from the degree-valued configuration fields.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrbitalElements {
    /// Semi-major axis, km.
    pub semi_major_axis: f64,
    /// Eccentricity (0 <= e < 1).
    pub eccentricity: f64,
    /// Inclination, rad.
    pub inclination: f64,
    /// Right ascension of the ascending node, rad.
    pub raan: f64,
    /// Argument of periapsis, rad.
    pub arg_periapsis: f64,
    /// True anomaly, rad.
    pub true_anomaly: f64,
}

impl OrbitalElements {
    pub fn validate(&self, env: &EnvironmentParams) -> Result<()> {
        if !(self.eccentricity >= 0.0 && self.eccentricity < 1.0) {
            return Err(Error::UnsupportedOrbit(format!(
                "eccentricity {} outside [0, 1)",
                self.eccentricity
            )));
        }
        if self.semi_major_axis <= env.earth_radius {
            return Err(Error::UnsupportedOrbit(format!(
                "semi-major axis {} km does not clear the Earth radius {} km",
                self.semi_major_axis, env.earth_radius
            )));
        }
        Ok(())
    }
}

/// Time-dependent disturbance generator shared by the force and torque
/// channels. Amplitudes are in N (force) or N m (torque).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum DisturbanceModel {
    #[default]
    Zero,
    Constant {
        amplitude: [f64; 3],
    },
    Sinusoidal {
        amplitude: [f64; 3],
        period_s: f64,
    },
}

impl DisturbanceModel {
    /// Evaluates the model at time `t` (seconds).
    pub fn evaluate(&self, t: f64) -> Vector3<f64> {
        match self {
            DisturbanceModel::Zero => Vector3::zeros(),
            DisturbanceModel::Constant { amplitude } => Vector3::from(*amplitude),
            DisturbanceModel::Sinusoidal { amplitude, period_s } => {
                let phase = (2.0 * std::f64::consts::PI * t / period_s).sin();
                Vector3::from(*amplitude) * phase
            }
        }
    }

    pub fn validate(&self, key: &str) -> Result<()> {
        match self {
            DisturbanceModel::Zero => Ok(()),
            DisturbanceModel::Constant { amplitude } => {
                if amplitude.iter().any(|a| !a.is_finite()) {
                    return Err(Error::Schema(format!("{key}.amplitude must be finite")));
                }
                Ok(())
            }
            DisturbanceModel::Sinusoidal { amplitude, period_s } => {
                if amplitude.iter().any(|a| !a.is_finite()) {
                    return Err(Error::Schema(format!("{key}.amplitude must be finite")));
                }
                if !(*period_s > 0.0) {
                    return Err(Error::Schema(format!("{key}.period_s must be positive")));
                }
                Ok(())
            }
        }
    }
}

/// Gravity model constants and disturbance configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnvironmentParams {
    /// Gravitational parameter, km^3/s^2.
    pub mu: f64,
    /// Second zonal harmonic coefficient (dimensionless, >= 0).
    pub j2: f64,
    /// Earth equatorial radius, km.
    pub earth_radius: f64,
    /// Disturbance force applied in each body frame, N.
    #[serde(default)]
    pub disturbance_force: DisturbanceModel,
    /// Disturbance torque applied in each body frame, N m.
    #[serde(default)]
    pub disturbance_torque: DisturbanceModel,
}

impl Default for EnvironmentParams {
    fn default() -> Self {
        // WGS-84 consistent constants.
        EnvironmentParams {
            mu: 398600.4418,
            j2: 1.08263e-3,
            earth_radius: 6378.137,
            disturbance_force: DisturbanceModel::Zero,
            disturbance_torque: DisturbanceModel::Zero,
        }
    }
}

impl EnvironmentParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.mu > 0.0) {
            return Err(Error::Schema("environment.mu_km3_per_s2 must be positive".into()));
        }
        if !(self.j2 >= 0.0) {
            return Err(Error::Schema("environment.j2 must be non-negative".into()));
        }
        if !(self.earth_radius > 0.0) {
            return Err(Error::Schema("environment.earth_radius_km must be positive".into()));
        }
        self.disturbance_force.validate("environment.disturbance_force")?;
        self.disturbance_torque.validate("environment.disturbance_torque")?;
        Ok(())
    }

    /// Gravitational parameter in SI units, m^3/s^2.
    pub fn mu_si(&self) -> f64 {
        self.mu * M_PER_KM * M_PER_KM * M_PER_KM
    }

    /// Disturbance force at `t`, N (body frame of whichever body it acts on).
    pub fn disturbance_force(&self, t: f64) -> Vector3<f64> {
        self.disturbance_force.evaluate(t)
    }

    /// Disturbance torque at `t`, N m (body frame).
    pub fn disturbance_torque(&self, t: f64) -> Vector3<f64> {
        self.disturbance_torque.evaluate(t)
    }
}

/// Converts an orbital-level state (km, km/s) to the SI state (m, m/s) used
/// by the dynamics layer. This is the unit boundary for the whole toolkit.
pub fn state_si_from_orbital(
    position_km: &Vector3<f64>,
    velocity_km_s: &Vector3<f64>,
) -> (Vector3<f64>, Vector3<f64>) {
    (position_km * M_PER_KM, velocity_km_s * M_PER_KM)
}

/// Inertial position (km) and velocity (km/s) from classical elements via
/// the perifocal-to-inertial transformation.
pub fn elements_to_cartesian(
    el: &OrbitalElements,
    env: &EnvironmentParams,
) -> Result<(Vector3<f64>, Vector3<f64>)> {
    el.validate(env)?;
    let (a, e, nu) = (el.semi_major_axis, el.eccentricity, el.true_anomaly);
    let p = a * (1.0 - e * e);
    let r = p / (1.0 + e * nu.cos());

    let r_pf = Vector3::new(r * nu.cos(), r * nu.sin(), 0.0);
    let v_scale = (env.mu / p).sqrt();
    let v_pf = Vector3::new(-v_scale * nu.sin(), v_scale * (e + nu.cos()), 0.0);

    let rot = perifocal_to_inertial(el);
    Ok((rot * r_pf, rot * v_pf))
}

fn perifocal_to_inertial(el: &OrbitalElements) -> Matrix3<f64> {
    let (co, so) = (el.raan.cos(), el.raan.sin());
    let (ci, si) = (el.inclination.cos(), el.inclination.sin());
    let (cw, sw) = (el.arg_periapsis.cos(), el.arg_periapsis.sin());
    Matrix3::new(
        co * cw - so * sw * ci,
        -co * sw - so * cw * ci,
        so * si,
        so * cw + co * sw * ci,
        -so * sw + co * cw * ci,
        -co * si,
        sw * si,
        cw * si,
        ci,
    )
}

/// Inverse of [`elements_to_cartesian`] for elliptical orbits.
pub fn cartesian_to_elements(
    position_km: &Vector3<f64>,
    velocity_km_s: &Vector3<f64>,
    env: &EnvironmentParams,
) -> Result<OrbitalElements> {
    let r_vec = position_km;
    let v_vec = velocity_km_s;
    let r = r_vec.norm();
    let v2 = v_vec.norm_squared();
    if r <= 0.0 {
        return Err(Error::Domain("zero position vector".into()));
    }

    let h_vec = r_vec.cross(v_vec);
    let h = h_vec.norm();
    if h <= 0.0 {
        return Err(Error::UnsupportedOrbit("rectilinear trajectory".into()));
    }
    let n_vec = Vector3::z().cross(&h_vec);
    let n = n_vec.norm();

    let e_vec = v_vec.cross(&h_vec) / env.mu - r_vec / r;
    let e = e_vec.norm();
    let energy = v2 / 2.0 - env.mu / r;
    if energy >= 0.0 || e >= 1.0 {
        return Err(Error::UnsupportedOrbit(format!(
            "non-elliptical state (e = {e:.6}, energy = {energy:.6})"
        )));
    }
    let a = -env.mu / (2.0 * energy);
    let inclination = (h_vec.z / h).clamp(-1.0, 1.0).acos();

    // Near-equatorial and near-circular cases collapse the usual angle
    // definitions; fall back to zero references so the roundtrip stays exact.
    let raan = if n > 1e-11 {
        let mut raan = (n_vec.x / n).clamp(-1.0, 1.0).acos();
        if n_vec.y < 0.0 {
            raan = 2.0 * std::f64::consts::PI - raan;
        }
        raan
    } else {
        0.0
    };

    let (arg_periapsis, true_anomaly) = if e > 1e-11 {
        let arg = if n > 1e-11 {
            let mut w = (n_vec.dot(&e_vec) / (n * e)).clamp(-1.0, 1.0).acos();
            if e_vec.z < 0.0 {
                w = 2.0 * std::f64::consts::PI - w;
            }
            w
        } else {
            let mut w = (e_vec.x / e).clamp(-1.0, 1.0).acos();
            if e_vec.y < 0.0 {
                w = 2.0 * std::f64::consts::PI - w;
            }
            w
        };
        let mut nu = (e_vec.dot(r_vec) / (e * r)).clamp(-1.0, 1.0).acos();
        if r_vec.dot(v_vec) < 0.0 {
            nu = 2.0 * std::f64::consts::PI - nu;
        }
        (arg, nu)
    } else {
        // Circular: measure the anomaly from the node (or x axis).
        let reference = if n > 1e-11 { n_vec / n } else { Vector3::x() };
        let mut nu = (reference.dot(r_vec) / r).clamp(-1.0, 1.0).acos();
        let out_of_plane = reference.cross(&(r_vec / r));
        if out_of_plane.dot(&(h_vec / h)) < 0.0 {
            nu = 2.0 * std::f64::consts::PI - nu;
        }
        (0.0, nu)
    };

    Ok(OrbitalElements {
        semi_major_axis: a,
        eccentricity: e,
        inclination,
        raan,
        arg_periapsis,
        true_anomaly,
    })
}

/// Two-body plus first-order J2 gravitational acceleration, km/s^2, in the
/// inertial frame (z along the Earth polar axis). Callers needing the body
/// frame rotate the result themselves.
pub fn gravity_j2_accel_km(position_km: &Vector3<f64>, env: &EnvironmentParams) -> Vector3<f64> {
    let r = position_km.norm();
    let r3 = r * r * r;
    let mut acc = -env.mu / r3 * position_km;
    if env.j2 > 0.0 {
        let z_r = position_km.z / r;
        let factor = -1.5 * env.j2 * env.mu * env.earth_radius * env.earth_radius / (r3 * r * r);
        acc.x += factor * position_km.x * (1.0 - 5.0 * z_r * z_r);
        acc.y += factor * position_km.y * (1.0 - 5.0 * z_r * z_r);
        acc.z += factor * position_km.z * (3.0 - 5.0 * z_r * z_r);
    }
    acc
}

/// Gravity plus J2 force on a body, N, inertial frame.
///
/// `position` is in km (inertial), `mass` in kg.
pub fn gravity_j2_force(
    position_km: &Vector3<f64>,
    mass: f64,
    env: &EnvironmentParams,
) -> Result<Vector3<f64>> {
    let r = position_km.norm();
    if r <= env.earth_radius {
        return Err(Error::Domain(format!(
            "position radius {r:.3} km is inside the Earth ({} km)",
            env.earth_radius
        )));
    }
    // km/s^2 * kg -> N requires the km -> m factor.
    Ok(gravity_j2_accel_km(position_km, env) * mass * M_PER_KM)
}

/// Same acceleration in SI units (m/s^2) from an SI position (m). Used by
/// the dynamics layer, which holds all states in meters.
pub fn gravity_j2_accel_si(position_m: &Vector3<f64>, env: &EnvironmentParams) -> Vector3<f64> {
    gravity_j2_accel_km(&(position_m / M_PER_KM), env) * M_PER_KM
}

/// Gravity-gradient torque, N m, in the body frame.
///
/// `attitude` maps body to inertial, `position_km` is the inertial position
/// (km), `inertia` is the body inertia tensor (kg m^2). Implements
/// `T = 3 mu / |p|^5 * p_b x (J p_b)` with `p_b` the position in the body
/// frame, in SI units.
pub fn gravity_gradient_torque(
    attitude: &RotationMatrix,
    position_km: &Vector3<f64>,
    inertia: &Matrix3<f64>,
    env: &EnvironmentParams,
) -> Result<Vector3<f64>> {
    let r_km = position_km.norm();
    if !(r_km > 0.0) {
        return Err(Error::Domain("zero position vector".into()));
    }
    if inertia.symmetric_eigenvalues().min() <= 0.0 || (inertia - inertia.transpose()).norm() > 1e-9
    {
        return Err(Error::InvalidInertia(
            "inertia must be symmetric positive-definite".into(),
        ));
    }
    let p_b = attitude.rotate_back(&(position_km * M_PER_KM));
    let r_m = p_b.norm();
    let coeff = 3.0 * env.mu_si() / (r_m * r_m * r_m * r_m * r_m);
    Ok(coeff * p_b.cross(&(inertia * p_b)))
}
