//! 6-DOF satellite rendezvous and docking simulation toolkit.
//!
//! The crate models a chaser satellite performing a long-range rendezvous
//! with an uncooperative target, closing from thousands of kilometers to a
//! docked 1 m separation:
//!
//! - [`so3`]: rotation-group primitives (skew, exp/log maps, Euler angles).
//! - [`astro`]: Keplerian conversions, two-body + J2 gravity,
//!   gravity-gradient torque, disturbance generators.
//! - [`dynamics`]: rigid-body derivative functions and relative
//!   kinematics/dynamics of the chaser with respect to the target.
//! - [`integrator`]: fixed-step RK4 with rotation-manifold handling,
//!   impulsive velocity changes, and event location.
//! - [`controller`]: the cross-feedback sliding-mode controller (coupled
//!   translational/rotational sliding surfaces, exponential reaching laws).
//! - [`guidance`]: constraint checks and the impulsive trajectory optimizer
//!   for the long-range phase.
//! - [`lyapunov`]: runtime certification of the controller's reaching- and
//!   sliding-phase Lyapunov certificates over mission logs.
//! - [`mission`]: the phase-structured mission executive.
//! - [`scenario`]: JSON scenario configuration.
//! - [`output`]: mission log, CSV/plot emission, summaries, run manifests.

pub mod astro;
pub mod controller;
pub mod dynamics;
pub mod error;
pub mod guidance;
pub mod integrator;
pub mod lyapunov;
pub mod mission;
pub mod output;
pub mod scenario;
pub mod so3;

pub use error::{Error, Result};

/// Toolkit version reported in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
