//! Quasi-static design model for a spring-loaded double-parallelogram tool
//! held by a parallel-jaw robot gripper.
//!
//! - [`mechanism`]: jaw kinematics and the torsion-spring transmission.
//! - [`contact`]: soft-finger contact, holding limit and required grip force.
//! - [`payload`]: heaviest liftable object.
//! - [`sizing`]: interference constraints and stroke maximisation.
//! - [`pose`]: torque margin across hand-tool angles.
//! - [`design`] and [`cli`]: design files and the `gripkit` command.
//!
//! Angles are radians throughout the library; the CLI and design files also
//! accept degrees.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod contact;
pub mod design;
pub mod error;
pub mod format;
pub mod grid;
pub mod mechanism;
pub mod payload;
pub mod pose;
pub mod sizing;

pub use contact::{
    capacity_check, holding_max_offset, max_capacities, required_grip_force, ContactModel,
    GraspConfig, GraspState, HoldingOffset,
};
pub use design::{parse_design, serialize_design, Design};
pub use error::{Error, Result};
pub use grid::{Interval, SweepRange};
pub use mechanism::{jaw_width, spring_torque, stroke, SpringSpec, ToolDimensions};
pub use payload::{
    equilibrium_coefficients, max_payload, payload_coefficients, payload_sweep, ObjectSpec,
    PayloadResult, Quadratic,
};
pub use pose::{gamma_sweep, torque_margin, TorqueMarginCurve};
pub use sizing::{
    check_feasible, theta_end_min, Constraint, SizingProblem, SizingResult, Violation,
};
