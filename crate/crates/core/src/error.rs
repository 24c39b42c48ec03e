use thiserror::Error;

use crate::sizing::Constraint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter violates the invariant of the type that owns it.
    #[error("{owner}.{field} = {value}: {reason}")]
    InvalidParameter {
        owner: &'static str,
        field: &'static str,
        value: f64,
        reason: String,
    },

    #[error("{name} = {value} rad lies outside [{min}, {max}]")]
    AngleOutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("spring deflection must be non-negative, got {0} rad")]
    NegativeDeflection(f64),

    #[error("linkage angle {theta} rad makes the spring transmission singular")]
    SingularTransmission { theta: f64 },

    /// The contact pair cannot carry the tool weight at any grasp offset.
    #[error("tool cannot be held: 2*mu*F_n falls short of G by {deficit} N")]
    InfeasibleHold { deficit: f64 },

    #[error("contact has no torque capacity (max T = 0)")]
    DegenerateContact,

    #[error("no feasible payload: {0}")]
    NoFeasiblePayload(String),

    #[error("tangential demand {demand} N exceeds friction capacity {capacity} N")]
    ZeroCapacity { demand: f64, capacity: f64 },

    #[error("clearance q = {q} m exceeds linkage length r = {r} m")]
    GeometricallyImpossible { q: f64, r: f64 },

    #[error("no feasible design inside the bounds; binding: {}", join_constraints(.binding))]
    InfeasibleProblem { binding: Vec<Constraint> },

    #[error("line {line}: {key}: {message}")]
    Parse {
        line: usize,
        key: String,
        message: String,
    },

    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn invalid(
        owner: &'static str,
        field: &'static str,
        value: f64,
        reason: impl Into<String>,
    ) -> Self {
        Error::InvalidParameter {
            owner,
            field,
            value,
            reason: reason.into(),
        }
    }

    /// Process exit code for the CLI: 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 2,
            _ => 1,
        }
    }
}

fn join_constraints(list: &[Constraint]) -> String {
    list.iter().map(|c| c.name()).collect::<Vec<_>>().join(", ")
}
