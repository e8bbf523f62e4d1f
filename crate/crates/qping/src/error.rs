//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by simulation, inference, and configuration code.
#[derive(Debug, Error)]
pub enum QpingError {
    /// A value fell outside its documented domain.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// The requirement cannot be met by any physical state (required initial
    /// fidelity above 1).
    #[error("infeasible requirement: initial fidelity {required:.5} > 1 would be needed")]
    Infeasible { required: f64 },

    /// A Bayesian update wiped out all posterior mass.
    #[error("degenerate evidence: likelihood is zero everywhere the prior has support")]
    DegenerateEvidence,

    /// A stochastic loop exceeded its attempt cap.
    #[error("attempt cap {cap} exceeded during {context}")]
    AttemptCapExceeded { context: String, cap: u64 },

    /// A decision policy that cannot work as configured.
    #[error("policy error: {0}")]
    Policy(String),

    /// Topology or graph-resource construction violated an invariant.
    #[error("topology error: {0}")]
    Topology(String),

    /// A node name that does not exist in the topology or resource graph.
    #[error("unknown node `{0}`")]
    UnknownNode(String),

    /// No route exists between the requested end nodes.
    #[error("no route between `{from}` and `{to}` in the topology")]
    NoRoute { from: String, to: String },

    /// Scenario-level configuration problem.
    #[error("config error: {0}")]
    Config(String),

    /// Topology file could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, QpingError>;

impl QpingError {
    pub fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        QpingError::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
