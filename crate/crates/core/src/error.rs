use thiserror::Error;

use crate::check::Witness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid group table: {axiom} fails at {witness}")]
    InvalidGroup { axiom: &'static str, witness: Witness },

    #[error("invalid Hopf data: {axiom} fails at {witness}")]
    HopfAxiom { axiom: String, witness: Witness },

    #[error("algebra is not cocommutative: {0}")]
    NotCocommutative(Witness),

    #[error("{name} fails at {witness}")]
    Identity { name: String, witness: Witness },

    #[error("not a Rota-Baxter operator: {0}")]
    InvalidOperator(Witness),

    #[error("{what} {value} exceeds the cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("unknown group {0:?}")]
    UnknownGroup(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Exit status for the command-line tool: 1 for a failed identity or
    /// axiom, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Identity { .. } | Error::HopfAxiom { .. } => 1,
            _ => 2,
        }
    }
}
