//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("dimension mismatch for {what}: expected {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("time {t} outside [0, {horizon}]")]
    TimeOutOfRange { t: f64, horizon: f64 },

    #[error("non-finite value in {what} at t={t}, node {node}")]
    NonFinite { what: &'static str, t: f64, node: usize },

    #[error(
        "explicit scheme stability (CFL) violated: dt*rate = {number} > 1 at t={t}, node {node}; \
         reduce dt or coarsen the grid"
    )]
    CflViolation { number: f64, t: f64, node: usize },

    #[error("proximal map root-finder failed to converge: {0}")]
    ProxNoConvergence(String),

    #[error("bracket expansion failed in {what}: {detail}")]
    BracketFailure { what: &'static str, detail: String },

    #[error("infeasible action encountered (nonsmooth cost is infinite): {0}")]
    InfeasibleAction(String),

    #[error(
        "policy iteration diverged: |phi^{m}|_0 = {norm} exceeds the explosion bound {bound}"
    )]
    Divergence { m: usize, norm: f64, bound: f64 },

    #[error("grids do not match: {0}")]
    GridMismatch(&'static str),

    #[error("state simulation exploded on path {path} at t={t}")]
    StateExplosion { path: usize, t: f64 },

    #[error("ODE integration blew up at t={t}: {what}")]
    OdeBlowUp { what: &'static str, t: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("parse error in {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
