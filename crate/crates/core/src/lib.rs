//! Proximal policy-gradient solver toolkit for finite-horizon
//! continuous-time stochastic control problems with control-affine drift.
//!
//! The crate is organised around a single iteration: a feedback policy
//! `phi_t(x)` is updated node-wise on a space-time grid by a proximal
//! gradient step whose direction comes from the Markovian representation
//! of the cost gradient, `Y_t^{t,x,phi}`, computed here as the solution of
//! a linear parabolic PDE.
//!
//! Modules:
//! - [`problem`]: control problem data (coefficients, derivatives,
//!   assumption constants) and the Hamiltonian calculus.
//! - [`prox`]: nonsmooth running costs and their proximal maps, including
//!   the Lambert W function for the entropy-regularized simplex case.
//! - [`policy`]: grid-sampled Lipschitz feedback policies with the weighted
//!   sup-norm and Lipschitz seminorm.
//! - [`adjoint`]: the gradient field solver (upwind finite differences),
//!   state simulation and cost evaluation.
//! - [`ppgm`]: the iteration engines (exact, perturbed, open-loop) and
//!   diagnostics.
//! - [`theory`]: convergence constants, step-size bounds and certificates
//!   with a predicted contraction rate.
//! - [`baselines`]: Riccati oracle for linear-quadratic test problems.
//! - [`cli`]: experiment configuration and the command-line entry points.

pub mod adjoint;
pub mod baselines;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod policy;
pub mod ppgm;
pub mod problem;
pub mod prox;
pub mod theory;

pub use error::{Error, Result};
