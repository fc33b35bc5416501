//! Spectral simulation of p-Schatten unit balls via one-dimensional log-gases.
//!
//! The crate is organized around the reduction of uniform sampling on a
//! Schatten ball to an n-particle Coulomb gas on the real line:
//!
//! - [`params`]: ensemble parameterization (matrix field, self-adjointness,
//!   the derived exponents), dimension and Weyl-constant formulas, log-Gamma
//!   ratio expansions.
//! - [`numerics`]: adaptive Gauss-Legendre quadrature with endpoint
//!   singularity handling, and seeded RNG streams.
//! - [`equilibrium`]: the limiting spectral measure, its density, moments,
//!   logarithmic energy, and an exact sampler.
//! - [`master`]: the master-equation solution driving the CLT for linear
//!   statistics, with residual and regularity probes.
//! - [`gibbs`]: the finite-n Gibbs measure, Metropolis sampling, linear
//!   statistics with error bars, small-n quadrature oracles and partition
//!   function estimation.
//! - [`inertia`]: inertia moments of the Schatten balls, limit-constant
//!   verification, and a direct rejection-sampling oracle on small matrices.
//! - [`verify`]: orchestration of the verification pipelines used by the CLI.

pub mod equilibrium;
pub mod gibbs;
pub mod inertia;
pub mod master;
pub mod numerics;
pub mod params;
pub mod report;
pub mod verify;

pub use equilibrium::EquilibriumMeasure;
pub use gibbs::{GibbsTarget, SampleBatch};
pub use master::MasterSolution;
pub use numerics::{integrate, integrate2d, QuadratureResult, RngStream};
pub use params::{EnsembleSpec, Field};
