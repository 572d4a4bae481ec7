//! Quasi-random discrete ordinates solver for one-group, isotropic-scattering
//! transport on 2D rectangles.
//!
//! The angular integral of the transport equation is sampled with a
//! low-discrepancy direction sequence instead of a fixed quadrature set.
//! Source iteration proceeds in *epochs*: within an epoch the scattering
//! source is frozen, quasi-random directions are streamed through a
//! diamond-difference sweep kernel, and a log-model least-squares fit of the
//! cumulative goal-functional history decides when enough directions have
//! been drawn. The fitted intercept is the extrapolated functional estimate
//! that also drives the outer (cross-epoch) stopping test.
//!
//! Modules:
//! - [`qrng`]: reverse Halton sequence, octant direction mapping, star
//!   discrepancy estimator.
//! - [`problem`]: problem definitions (geometry, cross sections, sources,
//!   walls), built-in benchmarks, JSON configuration.
//! - [`mesh`]: uniform structured grid and cell-centered scalar fields.
//! - [`sweep`]: per-direction transport sweeps with reflective boundary
//!   closure.
//! - [`functionals`]: linear goal/reporting functionals of the scalar flux.
//! - [`extrapolate`]: weighted least-squares fit of the log model and the
//!   convergence criterion.
//! - [`epochs`]: the outer iteration driver.
//! - [`dom`]: classical fixed-quadrature baseline sharing the sweep kernel.

pub mod dom;
pub mod epochs;
pub mod extrapolate;
pub mod functionals;
pub mod mesh;
pub mod problem;
pub mod qrng;
pub mod sweep;

pub use epochs::{run, RunOptions, RunResult};
pub use functionals::FunctionalSpec;
pub use mesh::{FluxField, Grid};
pub use problem::{builtin_benchmark, parse_config, ProblemSpec};
