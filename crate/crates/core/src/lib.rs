//! Solver library for generalized self-dual vortex-antivortex systems.
//!
//! The governing scalar equation for `v = ln|u|^2` is
//!
//! ```text
//! Δv = 4 e^v f(e^v) - 2 + 4π Σ δ_q - 4π Σ δ_p
//! ```
//!
//! on a flat torus (with the zero-mean/constant split and the Bradlow
//! feasibility bound) or on a truncated plane with `v -> 0` at the boundary.
//! The nonlinearity is supplied by a coupling triple `(f, w, F)` with
//! `w = 1 - 2 s f(s)` and `F = -2 w'`, always evaluated in the log variable
//! `t = ln s` so that poles and zeros of `u` never overflow.
//!
//! Modules:
//! - [`coupling`]: coupling-function families, admissibility validation, and
//!   the name-based model registry (`"classical"`, `"m:<k>"`, `"custom:<path>"`).
//! - [`geometry`]: domains, grids, vortex configurations, singular backgrounds.
//! - [`spectral`]: FFT-diagonalized Poisson/Helmholtz solves and PCG.
//! - [`elliptic`]: Newton, Picard, and monotone solvers for the torus and
//!   plane problems, plus the Taubes equation.
//! - [`oracle`]: independent radial shooting solver for symmetric profiles.
//! - [`fields`]: gauge-invariant field reconstruction from a scalar solution.
//! - [`diagnostics`]: quantized charges, energies, residuals, decay fits.
//! - [`thermo`]: partition function, internal energy, critical-field regimes.

pub mod coupling;
pub mod diagnostics;
pub mod elliptic;
pub mod fields;
pub mod geometry;
pub mod oracle;
pub mod spectral;
pub mod thermo;

pub use coupling::{Coupling, CouplingValidationReport, ModelRegistry};
pub use geometry::{DomainKind, DomainSpec, GridField, VortexConfiguration};

