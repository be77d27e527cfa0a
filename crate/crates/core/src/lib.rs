//! Exact diagonalization of the mixed spin-(1/2,1) Heisenberg tetramer and the
//! entanglement negativities of its reduced states.
//!
//! The cluster has two spin-1/2 sites (μ1, μ2) and two spin-1 sites (S1, S2).
//! The intradimer coupling `J` binds μ1–S1 and μ2–S2, and the interdimer
//! coupling `J1` couples every cross-dimer pair:
//!
//! ```text
//! H = J (S1·μ1 + S2·μ2) + J1 (S1 + μ1)·(S2 + μ2) − h (S1z + S2z + μ1z + μ2z)
//! ```
//!
//! The pipeline is:
//!
//! 1. [`model::build_hamiltonian`] and [`model::diagonalize`] give the 36-level
//!    [`model::Spectrum`].
//! 2. [`model::gibbs_state`] or [`model::ground_manifold`] give a
//!    [`model::ThermalState`].
//! 3. [`reduce`] traces out sites, and [`negativity`] computes partial
//!    transposes, negativities and genuine tripartite negativities.
//! 4. [`scan`] runs parameter grids, phase boundaries and threshold
//!    temperatures. [`oracle`] holds the closed-form reduced density matrices
//!    and reference constants used to cross-check the numerics.
//!
//! ```
//! use spin_tetramer::{model, negativity, ModelParams, Tolerances};
//!
//! let params = ModelParams::new(1.0, 0.5, 0.1)?;
//! let state = model::ground_state(&params, Tolerances::default())?;
//! let n = negativity::genuine_tripartite(&state, negativity::Trimer::Mu1S1S2, 1e-10)?;
//! assert!((n.genuine - 0.52689).abs() < 1e-5);
//! # Ok::<(), spin_tetramer::Error>(())
//! ```

// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod eigen;
pub mod error;
pub mod model;
pub mod negativity;
pub mod oracle;
pub mod reduce;
pub mod scan;
pub mod spin;

pub use error::{Error, Result};
pub use model::{ModelParams, QuantumLabel, Spectrum, ThermalState};
pub use negativity::{Observables, OneVsTwo, Pair, Trimer};
pub use reduce::ReducedDensity;
pub use spin::{ClusterLayout, RealMatrix, Site};

/// Numerical thresholds shared by the whole pipeline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Eigenvalues of a partial transpose above `-zero_tol` count as zero, and
    /// a genuine negativity is zero when any factor is at or below it.
    pub zero_tol: f64,
    /// Levels within `degeneracy_tol · J` of the lowest energy belong to the
    /// ground manifold.
    pub degeneracy_tol: f64,
}

impl Tolerances {
    pub const DEFAULT_ZERO_TOL: f64 = 1e-10;
    pub const DEFAULT_DEGENERACY_TOL: f64 = 1e-9;

    pub fn new(zero_tol: f64, degeneracy_tol: f64) -> Result<Self> {
        if !(zero_tol > 0.0 && zero_tol.is_finite()) {
            return Err(Error::invalid(format!("zero_tol must be positive, got {zero_tol}")));
        }
        if !(degeneracy_tol > 0.0 && degeneracy_tol.is_finite()) {
            return Err(Error::invalid(format!(
                "degeneracy_tol must be positive, got {degeneracy_tol}"
            )));
        }
        Ok(Self { zero_tol, degeneracy_tol })
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            zero_tol: Self::DEFAULT_ZERO_TOL,
            degeneracy_tol: Self::DEFAULT_DEGENERACY_TOL,
        }
    }
}
