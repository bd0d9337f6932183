//! Spectra of discrete Schrödinger operators `H = Δ + μQ` on `Z^d`-periodic
//! graphs.
//!
//! A periodic graph is described by its finite quotient graph whose oriented
//! edges carry integer indices in `Z^d` (see [`graph::PeriodicGraphSpec`]).
//! On top of that model the crate provides
//!
//! - [`cycles`]: level sets of the potential, edge weights, the minimax
//!   degeneracy exponents `ω(a)` and `ω`, shortest homotopically nontrivial
//!   cycles, and the minimum-spanning-tree gauge;
//! - [`spectrum`]: Floquet matrices, a Hermitian Jacobi eigensolver, band
//!   structures on Brillouin-zone grids and the measure of the spectrum;
//! - [`sweep`]: large-coupling experiments that fit the decay of band widths
//!   against `μ` and compare with the predicted exponents;
//! - [`cli`]: configuration, fixtures and report emission used by the
//!   `perispec` binary.
//!
//! Runnable examples, one per capability:
//!
//! ```bash
//! cargo run --example validate_fixture
//! cargo run --example omega_table
//! cargo run --release --example band_structure -- 10
//! cargo run --release --example gauge_invariance
//! cargo run --release --example coupling_sweep
//! cargo run --example eigenvector_decay
//! cargo run --release --example lower_bound
//! cargo run --example last_reduction
//! cargo run --example derive_indices
//! cargo run --release --example run_cli
//! ```

pub mod cli;
pub mod cycles;
pub mod defaults;
pub mod error;
pub mod graph;
pub mod spectrum;
pub mod sweep;

pub use error::{Error, Result};
pub use graph::{LatticeVector, OneForm, PeriodicGraphSpec};
