//! Floquet–Bloch spectra: Floquet matrices, a Hermitian eigensolver, band
//! structures on Brillouin-zone grids and the measure of the spectrum.

mod bands;
mod diagnostics;
mod floquet;
mod intervals;
mod linalg;

pub use bands::{band_structure, band_structure_with, Band, BandStructure, KGrid};
pub use diagnostics::{band_width_bound, band_width_bounds, gauge_equivalence_check};
pub use floquet::{floquet_matrix, floquet_matrix_with_form, FloquetMatrix};
pub use intervals::{spectrum_measure, Interval, IntervalUnion, SpectrumMeasure};
pub use linalg::{hermitian_eigen, CMatrix, Eigen};
