//! Default numerical parameters. Every report echoes the values in effect.

/// Points per axis of the Brillouin-zone grid for a lattice of dimension `d`.
pub fn grid_points(d: usize) -> usize {
    match d {
        1 => 1024,
        2 => 64,
        _ => 16,
    }
}

/// Ceiling on `N^d * ν^3` for one band-structure computation.
pub const COMPUTE_BUDGET: f64 = 1e11;

/// Band intervals closer than this are merged into one.
pub const MERGE_TOLERANCE: f64 = 1e-12;

/// Input matrices may deviate from Hermitian by this much per entry.
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;

/// A spectral cluster whose width stays below this at every coupling is
/// treated as flat and left out of slope fits.
pub const FLAT_WIDTH: f64 = 1e-13;

/// Coupling grid of a sweep: `POINTS` geometric values from `MU_MIN` to `MU_MAX`.
pub const SWEEP_MU_MIN: f64 = 1e2;
pub const SWEEP_MU_MAX: f64 = 1e4;
pub const SWEEP_POINTS: usize = 5;

/// Couplings used by the eigenvector decay check.
pub const DECAY_MUS: [f64; 3] = [1e2, 1e3, 1e4];

/// Quasimomentum components used for decay checks, truncated to `d`.
pub const GENERIC_K: [f64; 3] = [0.7, 1.3, 1.9];

/// `GENERIC_K` truncated (or cycled) to dimension `d`.
pub fn generic_k(d: usize) -> Vec<f64> {
    (0..d).map(|i| GENERIC_K[i % GENERIC_K.len()]).collect()
}

/// Geometric grid of `points` values from `lo` to `hi` inclusive.
pub fn geometric_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let (a, b) = (lo.ln(), hi.ln());
            (0..points)
                .map(|i| (a + (b - a) * i as f64 / (points - 1) as f64).exp())
                .collect()
        }
    }
}
