//! Large-coupling experiments: band clusters near `μa`, log-log decay fits of
//! their widths and of the measure of the spectrum, eigenvector decay, the
//! one-dimensional reduction, and the total-bandwidth lower bound.

mod bound;
mod cluster;
mod decay;
mod fit;
mod last;

pub use bound::{lower_bound_total_bandwidth, total_bandwidth_lower_bound, LowerBoundReport};
pub use cluster::{cluster_bands, SpectralCluster};
pub use decay::{eigenvector_decay_check, DecayReport, VertexDecay};
pub use fit::{fit_decay_exponent, DecayFit};
pub use last::{last_gamma, LastGamma};

use crate::cycles::{omega, ExponentReport};
use crate::defaults::FLAT_WIDTH;
use crate::error::{Error, Result};
use crate::graph::PeriodicGraphSpec;
use crate::spectrum::band_structure;

/// Measurements at one coupling.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub mu: f64,
    pub measure: f64,
    pub total_bandwidth: f64,
    pub clusters: Vec<SpectralCluster>,
}

/// Fitted decay of one cluster's width.
#[derive(Clone, Debug, PartialEq)]
pub struct ClusterFit {
    pub value: f64,
    /// Width below the flat threshold at every coupling; not fitted.
    pub flat: bool,
    pub fit: Option<DecayFit>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub grid: usize,
    pub rows: Vec<SweepRow>,
    pub cluster_fits: Vec<ClusterFit>,
    pub measure_fit: Option<DecayFit>,
    /// Exponents predicted from the combinatorics, when available.
    pub predicted: Option<ExponentReport>,
}

impl SweepResult {
    pub fn mus(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.mu).collect()
    }

    /// `(μ, width)` of the cluster at `value` over the sweep.
    pub fn cluster_widths(&self, value: f64) -> Vec<(f64, f64)> {
        self.rows
            .iter()
            .filter_map(|r| {
                r.clusters
                    .iter()
                    .find(|c| c.value == value)
                    .map(|c| (r.mu, c.width))
            })
            .collect()
    }

    pub fn cluster_fit(&self, value: f64) -> Option<&ClusterFit> {
        self.cluster_fits.iter().find(|c| c.value == value)
    }

    /// Refits the cluster at `value` using only couplings `μ ≤ mu_max`.
    pub fn cluster_slope_up_to(&self, value: f64, mu_max: f64) -> Result<DecayFit> {
        let pts: Vec<(f64, f64)> = self
            .cluster_widths(value)
            .into_iter()
            .filter(|&(mu, _)| mu <= mu_max * (1.0 + 1e-12))
            .collect();
        fit_decay_exponent(&pts)
    }
}

/// Runs band structures over a list of couplings and fits log-log slopes for
/// every cluster width and for the measure of the spectrum.
pub fn sweep(spec: &PeriodicGraphSpec, mus: &[f64], points_per_axis: usize) -> Result<SweepResult> {
    if mus.len() < 4 {
        return Err(Error::TooFewPoints {
            needed: 4,
            found: mus.len(),
        });
    }
    if mus.iter().any(|&mu| mu.is_nan() || mu <= 0.0) || mus.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument(
            "couplings must be positive and strictly ascending".into(),
        ));
    }

    let mut rows = Vec::with_capacity(mus.len());
    for &mu in mus {
        let bs = band_structure(spec, mu, points_per_axis)?;
        let clusters = cluster_bands(spec, mu, &bs)?;
        let m = bs.measure();
        rows.push(SweepRow {
            mu,
            measure: m.measure,
            total_bandwidth: m.total_bandwidth,
            clusters,
        });
    }

    let mut result = SweepResult {
        grid: points_per_axis,
        rows,
        cluster_fits: Vec::new(),
        measure_fit: None,
        predicted: omega(spec).ok(),
    };
    result.cluster_fits = spec
        .distinct_values()
        .into_iter()
        .map(|value| {
            let widths = result.cluster_widths(value);
            let flat = widths.iter().all(|&(_, w)| w < FLAT_WIDTH);
            let fit = if flat { None } else { fit_decay_exponent(&widths).ok() };
            ClusterFit { value, flat, fit }
        })
        .collect();
    let measures: Vec<(f64, f64)> = result.rows.iter().map(|r| (r.mu, r.measure)).collect();
    result.measure_fit = fit_decay_exponent(&measures).ok();
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::fixtures::fig1;
    use crate::defaults::geometric_grid;

    #[test]
    fn requires_four_ascending_points() {
        let spec = fig1([1.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(matches!(
            sweep(&spec, &[1e2, 1e3, 1e4], 8),
            Err(Error::TooFewPoints { needed: 4, .. })
        ));
        assert!(sweep(&spec, &[1e2, 1e3, 1e3, 1e4], 8).is_err());
    }

    #[test]
    fn overlap_propagates() {
        let spec = fig1([1.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        let err = sweep(&spec, &[0.01, 1e2, 1e3, 1e4], 8).unwrap_err();
        assert!(matches!(err, Error::ClusterOverlap { mu } if mu == 0.01));
    }

    #[test]
    fn small_sweep_shapes() {
        let spec = fig1([1.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        let r = sweep(&spec, &geometric_grid(1e2, 1e3, 4), 16).unwrap();
        assert_eq!(r.rows.len(), 4);
        assert_eq!(r.cluster_fits.len(), 2);
        assert!(r.measure_fit.unwrap().slope < -0.5);
        for row in &r.rows {
            assert!(row.measure <= row.total_bandwidth + 1e-15);
        }
    }
}
