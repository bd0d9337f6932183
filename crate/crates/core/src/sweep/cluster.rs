use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::PeriodicGraphSpec;
use crate::spectrum::BandStructure;

/// The `m_a` bands that emanate from `μa` at large coupling.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralCluster {
    pub value: f64,
    pub multiplicity: usize,
    /// Zero-based band indices `j_o .. j_o + m_a`.
    pub bands: Range<usize>,
    /// Largest individual band width in the block.
    pub width: f64,
    /// Distance from the lowest to the highest endpoint of the block.
    pub span: f64,
}

/// Distinct potential values ordered by `μa` together with their
/// multiplicities.
pub(crate) fn ordered_levels(spec: &PeriodicGraphSpec, mu: f64) -> Vec<(f64, usize)> {
    let mut levels: Vec<(f64, usize)> = spec
        .distinct_values()
        .into_iter()
        .map(|a| (a, spec.potential().iter().filter(|&&q| q == a).count()))
        .collect();
    if mu < 0.0 {
        levels.reverse();
    }
    levels
}

/// Radius around `μa` inside which a cluster must lie: half the smallest gap
/// between distinct values of `μQ`.
pub(crate) fn separation_radius(spec: &PeriodicGraphSpec, mu: f64) -> f64 {
    let values = spec.distinct_values();
    values
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min)
        * mu.abs()
        / 2.0
}

/// Splits the ascending band list into consecutive blocks, one per potential
/// value, and checks that every band of a block stays near `μa`.
pub fn cluster_bands(spec: &PeriodicGraphSpec, mu: f64, bs: &BandStructure) -> Result<Vec<SpectralCluster>> {
    let radius = separation_radius(spec, mu);
    let mut start = 0;
    let mut clusters = Vec::new();
    for (value, multiplicity) in ordered_levels(spec, mu) {
        let bands = start..start + multiplicity;
        start += multiplicity;
        let block = &bs.bands[bands.clone()];
        let centre = mu * value;
        if block
            .iter()
            .any(|b| !((b.lower - centre).abs() < radius && (b.upper - centre).abs() < radius))
        {
            return Err(Error::ClusterOverlap { mu });
        }
        let lo = block.iter().map(|b| b.lower).fold(f64::INFINITY, f64::min);
        let hi = block.iter().map(|b| b.upper).fold(f64::NEG_INFINITY, f64::max);
        clusters.push(SpectralCluster {
            value,
            multiplicity,
            bands,
            width: block.iter().map(|b| b.width()).fold(0.0, f64::max),
            span: hi - lo,
        });
    }
    Ok(clusters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::fixtures::fig1;
    use crate::spectrum::band_structure;

    #[test]
    fn fig1_first_row() {
        let spec = fig1([1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
        let bs = band_structure(&spec, 100.0, 16).unwrap();
        let clusters = cluster_bands(&spec, 100.0, &bs).unwrap();
        assert_eq!(clusters.len(), 2);
        assert_eq!((clusters[0].value, clusters[0].bands.clone()), (0.0, 0..3));
        assert_eq!((clusters[1].value, clusters[1].bands.clone()), (1.0, 3..6));
    }

    #[test]
    fn injective_gives_singletons() {
        let spec = fig1([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let bs = band_structure(&spec, 100.0, 8).unwrap();
        let clusters = cluster_bands(&spec, 100.0, &bs).unwrap();
        assert_eq!(clusters.len(), 6);
        assert!(clusters.iter().all(|c| c.multiplicity == 1 && c.span == c.width));
    }

    #[test]
    fn zero_coupling_overlaps() {
        let spec = fig1([1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
        let bs = band_structure(&spec, 0.0, 8).unwrap();
        assert!(matches!(cluster_bands(&spec, 0.0, &bs), Err(Error::ClusterOverlap { .. })));
    }

    #[test]
    fn negative_coupling_reverses_order() {
        let spec = fig1([1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
        let bs = band_structure(&spec, -100.0, 8).unwrap();
        let clusters = cluster_bands(&spec, -100.0, &bs).unwrap();
        assert_eq!(clusters[0].value, 1.0);
    }
}
