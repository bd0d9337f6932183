use crate::defaults::MERGE_TOLERANCE;

use super::bands::BandStructure;

/// Closed interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Sorted, pairwise disjoint closed intervals.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct IntervalUnion {
    intervals: Vec<Interval>,
}

impl IntervalUnion {
    /// Union of arbitrary intervals; pieces closer than the merge tolerance
    /// are joined. Zero-length intervals are kept.
    pub fn from_intervals(items: impl IntoIterator<Item = Interval>) -> Self {
        let mut items: Vec<Interval> = items.into_iter().collect();
        items.sort_by(|a, b| a.lo.total_cmp(&b.lo).then(a.hi.total_cmp(&b.hi)));
        let mut intervals: Vec<Interval> = Vec::with_capacity(items.len());
        for it in items {
            match intervals.last_mut() {
                Some(last) if it.lo <= last.hi + MERGE_TOLERANCE => last.hi = last.hi.max(it.hi),
                _ => intervals.push(it),
            }
        }
        IntervalUnion { intervals }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Lebesgue measure.
    pub fn measure(&self) -> f64 {
        self.intervals.iter().map(Interval::length).sum()
    }
}

/// Spectrum as a union of bands, and the total bandwidth `Σ_j |σ_j|` which
/// counts overlapping bands twice.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumMeasure {
    pub union: IntervalUnion,
    pub measure: f64,
    pub total_bandwidth: f64,
}

pub fn spectrum_measure(bs: &BandStructure) -> SpectrumMeasure {
    let union = IntervalUnion::from_intervals(bs.bands.iter().map(|b| Interval {
        lo: b.lower,
        hi: b.upper,
    }));
    SpectrumMeasure {
        measure: union.measure(),
        total_bandwidth: bs.total_bandwidth(),
        union,
    }
}
