use crate::cycles::shortest_nontrivial_cycle;
use crate::error::{Error, Result};
use crate::graph::PeriodicGraphSpec;
use crate::spectrum::band_structure;

/// Lower bound on the total bandwidth compared with the measured value.
#[derive(Clone, Debug, PartialEq)]
pub struct LowerBoundReport {
    pub mu: f64,
    /// `max Q - min Q`.
    pub q: f64,
    /// Maximum vertex degree.
    pub kappa: usize,
    pub gamma: usize,
    /// Unoriented count of shortest nontrivial cycles.
    pub n_gamma_plus: usize,
    pub bound: f64,
    /// Bound with oriented cycles counted (twice the unoriented count).
    pub bound_oriented: f64,
    pub measured_total_bandwidth: f64,
    pub pass: bool,
    pub pass_oriented: bool,
}

/// `N μ^{1-γ} / (γ (q + κ/μ)^{γ-1})`.
pub fn total_bandwidth_lower_bound(n_cycles: usize, gamma: usize, q: f64, kappa: usize, mu: f64) -> f64 {
    let e = gamma as i32 - 1;
    n_cycles as f64 * mu.powi(-e) / (gamma as f64 * (q + kappa as f64 / mu).powi(e))
}

/// Evaluates the total-bandwidth lower bound at coupling `mu` and measures
/// the total bandwidth on an `N^d` grid.
pub fn lower_bound_total_bandwidth(
    spec: &PeriodicGraphSpec,
    mu: f64,
    points_per_axis: usize,
) -> Result<LowerBoundReport> {
    if mu.is_nan() || mu <= 0.0 {
        return Err(Error::InvalidArgument(format!("coupling {mu} must be positive")));
    }
    let cycles = shortest_nontrivial_cycle(spec).ok_or(Error::NoNontrivialCycle)?;
    let values = spec.distinct_values();
    let q = values.last().unwrap() - values.first().unwrap();
    let kappa = spec.max_degree();
    let bound = total_bandwidth_lower_bound(cycles.count, cycles.gamma, q, kappa, mu);
    let bound_oriented = total_bandwidth_lower_bound(2 * cycles.count, cycles.gamma, q, kappa, mu);
    let measured = band_structure(spec, mu, points_per_axis)?.total_bandwidth();
    Ok(LowerBoundReport {
        mu,
        q,
        kappa,
        gamma: cycles.gamma,
        n_gamma_plus: cycles.count,
        bound,
        bound_oriented,
        measured_total_bandwidth: measured,
        pass: measured >= bound,
        pass_oriented: measured >= bound_oriented,
    })
}
