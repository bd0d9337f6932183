//! Combinatorics of the quotient graph: level sets of the potential,
//! distance-based edge weights, minimax degeneracy exponents over
//! homotopically nontrivial cycles, and the spanning-tree gauge.

mod enumerate;
mod forest;
mod gauge;
mod levels;
mod omega;

pub use enumerate::{
    cycle_index, nontrivial_cycles_of_length, shortest_nontrivial_cycle,
    shortest_nontrivial_cycle_lifted, ShortestCycles,
};
pub use forest::{Link, OffsetForest};
pub use gauge::{mst_gauge, GaugeForm};
pub use levels::{distances_to_set, edge_weights, level_sets, LevelSet, WeightAssignment};
pub use omega::{omega, omega_of_value, ExponentReport, ValueExponent};

use crate::graph::PeriodicGraphSpec;

/// Edge ids sorted by `(weight, id)`: the Kruskal order used throughout.
pub(crate) fn kruskal_order(spec: &PeriodicGraphSpec, weights: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..spec.edges().len()).collect();
    order.sort_by_key(|&id| (weights[id], id));
    order
}
