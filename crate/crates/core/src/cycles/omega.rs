use super::enumerate::shortest_nontrivial_cycle;
use super::forest::{Link, OffsetForest};
use super::levels::{edge_weights, level_sets};
use super::kruskal_order;
use crate::error::{Error, Result};
use crate::graph::PeriodicGraphSpec;

/// `ω(a) = min over nontrivial cycles c of max over e in c of ω_a(e)`.
///
/// Edges enter an [`OffsetForest`] in Kruskal order; the weight of the first
/// edge that closes a cycle with nonzero index is the minimax value. Any
/// cycle of the threshold subgraph is a sum of fundamental cycles of that
/// subgraph, so if all of those have zero index so does every cycle.
pub fn omega_of_value(spec: &PeriodicGraphSpec, value: f64) -> Result<usize> {
    let weights = edge_weights(spec, value)?;
    let mut forest = OffsetForest::new(spec.vertex_count(), spec.dimension());
    for id in kruskal_order(spec, &weights.edge_weight) {
        let e = &spec.edges()[id];
        if let Link::Cycle(index) = forest.link(e.u, e.v, &e.index) {
            if !index.is_zero() {
                return Ok(weights.edge_weight[id]);
            }
        }
    }
    Err(Error::NoNontrivialCycle)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValueExponent {
    pub value: f64,
    pub vertices: Vec<usize>,
    pub omega: usize,
}

/// Degeneracy exponents of a potential together with the shortest
/// nontrivial cycle data.
#[derive(Clone, Debug, PartialEq)]
pub struct ExponentReport {
    /// One entry per distinct potential value, ascending.
    pub per_value: Vec<ValueExponent>,
    pub omega: usize,
    /// Shortest length of a homotopically nontrivial cycle.
    pub gamma: usize,
    /// Number of unoriented nontrivial cycles of length `gamma`.
    pub n_gamma_plus: usize,
}

impl ExponentReport {
    pub fn omega_of(&self, value: f64) -> Option<usize> {
        self.per_value.iter().find(|v| v.value == value).map(|v| v.omega)
    }

    /// `N_γ^+` when a cycle and its reversal are counted separately.
    pub fn n_gamma_plus_oriented(&self) -> usize {
        2 * self.n_gamma_plus
    }
}

pub fn omega(spec: &PeriodicGraphSpec) -> Result<ExponentReport> {
    let per_value = level_sets(spec)
        .into_iter()
        .map(|set| {
            Ok(ValueExponent {
                omega: omega_of_value(spec, set.value)?,
                value: set.value,
                vertices: set.vertices,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let omega = per_value
        .iter()
        .map(|v| v.omega)
        .min()
        .ok_or_else(|| Error::InvalidArgument("graph has no vertices".into()))?;
    let cycles = shortest_nontrivial_cycle(spec).ok_or(Error::NoNontrivialCycle)?;
    Ok(ExponentReport {
        per_value,
        omega,
        gamma: cycles.gamma,
        n_gamma_plus: cycles.count,
    })
}
