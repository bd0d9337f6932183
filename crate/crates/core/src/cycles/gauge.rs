use super::forest::{Link, OffsetForest};
use super::kruskal_order;
use super::levels::{edge_weights, WeightAssignment};
use crate::error::Result;
use crate::graph::{LatticeVector, OneForm, PeriodicGraphSpec};

/// Index 1-form `τ_a` adapted to the level set of `value`: zero on a minimum
/// spanning tree of `(V, E, ω_a)`, and on every other edge equal to the index
/// of its fundamental cycle. It has the same cycle indices as `τ`, so the
/// Floquet matrices built from either form are unitarily equivalent.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugeForm {
    pub value: f64,
    /// Edge ids of the spanning tree, in the order Kruskal accepted them.
    pub tree_edges: Vec<usize>,
    pub form: OneForm,
    pub weights: WeightAssignment,
}

impl GaugeForm {
    /// Edge ids on which the form is nonzero.
    pub fn support(&self) -> Vec<usize> {
        (0..self.form.len())
            .filter(|&id| !self.form.on_edge(id).is_zero())
            .collect()
    }

    /// Smallest weight `ω_a(e)` over the support; every support edge has
    /// `ω_a(e) ≥ ω(a)`.
    pub fn min_support_weight(&self) -> Option<usize> {
        self.support()
            .into_iter()
            .map(|id| self.weights.edge_weight[id])
            .min()
    }
}

/// Builds the minimum-spanning-tree gauge for potential value `value`
/// (Kruskal, ties broken by edge id).
pub fn mst_gauge(spec: &PeriodicGraphSpec, value: f64) -> Result<GaugeForm> {
    let weights = edge_weights(spec, value)?;
    let nu = spec.vertex_count();
    let d = spec.dimension();
    let mut forest = OffsetForest::new(nu, d);
    let mut tree_edges = Vec::with_capacity(nu.saturating_sub(1));
    for id in kruskal_order(spec, &weights.edge_weight) {
        let e = &spec.edges()[id];
        if forest.link(e.u, e.v, &e.index) == Link::Merged {
            tree_edges.push(id);
        }
    }

    // Tree potentials p with τ(u,v) = p(v) - p(u) on tree edges; shifting τ by
    // the coboundary of p zeroes the tree and leaves fundamental-cycle indices
    // on the remaining edges.
    let potential: Vec<LatticeVector> = (0..nu).map(|v| forest.find(v).1).collect();
    let values = spec
        .edges()
        .iter()
        .map(|e| &(&e.index + &potential[e.u]) - &potential[e.v])
        .collect();
    let form = OneForm::new(spec.edges().iter().map(|e| (e.u, e.v)).collect(), values);

    Ok(GaugeForm {
        value,
        tree_edges,
        form,
        weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::fixtures::fig1;
    use crate::cycles::omega_of_value;
    use crate::graph::validate;

    #[test]
    fn vanishes_on_tree_and_respects_omega() {
        for q in [
            [1.0, 1.0, 1.0, 0.0, 0.0, 0.0],
            [1.0, 1.0, 0.0, 0.0, 0.0, 0.0],
            [1.0, 2.0, 3.0, 4.0, 0.0, 0.0],
        ] {
            let spec = fig1(q);
            for a in spec.distinct_values() {
                let gauge = mst_gauge(&spec, a).unwrap();
                assert_eq!(gauge.tree_edges.len(), spec.vertex_count() - 1);
                for &id in &gauge.tree_edges {
                    assert!(gauge.form.on_edge(id).is_zero());
                }
                let omega_a = omega_of_value(&spec, a).unwrap();
                assert_eq!(gauge.min_support_weight(), Some(omega_a));
                // Re-gauged graph is still a valid description of the same periodic graph.
                assert!(validate(&spec.with_form(&gauge.form)).ok());
            }
        }
    }

    #[test]
    fn fig1_value_zero_support_weights() {
        let spec = fig1([1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
        let gauge = mst_gauge(&spec, 0.0).unwrap();
        for id in gauge.support() {
            assert!(gauge.weights.edge_weight[id] >= 2);
        }
    }
}
