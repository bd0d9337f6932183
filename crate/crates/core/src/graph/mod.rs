//! Quotient-graph model of a `Z^d`-periodic graph.
//!
//! Vertices are numbered `1..=ν` in documents and reports; inside the crate
//! they are the zero-based positions `0..ν`, which is also the row/column
//! order of every matrix built from a spec.

mod geometry;
mod lattice;
mod parse;
pub mod snf;
mod validate;

pub use geometry::derive_indices;
pub use lattice::LatticeVector;
pub use parse::{parse_graph, parse_potential_override, GraphDocument};
pub use validate::{validate, ValidationReport, Violation};

use std::collections::HashMap;

use crate::error::{Error, Result};

/// An unoriented quotient edge stored with one orientation `u -> v`; `index`
/// is `τ(u, v)`. The reverse orientation carries `-index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub index: LatticeVector,
}

impl Edge {
    pub fn new(u: usize, v: usize, index: impl Into<LatticeVector>) -> Self {
        Edge {
            u,
            v,
            index: index.into(),
        }
    }

    /// The endpoint opposite to `w`, if `w` is an endpoint.
    pub fn other(&self, w: usize) -> Option<usize> {
        if w == self.u {
            Some(self.v)
        } else if w == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

/// Quotient graph, edge indices and periodic potential. This is the whole
/// input of every computation in the crate.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodicGraphSpec {
    dimension: usize,
    potential: Vec<f64>,
    edges: Vec<Edge>,
}

impl PeriodicGraphSpec {
    /// Builds a spec from zero-based vertex positions. Only structural errors
    /// are reported here; graph invariants are checked by [`validate`].
    pub fn new(dimension: usize, potential: Vec<f64>, edges: Vec<Edge>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::Malformed("dimension must be positive".into()));
        }
        if let Some(q) = potential.iter().find(|q| !q.is_finite()) {
            return Err(Error::Malformed(format!("potential value {q} is not finite")));
        }
        let nu = potential.len();
        for (id, e) in edges.iter().enumerate() {
            for w in [e.u, e.v] {
                if w >= nu {
                    return Err(Error::UnknownVertex {
                        edge: id,
                        vertex: w + 1,
                    });
                }
            }
            if e.index.dim() != dimension {
                return Err(Error::IndexLength {
                    edge: id,
                    expected: dimension,
                    found: e.index.dim(),
                });
            }
        }
        Ok(PeriodicGraphSpec {
            dimension,
            potential,
            edges,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of quotient vertices `ν`.
    pub fn vertex_count(&self) -> usize {
        self.potential.len()
    }

    pub fn potential(&self) -> &[f64] {
        &self.potential
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Same graph with a different potential.
    pub fn with_potential(&self, potential: Vec<f64>) -> Result<Self> {
        if potential.len() != self.vertex_count() {
            return Err(Error::InvalidArgument(format!(
                "potential has {} values for {} vertices",
                potential.len(),
                self.vertex_count()
            )));
        }
        PeriodicGraphSpec::new(self.dimension, potential, self.edges.clone())
    }

    /// Same potential, edge `id` removed.
    pub fn without_edge(&self, id: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(id);
        PeriodicGraphSpec {
            dimension: self.dimension,
            potential: self.potential.clone(),
            edges,
        }
    }

    /// Same graph with the stored indices replaced by `form`.
    pub fn with_form(&self, form: &OneForm) -> Self {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(id, e)| Edge::new(e.u, e.v, form.on_edge(id).clone()))
            .collect();
        PeriodicGraphSpec {
            dimension: self.dimension,
            potential: self.potential.clone(),
            edges,
        }
    }

    /// Neighbour lists `(neighbour, edge id)` in edge-id order.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (id, e) in self.edges.iter().enumerate() {
            adj[e.u].push((e.v, id));
            if e.u != e.v {
                adj[e.v].push((e.u, id));
            }
        }
        adj
    }

    /// Maximum vertex degree. On a simple quotient graph this equals the
    /// maximum degree of the periodic graph.
    pub fn max_degree(&self) -> usize {
        self.adjacency().iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The stored index 1-form `τ`.
    pub fn one_form(&self) -> OneForm {
        OneForm::new(
            self.edges.iter().map(|e| (e.u, e.v)).collect(),
            self.edges.iter().map(|e| e.index.clone()).collect(),
        )
    }

    /// Distinct potential values in ascending order.
    pub fn distinct_values(&self) -> Vec<f64> {
        let mut values: Vec<f64> = self.potential.clone();
        values.sort_by(f64::total_cmp);
        values.dedup_by(|a, b| a == b);
        values
    }
}

/// Antisymmetric `Z^d`-valued function on oriented quotient edges.
///
/// Values are stored once per unoriented edge, for the orientation given by
/// `endpoints[id]`; the reverse orientation is the negation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForm {
    endpoints: Vec<(usize, usize)>,
    values: Vec<LatticeVector>,
    lookup: HashMap<(usize, usize), (usize, bool)>,
}

impl OneForm {
    pub fn new(endpoints: Vec<(usize, usize)>, values: Vec<LatticeVector>) -> Self {
        assert_eq!(endpoints.len(), values.len());
        let mut lookup = HashMap::with_capacity(2 * endpoints.len());
        for (id, &(u, v)) in endpoints.iter().enumerate() {
            lookup.insert((u, v), (id, true));
            lookup.insert((v, u), (id, false));
        }
        OneForm {
            endpoints,
            values,
            lookup,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value on edge `id` in its stored orientation.
    pub fn on_edge(&self, id: usize) -> &LatticeVector {
        &self.values[id]
    }

    pub fn endpoints(&self, id: usize) -> (usize, usize) {
        self.endpoints[id]
    }

    /// Value on the oriented edge `(u, v)`, `None` if `u` and `v` are not
    /// adjacent.
    pub fn value(&self, u: usize, v: usize) -> Option<LatticeVector> {
        self.lookup.get(&(u, v)).map(|&(id, forward)| {
            if forward {
                self.values[id].clone()
            } else {
                -&self.values[id]
            }
        })
    }

    /// Both orientations of every edge: `(u, v, value)`.
    pub fn oriented(&self) -> impl Iterator<Item = (usize, usize, LatticeVector)> + '_ {
        self.endpoints
            .iter()
            .zip(&self.values)
            .flat_map(|(&(u, v), t)| [(u, v, t.clone()), (v, u, -t)])
    }

    /// Replaces the value on edge `id` (stored orientation).
    pub fn set(&mut self, id: usize, value: LatticeVector) {
        self.values[id] = value;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> PeriodicGraphSpec {
        PeriodicGraphSpec::new(
            1,
            vec![0.0; 3],
            vec![
                Edge::new(0, 1, vec![0]),
                Edge::new(1, 2, vec![0]),
                Edge::new(2, 0, vec![1]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn reverse_orientation_is_negated() {
        let form = triangle().one_form();
        assert_eq!(form.value(2, 0).unwrap(), LatticeVector::from(vec![1]));
        assert_eq!(form.value(0, 2).unwrap(), LatticeVector::from(vec![-1]));
        assert!(form.value(0, 0).is_none());
        for (u, v, t) in form.oriented() {
            assert_eq!(form.value(v, u).unwrap(), -&t);
        }
    }

    #[test]
    fn rejects_wrong_index_length() {
        let err = PeriodicGraphSpec::new(2, vec![0.0; 2], vec![Edge::new(0, 1, vec![0, 0, 1])])
            .unwrap_err();
        assert!(matches!(err, Error::IndexLength { found: 3, .. }));
    }

    #[test]
    fn distinct_values_sorted() {
        let spec = triangle().with_potential(vec![2.0, -1.0, 2.0]).unwrap();
        assert_eq!(spec.distinct_values(), vec![-1.0, 2.0]);
    }
}
