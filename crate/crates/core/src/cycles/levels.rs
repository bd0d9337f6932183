use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::PeriodicGraphSpec;

/// Vertices carrying the potential value `value`.
#[derive(Clone, Debug, PartialEq)]
pub struct LevelSet {
    pub value: f64,
    pub vertices: Vec<usize>,
}

/// Partition of the vertices by potential value, ascending in value. Values
/// are compared by exact equality.
pub fn level_sets(spec: &PeriodicGraphSpec) -> Vec<LevelSet> {
    spec.distinct_values()
        .into_iter()
        .map(|value| LevelSet {
            value,
            vertices: (0..spec.vertex_count())
                .filter(|&v| spec.potential()[v] == value)
                .collect(),
        })
        .collect()
}

/// Multi-source breadth-first distances `d(v, S)` in the quotient graph.
pub fn distances_to_set(spec: &PeriodicGraphSpec, set: &[usize]) -> Result<Vec<usize>> {
    if set.is_empty() {
        return Err(Error::EmptySourceSet);
    }
    let nu = spec.vertex_count();
    let adj = spec.adjacency();
    let mut dist = vec![usize::MAX; nu];
    let mut queue = VecDeque::new();
    for &s in set {
        if s >= nu {
            return Err(Error::InvalidArgument(format!("vertex {} out of range", s + 1)));
        }
        if dist[s] != 0 {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(w) = queue.pop_front() {
        for &(x, _) in &adj[w] {
            if dist[x] == usize::MAX {
                dist[x] = dist[w] + 1;
                queue.push_back(x);
            }
        }
    }
    if dist.contains(&usize::MAX) {
        return Err(Error::Disconnected);
    }
    Ok(dist)
}

/// Distances to a level set and the induced edge weights
/// `ω_a({u,v}) = d(u, V^a) + d(v, V^a)`, indexed by edge id.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightAssignment {
    pub value: f64,
    pub vertex_distance: Vec<usize>,
    pub edge_weight: Vec<usize>,
}

impl WeightAssignment {
    pub fn max_weight(&self) -> usize {
        self.edge_weight.iter().copied().max().unwrap_or(0)
    }
}

pub fn edge_weights(spec: &PeriodicGraphSpec, value: f64) -> Result<WeightAssignment> {
    let set: Vec<usize> = (0..spec.vertex_count())
        .filter(|&v| spec.potential()[v] == value)
        .collect();
    if set.is_empty() {
        return Err(Error::NotAPotentialValue(value));
    }
    let vertex_distance = distances_to_set(spec, &set)?;
    let edge_weight = spec
        .edges()
        .iter()
        .map(|e| vertex_distance[e.u] + vertex_distance[e.v])
        .collect();
    Ok(WeightAssignment {
        value,
        vertex_distance,
        edge_weight,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::fixtures::fig1;

    #[test]
    fn first_sample_potential() {
        let spec = fig1([1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
        let sets = level_sets(&spec);
        assert_eq!(sets.len(), 2);
        assert_eq!(sets[0], LevelSet { value: 0.0, vertices: vec![3, 4, 5] });
        assert_eq!(sets[1], LevelSet { value: 1.0, vertices: vec![0, 1, 2] });
        assert_eq!(distances_to_set(&spec, &[0, 1, 2]).unwrap(), vec![0, 0, 0, 1, 2, 2]);
    }

    #[test]
    fn weights_for_value_zero() {
        let spec = fig1([1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
        let w = edge_weights(&spec, 0.0).unwrap();
        let weight_of = |a: usize, b: usize| {
            let id = spec
                .edges()
                .iter()
                .position(|e| (e.u, e.v) == (a, b) || (e.u, e.v) == (b, a))
                .unwrap();
            w.edge_weight[id]
        };
        assert_eq!(weight_of(0, 1), 2);
        assert_eq!(weight_of(2, 3), 1);
        assert_eq!(weight_of(4, 5), 0);
    }

    #[test]
    fn constant_and_injective_potentials() {
        let spec = fig1([2.0; 6]);
        assert_eq!(level_sets(&spec).len(), 1);
        assert!(edge_weights(&spec, 2.0).unwrap().edge_weight.iter().all(|&w| w == 0));
        let spec = fig1([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        assert!(level_sets(&spec).iter().all(|s| s.vertices.len() == 1));
    }

    #[test]
    fn errors() {
        let spec = fig1([1.0, 2.0, 3.0, 4.0, 0.0, 0.0]);
        assert!(matches!(distances_to_set(&spec, &[]), Err(Error::EmptySourceSet)));
        assert!(matches!(edge_weights(&spec, 7.0), Err(Error::NotAPotentialValue(_))));
        assert_eq!(distances_to_set(&spec, &[0, 1, 2, 3, 4, 5]).unwrap(), vec![0; 6]);
    }
}
