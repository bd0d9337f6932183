use std::collections::{HashSet, VecDeque};
use std::fmt;

use super::snf::elementary_divisors;
use super::{LatticeVector, PeriodicGraphSpec};

/// A violated graph invariant. Vertex numbers are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Loop { edge: usize, vertex: usize },
    MultipleEdge { edge: usize, first: usize, u: usize, v: usize },
    Disconnected { unreachable: Vec<usize> },
    IndexLatticeRank { rank: usize, dimension: usize },
    IndexLatticeCokernel { divisors: Vec<i64> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Loop { edge, vertex } => {
                write!(f, "edge #{} is a loop at vertex {vertex}", edge + 1)
            }
            Violation::MultipleEdge { edge, first, u, v } => write!(
                f,
                "edge #{} repeats the pair {{{u},{v}}} of edge #{}",
                edge + 1,
                first + 1
            ),
            Violation::Disconnected { unreachable } => {
                write!(f, "quotient graph is disconnected; unreachable from vertex 1: {unreachable:?}")
            }
            Violation::IndexLatticeRank { rank, dimension } => write!(
                f,
                "cycle indices span a lattice of rank {rank} < dimension {dimension}"
            ),
            Violation::IndexLatticeCokernel { divisors } => write!(
                f,
                "cycle indices generate a proper sublattice of Z^d (elementary divisors {divisors:?})"
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks simplicity, connectivity of the quotient graph, and that the
/// fundamental-cycle indices generate all of `Z^d`.
pub fn validate(spec: &PeriodicGraphSpec) -> ValidationReport {
    let mut violations = Vec::new();

    let mut seen = std::collections::HashMap::new();
    for (id, e) in spec.edges().iter().enumerate() {
        if e.u == e.v {
            violations.push(Violation::Loop {
                edge: id,
                vertex: e.u + 1,
            });
            continue;
        }
        let key = (e.u.min(e.v), e.u.max(e.v));
        if let Some(&first) = seen.get(&key) {
            violations.push(Violation::MultipleEdge {
                edge: id,
                first,
                u: key.0 + 1,
                v: key.1 + 1,
            });
        } else {
            seen.insert(key, id);
        }
    }

    let nu = spec.vertex_count();
    if nu > 0 {
        let adj = spec.adjacency();
        let mut reached = HashSet::from([0usize]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for &(x, _) in &adj[w] {
                if reached.insert(x) {
                    queue.push_back(x);
                }
            }
        }
        if reached.len() < nu {
            violations.push(Violation::Disconnected {
                unreachable: (0..nu).filter(|w| !reached.contains(w)).map(|w| w + 1).collect(),
            });
        }
    }

    let rows: Vec<Vec<i64>> = fundamental_cycle_indices(spec)
        .into_iter()
        .map(|(_, t)| t.as_slice().to_vec())
        .collect();
    let divisors = elementary_divisors(&rows);
    let d = spec.dimension();
    if divisors.len() < d {
        violations.push(Violation::IndexLatticeRank {
            rank: divisors.len(),
            dimension: d,
        });
    } else if divisors.iter().any(|&x| x != 1) {
        violations.push(Violation::IndexLatticeCokernel { divisors });
    }

    ValidationReport { violations }
}

/// Indices of the fundamental cycles of a breadth-first spanning forest:
/// `(non-tree edge id, τ(c_e))`, with `c_e` oriented along the stored
/// orientation of `e`.
pub(crate) fn fundamental_cycle_indices(spec: &PeriodicGraphSpec) -> Vec<(usize, LatticeVector)> {
    let nu = spec.vertex_count();
    let d = spec.dimension();
    let adj = spec.adjacency();
    let mut offset: Vec<Option<LatticeVector>> = vec![None; nu];
    let mut tree_edge = vec![false; spec.edges().len()];
    for root in 0..nu {
        if offset[root].is_some() {
            continue;
        }
        offset[root] = Some(LatticeVector::zero(d));
        let mut queue = VecDeque::from([root]);
        while let Some(w) = queue.pop_front() {
            for &(x, id) in &adj[w] {
                if offset[x].is_none() {
                    let e = &spec.edges()[id];
                    let step = if e.u == w { e.index.clone() } else { -&e.index };
                    offset[x] = Some(offset[w].as_ref().unwrap() + &step);
                    tree_edge[id] = true;
                    queue.push_back(x);
                }
            }
        }
    }
    spec.edges()
        .iter()
        .enumerate()
        .filter(|(id, _)| !tree_edge[*id])
        .map(|(id, e)| {
            let pu = offset[e.u].as_ref().unwrap();
            let pv = offset[e.v].as_ref().unwrap();
            (id, &(&e.index + pu) - pv)
        })
        .collect()
}
