use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{LatticeVector, PeriodicGraphSpec};

/// Index of a path given by its vertex sequence: the sum of the oriented
/// edge indices along it.
pub fn cycle_index(spec: &PeriodicGraphSpec, path: &[usize]) -> Result<LatticeVector> {
    let form = spec.one_form();
    let mut total = LatticeVector::zero(spec.dimension());
    for w in path.windows(2) {
        let step = form
            .value(w[0], w[1])
            .ok_or(Error::NotAdjacent(w[0] + 1, w[1] + 1))?;
        total += &step;
    }
    Ok(total)
}

/// Shortest homotopically nontrivial cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortestCycles {
    pub gamma: usize,
    /// Unoriented count: reversal and rotation of a cycle are identified.
    pub count: usize,
    /// Vertex sequences, each starting at its smallest vertex.
    pub cycles: Vec<Vec<usize>>,
}

/// Exhaustive search over simple cycles by increasing length. `None` if the
/// quotient graph has no cycle with nonzero index.
pub fn shortest_nontrivial_cycle(spec: &PeriodicGraphSpec) -> Option<ShortestCycles> {
    (3..=spec.vertex_count()).find_map(|len| {
        let cycles = nontrivial_cycles_of_length(spec, len);
        (!cycles.is_empty()).then_some(ShortestCycles {
            gamma: len,
            count: cycles.len(),
            cycles,
        })
    })
}

/// All unoriented simple cycles of length `len` with nonzero index.
pub fn nontrivial_cycles_of_length(spec: &PeriodicGraphSpec, len: usize) -> Vec<Vec<usize>> {
    let form = spec.one_form();
    let adj = spec.adjacency();
    let mut found = Vec::new();
    if len < 3 {
        return found;
    }
    for start in 0..spec.vertex_count() {
        let mut path = vec![start];
        let mut on_path = vec![false; spec.vertex_count()];
        on_path[start] = true;
        extend(
            &form,
            &adj,
            len,
            &mut path,
            &mut on_path,
            LatticeVector::zero(spec.dimension()),
            &mut found,
        );
    }
    found
}

fn extend(
    form: &crate::graph::OneForm,
    adj: &[Vec<(usize, usize)>],
    len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    index: LatticeVector,
    found: &mut Vec<Vec<usize>>,
) {
    let start = path[0];
    let last = *path.last().unwrap();
    if path.len() == len {
        // Each undirected cycle is seen twice; keep the orientation whose
        // second vertex is smaller than its last.
        if path[1] < last {
            if let Some(closing) = form.value(last, start) {
                if !(&index + &closing).is_zero() {
                    found.push(path.clone());
                }
            }
        }
        return;
    }
    for &(next, _) in &adj[last] {
        if next <= start || on_path[next] {
            continue;
        }
        let step = form.value(last, next).expect("adjacent vertices");
        path.push(next);
        on_path[next] = true;
        extend(form, adj, len, path, on_path, &index + &step, found);
        on_path[next] = false;
        path.pop();
    }
}

/// `γ` computed by breadth-first search in the periodic graph itself, over
/// states (quotient vertex, cell offset): the shortest closed walk from a
/// vertex to a nonzero translate of itself. Used to cross-check
/// [`shortest_nontrivial_cycle`].
pub fn shortest_nontrivial_cycle_lifted(spec: &PeriodicGraphSpec) -> Option<usize> {
    let form = spec.one_form();
    let adj = spec.adjacency();
    let nu = spec.vertex_count();
    let mut best: Option<usize> = None;
    for start in 0..nu {
        let zero = LatticeVector::zero(spec.dimension());
        let mut seen = HashSet::from([(start, zero.clone())]);
        let mut queue = VecDeque::from([(start, zero, 0usize)]);
        while let Some((w, cell, depth)) = queue.pop_front() {
            if best.is_some_and(|b| depth >= b) || depth >= nu {
                break;
            }
            for &(x, _) in &adj[w] {
                let next = &cell + &form.value(w, x).expect("adjacent vertices");
                if x == start && !next.is_zero() {
                    best = Some(best.map_or(depth + 1, |b| b.min(depth + 1)));
                    continue;
                }
                if seen.insert((x, next.clone())) {
                    queue.push_back((x, next, depth + 1));
                }
            }
        }
    }
    best
}
