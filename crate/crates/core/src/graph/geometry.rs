use super::{Edge, LatticeVector};
use crate::error::{Error, Result};

const MATCH_TOL: f64 = 1e-9;

/// Computes edge indices from an embedding of the periodic graph.
///
/// `representatives[v]` is the position of quotient vertex `v` (normally in
/// the unit cell `[0,1)^d`); every endpoint of `geometric_edges` must equal a
/// representative plus an integer vector. An edge from `x` to `y` receives the
/// index `[y] - [x]`, where `[p]` is the cell of `p` relative to its
/// representative.
pub fn derive_indices(
    representatives: &[Vec<f64>],
    geometric_edges: &[(Vec<f64>, Vec<f64>)],
) -> Result<Vec<Edge>> {
    for (i, ri) in representatives.iter().enumerate() {
        for (j, rj) in representatives.iter().enumerate().skip(i + 1) {
            if integer_offset(rj, ri).is_some() {
                return Err(Error::AmbiguousRepresentative(i + 1, j + 1));
            }
        }
    }
    geometric_edges
        .iter()
        .map(|(x, y)| {
            let (u, cell_x) = locate(representatives, x)?;
            let (v, cell_y) = locate(representatives, y)?;
            Ok(Edge::new(u, v, &cell_y - &cell_x))
        })
        .collect()
}

fn locate(representatives: &[Vec<f64>], p: &[f64]) -> Result<(usize, LatticeVector)> {
    representatives
        .iter()
        .enumerate()
        .find_map(|(v, r)| integer_offset(p, r).map(|cell| (v, cell)))
        .ok_or_else(|| Error::UnmatchedEndpoint(p.to_vec()))
}

/// `p - r` if it is an integer vector (within tolerance).
fn integer_offset(p: &[f64], r: &[f64]) -> Option<LatticeVector> {
    if p.len() != r.len() {
        return None;
    }
    let mut cell = Vec::with_capacity(p.len());
    for (&a, &b) in p.iter().zip(r) {
        let diff = a - b;
        let n = diff.round();
        if (diff - n).abs() > MATCH_TOL {
            return None;
        }
        cell.push(n as i64);
    }
    Some(cell.into())
}
