//! Bundled example graphs.

use crate::error::{Error, Result};
use crate::graph::{parse_graph, Edge, GraphDocument, PeriodicGraphSpec};

const FIG1_JSON: &str = include_str!("../../fixtures/fig1.json");
const ZLINE3_JSON: &str = include_str!("../../fixtures/zline3.json");

/// Potential of the bundled `fig1.json`.
pub const FIG1_DEFAULT_POTENTIAL: [f64; 6] = [1.0, 2.0, 3.0, 4.0, 0.0, 0.0];

/// Names accepted by [`emit_fixture`] besides `fig1:<q1,...,q6>` and
/// `zline<ν>`.
pub const FIXTURE_NAMES: &[&str] = &[
    "fig1",
    "zline3",
    "fig1-no-v4v2",
    "fig1-multi-edge",
    "fig1-sublattice",
];

/// The six-vertex `Z^2`-periodic graph: a square v1 v2 v3 v4 with the
/// diagonal pendant triangle v4 v5 v6; the edges {v3,v1} and {v4,v2} wrap
/// around the unit cell in the first and second direction.
pub fn fig1(potential: [f64; 6]) -> PeriodicGraphSpec {
    let zero = || vec![0, 0];
    let edges = vec![
        Edge::new(0, 1, zero()),
        Edge::new(1, 2, zero()),
        Edge::new(2, 3, zero()),
        Edge::new(3, 0, zero()),
        Edge::new(3, 4, zero()),
        Edge::new(3, 5, zero()),
        Edge::new(4, 5, zero()),
        Edge::new(2, 0, vec![1, 0]),
        Edge::new(3, 1, vec![0, 1]),
    ];
    PeriodicGraphSpec::new(2, potential.to_vec(), edges).expect("fixture is well formed")
}

/// Edge id of {v4, v2} in [`fig1`].
pub const FIG1_EDGE_V4V2: usize = 8;

/// The `ν`-cycle quotient of the lattice `Z`: edges {i, i+1} with index 0 and
/// {ν, 1} with index 1.
pub fn zline(nu: usize, potential: &[f64]) -> PeriodicGraphSpec {
    assert_eq!(potential.len(), nu);
    let mut edges: Vec<Edge> = (0..nu - 1).map(|i| Edge::new(i, i + 1, vec![0])).collect();
    edges.push(Edge::new(nu - 1, 0, vec![1]));
    PeriodicGraphSpec::new(1, potential.to_vec(), edges).expect("fixture is well formed")
}

/// Graph document for a named fixture.
pub fn emit_fixture(name: &str) -> Result<String> {
    match name {
        "fig1" => return Ok(FIG1_JSON.to_string()),
        "zline3" => return Ok(ZLINE3_JSON.to_string()),
        _ => {}
    }
    Ok(GraphDocument::from_spec(&fixture(name)?).to_json())
}

/// Spec for a named fixture.
pub fn fixture(name: &str) -> Result<PeriodicGraphSpec> {
    let unknown = || Error::UnknownFixture(name.to_string());
    match name {
        "fig1" => parse_graph(FIG1_JSON),
        "zline3" => parse_graph(ZLINE3_JSON),
        "fig1-no-v4v2" => Ok(fig1(FIG1_DEFAULT_POTENTIAL).without_edge(FIG1_EDGE_V4V2)),
        "fig1-multi-edge" => {
            let spec = fig1(FIG1_DEFAULT_POTENTIAL);
            let mut edges = spec.edges().to_vec();
            edges.push(Edge::new(1, 0, vec![1, 1]));
            PeriodicGraphSpec::new(2, spec.potential().to_vec(), edges)
        }
        "fig1-sublattice" => {
            let spec = fig1(FIG1_DEFAULT_POTENTIAL);
            let mut edges = spec.edges().to_vec();
            edges[7].index = vec![2, 0].into();
            PeriodicGraphSpec::new(2, spec.potential().to_vec(), edges)
        }
        _ => {
            if let Some(values) = name.strip_prefix("fig1:") {
                let q = parse_values(values).ok_or_else(unknown)?;
                let q: [f64; 6] = q.try_into().map_err(|_| unknown())?;
                Ok(fig1(q))
            } else if let Some(rest) = name.strip_prefix("zline") {
                let (nu, q) = match rest.split_once(':') {
                    Some((nu, values)) => (nu, parse_values(values).ok_or_else(unknown)?),
                    None => (rest, Vec::new()),
                };
                let nu: usize = nu.trim_start_matches('(').trim_end_matches(')').parse().map_err(|_| unknown())?;
                if nu < 3 {
                    return Err(unknown());
                }
                let q = if q.is_empty() { vec![0.0; nu] } else { q };
                if q.len() != nu {
                    return Err(unknown());
                }
                Ok(zline(nu, &q))
            } else {
                Err(unknown())
            }
        }
    }
}

fn parse_values(s: &str) -> Option<Vec<f64>> {
    s.split(',').map(|x| x.trim().parse().ok()).collect()
}
