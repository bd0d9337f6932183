use super::cluster::{ordered_levels, separation_radius};
use super::fit::fit_decay_exponent;
use crate::cycles::edge_weights;
use crate::error::{Error, Result};
use crate::graph::PeriodicGraphSpec;
use crate::spectrum::{floquet_matrix, hermitian_eigen};

/// Decay of the cluster eigenvectors at one vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexDecay {
    pub vertex: usize,
    /// `d(v, V^a)`, the predicted exponent.
    pub target: usize,
    /// Fitted exponent `p` in `|φ(k, v)| ~ ε^p`, `ε = 1/μ`. Infinite when the
    /// amplitude vanishes at every coupling.
    pub exponent: f64,
    /// Largest `|φ_s(k, v)|` over the cluster, per coupling.
    pub amplitudes: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecayReport {
    pub value: f64,
    pub k: Vec<f64>,
    pub mus: Vec<f64>,
    pub vertices: Vec<VertexDecay>,
}

/// Fits, per vertex, the decay exponent of the eigenvectors of the cluster
/// near `μa` at a fixed quasimomentum `k`.
pub fn eigenvector_decay_check(
    spec: &PeriodicGraphSpec,
    value: f64,
    k: &[f64],
    mus: &[f64],
) -> Result<DecayReport> {
    let weights = edge_weights(spec, value)?;
    if mus.len() < 3 {
        return Err(Error::TooFewPoints {
            needed: 3,
            found: mus.len(),
        });
    }
    let nu = spec.vertex_count();
    let mut amplitudes = vec![Vec::with_capacity(mus.len()); nu];
    for &mu in mus {
        let block = cluster_block(spec, value, mu)?;
        let h = floquet_matrix(spec, mu, k)?;
        let eig = hermitian_eigen(&h.matrix)?;
        let radius = separation_radius(spec, mu);
        if block
            .clone()
            .any(|j| (eig.values[j] - mu * value).abs() >= radius)
        {
            return Err(Error::ClusterOverlap { mu });
        }
        for (v, amps) in amplitudes.iter_mut().enumerate() {
            amps.push(block.clone().map(|j| eig.vectors[(v, j)].norm()).fold(0.0, f64::max));
        }
    }

    let vertices = amplitudes
        .into_iter()
        .enumerate()
        .map(|(v, amps)| {
            let exponent = if amps.iter().all(|&x| x == 0.0) {
                f64::INFINITY
            } else {
                let pts: Vec<(f64, f64)> = mus.iter().zip(&amps).map(|(&mu, &x)| (1.0 / mu, x)).collect();
                fit_decay_exponent(&pts)?.slope
            };
            Ok(VertexDecay {
                vertex: v,
                target: weights.vertex_distance[v],
                exponent,
                amplitudes: amps,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(DecayReport {
        value,
        k: k.to_vec(),
        mus: mus.to_vec(),
        vertices,
    })
}

fn cluster_block(spec: &PeriodicGraphSpec, value: f64, mu: f64) -> Result<std::ops::Range<usize>> {
    let mut start = 0;
    for (a, m) in ordered_levels(spec, mu) {
        if a == value {
            return Ok(start..start + m);
        }
        start += m;
    }
    Err(Error::NotAPotentialValue(value))
}
