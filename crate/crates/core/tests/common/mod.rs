//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use periodic_spectra::graph::{validate, Edge, PeriodicGraphSpec};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const SAMPLE_POTENTIALS: [[f64; 6]; 3] = [
    [1.0, 1.0, 1.0, 0.0, 0.0, 0.0],
    [1.0, 1.0, 0.0, 0.0, 0.0, 0.0],
    [1.0, 2.0, 3.0, 4.0, 0.0, 0.0],
];

/// A random valid spec: connected simple quotient on at most 8 vertices and
/// 14 edges, indices in {-1, 0, 1}^d, integer potentials in 0..=3.
pub fn random_spec(rng: &mut StdRng) -> PeriodicGraphSpec {
    loop {
        let d = rng.gen_range(1..=2);
        let nu = rng.gen_range(3..=8);
        let max_edges = (nu * (nu - 1) / 2).min(14);
        let m = rng.gen_range(nu..=max_edges.max(nu));
        let mut pairs: Vec<(usize, usize)> = (1..nu).map(|v| (rng.gen_range(0..v), v)).collect();
        let mut attempts = 0;
        while pairs.len() < m && attempts < 200 {
            attempts += 1;
            let u = rng.gen_range(0..nu);
            let v = rng.gen_range(0..nu);
            if u != v && !pairs.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
                pairs.push((u, v));
            }
        }
        let edges: Vec<Edge> = pairs
            .into_iter()
            .map(|(u, v)| Edge::new(u, v, (0..d).map(|_| rng.gen_range(-1..=1)).collect::<Vec<i64>>()))
            .collect();
        let potential = (0..nu).map(|_| rng.gen_range(0..=3) as f64).collect();
        let Ok(spec) = PeriodicGraphSpec::new(d, potential, edges) else {
            continue;
        };
        if validate(&spec).ok() {
            return spec;
        }
    }
}

pub fn random_specs(seed: u64, count: usize) -> Vec<PeriodicGraphSpec> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| random_spec(&mut rng)).collect()
}

/// All-pairs graph distances by Floyd-Warshall.
pub fn all_pairs_distances(spec: &PeriodicGraphSpec) -> Vec<Vec<usize>> {
    let n = spec.vertex_count();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for e in spec.edges() {
        d[e.u][e.v] = 1;
        d[e.v][e.u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// A simple cycle as a list of (edge id, +1 if traversed u -> v else -1).
pub type EdgeCycle = Vec<(usize, i64)>;

/// Every simple cycle of the quotient graph, each listed once.
pub fn all_simple_cycles(spec: &PeriodicGraphSpec) -> Vec<EdgeCycle> {
    let n = spec.vertex_count();
    let edges = spec.edges();
    let mut out = Vec::new();
    // Cycles are rooted at their smallest vertex; the reversed copy is
    // dropped by requiring the first edge id to be below the last.
    fn walk(
        edges: &[Edge],
        root: usize,
        at: usize,
        on_path: &mut Vec<bool>,
        path: &mut EdgeCycle,
        out: &mut Vec<EdgeCycle>,
    ) {
        for (id, e) in edges.iter().enumerate() {
            let (next, sign) = if e.u == at {
                (e.v, 1)
            } else if e.v == at {
                (e.u, -1)
            } else {
                continue;
            };
            if path.iter().any(|&(p, _)| p == id) || next < root {
                continue;
            }
            if next == root {
                if path.len() >= 2 && path[0].0 < id {
                    let mut c = path.clone();
                    c.push((id, sign));
                    out.push(c);
                }
                continue;
            }
            if on_path[next] {
                continue;
            }
            on_path[next] = true;
            path.push((id, sign));
            walk(edges, root, next, on_path, path, out);
            path.pop();
            on_path[next] = false;
        }
    }
    for root in 0..n {
        let mut on_path = vec![false; n];
        on_path[root] = true;
        walk(edges, root, root, &mut on_path, &mut Vec::new(), &mut out);
    }
    out
}

pub fn cycle_index(spec: &PeriodicGraphSpec, cycle: &EdgeCycle) -> Vec<i64> {
    let mut total = vec![0i64; spec.dimension()];
    for &(id, sign) in cycle {
        for (t, x) in total.iter_mut().zip(spec.edges()[id].index.as_slice()) {
            *t += sign * x;
        }
    }
    total
}

/// Brute-force exponents: `ω(a)` as the minimum over simple cycles with
/// nonzero index of the largest edge weight `d(u, V^a) + d(v, V^a)`.
pub struct Oracle {
    pub values: Vec<f64>,
    pub omega_per_value: Vec<usize>,
    pub omega: usize,
    pub gamma: usize,
    pub gamma_count: usize,
}

pub fn oracle(spec: &PeriodicGraphSpec) -> Oracle {
    let dist = all_pairs_distances(spec);
    let nontrivial: Vec<EdgeCycle> = all_simple_cycles(spec)
        .into_iter()
        .filter(|c| cycle_index(spec, c).iter().any(|&x| x != 0))
        .collect();
    assert!(!nontrivial.is_empty());

    let mut values: Vec<f64> = spec.potential().to_vec();
    values.sort_by(f64::total_cmp);
    values.dedup();
    let omega_per_value: Vec<usize> = values
        .iter()
        .map(|&a| {
            let level: Vec<usize> = (0..spec.vertex_count()).filter(|&v| spec.potential()[v] == a).collect();
            let to_level = |v: usize| level.iter().map(|&w| dist[v][w]).min().unwrap();
            nontrivial
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|&(id, _)| {
                            let e = &spec.edges()[id];
                            to_level(e.u) + to_level(e.v)
                        })
                        .max()
                        .unwrap()
                })
                .min()
                .unwrap()
        })
        .collect();
    let gamma = nontrivial.iter().map(Vec::len).min().unwrap();
    let gamma_count = nontrivial.iter().filter(|c| c.len() == gamma).count();
    Oracle {
        omega: *omega_per_value.iter().min().unwrap(),
        values,
        omega_per_value,
        gamma,
        gamma_count,
    }
}

pub mod properties {
    use periodic_spectra::spectrum::{band_structure, floquet_matrix, hermitian_eigen, KGrid};
    use periodic_spectra::PeriodicGraphSpec;

    /// Largest entrywise deviation from Hermitian over a grid of k.
    pub fn hermiticity(spec: &PeriodicGraphSpec, mu: f64, n: usize) -> f64 {
        let grid = KGrid::new(n, spec.dimension()).unwrap();
        grid.points()
            .map(|k| floquet_matrix(spec, mu, &k).unwrap().matrix.hermitian_deviation())
            .fold(0.0, f64::max)
    }

    /// Largest eigenvalue difference between k and -k.
    pub fn k_symmetry(spec: &PeriodicGraphSpec, mu: f64, n: usize) -> f64 {
        let grid = KGrid::new(n, spec.dimension()).unwrap();
        let eig = |k: &[f64]| hermitian_eigen(&floquet_matrix(spec, mu, k).unwrap().matrix).unwrap().values;
        grid.points()
            .map(|k| {
                // Shift off the symmetric grid so that -k is not just another grid point.
                let k: Vec<f64> = k.iter().map(|x| x + 0.123).collect();
                let minus: Vec<f64> = k.iter().map(|x| -x).collect();
                eig(&k)
                    .iter()
                    .zip(eig(&minus))
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }

    /// Every band on the `n` grid lies inside the same band on the `2n` grid,
    /// which contains all of its points.
    pub fn refinement_contained(spec: &PeriodicGraphSpec, mu: f64, n: usize) -> bool {
        let coarse = band_structure(spec, mu, n).unwrap();
        let fine = band_structure(spec, mu, 2 * n).unwrap();
        coarse
            .bands
            .iter()
            .zip(&fine.bands)
            .all(|(c, f)| f.lower <= c.lower + 1e-12 && c.upper <= f.upper + 1e-12)
    }

    /// `measure - total bandwidth`, which must not be positive.
    pub fn measure_excess(spec: &PeriodicGraphSpec, mu: f64, n: usize) -> f64 {
        let m = band_structure(spec, mu, n).unwrap().measure();
        m.measure - m.total_bandwidth
    }

    /// Deviation of the bands of `Q + c` from the bands of `Q` shifted by `μc`.
    pub fn shift_invariance(spec: &PeriodicGraphSpec, mu: f64, c: f64, n: usize) -> f64 {
        let shifted = spec
            .with_potential(spec.potential().iter().map(|q| q + c).collect())
            .unwrap();
        let a = band_structure(spec, mu, n).unwrap();
        let b = band_structure(&shifted, mu, n).unwrap();
        a.bands
            .iter()
            .zip(&b.bands)
            .map(|(x, y)| ((x.lower + mu * c) - y.lower).abs().max(((x.upper + mu * c) - y.upper).abs()))
            .fold(0.0, f64::max)
    }
}
