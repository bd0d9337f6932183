use std::f64::consts::PI;

use super::bands::{map_grid, KGrid};
use crate::defaults::COMPUTE_BUDGET;
use crate::error::{Error, Result};
use crate::graph::{OneForm, PeriodicGraphSpec};

/// Upper bound on the width of band `n` (1-based): the maximum over the grid
/// of `2πd Σ ‖τ(e)‖ |φ_n(k,u)| |φ_n(k,v)|`, the sum running over oriented
/// edges `e = (u,v)` with `τ(e) ≠ 0` and `φ_n(k)` the normalized `n`-th
/// eigenvector.
pub fn band_width_bound(spec: &PeriodicGraphSpec, mu: f64, n: usize, points_per_axis: usize) -> Result<f64> {
    let nu = spec.vertex_count();
    if n == 0 || n > nu {
        return Err(Error::BandOutOfRange { band: n, count: nu });
    }
    Ok(band_width_bounds(spec, mu, points_per_axis)?[n - 1])
}

/// [`band_width_bound`] for every band at once.
pub fn band_width_bounds(spec: &PeriodicGraphSpec, mu: f64, points_per_axis: usize) -> Result<Vec<f64>> {
    let form = spec.one_form();
    let grid = KGrid::new(points_per_axis, spec.dimension())?;
    let prefactor = 2.0 * PI * spec.dimension() as f64;
    // Both orientations of an edge contribute the same term.
    let support: Vec<(usize, usize, f64)> = (0..form.len())
        .filter(|&id| !form.on_edge(id).is_zero())
        .map(|id| {
            let (u, v) = form.endpoints(id);
            (u, v, 2.0 * form.on_edge(id).norm())
        })
        .collect();
    let per_k = map_grid(spec, &form, mu, grid, COMPUTE_BUDGET, |eig| {
        (0..eig.values.len())
            .map(|j| {
                support
                    .iter()
                    .map(|&(u, v, w)| w * eig.vectors[(u, j)].norm() * eig.vectors[(v, j)].norm())
                    .sum::<f64>()
                    * prefactor
            })
            .collect::<Vec<f64>>()
    })?;
    let mut bounds = vec![0.0f64; spec.vertex_count()];
    for row in per_k {
        for (b, x) in bounds.iter_mut().zip(row) {
            *b = b.max(x);
        }
    }
    Ok(bounds)
}

/// Largest difference between the sorted spectra of the Floquet matrices
/// built from the stored indices and from `form`, over the grid. Zero up to
/// rounding when `form` has the same cycle indices.
pub fn gauge_equivalence_check(
    spec: &PeriodicGraphSpec,
    form: &OneForm,
    mu: f64,
    points_per_axis: usize,
) -> Result<f64> {
    let grid = KGrid::new(points_per_axis, spec.dimension())?;
    let original = map_grid(spec, &spec.one_form(), mu, grid, COMPUTE_BUDGET, |e| e.values.clone())?;
    let gauged = map_grid(spec, form, mu, grid, COMPUTE_BUDGET, |e| e.values.clone())?;
    Ok(original
        .iter()
        .zip(&gauged)
        .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).abs()))
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::fixtures::{fig1, zline};
    use crate::cycles::mst_gauge;
    use crate::spectrum::band_structure;

    #[test]
    fn line_bound_dominates_widths() {
        let spec = zline(3, &[0.0; 3]);
        let bs = band_structure(&spec, 1.0, 64).unwrap();
        let bounds = band_width_bounds(&spec, 1.0, 64).unwrap();
        for (b, w) in bounds.iter().zip(bs.widths()) {
            assert!(w <= *b, "{w} > {b}");
        }
        assert!(matches!(
            band_width_bound(&spec, 1.0, 4, 8),
            Err(Error::BandOutOfRange { band: 4, count: 3 })
        ));
    }

    #[test]
    fn identical_gauge_has_zero_discrepancy() {
        let spec = fig1([1.0, 2.0, 3.0, 4.0, 0.0, 0.0]);
        assert_eq!(gauge_equivalence_check(&spec, &spec.one_form(), 10.0, 8).unwrap(), 0.0);
        let gauge = mst_gauge(&spec, 0.0).unwrap();
        assert!(gauge_equivalence_check(&spec, &gauge.form, 10.0, 8).unwrap() < 1e-10);
    }
}
