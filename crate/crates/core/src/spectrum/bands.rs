use std::f64::consts::PI;

use rayon::prelude::*;

use super::floquet::floquet_matrix_with_form;
use super::intervals::{spectrum_measure, SpectrumMeasure};
use super::linalg::{hermitian_eigen, Eigen};
use crate::defaults::COMPUTE_BUDGET;
use crate::error::{Error, Result};
use crate::graph::{OneForm, PeriodicGraphSpec};

/// Uniform grid `{2πm/N : m = 0..N-1}^d` on the torus. Points are ordered
/// lexicographically with the last axis varying fastest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KGrid {
    pub points_per_axis: usize,
    pub dimension: usize,
}

impl KGrid {
    pub fn new(points_per_axis: usize, dimension: usize) -> Result<Self> {
        if points_per_axis < 2 {
            return Err(Error::GridTooSmall(points_per_axis));
        }
        Ok(KGrid {
            points_per_axis,
            dimension,
        })
    }

    pub fn len(&self) -> usize {
        self.points_per_axis.pow(self.dimension as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn point(&self, mut idx: usize) -> Vec<f64> {
        let n = self.points_per_axis;
        let mut k = vec![0.0; self.dimension];
        for slot in k.iter_mut().rev() {
            *slot = 2.0 * PI * (idx % n) as f64 / n as f64;
            idx /= n;
        }
        k
    }

    pub fn points(&self) -> impl Iterator<Item = Vec<f64>> + '_ {
        (0..self.len()).map(|i| self.point(i))
    }

    pub(crate) fn cost(&self, nu: usize) -> f64 {
        (self.points_per_axis as f64).powi(self.dimension as i32) * (nu as f64).powi(3)
    }
}

/// `σ_j = [λ_j^-, λ_j^+]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Band {
    pub lower: f64,
    pub upper: f64,
}

impl Band {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// Eigenvalues at every grid point and the band intervals they sweep out.
#[derive(Clone, Debug, PartialEq)]
pub struct BandStructure {
    pub grid: KGrid,
    pub mu: f64,
    /// `eigenvalues[i]` is the ascending spectrum at `grid.point(i)`.
    pub eigenvalues: Vec<Vec<f64>>,
    pub bands: Vec<Band>,
}

impl BandStructure {
    pub fn widths(&self) -> Vec<f64> {
        self.bands.iter().map(Band::width).collect()
    }

    pub fn total_bandwidth(&self) -> f64 {
        self.bands.iter().map(Band::width).sum()
    }

    pub fn measure(&self) -> SpectrumMeasure {
        spectrum_measure(self)
    }
}

/// Band structure of `H_{μQ}` on an `N^d` grid with the stored indices.
pub fn band_structure(spec: &PeriodicGraphSpec, mu: f64, points_per_axis: usize) -> Result<BandStructure> {
    band_structure_with(spec, &spec.one_form(), mu, points_per_axis, COMPUTE_BUDGET)
}

pub fn band_structure_with(
    spec: &PeriodicGraphSpec,
    form: &OneForm,
    mu: f64,
    points_per_axis: usize,
    budget: f64,
) -> Result<BandStructure> {
    let grid = KGrid::new(points_per_axis, spec.dimension())?;
    let eigenvalues = map_grid(spec, form, mu, grid, budget, |e| e.values.clone())?;
    let nu = spec.vertex_count();
    let mut bands = vec![
        Band {
            lower: f64::INFINITY,
            upper: f64::NEG_INFINITY,
        };
        nu
    ];
    for values in &eigenvalues {
        for (band, &x) in bands.iter_mut().zip(values) {
            band.lower = band.lower.min(x);
            band.upper = band.upper.max(x);
        }
    }
    Ok(BandStructure {
        grid,
        mu,
        eigenvalues,
        bands,
    })
}

/// Diagonalizes `H_{μQ}(k)` at every grid point (in parallel) and maps each
/// decomposition through `f`; results are in grid order.
pub(crate) fn map_grid<T, F>(
    spec: &PeriodicGraphSpec,
    form: &OneForm,
    mu: f64,
    grid: KGrid,
    budget: f64,
    f: F,
) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&Eigen) -> T + Sync,
{
    let cost = grid.cost(spec.vertex_count());
    if cost > budget {
        return Err(Error::BudgetExceeded { cost, budget });
    }
    (0..grid.len())
        .into_par_iter()
        .map(|i| {
            let h = floquet_matrix_with_form(spec, form, mu, &grid.point(i))?;
            Ok(f(&hermitian_eigen(&h.matrix)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::fixtures::{fig1, zline};

    #[test]
    fn grid_points_in_order() {
        let g = KGrid::new(4, 2).unwrap();
        assert_eq!(g.len(), 16);
        assert_eq!(g.point(0), vec![0.0, 0.0]);
        assert_eq!(g.point(1), vec![0.0, PI / 2.0]);
        assert_eq!(g.point(4), vec![PI / 2.0, 0.0]);
        assert!(matches!(KGrid::new(1, 2), Err(Error::GridTooSmall(1))));
    }

    #[test]
    fn line_spectrum() {
        let bs = band_structure(&zline(3, &[0.0; 3]), 1.0, 256).unwrap();
        let m = bs.measure();
        assert_eq!(m.union.intervals().len(), 1);
        assert!((m.union.intervals()[0].lo + 2.0).abs() < 1e-3);
        assert!((m.union.intervals()[0].hi - 2.0).abs() < 1e-3);
        assert!((m.measure - 4.0).abs() < 1e-3);
    }

    #[test]
    fn flat_band_at_minus_one() {
        let bs = band_structure(&fig1([1.0, 2.0, 3.0, 4.0, 0.0, 0.0]), 10.0, 16).unwrap();
        assert_eq!(bs.bands.len(), 6);
        let flat = bs
            .bands
            .iter()
            .find(|b| (b.lower + 1.0).abs() < 1e-10)
            .expect("band at -1");
        assert!(flat.width() <= 1e-12);
    }

    #[test]
    fn budget_refusal() {
        let spec = fig1([0.0; 6]);
        let err = band_structure_with(&spec, &spec.one_form(), 1.0, 64, 1000.0).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }
}
