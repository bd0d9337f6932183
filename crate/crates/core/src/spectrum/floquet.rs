use num_complex::Complex64;

use super::linalg::CMatrix;
use crate::error::{Error, Result};
use crate::graph::{OneForm, PeriodicGraphSpec};

/// `H_{μQ}(k) = Δ(k) + μQ` at a point `k` of the torus `[0, 2π)^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct FloquetMatrix {
    pub k: Vec<f64>,
    pub matrix: CMatrix,
}

/// Floquet matrix with the spec's stored edge indices.
pub fn floquet_matrix(spec: &PeriodicGraphSpec, mu: f64, k: &[f64]) -> Result<FloquetMatrix> {
    floquet_matrix_with_form(spec, &spec.one_form(), mu, k)
}

/// Floquet matrix with an alternative index form (for example a spanning-tree
/// gauge). `Δ_uv(k) = exp(i⟨τ(u,v), k⟩)` for adjacent `u, v`; the
/// reverse entry is set to the conjugate, so the result is exactly Hermitian.
pub fn floquet_matrix_with_form(
    spec: &PeriodicGraphSpec,
    form: &OneForm,
    mu: f64,
    k: &[f64],
) -> Result<FloquetMatrix> {
    if k.len() != spec.dimension() {
        return Err(Error::MomentumDimension {
            expected: spec.dimension(),
            found: k.len(),
        });
    }
    let n = spec.vertex_count();
    let mut m = CMatrix::zeros(n);
    for (v, &q) in spec.potential().iter().enumerate() {
        m[(v, v)] = Complex64::new(mu * q, 0.0);
    }
    for id in 0..form.len() {
        let (u, v) = form.endpoints(id);
        let phase = Complex64::from_polar(1.0, form.on_edge(id).dot(k));
        m[(u, v)] += phase;
        m[(v, u)] += phase.conj();
    }
    Ok(FloquetMatrix {
        k: k.to_vec(),
        matrix: m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::fixtures::{fig1, zline};
    use std::f64::consts::PI;

    #[test]
    fn three_cycle_entries() {
        let spec = zline(3, &[0.0; 3]);
        let k = 0.83;
        let h = floquet_matrix(&spec, 5.0, &[k]).unwrap().matrix;
        assert_eq!(h[(0, 1)], Complex64::new(1.0, 0.0));
        assert_eq!(h[(1, 2)], Complex64::new(1.0, 0.0));
        assert!((h[(2, 0)] - Complex64::from_polar(1.0, k)).norm() < 1e-15);
        assert!((h[(0, 2)] - Complex64::from_polar(1.0, -k)).norm() < 1e-15);
        assert_eq!(h.hermitian_deviation(), 0.0);
    }

    #[test]
    fn zero_momentum_is_adjacency_plus_potential() {
        let spec = fig1([1.0, 2.0, 3.0, 4.0, 0.0, 0.0]);
        let h = floquet_matrix(&spec, 2.0, &[0.0, 0.0]).unwrap().matrix;
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(h[(i, j)].im, 0.0);
                let adjacent = spec.one_form().value(i, j).is_some();
                let expected = if i == j {
                    2.0 * spec.potential()[i]
                } else if adjacent {
                    1.0
                } else {
                    0.0
                };
                assert_eq!(h[(i, j)].re, expected);
            }
        }
    }

    #[test]
    fn wrapping_entry_at_pi() {
        let spec = fig1([0.0; 6]);
        let h = floquet_matrix(&spec, 1.0, &[PI, 0.0]).unwrap().matrix;
        // entry (v3, v1) carries index (1, 0)
        assert!((h[(2, 0)] - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        assert!(matches!(
            floquet_matrix(&spec, 1.0, &[0.0]),
            Err(Error::MomentumDimension { expected: 2, found: 1 })
        ));
    }
}
