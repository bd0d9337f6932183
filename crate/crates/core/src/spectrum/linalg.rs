use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::defaults::HERMITIAN_TOLERANCE;
use crate::error::{Error, Result};

/// Dense square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = Complex64::new(x, 0.0);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    /// Largest `|m_ij - conj(m_ji)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in i..self.n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self[(i, l)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(l, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * x[j]).sum())
            .collect()
    }

    pub fn adjoint(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

/// Eigen-decomposition of a Hermitian matrix: ascending eigenvalues and the
/// matching orthonormal eigenvectors as the columns of `vectors`.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

impl Eigen {
    /// `j`-th eigenvector (zero-based, ascending eigenvalue order).
    pub fn vector(&self, j: usize) -> Vec<Complex64> {
        self.vectors.column(j)
    }
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Each rotation first removes the phase of the pivot `a_pq` and then applies
/// a real plane rotation, so the iteration is the classical real Jacobi
/// method carried over to unitary rotations. Small rotations leave large
/// diagonal entries untouched, which keeps the eigenvalues of matrices with a
/// dominant diagonal accurate to working precision relative to the
/// off-diagonal scale rather than to the norm.
pub fn hermitian_eigen(m: &CMatrix) -> Result<Eigen> {
    let n = m.dim();
    let scale = m.data.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let deviation = m.hermitian_deviation();
    if deviation > HERMITIAN_TOLERANCE * scale {
        return Err(Error::NotHermitian(deviation));
    }

    let mut a = m.clone();
    // Symmetrize exactly.
    for i in 0..n {
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
        for j in i + 1..n {
            let z = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            a[(i, j)] = z;
            a[(j, i)] = z.conj();
        }
    }
    let mut v = CMatrix::identity(n);

    for sweep in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].norm())
            .sum();
        if off == 0.0 {
            break;
        }
        let threshold = if sweep < 3 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n {
            for q in p + 1..n {
                let r = a[(p, q)].norm();
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let g = 100.0 * r;
                // After a few sweeps, an off-diagonal entry that cannot change
                // either diagonal entry in floating point is dropped.
                if sweep > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[(p, q)] = Complex64::new(0.0, 0.0);
                    a[(q, p)] = Complex64::new(0.0, 0.0);
                    continue;
                }
                if r <= threshold || r == 0.0 {
                    continue;
                }
                rotate(&mut a, &mut v, p, q, r, app, aqq);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = CMatrix::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        for i in 0..n {
            vectors[(i, col)] = v[(i, src)];
        }
    }
    Ok(Eigen { values, vectors })
}

/// Zeroes `a_pq` with the unitary `G = [[c, s e], [-s conj(e), c]]` acting on
/// coordinates `p, q`, where `e = a_pq / |a_pq|`: `A <- G^H A G`, `V <- V G`.
fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize, r: f64, app: f64, aqq: f64) {
    let n = a.dim();
    let e = a[(p, q)] / r;
    let zeta = (aqq - app) / (2.0 * r);
    let t = if zeta.abs() > 1e150 {
        0.5 / zeta
    } else {
        zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
    };
    // signum(0) = 1 for +0.0, which gives the 45-degree rotation.
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let se = e * s;
    let sec = se.conj();

    for i in 0..n {
        let aip = a[(i, p)];
        let aiq = a[(i, q)];
        a[(i, p)] = aip * c - aiq * sec;
        a[(i, q)] = aip * se + aiq * c;
    }
    for j in 0..n {
        let apj = a[(p, j)];
        let aqj = a[(q, j)];
        a[(p, j)] = apj * c - aqj * se;
        a[(q, j)] = apj * sec + aqj * c;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * c - viq * sec;
        v[(i, q)] = vip * se + viq * c;
    }
}
