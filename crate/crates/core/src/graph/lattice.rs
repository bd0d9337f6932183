use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// Integer vector in `Z^d`: edge indices, cycle indices, cell offsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(Vec<i64>);

impl LatticeVector {
    pub fn zero(dim: usize) -> Self {
        LatticeVector(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// `⟨self, k⟩` for a real quasimomentum `k`.
    pub fn dot(&self, k: &[f64]) -> f64 {
        self.0.iter().zip(k).map(|(&n, &x)| n as f64 * x).sum()
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        self.0
            .iter()
            .map(|&x| (x as f64) * (x as f64))
            .sum::<f64>()
            .sqrt()
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(v: Vec<i64>) -> Self {
        LatticeVector(v)
    }
}

impl From<&[i64]> for LatticeVector {
    fn from(v: &[i64]) -> Self {
        LatticeVector(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for LatticeVector {
    fn from(v: [i64; N]) -> Self {
        LatticeVector(v.to_vec())
    }
}

impl AddAssign<&LatticeVector> for LatticeVector {
    fn add_assign(&mut self, rhs: &LatticeVector) {
        debug_assert_eq!(self.dim(), rhs.dim());
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&LatticeVector> for LatticeVector {
    fn sub_assign(&mut self, rhs: &LatticeVector) {
        debug_assert_eq!(self.dim(), rhs.dim());
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Add<&LatticeVector> for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LatticeVector> for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        -&self
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
