//! Dense real symmetric matrices and the cyclic Jacobi eigenvalue method.

use crate::error::{Error, Result};

const JACOBI_MAX_SWEEPS: usize = 100;
const JACOBI_REL_EPS: f64 = 1e-15;

/// Real symmetric matrix with full row-major storage kept symmetric on every write.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

/// Eigenvalues in descending order, with matching unit eigenvectors.
#[derive(Clone, Debug)]
pub struct SymEigen {
    pub values: Vec<f64>,
    /// `vectors[k]` is the eigenvector for `values[k]`.
    pub vectors: Vec<Vec<f64>>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn ones(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![1.0; n * n],
        }
    }

    /// Builds from `f(u, v)` evaluated on the upper triangle `u <= v` and mirrored.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymMatrix::zeros(n);
        for u in 0..n {
            for v in u..n {
                m.set(u, v, f(u, v));
            }
        }
        m
    }

    /// Takes the upper triangle of `rows` as authoritative.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter("matrix is not square".into()));
        }
        Ok(SymMatrix::from_upper(n, |u, v| rows[u][v]))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.data[u * self.n + v]
    }

    pub fn set(&mut self, u: usize, v: usize, x: f64) {
        self.data[u * self.n + v] = x;
        self.data[v * self.n + u] = x;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Full eigendecomposition by cyclic Jacobi rotations.
    pub fn eigen(&self) -> Result<SymEigen> {
        if !self.is_finite() {
            return Err(Error::InvalidParameter("matrix has non-finite entries".into()));
        }
        let (values, vectors) = jacobi(self.n, self.data.clone());
        let mut idx: Vec<usize> = (0..self.n).collect();
        idx.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
        Ok(SymEigen {
            values: idx.iter().map(|&k| values[k]).collect(),
            vectors: idx
                .iter()
                .map(|&k| (0..self.n).map(|i| vectors[i * self.n + k]).collect())
                .collect(),
        })
    }

    /// Largest eigenvalue `Λ(A)`.
    pub fn lambda_max(&self) -> Result<f64> {
        if self.n == 0 {
            return Err(Error::InvalidParameter("empty matrix has no eigenvalues".into()));
        }
        Ok(self.eigen()?.values[0])
    }
}

/// Diagonalises the symmetric `a` in place; returns the diagonal and the
/// accumulated rotation matrix (eigenvectors in columns, row-major).
pub(crate) fn jacobi(n: usize, mut a: Vec<f64>) -> (Vec<f64>, Vec<f64>) {
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let frob2: f64 = a.iter().map(|x| x * x).sum();
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off2: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| 2.0 * a[p * n + q] * a[p * n + q])
            .sum();
        if off2 <= JACOBI_REL_EPS * JACOBI_REL_EPS * frob2 || off2 == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    ((0..n).map(|i| a[i * n + i]).collect(), v)
}
