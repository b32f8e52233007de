//! Primal-dual interior-point method for the theta semidefinite program.
//!
//! Primal: `max J•X` subject to `tr X = 1`, `X_uv = 0` on edges, `X ⪰ 0`.
//! Dual:   `min t` subject to `t I - (J + Σ_e y_e E_e) ⪰ 0`.
//!
//! The dual matrix `J + Σ_e y_e E_e` has ones on the diagonal and on every
//! non-edge, so the dual iterate is a feasible point of the eigenvalue
//! formulation. Search directions are HKM directions; both iterates start
//! strictly feasible (`X = I/n`, `Z = (n+1) I - J`).

use crate::theta::matrix::jacobi;

const CENTERING: f64 = 0.1;
const STEP_FRACTION: f64 = 0.95;

pub(crate) struct SdpSolution {
    /// Free entry `y_e` per edge; the matrix entry on edge `e` is `1 + y_e`.
    pub edge_values: Vec<f64>,
    /// `J•X` of the final primal iterate, a lower bound on theta when feasible.
    pub primal_objective: f64,
    pub dual_objective: f64,
    pub iterations: usize,
    pub converged: bool,
}

type Dense = Vec<f64>;

fn matmul(n: usize, a: &[f64], b: &[f64]) -> Dense {
    let mut c = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    c
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cholesky(n: usize, a: &[f64]) -> Option<Dense> {
    let mut l = vec![0.0; n * n];
    for j in 0..n {
        let mut d = a[j * n + j];
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if d <= 0.0 || !d.is_finite() {
            return None;
        }
        let d = d.sqrt();
        l[j * n + j] = d;
        for i in j + 1..n {
            let mut s = a[i * n + j];
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / d;
        }
    }
    Some(l)
}

/// `L^{-1}` for lower-triangular `L`.
fn lower_inverse(n: usize, l: &[f64]) -> Dense {
    let mut inv = vec![0.0; n * n];
    for col in 0..n {
        for i in col..n {
            let mut s = if i == col { 1.0 } else { 0.0 };
            for k in col..i {
                s -= l[i * n + k] * inv[k * n + col];
            }
            inv[i * n + col] = s / l[i * n + i];
        }
    }
    inv
}

fn transpose(n: usize, a: &[f64]) -> Dense {
    let mut t = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            t[j * n + i] = a[i * n + j];
        }
    }
    t
}

fn spd_inverse(n: usize, a: &[f64]) -> Option<Dense> {
    let li = lower_inverse(n, &cholesky(n, a)?);
    Some(matmul(n, &transpose(n, &li), &li))
}

/// Largest `α <= 1` (scaled by the step fraction) keeping `a + α d` positive definite.
fn max_step(n: usize, a: &[f64], d: &[f64]) -> f64 {
    let Some(l) = cholesky(n, a) else {
        return 0.0;
    };
    let li = lower_inverse(n, &l);
    let s = matmul(n, &matmul(n, &li, d), &transpose(n, &li));
    let mut sym = s.clone();
    for i in 0..n {
        for j in 0..n {
            sym[i * n + j] = 0.5 * (s[i * n + j] + s[j * n + i]);
        }
    }
    let (values, _) = jacobi(n, sym);
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    if min >= 0.0 {
        1.0
    } else {
        (STEP_FRACTION * -1.0 / min).min(1.0)
    }
}

/// Gaussian elimination with partial pivoting.
fn solve_linear(m: usize, mut a: Vec<f64>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    for col in 0..m {
        let piv = (col..m).max_by(|&i, &j| a[i * m + col].abs().total_cmp(&a[j * m + col].abs()))?;
        if a[piv * m + col].abs() < 1e-300 {
            return None;
        }
        if piv != col {
            for k in 0..m {
                a.swap(piv * m + k, col * m + k);
            }
            b.swap(piv, col);
        }
        let p = a[col * m + col];
        for i in col + 1..m {
            let f = a[i * m + col] / p;
            if f == 0.0 {
                continue;
            }
            for k in col..m {
                a[i * m + k] -= f * a[col * m + k];
            }
            b[i] -= f * b[col];
        }
    }
    let mut x = vec![0.0; m];
    for i in (0..m).rev() {
        let s: f64 = (i + 1..m).map(|k| a[i * m + k] * x[k]).sum();
        x[i] = (b[i] - s) / a[i * m + i];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}

/// Constraint `i`: 0 is the trace, `1 + e` is edge `e`.
fn apply_constraint(n: usize, edges: &[(usize, usize)], i: usize, k: &[f64]) -> f64 {
    if i == 0 {
        (0..n).map(|d| k[d * n + d]).sum()
    } else {
        let (u, v) = edges[i - 1];
        k[u * n + v] + k[v * n + u]
    }
}

pub(crate) fn solve(
    n: usize,
    edges: &[(usize, usize)],
    gap_tol: f64,
    max_iterations: usize,
) -> SdpSolution {
    let m = 1 + edges.len();
    let nf = n as f64;
    let mut x: Dense = (0..n * n).map(|k| if k % (n + 1) == 0 { 1.0 / nf } else { 0.0 }).collect();
    let mut y = vec![0.0; m];
    y[0] = -(nf + 1.0);
    let mut z: Dense = (0..n * n)
        .map(|k| if k % (n + 1) == 0 { nf } else { -1.0 })
        .collect();

    // Dual residual C - Z - Σ y_i A_i with C = -J.
    let dual_residual = |y: &[f64], z: &[f64]| -> Dense {
        let mut r: Dense = z.iter().map(|v| -1.0 - v).collect();
        for d in 0..n {
            r[d * n + d] -= y[0];
        }
        for (e, &(u, v)) in edges.iter().enumerate() {
            r[u * n + v] -= y[1 + e];
            r[v * n + u] -= y[1 + e];
        }
        r
    };

    let mut iterations = 0;
    let mut converged = false;
    while iterations < max_iterations {
        let primal_res: Vec<f64> = (0..m)
            .map(|i| if i == 0 { 1.0 } else { 0.0 } - apply_constraint(n, edges, i, &x))
            .collect();
        let rd = dual_residual(&y, &z);
        let gap = dot(&x, &z);
        let dual_obj = -y[0];
        let feasible = primal_res.iter().all(|r| r.abs() < 1e-9) && rd.iter().all(|r| r.abs() < 1e-9);
        if feasible && gap < gap_tol * (1.0 + dual_obj.abs()) {
            converged = true;
            break;
        }
        iterations += 1;

        let Some(w) = spd_inverse(n, &z) else { break };
        let mu = gap / nf;
        // G_j = X A_j W.
        let g: Vec<Dense> = (0..m)
            .map(|j| {
                if j == 0 {
                    matmul(n, &x, &w)
                } else {
                    let (u, v) = edges[j - 1];
                    let mut gj = vec![0.0; n * n];
                    for r in 0..n {
                        let (xu, xv) = (x[r * n + u], x[r * n + v]);
                        for c in 0..n {
                            gj[r * n + c] = xu * w[v * n + c] + xv * w[u * n + c];
                        }
                    }
                    gj
                }
            })
            .collect();
        let mut schur = vec![0.0; m * m];
        for j in 0..m {
            for i in 0..m {
                schur[i * m + j] = apply_constraint(n, edges, i, &g[j]);
            }
        }
        let xrdw = matmul(n, &matmul(n, &x, &rd), &w);
        let base: Dense = (0..n * n)
            .map(|k| CENTERING * mu * w[k] - x[k] - xrdw[k])
            .collect();
        let rhs: Vec<f64> = (0..m)
            .map(|i| primal_res[i] - apply_constraint(n, edges, i, &base))
            .collect();
        let Some(dy) = solve_linear(m, schur, rhs) else { break };

        let mut dz = rd.clone();
        for d in 0..n {
            dz[d * n + d] -= dy[0];
        }
        for (e, &(u, v)) in edges.iter().enumerate() {
            dz[u * n + v] -= dy[1 + e];
            dz[v * n + u] -= dy[1 + e];
        }
        let mut dx = base;
        for (j, gj) in g.iter().enumerate() {
            for (a, b) in dx.iter_mut().zip(gj) {
                *a += dy[j] * b;
            }
        }
        for r in 0..n {
            for c in r + 1..n {
                let s = 0.5 * (dx[r * n + c] + dx[c * n + r]);
                dx[r * n + c] = s;
                dx[c * n + r] = s;
            }
        }

        let ap = max_step(n, &x, &dx);
        let ad = max_step(n, &z, &dz);
        if ap == 0.0 && ad == 0.0 {
            break;
        }
        for (a, b) in x.iter_mut().zip(&dx) {
            *a += ap * b;
        }
        for (a, b) in y.iter_mut().zip(&dy) {
            *a += ad * b;
        }
        for (a, b) in z.iter_mut().zip(&dz) {
            *a += ad * b;
        }
    }

    SdpSolution {
        edge_values: y[1..].to_vec(),
        primal_objective: x.iter().sum(),
        dual_objective: -y[0],
        iterations,
        converged,
    }
}
