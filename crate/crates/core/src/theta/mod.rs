//! The Lovász theta number as `min Λ(A)` over real symmetric `A` with
//! `A_uv = 1` whenever `{u, v}` is not an edge, diagonal included.
//!
//! The edge entries are the free variables. They are optimised by an
//! interior-point method on the equivalent semidefinite program, and the
//! reported value is `Λ` of the returned matrix computed by Jacobi. Because
//! that matrix is always pattern-feasible the value is a valid upper bound
//! on theta even when the solver does not converge.

pub mod matrix;
mod sdp;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use matrix::{SymEigen, SymMatrix};

pub const DEFAULT_THETA_LIMIT: usize = 16;
pub const DEFAULT_THETA_TOL: f64 = 1e-4;
pub const MIN_THETA_TOL: f64 = 1e-6;
/// Relative duality gap at which the interior-point iteration stops.
const GAP_TOL: f64 = 1e-10;
const MAX_ITERATIONS: usize = 200;

#[derive(Clone, Debug, Serialize)]
pub struct ThetaResult {
    /// `Λ(matrix)`.
    pub value: f64,
    #[serde(skip)]
    pub matrix: SymMatrix,
    /// `J•X` for the final primal iterate; `value - lower_bound` bounds the error.
    pub lower_bound: f64,
    pub tolerance: f64,
    pub iterations: usize,
    pub converged: bool,
}

impl ThetaResult {
    /// True when the matrix has exactly `1.0` on the diagonal and on every non-edge of `g`.
    pub fn is_pattern_feasible(&self, g: &Graph) -> bool {
        let m = &self.matrix;
        m.order() == g.n()
            && (0..g.n()).all(|u| {
                (0..g.n()).all(|v| g.has_edge(u, v) || m.get(u, v) == 1.0)
            })
    }
}

pub fn lovasz_theta(g: &Graph, tol: f64) -> Result<ThetaResult> {
    lovasz_theta_with_limit(g, tol, DEFAULT_THETA_LIMIT)
}

pub fn lovasz_theta_with_limit(g: &Graph, tol: f64, limit: usize) -> Result<ThetaResult> {
    if !(tol >= MIN_THETA_TOL) {
        return Err(Error::InvalidParameter(format!(
            "theta tolerance must be at least {MIN_THETA_TOL}, got {tol}"
        )));
    }
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameter("theta needs at least one vertex".into()));
    }
    if n > limit {
        return Err(Error::SizeLimit {
            what: "lovasz theta",
            size: n,
            limit,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() {
        let matrix = SymMatrix::ones(n);
        let value = matrix.lambda_max()?;
        return Ok(ThetaResult {
            value,
            matrix,
            lower_bound: n as f64,
            tolerance: tol,
            iterations: 0,
            converged: true,
        });
    }
    let sol = sdp::solve(n, &edges, GAP_TOL, MAX_ITERATIONS);
    let mut matrix = SymMatrix::ones(n);
    for (&(u, v), y) in edges.iter().zip(&sol.edge_values) {
        matrix.set(u, v, 1.0 + y);
    }
    let value = matrix.lambda_max()?;
    debug_assert!(sol.dual_objective.is_finite());
    Ok(ThetaResult {
        value,
        matrix,
        lower_bound: sol.primal_objective,
        tolerance: tol,
        iterations: sol.iterations,
        converged: sol.converged && value - sol.primal_objective <= tol,
    })
}
