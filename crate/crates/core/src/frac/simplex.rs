//! Dense tableau simplex over exact rationals with Bland's rule.
//!
//! Solves `max c·x` subject to `A x <= b`, `x >= 0` with `b >= 0`, so the
//! slack basis is feasible from the start and no phase one is needed.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::value::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub value: Rational,
    pub primal: Vec<Rational>,
    /// One multiplier per constraint row; an optimal solution of the dual LP.
    pub dual: Vec<Rational>,
    pub pivots: usize,
}

pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> Result<LpSolution> {
    let n = c.len();
    let m = b.len();
    if a.len() != m || a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidParameter("constraint matrix shape mismatch".into()));
    }
    if b.iter().any(|v| v.is_negative()) {
        return Err(Error::InvalidParameter(
            "right-hand side must be non-negative".into(),
        ));
    }
    let width = n + m;
    let mut rows: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut full = row.clone();
            full.resize(width, Rational::zero());
            full[n + i] = Rational::one();
            full
        })
        .collect();
    let mut rhs = b.to_vec();
    let mut basis: Vec<usize> = (n..width).collect();
    // Reduced profits c_j - c_B B^{-1} A_j.
    let mut profit: Vec<Rational> = c.to_vec();
    profit.resize(width, Rational::zero());
    let mut value = Rational::zero();
    let mut pivots = 0;

    loop {
        let Some(enter) = (0..width).find(|&j| profit[j].is_positive()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !rows[i][enter].is_positive() {
                continue;
            }
            let ratio = &rhs[i] / &rows[i][enter];
            let better = match &leave {
                None => true,
                Some((r, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*r]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((r, _)) = leave else {
            return Err(Error::Unbounded);
        };

        let inv = rows[r][enter].recip();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        rhs[r] *= &inv;
        let support: Vec<usize> = (0..width).filter(|&j| !rows[r][j].is_zero()).collect();
        let pivot_row = rows[r].clone();
        let pivot_rhs = rhs[r].clone();
        for i in 0..m {
            if i == r || rows[i][enter].is_zero() {
                continue;
            }
            let factor = rows[i][enter].clone();
            for &j in &support {
                let delta = &factor * &pivot_row[j];
                rows[i][j] -= delta;
            }
            rhs[i] -= &factor * &pivot_rhs;
        }
        let factor = profit[enter].clone();
        for &j in &support {
            let delta = &factor * &pivot_row[j];
            profit[j] -= delta;
        }
        value += &factor * &pivot_rhs;
        basis[r] = enter;
        pivots += 1;
    }

    let mut primal = vec![Rational::zero(); n];
    for (i, &j) in basis.iter().enumerate() {
        if j < n {
            primal[j] = rhs[i].clone();
        }
    }
    let dual = (0..m).map(|i| -profit[n + i].clone()).collect();
    Ok(LpSolution {
        value,
        primal,
        dual,
        pivots,
    })
}
