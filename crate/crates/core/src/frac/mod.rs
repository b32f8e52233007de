//! Fractional parameters: the fractional clique cover number as an exact
//! LP optimum, and the generic fractionalizer
//! `φ_f(G) = inf_d φ(complement(complement(G) ⊠ K_d)) / d`.

pub mod cliques;
pub mod simplex;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::value::{rational, Rational, Value};

pub use cliques::{maximal_cliques, DEFAULT_MAXIMAL_CLIQUE_LIMIT};

/// Clique cover LP: minimise the total column weight subject to every vertex
/// being covered with weight at least one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverLp {
    n: usize,
    columns: Vec<Vec<usize>>,
}

impl CoverLp {
    /// Columns must be cliques of the intended graph; only index ranges are checked here.
    pub fn new(n: usize, columns: Vec<Vec<usize>>) -> Result<Self> {
        if columns.iter().flatten().any(|&v| v >= n) {
            return Err(Error::InvalidParameter("column vertex out of range".into()));
        }
        Ok(CoverLp { n, columns })
    }

    /// The LP over the maximal cliques of `g`.
    pub fn for_graph(g: &Graph, limit: usize) -> Result<Self> {
        Ok(CoverLp {
            n: g.n(),
            columns: maximal_cliques(g, limit)?,
        })
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverSolution {
    pub optimum: Rational,
    /// Weight per column, in column order.
    pub weights: Vec<Rational>,
}

/// Solves the cover LP exactly.
///
/// The simplex runs on the dual packing LP (`max Σ y_v` with `Σ_{v∈C} y_v <= 1`
/// per column), whose slack basis is feasible. The cover weights are its optimal
/// dual multipliers, so they are primal optimal by strong duality.
pub fn lp_solve_cover(lp: &CoverLp) -> Result<CoverSolution> {
    let mut covered = vec![false; lp.n];
    for &v in lp.columns.iter().flatten() {
        covered[v] = true;
    }
    if let Some(v) = covered.iter().position(|c| !c) {
        return Err(Error::Infeasible(format!("vertex {v} lies in no column")));
    }
    if lp.n == 0 {
        return Ok(CoverSolution {
            optimum: Rational::zero(),
            weights: vec![Rational::zero(); lp.columns.len()],
        });
    }
    let objective = vec![Rational::one(); lp.n];
    let matrix: Vec<Vec<Rational>> = lp
        .columns
        .iter()
        .map(|col| {
            let mut row = vec![Rational::zero(); lp.n];
            for &v in col {
                row[v] = Rational::one();
            }
            row
        })
        .collect();
    let rhs = vec![Rational::one(); lp.columns.len()];
    let sol = simplex::maximize(&objective, &matrix, &rhs)?;
    let weights = sol.dual;
    debug_assert!(weights.iter().all(|w| !w.is_negative()));
    debug_assert!((0..lp.n).all(|v| {
        let load: Rational = lp
            .columns
            .iter()
            .zip(&weights)
            .filter(|(col, _)| col.contains(&v))
            .map(|(_, w)| w.clone())
            .sum();
        load >= Rational::one()
    }));
    debug_assert_eq!(weights.iter().cloned().sum::<Rational>(), sol.value);
    Ok(CoverSolution {
        optimum: sol.value,
        weights,
    })
}

/// `χ̄_f(g)`, exact. `limit` bounds the maximal clique enumeration.
pub fn fractional_clique_cover(g: &Graph, limit: usize) -> Result<Rational> {
    Ok(lp_solve_cover(&CoverLp::for_graph(g, limit)?)?.optimum)
}

/// `complement(complement(g) ⊠ K_d)`: every vertex replaced by `d`
/// pairwise non-adjacent copies, copies of adjacent vertices adjacent.
pub fn blow_up(g: &Graph, d: usize) -> Graph {
    g.complement().strong_product(&Graph::complete(d)).complement()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Fractionalized {
    /// Best `φ(blow_up(g, d)) / d` seen; an upper bound on the infimum.
    pub value: Value,
    pub best_d: usize,
    pub d_max: usize,
}

/// Minimum of `φ(blow_up(g, d)) / d` over `d = 1..=d_max`, smallest `d` on ties.
/// The `d = 1` term is `φ(g)` itself.
pub fn fractionalize<F>(mut phi: F, g: &Graph, d_max: usize) -> Result<Fractionalized>
where
    F: FnMut(&Graph) -> Result<Value>,
{
    if d_max == 0 {
        return Err(Error::InvalidParameter("d_max must be at least 1".into()));
    }
    let mut best: Option<(Value, usize)> = None;
    for d in 1..=d_max {
        let term = if d == 1 { phi(g) } else { phi(&blow_up(g, d)) }
            .map_err(|e| Error::Evaluator {
                d,
                source: Box::new(e),
            })?
            .div_integer(d);
        let better = match &best {
            None => true,
            Some((v, _)) => term.compare(v) == Some(std::cmp::Ordering::Less),
        };
        if better {
            best = Some((term, d));
        }
    }
    let (value, best_d) = best.expect("d_max >= 1");
    Ok(Fractionalized {
        value,
        best_d,
        d_max,
    })
}

/// Integer-valued convenience wrapper: evaluates an integer graph parameter as an exact value.
pub fn integer_parameter<F>(mut f: F) -> impl FnMut(&Graph) -> Result<Value>
where
    F: FnMut(&Graph) -> Result<usize>,
{
    move |g| f(g).map(|k| Value::Exact(rational(k as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::clique_cover_number;
    use num_bigint::BigInt;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(d))
    }

    fn chi_f(g: &Graph) -> Rational {
        fractional_clique_cover(g, 64).unwrap()
    }

    #[test]
    fn cover_lp_small_cases() {
        let lp = CoverLp::for_graph(&Graph::edgeless(2), 20).unwrap();
        let sol = lp_solve_cover(&lp).unwrap();
        assert_eq!(sol.optimum, rational(2));
        assert_eq!(sol.weights, vec![rational(1), rational(1)]);
        let sol = lp_solve_cover(&CoverLp::for_graph(&Graph::complete(3), 20).unwrap()).unwrap();
        assert_eq!(sol.optimum, rational(1));
        let sol = lp_solve_cover(&CoverLp::for_graph(&Graph::cycle(5).unwrap(), 20).unwrap()).unwrap();
        assert_eq!(sol.optimum, q(5, 2));
        assert!(sol.weights.iter().all(|w| *w == q(1, 2)));
    }

    #[test]
    fn cover_lp_infeasible() {
        let lp = CoverLp::new(3, vec![vec![0, 1]]).unwrap();
        assert!(matches!(lp_solve_cover(&lp), Err(Error::Infeasible(_))));
        assert!(CoverLp::new(2, vec![vec![2]]).is_err());
    }

    #[test]
    fn fractional_clique_cover_values() {
        assert_eq!(chi_f(&Graph::cycle(5).unwrap()), q(5, 2));
        assert_eq!(chi_f(&Graph::cycle(7).unwrap()), q(7, 2));
        assert_eq!(chi_f(&Graph::complete(5)), rational(1));
        assert_eq!(chi_f(&Graph::edgeless(5)), rational(5));
        assert_eq!(chi_f(&Graph::edgeless(0)), rational(0));
        assert_eq!(chi_f(&Graph::petersen()), rational(5));
    }

    #[test]
    fn blow_up_structure() {
        let c5 = Graph::cycle(5).unwrap();
        let b = blow_up(&c5, 2);
        assert_eq!(b.n(), 10);
        // (v, i) ~ (u, j) iff u ~ v in C5.
        for x in 0..10 {
            for y in 0..10 {
                if x != y {
                    assert_eq!(b.has_edge(x, y), c5.has_edge(x / 2, y / 2));
                }
            }
        }
        assert_eq!(blow_up(&c5, 1), c5);
    }

    #[test]
    fn fractionalize_clique_cover() {
        let chi = || integer_parameter(|g: &Graph| clique_cover_number(g, 20).map(|c| c.number));
        let k1 = fractionalize(chi(), &Graph::complete(1), 4).unwrap();
        assert_eq!((k1.value, k1.best_d), (Value::integer(1), 1));
        let c5 = Graph::cycle(5).unwrap();
        let one = fractionalize(chi(), &c5, 1).unwrap();
        assert_eq!((one.value, one.best_d), (Value::integer(3), 1));
        let two = fractionalize(chi(), &c5, 2).unwrap();
        assert_eq!((two.value, two.best_d), (Value::Exact(q(5, 2)), 2));
    }

    #[test]
    fn fractionalize_reports_failing_d() {
        let chi = integer_parameter(|g: &Graph| clique_cover_number(g, 12).map(|c| c.number));
        let err = fractionalize(chi, &Graph::cycle(5).unwrap(), 3).unwrap_err();
        assert!(matches!(err, Error::Evaluator { d: 3, .. }));
        assert!(err.is_limit());
    }
}
