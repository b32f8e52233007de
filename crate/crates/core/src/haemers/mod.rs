//! The Haemers bound over a prime field: the minimum rank of a matrix with
//! nonzero diagonal and zeros at every non-adjacent pair of distinct vertices.
//!
//! The search ascends the target rank `r`. A row space of dimension `r` is
//! feasible when every vertex `v` can pick a row from it that vanishes
//! outside the closed neighbourhood of `v` and is nonzero at `v`.
//!
//! The ascent starts at `α(G)`: restricted to an independent set, any
//! feasible matrix is diagonal with nonzero diagonal. It stops at `χ̄(G)`,
//! which a clique cover always attains (one all-ones block per clique).

mod field;

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::clique_cover_number;
use crate::exact::independence::max_independent_set;
use crate::frac::{fractionalize, Fractionalized};
use crate::graph::Graph;
use crate::value::Value;

pub use field::{inverse, rank_mod_p};

pub const MAX_HAEMERS_VERTICES: usize = 10;
pub const SUPPORTED_FIELDS: [u8; 4] = [2, 3, 5, 7];

/// The matrix set `M^F(G)` over GF(p).
#[derive(Clone, Debug)]
pub struct FieldPattern {
    graph: Graph,
    p: u8,
}

impl FieldPattern {
    pub fn new(graph: &Graph, p: u8) -> Result<Self> {
        if !SUPPORTED_FIELDS.contains(&p) {
            return Err(Error::InvalidParameter(format!(
                "field size {p} unsupported; use one of 2, 3, 5, 7"
            )));
        }
        if graph.n() > MAX_HAEMERS_VERTICES {
            return Err(Error::SizeLimit {
                what: "haemers rank",
                size: graph.n(),
                limit: MAX_HAEMERS_VERTICES,
            });
        }
        Ok(FieldPattern {
            graph: graph.clone(),
            p,
        })
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// True when `m` is an `n × n` matrix over GF(p) in the pattern.
    pub fn admits(&self, m: &[Vec<u8>]) -> bool {
        let n = self.graph.n();
        m.len() == n
            && m.iter().enumerate().all(|(u, row)| {
                row.len() == n
                    && row.iter().all(|&x| x < self.p)
                    && row[u] != 0
                    && (0..n).all(|v| v == u || self.graph.has_edge(u, v) || row[v] == 0)
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HaemersResult {
    pub rank: usize,
    pub p: u8,
    /// A matrix of the pattern attaining `rank`, row-major.
    pub witness: Vec<Vec<u8>>,
}

impl HaemersResult {
    /// Rows as digit strings, e.g. `["110", "111", "011"]`.
    pub fn witness_rows(&self) -> Vec<String> {
        self.witness
            .iter()
            .map(|row| row.iter().map(|d| char::from(b'0' + d)).collect())
            .collect()
    }
}

/// Exact `R^{GF(p)}(g)` with a witness matrix.
pub fn haemers_rank(g: &Graph, p: u8) -> Result<HaemersResult> {
    let pattern = FieldPattern::new(g, p)?;
    let n = g.n();
    if n == 0 {
        return Ok(HaemersResult {
            rank: 0,
            p,
            witness: Vec::new(),
        });
    }
    let lower = max_independent_set(g).len();
    let cover = clique_cover_number(g, MAX_HAEMERS_VERTICES)?;
    for r in lower..cover.number {
        if let Some(witness) = search_rank(g, r, p) {
            debug_assert!(pattern.admits(&witness));
            debug_assert_eq!(rank_mod_p(&witness, p), r);
            return Ok(HaemersResult { rank: r, p, witness });
        }
    }
    let of = cover.assignment(n);
    let witness = (0..n)
        .map(|u| (0..n).map(|v| (of[u] == of[v]) as u8).collect())
        .collect();
    Ok(HaemersResult {
        rank: cover.number,
        p,
        witness,
    })
}

/// Fractional Haemers bound: best `R(blow_up(g, d)) / d` for `d <= d_max`.
/// The value is an upper bound on the infimum over all `d`.
pub fn fractional_haemers(g: &Graph, p: u8, d_max: usize) -> Result<Fractionalized> {
    FieldPattern::new(g, p)?;
    if g.n().saturating_mul(d_max) > MAX_HAEMERS_VERTICES {
        return Err(Error::SizeLimit {
            what: "fractional haemers (n * d_max)",
            size: g.n().saturating_mul(d_max),
            limit: MAX_HAEMERS_VERTICES,
        });
    }
    fractionalize(
        |h: &Graph| haemers_rank(h, p).map(|res| Value::integer(res.rank)),
        g,
        d_max,
    )
}

type Row = [u8; MAX_HAEMERS_VERTICES];

/// Looks for a matrix of rank at most `r`. Rows are fixed one vertex at a
/// time; a vertex already served by the span of earlier rows costs nothing,
/// otherwise a new basis vector supported on its closed neighbourhood is
/// tried, one per coset of the current span. The first candidate in
/// enumeration order wins, independent of thread scheduling.
fn search_rank(g: &Graph, r: usize, p: u8) -> Option<Vec<Vec<u8>>> {
    let n = g.n();
    let closed: Vec<u16> = (0..n)
        .map(|v| g.neighbors(v).ones().fold(1u16 << v, |m, u| m | 1 << u))
        .collect();
    let root = Search {
        n,
        p,
        r,
        closed,
        touched: 0,
        basis: Vec::new(),
    };
    if root.uncovered().is_empty() {
        return Some(root.witness());
    }
    if r == 0 {
        return None;
    }
    let v = root.branch_vertex();
    root.candidates(v)
        .into_par_iter()
        .find_map_first(|x| {
            let mut s = Search {
                basis: Vec::with_capacity(r),
                closed: root.closed.clone(),
                ..root
            };
            s.insert(x);
            s.descend().then(|| s.witness())
        })
}

struct Search {
    n: usize,
    p: u8,
    r: usize,
    closed: Vec<u16>,
    /// Columns touched by the span. The rest can be rescaled freely, so a new
    /// row only needs entries 0 or 1 there.
    touched: u16,
    /// Reduced echelon basis: pivot column and a row that is 1 there and
    /// 0 at every other pivot.
    basis: Vec<(usize, Row)>,
}

impl Search {
    fn descend(&mut self) -> bool {
        if self.uncovered().is_empty() {
            return true;
        }
        if self.basis.len() == self.r {
            return false;
        }
        let v = self.branch_vertex();
        let (saved, touched) = (self.basis.clone(), self.touched);
        let mut seen = HashSet::new();
        for x in self.candidates(v) {
            let x = self.reduce(x);
            if !seen.insert(x) {
                continue;
            }
            self.insert(x);
            if self.descend() {
                return true;
            }
            self.basis.clone_from(&saved);
            self.touched = touched;
        }
        false
    }

    fn uncovered(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.serving_row(v).is_none()).collect()
    }

    /// The uncovered vertex with the fewest candidate rows.
    fn branch_vertex(&self) -> usize {
        self.uncovered()
            .into_iter()
            .min_by_key(|&v| (self.closed[v].count_ones(), v))
            .expect("some vertex is uncovered")
    }

    /// Rows with a 1 at `v` and zeros outside the closed neighbourhood of
    /// `v`, up to rescaling untouched columns.
    fn candidates(&self, v: usize) -> Vec<Row> {
        let free: Vec<usize> = (0..self.n)
            .filter(|&j| j != v && self.closed[v] >> j & 1 == 1)
            .collect();
        let mut x: Row = [0; MAX_HAEMERS_VERTICES];
        x[v] = 1;
        let mut out = vec![x];
        loop {
            let mut k = 0;
            loop {
                if k == free.len() {
                    return out;
                }
                let j = free[k];
                let base = if self.touched >> j & 1 == 1 { self.p } else { 2 };
                x[j] = (x[j] + 1) % base;
                if x[j] != 0 {
                    break;
                }
                k += 1;
            }
            out.push(x);
        }
    }

    fn reduce(&self, mut x: Row) -> Row {
        for (pivot, b) in &self.basis {
            let d = x[*pivot];
            if d != 0 {
                axpy(&mut x, self.p - d, b, self.p);
            }
        }
        x
    }

    /// Adds a vector already reduced against the basis.
    fn insert(&mut self, mut x: Row) {
        let p = self.p;
        self.touched |= (0..self.n).filter(|&j| x[j] != 0).fold(0, |m, j| m | 1 << j);
        let pivot = x.iter().position(|&d| d != 0).expect("nonzero vector");
        let inv = inverse(x[pivot], p);
        for d in x.iter_mut() {
            *d = (*d as u32 * inv as u32 % p as u32) as u8;
        }
        for (_, b) in self.basis.iter_mut() {
            let d = b[pivot];
            if d != 0 {
                axpy(b, p - d, &x, p);
            }
        }
        self.basis.push((pivot, x));
    }

    /// A vector of the span that is nonzero at `v` and vanishes outside the
    /// closed neighbourhood of `v`, found by eliminating the outside
    /// coordinates first.
    fn serving_row(&self, v: usize) -> Option<Row> {
        let p = self.p;
        let mut rows: Vec<Row> = self.basis.iter().map(|(_, b)| *b).collect();
        let mut rank = 0;
        for col in (0..self.n).filter(|&j| self.closed[v] >> j & 1 == 0) {
            let Some(i) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(rank, i);
            let inv = inverse(rows[rank][col], p);
            for i in rank + 1..rows.len() {
                let d = rows[i][col];
                if d != 0 {
                    let f = (p as u32 - (d as u32 * inv as u32 % p as u32)) as u8 % p;
                    let pivot_row = rows[rank];
                    axpy(&mut rows[i], f, &pivot_row, p);
                }
            }
            rank += 1;
        }
        rows[rank..].iter().find(|row| row[v] != 0).copied()
    }

    fn witness(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|v| {
                let row = self.serving_row(v).expect("every vertex is served");
                row[..self.n].to_vec()
            })
            .collect()
    }
}

/// `x += a * y` over GF(p).
fn axpy(x: &mut Row, a: u8, y: &Row, p: u8) {
    for (xi, &yi) in x.iter_mut().zip(y) {
        *xi = ((*xi as u32 + a as u32 * yi as u32) % p as u32) as u8;
    }
}
