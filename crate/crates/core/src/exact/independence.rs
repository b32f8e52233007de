//! Maximum independent set by branch and bound.
//!
//! Runs a maximum-clique search on the complement: candidates are bit sets,
//! and a greedy colouring of the candidate set bounds how many more vertices
//! can still be added.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_INDEPENDENCE_LIMIT: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependentSet {
    pub size: usize,
    /// Vertices of a maximum independent set, ascending.
    pub vertices: Vec<usize>,
}

/// Exact independence number `α(g)` with a witness. Graphs above `limit` vertices are refused.
pub fn independence_number(g: &Graph, limit: usize) -> Result<IndependentSet> {
    if g.n() > limit {
        return Err(Error::SizeLimit {
            what: "independence number",
            size: g.n(),
            limit,
        });
    }
    let vertices = max_independent_set(g);
    debug_assert!(g.is_independent(&vertices));
    Ok(IndependentSet {
        size: vertices.len(),
        vertices,
    })
}

pub(crate) fn max_independent_set(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut search = CliqueSearch {
        adj: (0..n).map(|v| g.non_neighbors(v)).collect(),
        best: Vec::new(),
    };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut current = Vec::new();
    search.expand(all, &mut current);
    let mut best = search.best;
    best.sort_unstable();
    best
}

struct CliqueSearch {
    adj: Vec<FixedBitSet>,
    best: Vec<usize>,
}

impl CliqueSearch {
    fn expand(&mut self, mut cand: FixedBitSet, current: &mut Vec<usize>) {
        let (order, bounds) = self.colour_sort(&cand);
        for i in (0..order.len()).rev() {
            if current.len() + bounds[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            current.push(v);
            let mut next = cand.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_clear() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(next, current);
            }
            current.pop();
            cand.set(v, false);
        }
    }

    /// Greedy colouring of `cand`; returns vertices by ascending colour and,
    /// for each position, the number of colours used up to it.
    fn colour_sort(&self, cand: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = cand.clone();
        let mut order = Vec::with_capacity(cand.count_ones(..));
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut colour = 0;
        while !uncoloured.is_clear() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.minimum() {
                q.set(v, false);
                q.difference_with(&self.adj[v]);
                uncoloured.set(v, false);
                order.push(v);
                bounds.push(colour);
            }
        }
        (order, bounds)
    }
}
