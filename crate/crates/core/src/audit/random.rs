//! Reproducible random graphs.
//!
//! The generator is SplitMix64: the state `s` advances by
//! `0x9E3779B97F4A7C15` and each output is `s` passed through
//!
//! ```text
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! z =  z ^ (z >> 31)
//! ```
//!
//! with wrapping multiplication; the state starts at the seed itself.
//!
//! A run with seed `S` draws one trial seed per trial from a generator
//! started at `S`, and trial `t` then uses its own generator started at the
//! `t`-th draw. Within a trial, graphs are drawn one after another by
//! [`random_graph`]:
//!
//! 1. `n = 1 + (x mod max_n)` for the next output `x`;
//! 2. the edge probability is `EDGE_PROBABILITIES[x mod 3]` for the next output;
//! 3. pairs `(i, j)`, `i < j`, are visited with `j` ascending and `i`
//!    ascending inside it (graph6 order); the pair is an edge when the top
//!    53 bits of the next output, read as a fraction in `[0, 1)`, are
//!    below the probability.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::graph::Graph;

pub const EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

pub fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

/// One independent generator per trial, derived from the run seed.
pub fn trial_rngs(seed: u64, trials: usize) -> Vec<SplitMix64> {
    let mut master = rng(seed);
    (0..trials).map(|_| rng(master.next_u64())).collect()
}

fn unit(x: u64) -> f64 {
    (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// An Erdős–Rényi graph on `1..=max_n` vertices.
pub fn random_graph(rng: &mut SplitMix64, max_n: usize) -> Graph {
    assert!(max_n >= 1, "max_n must be positive");
    let n = 1 + (rng.next_u64() % max_n as u64) as usize;
    let q = EDGE_PROBABILITIES[(rng.next_u64() % 3) as usize];
    random_graph_with(rng, n, q)
}

/// An Erdős–Rényi graph with exactly `n` vertices and edge probability `q`.
pub fn random_graph_with(rng: &mut SplitMix64, n: usize, q: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if unit(rng.next_u64()) < q {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("endpoints are in range")
}

/// Deletes each edge of `g` with probability one half, then relabels the
/// vertices by a uniformly shuffled permutation. The result `h` satisfies
/// `g <= h`, witnessed by the returned map.
pub fn weaken(rng: &mut SplitMix64, g: &Graph) -> (Graph, Vec<usize>) {
    let kept = g.filter_edges(|_, _| rng.next_u64() >> 63 == 0);
    let mut perm: Vec<usize> = (0..g.n()).collect();
    for i in (1..perm.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        perm.swap(i, j);
    }
    let h = kept.permute(&perm).expect("perm is a permutation");
    (h, perm)
}
