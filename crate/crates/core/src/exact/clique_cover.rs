//! Exact clique cover number `χ̄(g) = χ(complement(g))` by DSATUR branch and bound.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::independence::max_independent_set;
use crate::graph::Graph;

pub const DEFAULT_CLIQUE_COVER_LIMIT: usize = 20;
/// Colour sets are packed into a `u64`.
pub const MAX_CLIQUE_COVER_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueCover {
    pub number: usize,
    /// A partition of the vertex set into cliques, each ascending.
    pub cliques: Vec<Vec<usize>>,
}

impl CliqueCover {
    /// Clique index of every vertex.
    pub fn assignment(&self, n: usize) -> Vec<usize> {
        let mut of = vec![usize::MAX; n];
        for (c, clique) in self.cliques.iter().enumerate() {
            for &v in clique {
                of[v] = c;
            }
        }
        of
    }
}

pub fn clique_cover_number(g: &Graph, limit: usize) -> Result<CliqueCover> {
    let limit = limit.min(MAX_CLIQUE_COVER_LIMIT);
    if g.n() > limit {
        return Err(Error::SizeLimit {
            what: "clique cover number",
            size: g.n(),
            limit,
        });
    }
    let n = g.n();
    if n == 0 {
        return Ok(CliqueCover {
            number: 0,
            cliques: Vec::new(),
        });
    }
    // A maximum independent set of g is a clique of the complement, so needs that many colours.
    let lower = max_independent_set(g).len();
    let mut search = Dsatur {
        h: (0..n).map(|v| g.non_neighbors(v)).collect(),
        colour: vec![None; n],
        best: n + 1,
        best_colour: Vec::new(),
        lower,
    };
    search.branch(0, 0);
    let mut cliques = vec![Vec::new(); search.best];
    for (v, &c) in search.best_colour.iter().enumerate() {
        cliques[c].push(v);
    }
    debug_assert!(cliques.iter().all(|c| g.is_clique(c)));
    Ok(CliqueCover {
        number: search.best,
        cliques,
    })
}

struct Dsatur {
    /// Adjacency of the graph being coloured (the complement of the input).
    h: Vec<FixedBitSet>,
    colour: Vec<Option<usize>>,
    best: usize,
    best_colour: Vec<usize>,
    lower: usize,
}

impl Dsatur {
    fn neighbour_colours(&self, v: usize) -> u64 {
        self.h[v]
            .ones()
            .filter_map(|u| self.colour[u])
            .fold(0, |m, c| m | 1 << c)
    }

    fn pick(&self) -> usize {
        (0..self.colour.len())
            .filter(|&v| self.colour[v].is_none())
            .max_by_key(|&v| {
                let sat = self.neighbour_colours(v).count_ones();
                let free = self.h[v].ones().filter(|&u| self.colour[u].is_none()).count();
                (sat, free, std::cmp::Reverse(v))
            })
            .expect("called with an uncoloured vertex left")
    }

    fn branch(&mut self, coloured: usize, used: usize) {
        if used >= self.best {
            return;
        }
        if coloured == self.colour.len() {
            self.best = used;
            self.best_colour = self.colour.iter().map(|c| c.unwrap()).collect();
            return;
        }
        let v = self.pick();
        let forbidden = self.neighbour_colours(v);
        for c in 0..used {
            if forbidden >> c & 1 == 0 {
                self.colour[v] = Some(c);
                self.branch(coloured + 1, used);
                if self.best == self.lower {
                    self.colour[v] = None;
                    return;
                }
            }
        }
        if used + 1 < self.best {
            self.colour[v] = Some(used);
            self.branch(coloured + 1, used + 1);
        }
        self.colour[v] = None;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi_bar(g: &Graph) -> usize {
        let cover = clique_cover_number(g, 64).unwrap();
        let mut seen: Vec<usize> = cover.cliques.concat();
        seen.sort_unstable();
        assert_eq!(seen, (0..g.n()).collect::<Vec<_>>(), "cover is a partition");
        assert!(cover.cliques.iter().all(|c| g.is_clique(c)));
        cover.number
    }

    #[test]
    fn small_families() {
        assert_eq!(chi_bar(&Graph::cycle(5).unwrap()), 3);
        assert_eq!(chi_bar(&Graph::cycle(7).unwrap()), 4);
        assert_eq!(chi_bar(&Graph::complete(7)), 1);
        assert_eq!(chi_bar(&Graph::edgeless(7)), 7);
        assert_eq!(chi_bar(&Graph::edgeless(0)), 0);
        // Complement of Petersen has chromatic number 5.
        assert_eq!(chi_bar(&Graph::petersen()), 5);
    }

    #[test]
    fn blown_up_c5() {
        let c5 = Graph::cycle(5).unwrap();
        let blown = c5.complement().strong_product(&Graph::complete(2)).complement();
        assert_eq!(chi_bar(&blown), 5);
    }

    #[test]
    fn respects_limit() {
        assert!(clique_cover_number(&Graph::edgeless(21), DEFAULT_CLIQUE_COVER_LIMIT).is_err());
        assert!(clique_cover_number(&Graph::edgeless(65), 1000).is_err());
    }
}
