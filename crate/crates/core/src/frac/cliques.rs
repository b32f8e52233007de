use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAXIMAL_CLIQUE_LIMIT: usize = 20;

/// All inclusion-maximal cliques (Bron–Kerbosch with pivoting), each as an
/// ascending vertex list, sorted lexicographically. `K_0` has none.
pub fn maximal_cliques(g: &Graph, limit: usize) -> Result<Vec<Vec<usize>>> {
    if g.n() > limit {
        return Err(Error::SizeLimit {
            what: "maximal clique enumeration",
            size: g.n(),
            limit,
        });
    }
    let mut out = Vec::new();
    if g.n() > 0 {
        let mut p = FixedBitSet::with_capacity(g.n());
        p.insert_range(..);
        let x = FixedBitSet::with_capacity(g.n());
        bron_kerbosch(g, &mut Vec::new(), p, x, &mut out);
    }
    for clique in &mut out {
        clique.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| (p.intersection_count(g.neighbors(u)), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    let mut branch = p.clone();
    branch.difference_with(g.neighbors(pivot));
    for v in branch.ones() {
        let mut np = p.clone();
        np.intersect_with(g.neighbors(v));
        let mut nx = x.clone();
        nx.intersect_with(g.neighbors(v));
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}
