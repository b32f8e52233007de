//! Exhaustive isomorphism test for small graphs.
//!
//! Used by the semiring-law property suites, where the laws only hold up to
//! relabelling. Candidates are restricted by degree and by consistency with
//! every vertex already mapped.

use crate::graph::Graph;

/// Returns a permutation `p` with `g.permute(p) == h`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let (gd, hd) = (dg.clone(), dh.clone());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    // Map high-degree vertices first; they constrain the rest the most.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(gd[v]), v));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, &gd, &hd, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    gd: &[usize],
    hd: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..h.n() {
        if used[w] || gd[v] != hd[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g, h, gd, hd, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    false
}
