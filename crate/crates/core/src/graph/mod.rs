//! Finite simple graphs and the graph semiring.
//!
//! Addition is disjoint union, multiplication is the strong product, the
//! additive unit is `K_0` and the multiplicative unit is `K_1`. The preorder
//! `G <= H` holds when the complement of `G` maps homomorphically into the
//! complement of `H`; see [`hom`].

pub mod graph6;
pub mod hom;
pub mod iso;

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use hom::{cohom_leq, CohomOutcome, HomCertificate, DEFAULT_HOM_BUDGET};

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency is kept as one packed bit row per vertex. Equality is
/// index-exact and ignores the label; isomorphism lives in [`iso`].
#[derive(Clone)]
pub struct Graph {
    n: usize,
    rows: Vec<FixedBitSet>,
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("label", &self.label)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(label) => write!(f, "{label}"),
            None => write!(f, "graph(n={}, m={})", self.n, self.edge_count()),
        }
    }
}

impl Graph {
    fn blank(n: usize) -> Self {
        Graph {
            n,
            rows: vec![FixedBitSet::with_capacity(n); n],
            label: None,
        }
    }

    fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    /// Builds a graph from an edge list. Loops and out-of-range endpoints are rejected;
    /// repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::blank(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric predicate, queried once per unordered pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::blank(n);
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    g.link(u, v);
                }
            }
        }
        g
    }

    /// `K̄_n`: `n` vertices, no edges.
    pub fn edgeless(n: usize) -> Self {
        Graph::blank(n).with_label(format!("K{n}bar"))
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Self {
        Graph::from_fn(n, |_, _| true).with_label(format!("K{n}"))
    }

    /// `C_k` with `i` adjacent to `i ± 1 mod k`.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {k}"
            )));
        }
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Ok(Graph::from_edges(k, &edges)?.with_label(format!("C{k}")))
    }

    /// Path `P_k` on `k` vertices.
    pub fn path(k: usize) -> Self {
        let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Graph::from_edges(k, &edges)
            .expect("path edges are in range")
            .with_label(format!("P{k}"))
    }

    /// Petersen graph: outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges)
            .expect("petersen edges are in range")
            .with_label("petersen")
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Non-neighbours of `v`, excluding `v` itself.
    pub fn non_neighbors(&self, v: usize) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.n);
        set.insert_range(..);
        set.difference_with(&self.rows[v]);
        set.set(v, false);
        set
    }

    /// True when every pair of distinct vertices in `set` is adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            set[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// True when no two vertices of `set` are adjacent or equal.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            set[i + 1..]
                .iter()
                .all(|&v| u != v && !self.has_edge(u, v))
        })
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::blank(self.n);
        for v in 0..self.n {
            g.rows[v] = self.non_neighbors(v);
        }
        g
    }

    /// `self ⊔ other`; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::blank(n);
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(self.n + u, self.n + v);
        }
        g
    }

    /// `copies`-fold disjoint union of `self`. Zero copies give `K_0`.
    pub fn disjoint_copies(&self, copies: usize) -> Graph {
        (0..copies).fold(Graph::blank(0), |acc, _| acc.disjoint_union(self))
    }

    /// Strong product `self ⊠ other`. Vertex `(a, b)` has index `a * other.n() + b`;
    /// distinct pairs are adjacent when each coordinate is equal or adjacent.
    pub fn strong_product(&self, other: &Graph) -> Graph {
        let m = other.n;
        let mut g = Graph::blank(self.n * m);
        for a in 0..self.n {
            for b in 0..m {
                let row = &mut g.rows[a * m + b];
                for a2 in self.rows[a].ones().chain(std::iter::once(a)) {
                    for b2 in other.rows[b].ones().chain(std::iter::once(b)) {
                        if a2 != a || b2 != b {
                            row.insert(a2 * m + b2);
                        }
                    }
                }
            }
        }
        g
    }

    /// `self^{⊠n}` as a left-associated product; `n = 0` is rejected.
    pub fn strong_power(&self, n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "strong power exponent must be at least 1".into(),
            ));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.strong_product(self);
        }
        Ok(acc)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n || !is_permutation(perm) {
            return Err(Error::InvalidParameter(
                "relabelling is not a permutation of the vertex set".into(),
            ));
        }
        let mut g = Graph::blank(self.n);
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Spanning subgraph keeping the edges for which `keep` returns true.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut g = Graph::blank(self.n);
        for (u, v) in self.edges() {
            if keep(u, v) {
                g.link(u, v);
            }
        }
        g
    }
}

fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter()
        .all(|&p| p < perm.len() && !std::mem::replace(&mut seen[p], true))
}

/// Builds one of the named families: `complete`, `edgeless`, `cycle`, `path`, `petersen`.
/// `k` is ignored for `petersen`.
pub fn make_named(family: &str, k: usize) -> Result<Graph> {
    match family {
        "complete" => Ok(Graph::complete(k)),
        "edgeless" | "empty" => Ok(Graph::edgeless(k)),
        "cycle" => Graph::cycle(k),
        "path" => Ok(Graph::path(k)),
        "petersen" => Ok(Graph::petersen()),
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

/// Short names: `K5`, `K3bar`, `C7`, `P4`, `petersen`.
pub fn parse_name(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownFamily(name.to_string());
    if name.eq_ignore_ascii_case("petersen") {
        return Ok(Graph::petersen());
    }
    let (family, rest) = name.split_at(name.chars().next().map_or(0, char::len_utf8));
    let (digits, bar) = match rest.strip_suffix("bar") {
        Some(d) => (d, true),
        None => (rest, false),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(unknown());
    }
    let k: usize = digits.parse().map_err(|_| unknown())?;
    let g = match family {
        "K" => make_named("complete", k)?,
        "C" => make_named("cycle", k)?,
        "P" => make_named("path", k)?,
        _ => return Err(unknown()),
    };
    Ok(if bar { g.complement().with_label(name) } else { g })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_names() {
        assert_eq!(parse_name("K5").unwrap(), Graph::complete(5));
        assert_eq!(parse_name("K3bar").unwrap(), Graph::edgeless(3));
        assert_eq!(parse_name("C7").unwrap(), Graph::cycle(7).unwrap());
        assert_eq!(parse_name("C5bar").unwrap(), Graph::cycle(5).unwrap().complement());
        assert_eq!(parse_name("Petersen").unwrap(), Graph::petersen());
        for bad in ["", "K", "X5", "Kbar", "C2", "K-1", "K5x"] {
            assert!(parse_name(bad).is_err(), "{bad}");
        }
    }

    fn brute_alpha(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|mask| {
                let set: Vec<_> = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
                g.is_independent(&set)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn named_families() {
        let k5 = make_named("complete", 5).unwrap();
        assert_eq!((k5.n(), k5.edge_count()), (5, 10));
        let c5 = make_named("cycle", 5).unwrap();
        assert_eq!((c5.n(), c5.edge_count()), (5, 5));
        assert!(c5.has_edge(0, 4) && c5.has_edge(2, 3) && !c5.has_edge(0, 2));
        let p = make_named("petersen", 99).unwrap();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(brute_alpha(&p), 4);
    }

    #[test]
    fn named_family_errors() {
        assert!(matches!(make_named("cycle", 2), Err(Error::InvalidParameter(_))));
        assert!(matches!(make_named("wheel", 5), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn complement_basics() {
        let k3bar = Graph::complete(3).complement();
        assert_eq!((k3bar.n(), k3bar.edge_count()), (3, 0));
        let p = Graph::petersen();
        assert_eq!(p.complement().complement(), p);
        assert_eq!(Graph::complete(0).complement(), Graph::edgeless(0));
    }

    #[test]
    fn disjoint_union_counts() {
        assert_eq!(
            Graph::complete(1).disjoint_union(&Graph::complete(1)),
            Graph::edgeless(2)
        );
        let c5 = Graph::cycle(5).unwrap();
        let u = c5.disjoint_union(&c5);
        assert_eq!((u.n(), u.edge_count()), (10, 10));
        assert!(u.has_edge(5, 9) && !u.has_edge(4, 5));
        assert_eq!(brute_alpha(&u), 4);
        assert_eq!(c5.disjoint_copies(0), Graph::edgeless(0));
        assert_eq!(c5.disjoint_copies(3).n(), 15);
    }

    #[test]
    fn strong_product_small_cases() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(Graph::complete(1).strong_product(&c5), c5);
        assert_eq!(c5.strong_product(&Graph::complete(1)), c5);
        let sq = c5.strong_product(&c5);
        assert_eq!((sq.n(), sq.edge_count()), (25, 100));
        assert!((0..25).all(|v| sq.degree(v) == 8));
        assert_eq!(
            Graph::complete(2).strong_product(&Graph::complete(2)),
            Graph::complete(4)
        );
        assert_eq!(Graph::edgeless(0).strong_product(&c5).n(), 0);
    }

    #[test]
    fn strong_product_matches_definition() {
        let g = Graph::path(3);
        let h = Graph::cycle(4).unwrap();
        let p = g.strong_product(&h);
        for (a, b, a2, b2) in
            itertools_product(g.n(), h.n())
        {
            let (x, y) = (a * h.n() + b, a2 * h.n() + b2);
            if x == y {
                continue;
            }
            let ga = a == a2 || g.has_edge(a, a2);
            let hb = b == b2 || h.has_edge(b, b2);
            assert_eq!(p.has_edge(x, y), ga && hb);
        }
    }

    fn itertools_product(
        n: usize,
        m: usize,
    ) -> impl Iterator<Item = (usize, usize, usize, usize)> {
        (0..n).flat_map(move |a| {
            (0..m).flat_map(move |b| {
                (0..n).flat_map(move |a2| (0..m).map(move |b2| (a, b, a2, b2)))
            })
        })
    }

    #[test]
    fn strong_powers() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.strong_power(1).unwrap(), c5);
        assert_eq!(c5.strong_power(2).unwrap().n(), 25);
        assert_eq!(Graph::edgeless(2).strong_power(3).unwrap(), Graph::edgeless(8));
        assert!(c5.strong_power(0).is_err());
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert_eq!(Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap().edge_count(), 1);
    }

    #[test]
    fn permute_rejects_non_permutations() {
        let g = Graph::path(3);
        assert!(g.permute(&[0, 0, 1]).is_err());
        let h = g.permute(&[2, 1, 0]).unwrap();
        assert!(h.has_edge(2, 1) && h.has_edge(1, 0));
    }
}
