//! The cohomomorphism preorder: `G <= H` iff there is a homomorphism from
//! the complement of `G` to the complement of `H`.
//!
//! Equivalently, a map `f: V(G) -> V(H)` such that every pair of distinct
//! non-adjacent vertices of `G` lands on a pair of distinct non-adjacent
//! vertices of `H`.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::graph::Graph;

/// Default node-expansion budget for [`cohom_leq`].
pub const DEFAULT_HOM_BUDGET: u64 = 5_000_000;

/// A map `V(G) -> V(H)` witnessing `G <= H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomCertificate {
    mapping: Vec<usize>,
}

impl HomCertificate {
    pub fn new(mapping: Vec<usize>) -> Self {
        HomCertificate { mapping }
    }

    pub fn identity(n: usize) -> Self {
        HomCertificate::new((0..n).collect())
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn into_mapping(self) -> Vec<usize> {
        self.mapping
    }

    /// Checks that the mapping is a homomorphism `complement(g) -> complement(h)`.
    pub fn verify(&self, g: &Graph, h: &Graph) -> bool {
        if self.mapping.len() != g.n() || self.mapping.iter().any(|&w| w >= h.n()) {
            return false;
        }
        (0..g.n()).all(|u| {
            g.non_neighbors(u).ones().filter(|&v| v > u).all(|v| {
                let (a, b) = (self.mapping[u], self.mapping[v]);
                a != b && !h.has_edge(a, b)
            })
        })
    }

    /// `other ∘ self`: from `G <= H` and `H <= K` obtain `G <= K`.
    pub fn then(&self, other: &HomCertificate) -> HomCertificate {
        HomCertificate::new(self.mapping.iter().map(|&w| other.mapping[w]).collect())
    }

    /// From `A <= B` (self) and `C <= D` (other) obtain `A ⊔ C <= B ⊔ D`.
    pub fn disjoint_union(&self, other: &HomCertificate, b_order: usize) -> HomCertificate {
        let mapping = self
            .mapping
            .iter()
            .copied()
            .chain(other.mapping.iter().map(|&w| w + b_order))
            .collect();
        HomCertificate::new(mapping)
    }

    /// From `A <= B` (self) and `C <= D` (other) obtain `A ⊠ C <= B ⊠ D`.
    pub fn strong_product(&self, other: &HomCertificate, d_order: usize) -> HomCertificate {
        let mapping = self
            .mapping
            .iter()
            .flat_map(|&a| other.mapping.iter().map(move |&c| a * d_order + c))
            .collect();
        HomCertificate::new(mapping)
    }
}

/// Result of a budgeted preorder test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomOutcome {
    /// `G <= H`, with a verified witness.
    Leq(HomCertificate),
    /// The whole search space was refuted.
    NotLeq,
    /// The budget ran out before a decision; the answer is unknown.
    BudgetExceeded,
}

impl CohomOutcome {
    pub fn is_leq(&self) -> bool {
        matches!(self, CohomOutcome::Leq(_))
    }

    pub fn certificate(&self) -> Option<&HomCertificate> {
        match self {
            CohomOutcome::Leq(cert) => Some(cert),
            _ => None,
        }
    }
}

/// Decides `g <= h` by backtracking over the vertices of `complement(g)` in
/// descending degree order with forward checking on candidate bit sets.
///
/// `budget` bounds the number of tentative assignments; a budget of zero is
/// treated as one.
pub fn cohom_leq(g: &Graph, h: &Graph, budget: u64) -> CohomOutcome {
    let n = g.n();
    if n == 0 {
        return CohomOutcome::Leq(HomCertificate::new(Vec::new()));
    }
    if h.n() == 0 {
        return CohomOutcome::NotLeq;
    }
    let g_bar: Vec<FixedBitSet> = (0..n).map(|v| g.non_neighbors(v)).collect();
    let h_bar: Vec<FixedBitSet> = (0..h.n()).map(|w| h.non_neighbors(w)).collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g_bar[v].count_ones(..)), v));

    let mut full = FixedBitSet::with_capacity(h.n());
    full.insert_range(..);
    let mut search = Search {
        g_bar: &g_bar,
        h_bar: &h_bar,
        order: &order,
        mapping: vec![usize::MAX; n],
        assigned: FixedBitSet::with_capacity(n),
        nodes: 0,
        budget: budget.max(1),
    };
    let domains = vec![full; n];
    match search.descend(0, &domains) {
        Step::Found => {
            let cert = HomCertificate::new(search.mapping);
            debug_assert!(cert.verify(g, h));
            CohomOutcome::Leq(cert)
        }
        Step::Exhausted => CohomOutcome::NotLeq,
        Step::OutOfBudget => CohomOutcome::BudgetExceeded,
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    g_bar: &'a [FixedBitSet],
    h_bar: &'a [FixedBitSet],
    order: &'a [usize],
    mapping: Vec<usize>,
    assigned: FixedBitSet,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    // `domains` is indexed by vertex; only unassigned entries are meaningful.
    fn descend(&mut self, depth: usize, domains: &[FixedBitSet]) -> Step {
        if depth == self.order.len() {
            return Step::Found;
        }
        let v = self.order[depth];
        for w in domains[v].ones() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            let mut next = domains.to_vec();
            let mut wiped_out = false;
            for u in self.g_bar[v].ones() {
                if self.assigned.contains(u) {
                    continue;
                }
                next[u].intersect_with(&self.h_bar[w]);
                if next[u].is_clear() {
                    wiped_out = true;
                    break;
                }
            }
            if wiped_out {
                continue;
            }
            self.mapping[v] = w;
            self.assigned.insert(v);
            match self.descend(depth + 1, &next) {
                Step::Exhausted => {}
                other => return other,
            }
            self.assigned.set(v, false);
        }
        Step::Exhausted
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leq(g: &Graph, h: &Graph) -> CohomOutcome {
        cohom_leq(g, h, DEFAULT_HOM_BUDGET)
    }

    #[test]
    fn edgeless_graphs_order_like_naturals() {
        for a in 0..5 {
            for b in 0..5 {
                let out = leq(&Graph::edgeless(a), &Graph::edgeless(b));
                assert_eq!(out.is_leq(), a <= b, "K{a}bar <= K{b}bar");
                assert_ne!(out, CohomOutcome::BudgetExceeded);
            }
        }
    }

    #[test]
    fn reflexive_with_verified_certificate() {
        for g in [Graph::petersen(), Graph::cycle(7).unwrap(), Graph::complete(4)] {
            let out = leq(&g, &g);
            assert!(out.certificate().unwrap().verify(&g, &g));
            assert!(HomCertificate::identity(g.n()).verify(&g, &g));
        }
    }

    #[test]
    fn c5_below_three_point_edgeless() {
        let c5 = Graph::cycle(5).unwrap();
        let out = leq(&c5, &Graph::edgeless(3));
        assert!(out.certificate().unwrap().verify(&c5, &Graph::edgeless(3)));
        assert_eq!(leq(&c5, &Graph::edgeless(2)), CohomOutcome::NotLeq);
        assert!(leq(&Graph::edgeless(2), &c5).is_leq());
        assert_eq!(leq(&Graph::edgeless(3), &c5), CohomOutcome::NotLeq);
    }

    #[test]
    fn empty_graph_edge_cases() {
        assert!(leq(&Graph::edgeless(0), &Graph::edgeless(0)).is_leq());
        assert_eq!(leq(&Graph::complete(1), &Graph::edgeless(0)), CohomOutcome::NotLeq);
        // Complete graphs impose no constraints.
        assert!(leq(&Graph::complete(6), &Graph::complete(1)).is_leq());
    }

    #[test]
    fn tiny_budget_reports_unknown() {
        let g = Graph::edgeless(6);
        let h = Graph::cycle(5).unwrap().strong_power(2).unwrap();
        assert_eq!(cohom_leq(&g, &h, 3), CohomOutcome::BudgetExceeded);
        assert_eq!(leq(&g, &h), CohomOutcome::NotLeq);
    }

    #[test]
    fn certificate_rejects_bad_maps() {
        let c5 = Graph::cycle(5).unwrap();
        let k2bar = Graph::edgeless(2);
        assert!(!HomCertificate::new(vec![0, 1, 0, 1, 0]).verify(&c5, &k2bar));
        assert!(!HomCertificate::new(vec![0, 1]).verify(&c5, &k2bar));
        assert!(!HomCertificate::new(vec![0, 1, 2, 0, 1]).verify(&c5, &k2bar));
    }
}
