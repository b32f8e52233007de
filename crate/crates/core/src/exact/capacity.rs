//! Shannon capacity lower bounds from strong powers, and finite witnesses
//! for the asymptotic preorder.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::independence::independence_number;
use crate::graph::{cohom_leq, CohomOutcome, Graph, HomCertificate};

/// `α(G^{⊠N})^{1/N}` for the best `N` tried.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CapacityEstimate {
    pub power: usize,
    pub alpha_of_power: usize,
    pub lower_bound: f64,
    /// Each entry is a vertex of `G^{⊠N}` written as an `N`-tuple of vertices of `G`.
    pub witness: Vec<Vec<usize>>,
}

/// `a^(1/m) < b^(1/n)` decided exactly as `a^n < b^m`.
fn root_less(a: usize, m: usize, b: usize, n: usize) -> bool {
    BigUint::from(a).pow(n as u32) < BigUint::from(b).pow(m as u32)
}

/// Splits a vertex index of `G^{⊠N}` into its coordinates (first factor first).
pub fn power_coordinates(mut index: usize, base: usize, power: usize) -> Vec<usize> {
    let mut digits = vec![0; power];
    for slot in digits.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    digits
}

/// Best `α(g^{⊠N})^{1/N}` over `N = 1..=max_power`; ties go to the smaller `N`.
///
/// `vertex_limit` caps the size of the largest power handed to the exact solver.
pub fn capacity_lower_bound(
    g: &Graph,
    max_power: usize,
    vertex_limit: usize,
) -> Result<CapacityEstimate> {
    if max_power == 0 {
        return Err(Error::InvalidParameter("max_power must be at least 1".into()));
    }
    let size = u32::try_from(max_power)
        .ok()
        .and_then(|p| g.n().checked_pow(p))
        .filter(|&s| s <= vertex_limit)
        .ok_or(Error::SizeLimit {
            what: "strong power for capacity bound",
            size: g.n().saturating_pow(max_power.min(u32::MAX as usize) as u32),
            limit: vertex_limit,
        })?;
    debug_assert!(size <= vertex_limit);

    let mut best: Option<CapacityEstimate> = None;
    let mut power_graph = g.clone();
    for power in 1..=max_power {
        if power > 1 {
            power_graph = power_graph.strong_product(g);
        }
        let set = independence_number(&power_graph, vertex_limit)?;
        let improves = match &best {
            None => true,
            Some(b) => root_less(b.alpha_of_power, b.power, set.size, power),
        };
        if improves {
            best = Some(CapacityEstimate {
                power,
                alpha_of_power: set.size,
                lower_bound: (set.size as f64).powf(1.0 / power as f64),
                witness: set
                    .vertices
                    .iter()
                    .map(|&v| power_coordinates(v, g.n(), power))
                    .collect(),
            });
        }
    }
    Ok(best.expect("at least one power evaluated"))
}

/// Outcome of searching for `g^{⊠N} <= (h^{⊠N})^{⊔x}` within bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AsympWitness {
    Witness {
        power: usize,
        copies: usize,
        certificate: HomCertificate,
    },
    /// Nothing found within the bounds. This is not a refutation of the asymptotic relation.
    NotFound { budget_exceeded: bool },
}

/// Searches `N <= max_power`, `x <= max_copies` for `g^{⊠N} <= (h^{⊠N})^{⊔x}`.
///
/// For each `N` the smallest working `x` is kept; among those the witness with
/// the smallest rate `x^{1/N}` wins, ties going to the smaller `N`. A single
/// witness only evidences the relation at one level.
pub fn asymp_leq_certificate(
    g: &Graph,
    h: &Graph,
    max_power: usize,
    max_copies: usize,
    budget: u64,
) -> Result<AsympWitness> {
    if max_power == 0 || max_copies == 0 {
        return Err(Error::InvalidParameter(
            "max_power and max_copies must be at least 1".into(),
        ));
    }
    let mut best: Option<(usize, usize, HomCertificate)> = None;
    let mut budget_exceeded = false;
    let (mut g_pow, mut h_pow) = (g.clone(), h.clone());
    for power in 1..=max_power {
        if power > 1 {
            g_pow = g_pow.strong_product(g);
            h_pow = h_pow.strong_product(h);
        }
        for copies in 1..=max_copies {
            if let Some((bp, bx, _)) = &best {
                // This (power, copies) cannot beat the current rate.
                if !root_less(copies, power, *bx, *bp) {
                    break;
                }
            }
            match cohom_leq(&g_pow, &h_pow.disjoint_copies(copies), budget) {
                CohomOutcome::Leq(cert) => {
                    best = Some((power, copies, cert));
                    break;
                }
                CohomOutcome::NotLeq => {}
                CohomOutcome::BudgetExceeded => budget_exceeded = true,
            }
        }
        if matches!(best, Some((_, 1, _))) {
            break;
        }
    }
    Ok(match best {
        Some((power, copies, certificate)) => AsympWitness::Witness {
            power,
            copies,
            certificate,
        },
        None => AsympWitness::NotFound { budget_exceeded },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::independence::DEFAULT_INDEPENDENCE_LIMIT;
    use crate::graph::DEFAULT_HOM_BUDGET;

    #[test]
    fn c5_bounds() {
        let c5 = Graph::cycle(5).unwrap();
        let one = capacity_lower_bound(&c5, 1, DEFAULT_INDEPENDENCE_LIMIT).unwrap();
        assert_eq!((one.power, one.alpha_of_power, one.lower_bound), (1, 2, 2.0));
        let two = capacity_lower_bound(&c5, 2, DEFAULT_INDEPENDENCE_LIMIT).unwrap();
        assert_eq!((two.power, two.alpha_of_power), (2, 5));
        assert!((two.lower_bound - 5f64.sqrt()).abs() < 1e-15);
        let sq = c5.strong_power(2).unwrap();
        let idx: Vec<usize> = two.witness.iter().map(|t| t[0] * 5 + t[1]).collect();
        assert!(sq.is_independent(&idx));
    }

    #[test]
    fn ties_go_to_smaller_power() {
        let k3bar = Graph::edgeless(3);
        let est = capacity_lower_bound(&k3bar, 2, DEFAULT_INDEPENDENCE_LIMIT).unwrap();
        assert_eq!((est.power, est.alpha_of_power, est.lower_bound), (1, 3, 3.0));
    }

    #[test]
    fn power_limits() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(matches!(
            capacity_lower_bound(&c5, 3, DEFAULT_INDEPENDENCE_LIMIT),
            Err(Error::SizeLimit { .. })
        ));
        assert!(capacity_lower_bound(&c5, 0, 40).is_err());
    }

    #[test]
    fn coordinates() {
        assert_eq!(power_coordinates(13, 5, 2), vec![2, 3]);
        assert_eq!(power_coordinates(0, 5, 3), vec![0, 0, 0]);
        assert_eq!(power_coordinates(124, 5, 3), vec![4, 4, 4]);
    }

    #[test]
    fn asymptotic_witnesses() {
        let c5 = Graph::cycle(5).unwrap();
        let w = asymp_leq_certificate(&c5, &c5, 1, 1, DEFAULT_HOM_BUDGET).unwrap();
        assert!(matches!(w, AsympWitness::Witness { power: 1, copies: 1, .. }));
        let w = asymp_leq_certificate(&Graph::edgeless(2), &c5, 1, 1, DEFAULT_HOM_BUDGET).unwrap();
        assert!(matches!(w, AsympWitness::Witness { power: 1, copies: 1, .. }));
        let w = asymp_leq_certificate(&Graph::edgeless(3), &c5, 2, 2, DEFAULT_HOM_BUDGET).unwrap();
        let AsympWitness::Witness { power, copies, certificate } = w else {
            panic!("expected a witness")
        };
        assert_eq!((power, copies), (2, 2));
        let target = c5.strong_power(2).unwrap().disjoint_copies(2);
        assert!(certificate.verify(&Graph::edgeless(9), &target));
    }

    #[test]
    fn asymptotic_not_found() {
        let c5 = Graph::cycle(5).unwrap();
        let w = asymp_leq_certificate(&Graph::edgeless(3), &c5, 1, 1, DEFAULT_HOM_BUDGET).unwrap();
        assert_eq!(w, AsympWitness::NotFound { budget_exceeded: false });
    }
}
