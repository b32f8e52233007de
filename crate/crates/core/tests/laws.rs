//! Algebraic laws of the graph semiring and of the parameters, as property tests.

mod common;

use proptest::prelude::*;
use spectrum_core::exact::{clique_cover_number, independence_number};
use spectrum_core::frac::{fractional_clique_cover, fractionalize, integer_parameter};
use spectrum_core::graph::graph6::{parse_graph6, write_graph6};
use spectrum_core::graph::iso::find_isomorphism;
use spectrum_core::graph::{cohom_leq, DEFAULT_HOM_BUDGET};
use spectrum_core::theta::lovasz_theta;
use spectrum_core::value::Value;
use spectrum_core::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut k = 0;
            Graph::from_fn(n, |_, _| {
                k += 1;
                bits[k - 1]
            })
        })
    })
}

fn nonempty(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("needs a vertex", |g| g.n() > 0)
}

fn alpha(g: &Graph) -> usize {
    independence_number(g, 64).unwrap().size
}

fn cover(g: &Graph) -> usize {
    clique_cover_number(g, 64).unwrap().number
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn union_commutes(g in graph(6), h in graph(6)) {
        let (a, b) = (g.n(), h.n());
        let perm: Vec<usize> = (0..a + b).map(|i| if i < a { b + i } else { i - a }).collect();
        prop_assert_eq!(g.disjoint_union(&h).permute(&perm).unwrap(), h.disjoint_union(&g));
    }

    #[test]
    fn product_commutes(g in graph(5), h in graph(5)) {
        let (a, b) = (g.n(), h.n());
        let perm: Vec<usize> = (0..a * b).map(|i| (i % b) * a + i / b).collect();
        prop_assert_eq!(g.strong_product(&h).permute(&perm).unwrap(), h.strong_product(&g));
    }

    #[test]
    fn small_products_commute_by_search(g in graph(3), h in graph(3)) {
        let gh = g.strong_product(&h);
        let hg = h.strong_product(&g);
        let p = find_isomorphism(&gh, &hg);
        prop_assert!(p.is_some());
        prop_assert_eq!(gh.permute(&p.unwrap()).unwrap(), hg);
    }

    #[test]
    fn operations_associate(g in graph(4), h in graph(4), k in graph(4)) {
        prop_assert_eq!(
            g.disjoint_union(&h).disjoint_union(&k),
            g.disjoint_union(&h.disjoint_union(&k))
        );
        prop_assert_eq!(
            g.strong_product(&h).strong_product(&k),
            g.strong_product(&h.strong_product(&k))
        );
    }

    #[test]
    fn product_distributes_over_union(g in graph(4), h in graph(4), k in graph(4)) {
        let (a, b, c) = (g.n(), h.n(), k.n());
        let perm: Vec<usize> = (0..a * (b + c))
            .map(|i| {
                let (x, j) = (i / (b + c), i % (b + c));
                if j < b { x * b + j } else { a * b + x * c + (j - b) }
            })
            .collect();
        let lhs = g.strong_product(&h.disjoint_union(&k));
        let rhs = g.strong_product(&h).disjoint_union(&g.strong_product(&k));
        prop_assert_eq!(lhs.permute(&perm).unwrap(), rhs);
    }

    #[test]
    fn units_and_zero(g in graph(7)) {
        prop_assert_eq!(g.strong_product(&Graph::complete(1)), g.clone());
        prop_assert_eq!(g.disjoint_union(&Graph::edgeless(0)), g.clone());
        prop_assert_eq!(g.strong_product(&Graph::edgeless(0)).n(), 0);
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn graph6_round_trip(g in graph(30)) {
        let text = write_graph6(&g).unwrap();
        let back = parse_graph6(text.as_bytes()).unwrap();
        prop_assert_eq!(write_graph6(&back).unwrap(), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn exact_parameters_on_unions_and_products(g in graph(5), h in graph(5)) {
        prop_assert_eq!(alpha(&g.disjoint_union(&h)), alpha(&g) + alpha(&h));
        prop_assert_eq!(cover(&g.disjoint_union(&h)), cover(&g) + cover(&h));
        let gh = g.strong_product(&h);
        prop_assert!(alpha(&gh) >= alpha(&g) * alpha(&h));
        prop_assert!(cover(&gh) <= cover(&g) * cover(&h));
        prop_assert_eq!(alpha(&g), common::brute_alpha(&g));
    }

    #[test]
    fn frac_cover_is_a_semiring_homomorphism(g in graph(5), h in graph(5)) {
        let f = |x: &Graph| fractional_clique_cover(x, 64).unwrap();
        prop_assert_eq!(f(&g.disjoint_union(&h)), f(&g) + f(&h));
        prop_assert_eq!(f(&g.strong_product(&h)), f(&g) * f(&h));
    }

    #[test]
    fn preorder_basics(g in graph(5), h in nonempty(4)) {
        let leq = |a: &Graph, b: &Graph| cohom_leq(a, b, DEFAULT_HOM_BUDGET);
        let refl = leq(&g, &g);
        prop_assert!(refl.certificate().unwrap().verify(&g, &g));
        let up = leq(&g, &g.disjoint_union(&h));
        prop_assert!(up.certificate().unwrap().verify(&g, &g.disjoint_union(&h)));
        prop_assert!(leq(&g, &g.strong_product(&h)).is_leq());
        // A graph sits below K̄_r exactly when r is at least its clique cover number.
        let r = cover(&g);
        prop_assert!(leq(&g, &Graph::edgeless(r)).is_leq());
        if r > 0 {
            prop_assert!(!leq(&g, &Graph::edgeless(r - 1)).is_leq());
        }
    }

    #[test]
    fn fractionalizing_never_exceeds_the_first_term(g in graph(4)) {
        let f = fractionalize(
            integer_parameter(|x: &Graph| clique_cover_number(x, 64).map(|c| c.number)),
            &g,
            3,
        )
        .unwrap();
        prop_assert!(f.value.compare(&Value::integer(cover(&g))) != Some(std::cmp::Ordering::Greater));
        prop_assert!(f.value.compare(&Value::Exact(fractional_clique_cover(&g, 64).unwrap()))
            != Some(std::cmp::Ordering::Less));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn theta_is_multiplicative_and_additive(g in nonempty(3), h in nonempty(3)) {
        let t = |x: &Graph| lovasz_theta(x, 1e-6).unwrap().value;
        let (a, b) = (t(&g), t(&h));
        prop_assert!((t(&g.disjoint_union(&h)) - (a + b)).abs() < 1e-4);
        prop_assert!((t(&g.strong_product(&h)) - a * b).abs() < 1e-4 * (a * b).max(1.0));
    }
}
