mod common;

use common::oracle_throttling;
use throttle_core::enumerate::graphs_in_range;
use throttle_core::families::{book, complete, complete_matched_sum, family_6n7, fixture, path, spider};
use throttle_core::forcing::parameter_number;
use throttle_core::throttling::{
    is_matched_sum, k_of_p, th_star_z_via_identity, throttle, throttle_k, throttle_set, throttle_with_table,
};
use throttle_core::{Error, RuleKind, ThrottlingKind, VertexSet};

use ThrottlingKind::{ProductInitialCost as Prodx, ProductNoInitialCost as Prodstar, Sum};

fn th(rule: RuleKind, kind: ThrottlingKind, g: &throttle_core::Graph) -> u64 {
    throttle(rule, kind, g).unwrap().value
}

#[test]
fn graph_level_values_match_subset_oracle() {
    for g in graphs_in_range(1, 6, false).unwrap() {
        for rule in RuleKind::ALL {
            let (y, sum, prodx, prodstar) = oracle_throttling(rule, &g);
            assert_eq!(parameter_number(rule, &g).0, y);
            assert_eq!(th(rule, Sum, &g), sum, "{rule} sum {:?}", g.edges());
            assert_eq!(th(rule, Prodx, &g), prodx, "{rule} prodx {:?}", g.edges());
            match prodstar {
                Some(v) => assert_eq!(th(rule, Prodstar, &g), v, "{rule} prodstar {:?}", g.edges()),
                None => assert_eq!(throttle(rule, Prodstar, &g), Err(Error::Edgeless)),
            }
        }
    }
}

#[test]
fn results_verify_and_respect_tables() {
    for g in graphs_in_range(2, 6, true).unwrap() {
        for rule in RuleKind::ALL {
            for kind in ThrottlingKind::ALL {
                let r = throttle_with_table(rule, kind, &g).unwrap();
                assert!(r.verify(&g));
                let from_set = throttle_set(rule, kind, &g, &r.witness);
                if !(kind == Prodstar && r.witness.is_full()) {
                    assert_eq!(from_set.unwrap(), Some(r.value));
                }
                let best = r.per_k.unwrap().iter().filter_map(|e| e.value).min();
                assert_eq!(best, Some(r.value));
            }
        }
    }
}

#[test]
fn product_throttling_for_zero_forcing_is_the_order() {
    for g in graphs_in_range(1, 6, false).unwrap() {
        assert_eq!(th(RuleKind::StandardZeroForcing, Prodx, &g), g.order() as u64);
    }
}

#[test]
fn set_level_examples() {
    let f = family_6n7(&complete(2).unwrap()).unwrap();
    let vh = VertexSet::from_labels(7, [f.vertex("v1").unwrap(), f.vertex("v2").unwrap()]).unwrap();
    assert_eq!(throttle_set(RuleKind::PowerDomination, Prodx, &f.graph, &vh).unwrap(), Some(6));
    let (s, c) = spider(&[3; 6]).unwrap();
    let center = VertexSet::singleton(19, c).unwrap();
    assert_eq!(throttle_set(RuleKind::PsdForcing, Prodstar, &s, &center).unwrap(), Some(3));
    let p5 = path(5).unwrap();
    let d = VertexSet::from_labels(5, [1, 3]).unwrap();
    assert_eq!(throttle_set(RuleKind::PowerDomination, Sum, &p5, &d).unwrap(), Some(3));
}

#[test]
fn k_level_examples() {
    let h2 = fixture("fig3_H2").unwrap();
    let minus = h2.graph.delete_edge(h2.edge("e").unwrap()).unwrap();
    let pd = RuleKind::PowerDomination;
    assert_eq!(throttle_k(pd, Prodx, &minus, 2).unwrap().unwrap().0, 6);
    assert_eq!(throttle_k(pd, Prodx, &minus, 3).unwrap().unwrap().0, 6);
    let (b3, spine) = book(3).unwrap();
    let (b3e, _) = b3.contract_edge(spine).unwrap();
    assert_eq!(throttle_k(RuleKind::PsdForcing, Prodx, &b3e, 7).unwrap().unwrap().0, 7);
    assert!(throttle_k(pd, Prodstar, &b3e, 7).is_err());
    assert!(throttle_k(pd, Sum, &b3e, 0).is_err());
}

#[test]
fn graph_level_examples() {
    let pd = RuleKind::PowerDomination;
    let f = family_6n7(&complete(2).unwrap()).unwrap();
    assert_eq!(th(pd, Prodx, &f.graph), 6);
    assert_eq!(th(pd, Prodx, &spider(&[2, 2, 1, 1]).unwrap().0), 3);
    for n in 2..=10usize {
        let p = path(n).unwrap();
        for rule in [RuleKind::PowerDomination, RuleKind::PsdForcing] {
            assert_eq!(th(rule, Prodstar, &p), n.div_ceil(3) as u64, "{rule} P{n}");
            assert_eq!(th(rule, Prodx, &p), 1 + (n - 1).div_ceil(2) as u64, "{rule} P{n}");
        }
    }
}

#[test]
fn remark_bounds_and_universal_vertices() {
    for g in graphs_in_range(2, 6, false).unwrap() {
        if g.size() == 0 {
            continue;
        }
        let n = g.order() as u64;
        for rule in RuleKind::ALL {
            let y = parameter_number(rule, &g).0 as u64;
            for kind in [Sum, Prodx] {
                let v = th(rule, kind, &g);
                assert!(y < v && v <= n && y >= 1);
            }
            let s = th(rule, Prodstar, &g);
            assert!(1 <= s && s < n);
        }
        let universal = !g.universal_vertices().is_empty();
        assert_eq!(th(RuleKind::PowerDomination, Prodstar, &g) == 1, universal);
        assert_eq!(th(RuleKind::PowerDomination, Prodx, &g) == 2, universal);
    }
}

#[test]
fn zero_forcing_no_initial_cost_identity() {
    for g in graphs_in_range(2, 7, true).unwrap() {
        let n = g.order();
        let k = th_star_z_via_identity(&g).unwrap();
        assert_eq!(th(RuleKind::StandardZeroForcing, Prodstar, &g), k as u64);
        assert!(2 * k >= n);
        if n % 2 == 0 {
            assert_eq!(2 * k == n, is_matched_sum(&g).unwrap().is_some(), "{:?}", g.edges());
        }
    }
}

#[test]
fn k_of_p_examples() {
    for g in graphs_in_range(1, 5, false).unwrap() {
        assert_eq!(k_of_p(&g, 0).unwrap().0, g.order());
    }
    let m3 = complete_matched_sum(3).unwrap();
    assert_eq!(k_of_p(&m3, 1).unwrap().0, 3);
    assert_eq!(th_star_z_via_identity(&m3).unwrap(), 3);
    let e = (0, 3);
    assert!(m3.has_edge(e.0, e.1));
    assert_eq!(th_star_z_via_identity(&m3.delete_edge(e).unwrap()).unwrap(), 4);
    assert_eq!(k_of_p(&path(5).unwrap(), 1).unwrap().0, 3);
    assert!(k_of_p(&complete(4).unwrap(), 2).is_none());
}

#[test]
fn matched_sum_witnesses() {
    for r in 1..=5 {
        let w = is_matched_sum(&path(2 * r).unwrap()).unwrap().unwrap();
        assert_eq!(w.first.len(), r);
        assert_eq!(w.matching.len(), r);
    }
    assert!(is_matched_sum(&complete(4).unwrap()).unwrap().is_none());
    let m3 = complete_matched_sum(3).unwrap();
    let w = is_matched_sum(&m3).unwrap().unwrap();
    for (a, b) in w.matching {
        assert!(m3.has_edge(a, b) && w.first.contains(a) && w.second.contains(b));
    }
    assert_eq!(m3.size(), 9);
}
