mod common;

use common::{oracle_pt, oracle_step};
use throttle_core::enumerate::graphs_in_range;
use throttle_core::families::{book, complete, corona, family_6n7, fixture, path, spider, star, star_plus_edge};
use throttle_core::forcing::{
    graph_propagation_time, is_forcing_set, parameter_number, propagate, propagation_time, pt_k, step, TraceOutcome,
};
use throttle_core::{PropagationTime, RuleKind, VertexSet};

fn set(n: usize, labels: &[usize]) -> VertexSet {
    VertexSet::from_labels(n, labels.iter().copied()).unwrap()
}

#[test]
fn engine_matches_oracle_on_every_set_up_to_six_vertices() {
    for g in graphs_in_range(1, 6, false).unwrap() {
        let n = g.order();
        for mask in 0u64..1 << n {
            let b = VertexSet::from_bits(n, mask).unwrap();
            for rule in RuleKind::ALL {
                let expected = oracle_pt(rule, &g, mask);
                assert_eq!(propagation_time(rule, &g, &b).unwrap().finite(), expected, "{rule} {:?} {b}", g.edges());
                let got = step(rule, &g, &b, 1).unwrap().to_vec();
                let filled: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
                assert_eq!(got, oracle_step(rule, &g, &filled, 1));
            }
        }
    }
}

#[test]
fn trace_invariants() {
    for g in graphs_in_range(1, 5, false).unwrap() {
        let n = g.order();
        for mask in 0u64..1 << n {
            let b = VertexSet::from_bits(n, mask).unwrap();
            for rule in RuleKind::ALL {
                let tr = propagate(rule, &g, &b).unwrap();
                assert_eq!(tr.cumulative[0], b);
                for (i, fill) in tr.fills.iter().enumerate() {
                    assert!(fill.is_disjoint(&tr.cumulative[i]));
                    assert_eq!(tr.cumulative[i + 1], tr.cumulative[i].union(fill));
                    assert!(!fill.is_empty());
                }
                assert_eq!(tr.is_complete(), tr.final_set().is_full());
                match tr.outcome {
                    TraceOutcome::Completed { time } => assert_eq!(tr.propagation_time, PropagationTime::Finite(time)),
                    TraceOutcome::Stalled { .. } => assert_eq!(tr.propagation_time, PropagationTime::Infinite),
                }
                assert_eq!(tr.propagation_time == PropagationTime::Finite(0), b.is_full());
            }
        }
    }
}

#[test]
fn superset_never_slows_propagation() {
    for g in graphs_in_range(1, 6, false).unwrap() {
        let n = g.order();
        let full = (1u64 << n) - 1;
        for rule in RuleKind::ALL {
            let pts: Vec<Option<u32>> = (0..=full).map(|m| oracle_pt(rule, &g, m)).collect();
            for m in 0..=full {
                for v in 0..n {
                    let bigger = m | 1 << v;
                    if let Some(t) = pts[m as usize] {
                        let t2 = propagation_time(rule, &g, &VertexSet::from_bits(n, bigger).unwrap()).unwrap();
                        assert!(t2.finite().is_some_and(|t2| t2 <= t), "{rule} {m:b} + {v}");
                    }
                }
            }
        }
    }
}

#[test]
fn psd_step_contains_standard_step() {
    for g in graphs_in_range(1, 6, false).unwrap() {
        let n = g.order();
        for mask in 0u64..1 << n {
            let b = VertexSet::from_bits(n, mask).unwrap();
            let z = step(RuleKind::StandardZeroForcing, &g, &b, 1).unwrap();
            let p = step(RuleKind::PsdForcing, &g, &b, 1).unwrap();
            assert!(z.is_subset(&p));
        }
    }
}

#[test]
fn dominating_sets_finish_in_one_power_domination_step() {
    for g in graphs_in_range(2, 6, false).unwrap() {
        let n = g.order();
        for mask in 1u64..(1 << n) - 1 {
            let b = VertexSet::from_bits(n, mask).unwrap();
            if g.dominates(&b) {
                assert_eq!(propagation_time(RuleKind::PowerDomination, &g, &b).unwrap(), PropagationTime::Finite(1));
            }
        }
    }
}

#[test]
fn step_examples() {
    let p4 = path(4).unwrap();
    assert_eq!(step(RuleKind::StandardZeroForcing, &p4, &set(4, &[0]), 3).unwrap().to_vec(), vec![1]);
    let (s, c) = spider(&[3; 6]).unwrap();
    let first = step(RuleKind::PsdForcing, &s, &set(19, &[c]), 1).unwrap();
    assert_eq!(first.to_vec(), (0..6).map(|t| 1 + 3 * t).collect::<Vec<_>>());
    let k14 = star(5).unwrap();
    assert_eq!(step(RuleKind::PowerDomination, &k14, &set(5, &[0]), 1).unwrap().to_vec(), vec![1, 2, 3, 4]);
    let twin = fixture("fig4_twin").unwrap();
    let c = twin.vertex("c").unwrap();
    let after = propagate(RuleKind::PowerDomination, &twin.graph, &set(10, &[c])).unwrap();
    assert_eq!(after.fills.len(), 1);
    assert!(step(RuleKind::PowerDomination, &twin.graph, &after.final_set(), 2).unwrap().is_empty());
    assert!(!is_forcing_set(RuleKind::PowerDomination, &twin.graph, &set(10, &[c])).unwrap());
    assert!(step(RuleKind::PsdForcing, &p4, &set(4, &[0]), 0).is_err());
}

#[test]
fn propagation_examples() {
    for n in 2..9 {
        let p = path(n).unwrap();
        let t = propagation_time(RuleKind::StandardZeroForcing, &p, &set(n, &[0])).unwrap();
        assert_eq!(t, PropagationTime::Finite(n as u32 - 1));
        if n >= 4 {
            assert!(!is_forcing_set(RuleKind::StandardZeroForcing, &p, &set(n, &[1])).unwrap());
        }
        assert_eq!(parameter_number(RuleKind::StandardZeroForcing, &p).0, 1);
    }
    let f = family_6n7(&complete(2).unwrap()).unwrap();
    let vh = set(7, &[f.vertex("v1").unwrap(), f.vertex("v2").unwrap()]);
    assert_eq!(propagation_time(RuleKind::PowerDomination, &f.graph, &vh).unwrap(), PropagationTime::Finite(2));
    assert_eq!(parameter_number(RuleKind::PowerDomination, &f.graph).0, 2);
    let h = star_plus_edge(6).unwrap();
    let (c, (a, _)) = (h.vertex("c").unwrap(), h.edge("e").unwrap());
    assert!(is_forcing_set(RuleKind::PsdForcing, &h.graph, &set(6, &[c, a])).unwrap());
}

#[test]
fn parameter_numbers_of_book_graphs() {
    let (b3, spine) = book(3).unwrap();
    assert_eq!(parameter_number(RuleKind::PsdForcing, &b3).0, 2);
    let (contracted, _) = b3.contract_edge(spine).unwrap();
    assert_eq!(parameter_number(RuleKind::PsdForcing, &contracted).0, 4);
}

#[test]
fn k_propagation_times() {
    let (s, _) = spider(&[3; 6]).unwrap();
    let pd = RuleKind::PowerDomination;
    assert_eq!(pt_k(pd, &s, 1).unwrap().0, PropagationTime::Finite(3));
    assert_eq!(pt_k(pd, &s, 5).unwrap().0, PropagationTime::Finite(3));
    assert_eq!(pt_k(pd, &s, 6).unwrap().0, PropagationTime::Finite(2));
    assert_eq!(pt_k(pd, &s, 7).unwrap().0, PropagationTime::Finite(1));
    let g = corona(&complete(2).unwrap(), 2).unwrap();
    assert_eq!(pt_k(RuleKind::PsdForcing, &g, 1).unwrap().0, PropagationTime::Finite(2));
    let k5 = complete(5).unwrap();
    assert_eq!(pt_k(RuleKind::StandardZeroForcing, &k5, 5).unwrap().0, PropagationTime::Finite(0));
    assert_eq!(pt_k(RuleKind::StandardZeroForcing, &k5, 3).unwrap(), (PropagationTime::Infinite, None));
    assert!(pt_k(RuleKind::StandardZeroForcing, &k5, 6).is_err());
    assert!(pt_k(RuleKind::StandardZeroForcing, &k5, 0).is_err());
}

#[test]
fn pt_k_witnesses_agree_with_oracle() {
    for g in graphs_in_range(1, 6, true).unwrap() {
        let n = g.order();
        for rule in RuleKind::ALL {
            for k in 1..=n {
                let best = (0u64..1 << n)
                    .filter(|m| m.count_ones() as usize == k)
                    .filter_map(|m| oracle_pt(rule, &g, m))
                    .min();
                let (t, w) = pt_k(rule, &g, k).unwrap();
                assert_eq!(t.finite(), best);
                if let Some(w) = w {
                    assert_eq!(w.len(), k);
                    assert_eq!(oracle_pt(rule, &g, w.bits()), best);
                }
            }
            let (y, w) = parameter_number(rule, &g);
            let (t, w2) = graph_propagation_time(rule, &g);
            assert_eq!(w.len(), y);
            assert_eq!(w2.len(), y);
            assert_eq!(t.finite(), oracle_pt(rule, &g, w2.bits()));
        }
    }
}
