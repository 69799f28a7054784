mod common;

use common::brute_isomorphic;
use proptest::prelude::*;
use throttle_core::enumerate::graphs_in_range;
use throttle_core::families::{book, complete, corona, fixture, path, spider, star};
use throttle_core::iso::are_isomorphic;
use throttle_core::{Graph, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

fn simple(g: &Graph) -> bool {
    (0..g.order()).all(|v| !g.has_edge(v, v) && (0..g.order()).all(|u| g.has_edge(u, v) == g.has_edge(v, u)))
}

#[test]
fn operations_stay_simple_on_all_small_graphs() {
    for g in graphs_in_range(1, 7, false).unwrap() {
        for x in 0..g.order() {
            let (h, map) = g.delete_vertex(x).unwrap();
            assert!(simple(&h));
            assert_eq!(h.order(), g.order() - 1);
            for (u, v) in g.edges() {
                if u != x && v != x {
                    assert!(h.has_edge(map.image(u).unwrap(), map.image(v).unwrap()));
                }
            }
        }
        for e in g.edges() {
            let minus = g.delete_edge(e).unwrap();
            assert!(simple(&minus) && minus.size() + 1 == g.size());
            let (c, map) = g.contract_edge(e).unwrap();
            assert!(simple(&c) && c.order() + 1 == g.order());
            let y = map.contracted_vertex().unwrap();
            let expected: Vec<usize> = (0..g.order())
                .filter(|&w| w != e.0 && w != e.1 && (g.has_edge(w, e.0) || g.has_edge(w, e.1)))
                .map(|w| map.image(w).unwrap())
                .collect();
            assert_eq!(c.neighbors(y).unwrap().to_vec(), expected);
            let (s, smap) = g.subdivide_edge(e).unwrap();
            let z = smap.new_vertex().unwrap();
            assert!(simple(&s) && s.has_edge(e.0, z) && s.has_edge(e.1, z) && !s.has_edge(e.0, e.1));
            // contracting u z_e undoes the subdivision
            let (back, _) = s.contract_edge((e.0, z)).unwrap();
            assert!(are_isomorphic(&back, &g));
        }
    }
}

#[test]
fn components_partition_the_vertices() {
    for g in graphs_in_range(1, 6, false).unwrap() {
        let parts = g.components();
        let mut seen = VertexSet::empty(g.order());
        for p in &parts {
            assert!(p.is_disjoint(&seen));
            seen = seen.union(p);
            assert!(g.induced_subgraph(p).unwrap().0.is_connected());
            for q in &parts {
                if p != q {
                    assert!(p.iter().all(|u| q.iter().all(|v| !g.has_edge(u, v))));
                }
            }
        }
        assert!(seen.is_full());
        assert!(parts.windows(2).all(|w| w[0].first() < w[1].first()));
    }
}

#[test]
fn named_operation_examples() {
    let p5 = path(5).unwrap();
    assert!(brute_isomorphic(&p5.delete_vertex(0).unwrap().0, &path(4).unwrap()));
    let k5 = complete(5).unwrap();
    assert_eq!(k5.delete_vertex(2).unwrap().0, complete(4).unwrap());
    let twin = fixture("fig4_twin").unwrap();
    let x = twin.vertex("x").unwrap();
    assert!(are_isomorphic(&twin.graph.delete_vertex(x).unwrap().0, &spider(&[2; 4]).unwrap().0));
    let fig2 = fixture("fig2_spider_plus_e").unwrap();
    let minus = fig2.graph.delete_edge(fig2.edge("e").unwrap()).unwrap();
    assert!(are_isomorphic(&minus, &spider(&[3; 6]).unwrap().0));
    assert!(brute_isomorphic(&complete(3).unwrap().delete_edge((0, 1)).unwrap(), &path(3).unwrap()));
    let (s, _) = star(6).unwrap().contract_edge((0, 3)).unwrap();
    assert_eq!(s, star(5).unwrap());
    let g = corona(&complete(2).unwrap(), 2).unwrap();
    assert!(brute_isomorphic(&g.contract_edge((0, 1)).unwrap().0, &star(5).unwrap()));
    let (b3, spine) = book(3).unwrap();
    let (f, _) = b3.contract_edge(spine).unwrap();
    assert_eq!((f.order(), f.size()), (7, 9));
    assert_eq!(f.degree(0).unwrap(), 6);
    for e in path(5).unwrap().edges() {
        assert!(brute_isomorphic(&path(5).unwrap().subdivide_edge(e).unwrap().0, &path(6).unwrap()));
    }
    let (c4, _) = complete(3).unwrap().subdivide_edge((1, 2)).unwrap();
    assert!((0..4).all(|v| c4.degree(v).unwrap() == 2) && c4.is_connected());
    let mixed = Graph::new(5, [(3, 4)]).unwrap();
    let sizes: Vec<usize> = mixed.components().iter().map(VertexSet::len).collect();
    assert_eq!(sizes, vec![1, 1, 1, 2]);
}

#[test]
fn neighbourhood_and_degree_examples() {
    let p3 = path(3).unwrap();
    assert_eq!(p3.neighborhood(1, false).unwrap().to_vec(), vec![0, 2]);
    assert!(complete(4).unwrap().neighborhood(0, true).unwrap().is_full());
    let s = star(5).unwrap();
    assert_eq!(s.neighborhood(0, false).unwrap().to_vec(), vec![1, 2, 3, 4]);
    assert_eq!((s.degree(3).unwrap(), s.degree(0).unwrap()), (1, 4));
    assert_eq!(Graph::new(3, [(0, 1)]).unwrap().degree(2).unwrap(), 0);
    assert!(s.degree(5).is_err());
    let (k2, _) = complete(4).unwrap().induced_subgraph(&VertexSet::from_labels(4, [1, 3]).unwrap()).unwrap();
    assert_eq!(k2, complete(2).unwrap());
}

proptest! {
    #[test]
    fn canonical_form_agrees_with_permutation_search(a in arb_graph(6), b in arb_graph(6)) {
        prop_assert_eq!(are_isomorphic(&a, &b), brute_isomorphic(&a, &b));
    }

    #[test]
    fn relabelling_preserves_isomorphism_class(g in arb_graph(8), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = g.relabel(&perm).unwrap();
        prop_assert!(are_isomorphic(&g, &h));
        prop_assert_eq!(h.size(), g.size());
    }

    #[test]
    fn induced_subgraph_keeps_exactly_inner_edges(g in arb_graph(8), mask in any::<u64>()) {
        let n = g.order();
        let x = VertexSet::from_bits(n, mask & ((1u64 << n) - 1)).unwrap();
        let (h, map) = g.induced_subgraph(&x).unwrap();
        prop_assert_eq!(h.order(), x.len());
        prop_assert_eq!(h.size(), g.induced_edge_count(&x));
        for (u, v) in g.edges() {
            if x.contains(u) && x.contains(v) {
                prop_assert!(h.has_edge(map.image(u).unwrap(), map.image(v).unwrap()));
            }
        }
        prop_assert_eq!(map.preimage(&h.vertices()), x);
    }
}
