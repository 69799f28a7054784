//! Generators for the named graph families and the transcribed figure fixtures.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::io::parse_edge_list;
use crate::MAX_ORDER;

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidArgument(msg()))
    }
}

fn nonzero(n: usize, what: &str) -> Result<()> {
    require(n >= 1, || format!("{what} needs at least one vertex"))?;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    Ok(())
}

/// `P_n` with edges `i (i+1)`.
pub fn path(n: usize) -> Result<Graph> {
    nonzero(n, "path")?;
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    nonzero(n, "complete graph")?;
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{1,n-1}` with center 0.
pub fn star(n: usize) -> Result<Graph> {
    nonzero(n, "star")?;
    Graph::new(n, (1..n).map(|i| (0, i)))
}

pub fn empty(n: usize) -> Result<Graph> {
    nonzero(n, "empty graph")?;
    Graph::new(n, [])
}

pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, || format!("a cycle needs at least 3 vertices, got {n}"))?;
    nonzero(n, "cycle")?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `S(a_1, ..., a_k)`: center 0, then each leg as a run of consecutive labels
/// starting at the vertex next to the center.
pub fn spider(legs: &[usize]) -> Result<(Graph, usize)> {
    require(legs.len() >= 3, || format!("a spider needs at least 3 legs, got {}", legs.len()))?;
    require(legs.iter().all(|&a| a >= 1), || "spider legs must have positive order".into())?;
    let n = 1 + legs.iter().sum::<usize>();
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &a in legs {
        edges.push((0, next));
        for i in next + 1..next + a {
            edges.push((i - 1, i));
        }
        next += a;
    }
    Ok((Graph::new(n, edges)?, 0))
}

/// `H ∘ rK_1`: the vertices of `H` keep their labels, then `r` leaves per vertex in order.
pub fn corona(h: &Graph, r: usize) -> Result<Graph> {
    require(r >= 1, || "corona needs r >= 1".into())?;
    let base = h.order();
    let n = base * (1 + r);
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut edges = h.edges();
    for v in 0..base {
        for j in 0..r {
            edges.push((v, base + v * r + j));
        }
    }
    Graph::new(n, edges)
}

/// `G_1 M^+ G_2`: `G_1` on labels `0..m`, `G_2` on `m..2m`, and `M` given as
/// pairs `(a, b)` with `a` in `G_1` and `b` in `G_2` (both in local labels).
pub fn matched_sum(g1: &Graph, g2: &Graph, matching: &[(usize, usize)]) -> Result<Graph> {
    let m = g1.order();
    require(m == g2.order(), || format!("matched sum needs equal orders, got {m} and {}", g2.order()))?;
    let mut left = vec![false; m];
    let mut right = vec![false; m];
    for &(a, b) in matching {
        require(a < m && b < m, || format!("matching pair ({a}, {b}) is out of range"))?;
        require(!left[a] && !right[b], || format!("matching pair ({a}, {b}) reuses a vertex"))?;
        left[a] = true;
        right[b] = true;
    }
    require(matching.len() == m, || "the matching must saturate both graphs".into())?;
    let mut g = g1.disjoint_union(g2)?;
    for &(a, b) in matching {
        g = g.add_edge((a, m + b))?;
    }
    Ok(g)
}

/// `K_r M^+ K_r` with the identity matching.
pub fn complete_matched_sum(r: usize) -> Result<Graph> {
    let k = complete(r)?;
    let m: Vec<(usize, usize)> = (0..r).map(|i| (i, i)).collect();
    matched_sum(&k, &k, &m)
}

/// The book graph `K_{1,k} □ P_2`. The spine is `(0, 1)`; page `i` is the
/// 4-cycle `0, 2+2i, 3+2i, 1`.
pub fn book(k: usize) -> Result<(Graph, Edge)> {
    require(k >= 1, || "book graph needs k >= 1".into())?;
    let n = 2 * k + 2;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut edges = vec![(0, 1)];
    for i in 0..k {
        let (a, b) = (2 + 2 * i, 3 + 2 * i);
        edges.extend([(0, a), (1, b), (a, b)]);
    }
    Ok((Graph::new(n, edges)?, (0, 1)))
}

/// A graph with named vertices and edges.
#[derive(Clone, Debug, Serialize)]
pub struct Fixture {
    pub name: String,
    /// Figure label recorded in the data file, if any.
    pub figure: Option<String>,
    pub graph: Graph,
    pub vertices: BTreeMap<String, usize>,
    pub edges: BTreeMap<String, Edge>,
}

impl Fixture {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        Self { name: name.into(), figure: None, graph, vertices: BTreeMap::new(), edges: BTreeMap::new() }
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertices
            .get(name)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("fixture {} has no vertex `{name}`", self.name)))
    }

    pub fn edge(&self, name: &str) -> Result<Edge> {
        self.edges
            .get(name)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("fixture {} has no edge `{name}`", self.name)))
    }
}

/// Example family reaching `th×_γP = 6n/7`: each `v_i` of `H` (order `2k`) gains
/// pendants `u_{i,1}`, `u_{i,2}`, and for `i <= k`, `u_{i,2}` gains a pendant `u_{i,3}`.
///
/// Labels: `v_i -> i-1`, then `u_{i,1}, u_{i,2}` pairwise for each `i`, then the `u_{i,3}`.
pub fn family_6n7(h: &Graph) -> Result<Fixture> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    family_6n7_unchecked(h)
}

/// As [`family_6n7`] but accepts a disconnected `H`.
pub fn family_6n7_unchecked(h: &Graph) -> Result<Fixture> {
    let two_k = h.order();
    if two_k == 0 || two_k % 2 == 1 {
        return Err(Error::OddOrder(two_k));
    }
    let k = two_k / 2;
    let n = 7 * k;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut edges = h.edges();
    let mut fixture_names = BTreeMap::new();
    for i in 0..two_k {
        let (u1, u2) = (two_k + 2 * i, two_k + 2 * i + 1);
        edges.extend([(i, u1), (i, u2)]);
        fixture_names.insert(format!("v{}", i + 1), i);
        fixture_names.insert(format!("u{}_1", i + 1), u1);
        fixture_names.insert(format!("u{}_2", i + 1), u2);
    }
    for i in 0..k {
        let u3 = 3 * two_k + i;
        edges.push((two_k + 2 * i + 1, u3));
        fixture_names.insert(format!("u{}_3", i + 1), u3);
    }
    let mut fx = Fixture::new("family_6n7", Graph::new(n, edges)?);
    fx.vertices = fixture_names;
    Ok(fx)
}

/// `H ∘ 2K_1` with one extra leaf hung on the first leaf of vertex 0.
pub fn ex11_57(h: &Graph) -> Result<Fixture> {
    require(h.order() >= 2, || "the base graph needs order at least 2".into())?;
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let base = corona(h, 2)?;
    let n = base.order();
    let first_leaf = h.order();
    let mut adj_edges = base.edges();
    adj_edges.push((first_leaf, n));
    let mut fx = Fixture::new("ex11_57", Graph::new(n + 1, adj_edges)?);
    fx.vertices.insert("leaf".into(), first_leaf);
    fx.vertices.insert("w".into(), n);
    Ok(fx)
}

/// The star `K_{1,n-1}` (center `c = 0`) with an edge between leaves 1 and 2.
pub fn star_plus_edge(n: usize) -> Result<Fixture> {
    require(n >= 3, || format!("star plus edge needs n >= 3, got {n}"))?;
    let g = star(n)?.add_edge((1, 2))?;
    let mut fx = Fixture::new("star_plus_edge", g);
    fx.vertices.insert("c".into(), 0);
    fx.edges.insert("e".into(), (1, 2));
    Ok(fx)
}

/// `((H ∘ K_1) ∘ K_1) ∨ K_1`; the universal vertex `u` has the last label.
pub fn corona_tower(h: &Graph) -> Result<Fixture> {
    let g = corona(&corona(h, 1)?, 1)?.join_vertex()?;
    let u = g.order() - 1;
    let mut fx = Fixture::new("corona_tower", g);
    fx.vertices.insert("u".into(), u);
    Ok(fx)
}

const FIXTURE_FILES: &[(&str, &str)] = &[
    ("fig1_base", include_str!("../fixtures/fig1_base.txt")),
    ("fig2_spider_plus_e", include_str!("../fixtures/fig2_spider_plus_e.txt")),
    ("fig3_H1", include_str!("../fixtures/fig3_H1.txt")),
    ("fig3_H2", include_str!("../fixtures/fig3_H2.txt")),
    ("fig3_H3", include_str!("../fixtures/fig3_H3.txt")),
    ("fig4_twin", include_str!("../fixtures/fig4_twin.txt")),
    ("fig5_K2corona", include_str!("../fixtures/fig5_K2corona.txt")),
    ("fig6_legs5_plus_e", include_str!("../fixtures/fig6_legs5_plus_e.txt")),
    ("ex3_7_H", include_str!("../fixtures/ex3_7_H.txt")),
    ("fig7_subdiv", include_str!("../fixtures/fig7_subdiv.txt")),
];

/// Names accepted by [`fixture`], plus the parameterised generators.
pub fn fixture_names() -> Vec<&'static str> {
    let mut names: Vec<&str> = FIXTURE_FILES.iter().map(|(n, _)| *n).collect();
    names.extend(["ex11_57(H)", "star_plus_edge(n)", "corona_tower(H)"]);
    names
}

fn parse_fixture(name: &str, text: &str) -> Result<Fixture> {
    let mut fx = Fixture::new(name, parse_edge_list(text)?);
    for line in text.lines().filter_map(|l| l.trim().strip_prefix('#')) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let label = |t: &str| {
            t.parse::<usize>().map_err(|_| Error::InvalidArgument(format!("bad label `{t}` in fixture {name}")))
        };
        match tokens.as_slice() {
            ["figure:", fig] => fx.figure = Some((*fig).to_string()),
            ["vertex", v, l] => {
                fx.vertices.insert((*v).to_string(), label(l)?);
            }
            ["edge", e, a, b] => {
                let (a, b) = (label(a)?, label(b)?);
                if !fx.graph.has_edge(a, b) {
                    return Err(Error::NoSuchEdge(a, b));
                }
                fx.edges.insert((*e).to_string(), (a.min(b), a.max(b)));
            }
            _ => {}
        }
    }
    Ok(fx)
}

/// Loads a transcribed figure graph by name.
pub fn fixture(name: &str) -> Result<Fixture> {
    FIXTURE_FILES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
        .and_then(|(n, text)| parse_fixture(n, text))
}
