//! Immutable simple undirected graphs on the labels `0..n`.
//!
//! Adjacency is stored as one bitmask per vertex, so orders are capped at
//! [`MAX_ORDER`](crate::MAX_ORDER). Every operation returns a new graph; the
//! derived graphs of the structural operations come with a [`VertexMap`]
//! recording how source labels moved.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::{full_mask, Members, VertexSet};
use crate::MAX_ORDER;

/// An unordered pair of distinct vertices, normalised so that `0 < 1`.
pub type Edge = (usize, usize);

#[inline]
fn normalise(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a simple graph. Duplicate edges are merged; loops are rejected.
    pub fn new<I: IntoIterator<Item = Edge>>(order: usize, edges: I) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        let mut adj = vec![0u64; order];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::LabelOutOfRange { label: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self { adj })
    }

    /// The graph with no vertices.
    pub fn null() -> Self {
        Self { adj: Vec::new() }
    }

    /// Builds a graph from adjacency rows, which must be symmetric and loopless.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_ORDER);
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, row)| row >> v & 1 == 0 && Members(*row).all(|w| adj[w] >> v & 1 == 1)));
        Self { adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_any_edge(&self) -> bool {
        self.adj.iter().any(|&r| r != 0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for (u, &row) in self.adj.iter().enumerate() {
            for v in Members(row.checked_shr(u as u32 + 1).unwrap_or(0)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] >> v & 1 == 1
    }

    fn check_label(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::LabelOutOfRange { label: v, order: self.order() })
        }
    }

    fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.order() == self.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch { expected: self.order(), found: set.order() })
        }
    }

    fn check_edge(&self, (u, v): Edge) -> Result<Edge> {
        if self.has_edge(u, v) {
            Ok(normalise(u, v))
        } else {
            Err(Error::NoSuchEdge(u, v))
        }
    }

    /// Raw adjacency row of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn adjacency_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// `N(v)` when `closed` is false, `N[v]` otherwise.
    pub fn neighborhood(&self, v: usize, closed: bool) -> Result<VertexSet> {
        self.check_label(v)?;
        let bits = if closed { self.adj[v] | 1 << v } else { self.adj[v] };
        Ok(VertexSet::from_bits_unchecked(self.order(), bits))
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.neighborhood(v, false)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_label(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).collect()
    }

    /// `N[S]`, the closed neighbourhood of a set, as a raw mask.
    #[inline]
    pub fn closed_neighborhood_bits(&self, set: u64) -> u64 {
        let mut out = set;
        for v in Members(set) {
            out |= self.adj[v];
        }
        out
    }

    pub fn closed_neighborhood_of(&self, set: &VertexSet) -> Result<VertexSet> {
        self.check_set(set)?;
        Ok(VertexSet::from_bits_unchecked(self.order(), self.closed_neighborhood_bits(set.bits())))
    }

    /// True when `N[S] = V(G)`.
    pub fn dominates(&self, set: &VertexSet) -> bool {
        set.order() == self.order() && self.closed_neighborhood_bits(set.bits()) == full_mask(self.order())
    }

    /// Number of edges with both ends in `set`.
    pub fn induced_edge_count(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| (self.adj[v] & set.bits()).count_ones() as usize).sum::<usize>() / 2
    }

    pub fn universal_vertices(&self) -> VertexSet {
        let n = self.order();
        let full = full_mask(n);
        let bits = (0..n).filter(|&v| self.adj[v] | 1 << v == full).fold(0u64, |acc, v| acc | 1 << v);
        VertexSet::from_bits_unchecked(n, bits)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        let bits = (0..self.order()).filter(|&v| self.adj[v] == 0).fold(0u64, |acc, v| acc | 1 << v);
        VertexSet::from_bits_unchecked(self.order(), bits)
    }

    /// Connected components of the subgraph induced by `within`, as masks,
    /// ordered by least member.
    pub(crate) fn component_masks(&self, within: u64) -> Vec<u64> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            let mut comp = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let mut next = 0u64;
                for v in Members(frontier) {
                    next |= self.adj[v];
                }
                next &= within & !comp;
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Vertex sets of the components, ordered by least label.
    pub fn components(&self) -> Vec<VertexSet> {
        self.component_masks(full_mask(self.order()))
            .into_iter()
            .map(|c| VertexSet::from_bits_unchecked(self.order(), c))
            .collect()
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.component_masks(full_mask(self.order())).len() == 1
    }

    /// `G[X]`, relabelled compactly in ascending order of the members of `X`.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, VertexMap)> {
        self.check_set(set)?;
        let keep = set.to_vec();
        let mut images = vec![None; self.order()];
        for (new, &old) in keep.iter().enumerate() {
            images[old] = Some(new);
        }
        let adj = keep
            .iter()
            .map(|&old| {
                Members(self.adj[old] & set.bits())
                    .fold(0u64, |acc, w| acc | 1 << images[w].expect("neighbour inside the set has an image"))
            })
            .collect();
        let map = VertexMap { images, target_order: keep.len(), merged: None, new_vertex: None };
        Ok((Graph::from_adjacency(adj), map))
    }

    /// `G - x`.
    pub fn delete_vertex(&self, x: usize) -> Result<(Graph, VertexMap)> {
        self.check_label(x)?;
        self.induced_subgraph(&VertexSet::full(self.order()).without(x))
    }

    /// `G - e`, on the same vertex labels.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        let (u, v) = self.check_edge(e)?;
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Ok(Graph::from_adjacency(adj))
    }

    /// `G + e`, on the same vertex labels.
    pub fn add_edge(&self, (u, v): Edge) -> Result<Graph> {
        self.check_label(u)?;
        self.check_label(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph::from_adjacency(adj))
    }

    /// `G / e`. The merged vertex takes the smaller endpoint's label; the
    /// larger endpoint's slot is removed and later labels shift down by one.
    pub fn contract_edge(&self, e: Edge) -> Result<(Graph, VertexMap)> {
        let (u, v) = self.check_edge(e)?;
        let n = self.order();
        let images: Vec<Option<usize>> = (0..n)
            .map(|w| match w.cmp(&v) {
                std::cmp::Ordering::Less => Some(w),
                std::cmp::Ordering::Equal => Some(u),
                std::cmp::Ordering::Greater => Some(w - 1),
            })
            .collect();
        let mut adj = vec![0u64; n - 1];
        for (a, b) in self.edges() {
            let (x, y) = (images[a].unwrap(), images[b].unwrap());
            if x != y {
                adj[x] |= 1 << y;
                adj[y] |= 1 << x;
            }
        }
        let map = VertexMap { images, target_order: n - 1, merged: Some((u, v, u)), new_vertex: None };
        Ok((Graph::from_adjacency(adj), map))
    }

    /// `G_e`: removes `uv`, appends a new vertex `z` with label `n`, adds `uz` and `vz`.
    pub fn subdivide_edge(&self, e: Edge) -> Result<(Graph, VertexMap)> {
        let (u, v) = self.check_edge(e)?;
        let n = self.order();
        if n + 1 > MAX_ORDER {
            return Err(Error::OrderTooLarge(n + 1));
        }
        let mut adj = self.adj.clone();
        adj[u] = (adj[u] & !(1 << v)) | 1 << n;
        adj[v] = (adj[v] & !(1 << u)) | 1 << n;
        adj.push(1 << u | 1 << v);
        let map =
            VertexMap { images: (0..n).map(Some).collect(), target_order: n + 1, merged: None, new_vertex: Some(n) };
        Ok((Graph::from_adjacency(adj), map))
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        let total = n + other.order();
        if total > MAX_ORDER {
            return Err(Error::OrderTooLarge(total));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << n));
        Ok(Graph::from_adjacency(adj))
    }

    /// Adds a new vertex (label `n`) adjacent to every existing vertex.
    pub fn join_vertex(&self) -> Result<Graph> {
        let n = self.order();
        if n + 1 > MAX_ORDER {
            return Err(Error::OrderTooLarge(n + 1));
        }
        let mut adj: Vec<u64> = self.adj.iter().map(|r| r | 1 << n).collect();
        adj.push(full_mask(n));
        Ok(Graph::from_adjacency(adj))
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = 0u64;
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation of 0..{n}")));
            }
            seen |= 1 << p;
        }
        if perm.len() != n {
            return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        let mut adj = vec![0u64; n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph::from_adjacency(adj))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Graph", 2)?;
        s.serialize_field("order", &self.order())?;
        s.serialize_field("edges", &self.edges())?;
        s.end()
    }
}

/// Where the vertices of a source graph ended up in a derived graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexMap {
    images: Vec<Option<usize>>,
    target_order: usize,
    /// `(u, v, y_e)` for a contraction of `uv`.
    merged: Option<(usize, usize, usize)>,
    /// `z_e` for a subdivision.
    new_vertex: Option<usize>,
}

impl VertexMap {
    pub fn image(&self, v: usize) -> Option<usize> {
        self.images.get(v).copied().flatten()
    }

    pub fn source_order(&self) -> usize {
        self.images.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn merged(&self) -> Option<(usize, usize, usize)> {
        self.merged
    }

    /// Label of the vertex created by contraction.
    pub fn contracted_vertex(&self) -> Option<usize> {
        self.merged.map(|(_, _, y)| y)
    }

    /// Label of the vertex created by subdivision.
    pub fn new_vertex(&self) -> Option<usize> {
        self.new_vertex
    }

    /// Images of the members of `set`, dropping vertices with no image.
    pub fn forward(&self, set: &VertexSet) -> VertexSet {
        let bits = set.iter().filter_map(|v| self.image(v)).fold(0u64, |acc, w| acc | 1 << w);
        VertexSet::from_bits_unchecked(self.target_order, bits)
    }

    /// All source vertices whose image lies in `set`.
    pub fn preimage(&self, set: &VertexSet) -> VertexSet {
        let bits = self
            .images
            .iter()
            .enumerate()
            .filter(|(_, img)| img.is_some_and(|w| set.contains(w)))
            .fold(0u64, |acc, (v, _)| acc | 1 << v);
        VertexSet::from_bits_unchecked(self.source_order(), bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn neighborhoods() {
        assert_eq!(path(3).neighborhood(1, false).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(complete(4).neighborhood(0, true).unwrap().len(), 4);
        assert_eq!(star(5).neighbors(0).unwrap().to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(path(3).neighborhood(3, false), Err(Error::LabelOutOfRange { label: 3, order: 3 }));
    }

    #[test]
    fn degrees() {
        let s = star(6);
        assert_eq!(s.degree(3).unwrap(), 1);
        assert_eq!(s.degree(0).unwrap(), 5);
        assert_eq!(Graph::new(2, []).unwrap().degree(1).unwrap(), 0);
        assert!(s.degree(6).is_err());
    }

    #[test]
    fn rejects_non_simple_input() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(Graph::new(3, [(0, 3)]), Err(Error::LabelOutOfRange { .. })));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]).unwrap().size(), 1);
        assert_eq!(Graph::new(65, []), Err(Error::OrderTooLarge(65)));
    }

    #[test]
    fn components_are_ordered_by_least_label() {
        let g = Graph::new(5, [(2, 4)]).unwrap();
        let sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 1]);
        assert_eq!(g.components()[2].to_vec(), vec![2, 4]);
        assert_eq!(path(4).components().len(), 1);
        let (leaves, _) = star(6).delete_vertex(0).unwrap();
        assert_eq!(leaves.components().len(), 5);
    }

    #[test]
    fn induced_subgraph_relabels_in_order() {
        let k4 = complete(4);
        let (g, map) = k4.induced_subgraph(&VertexSet::from_labels(4, [1, 3]).unwrap()).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(map.image(3), Some(1));
        assert_eq!(map.image(0), None);
        let (same, _) = k4.induced_subgraph(&k4.vertices()).unwrap();
        assert_eq!(same, k4);
    }

    #[test]
    fn vertex_and_edge_deletion() {
        let (p, map) = path(5).delete_vertex(4).unwrap();
        assert_eq!(p, path(4));
        assert_eq!(map.image(4), None);
        assert_eq!(complete(5).delete_vertex(2).unwrap().0, complete(4));
        assert_eq!(complete(3).delete_edge((0, 2)).unwrap().edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(path(3).delete_edge((0, 2)), Err(Error::NoSuchEdge(0, 2)));
    }

    #[test]
    fn contraction_merges_into_smaller_label() {
        // star K_{1,4} contracted along (0, 2) is K_{1,3}
        let (g, map) = star(5).contract_edge((2, 0)).unwrap();
        assert_eq!(g, star(4));
        assert_eq!(map.merged(), Some((0, 2, 0)));
        assert_eq!(map.image(2), Some(0));
        assert_eq!(map.image(3), Some(2));
        // a triangle contracts to K_2 without parallel edges
        assert_eq!(complete(3).contract_edge((1, 2)).unwrap().0, complete(2));
        assert!(path(3).contract_edge((0, 2)).is_err());
    }

    #[test]
    fn subdivision_appends_new_vertex() {
        let (g, map) = path(4).subdivide_edge((2, 3)).unwrap();
        assert_eq!(map.new_vertex(), Some(4));
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 4), (3, 4)]);
        let (c4, _) = complete(3).subdivide_edge((0, 1)).unwrap();
        assert_eq!(c4.degrees(), vec![2, 2, 2, 2]);
        assert!(c4.is_connected());
    }

    #[test]
    fn vertex_map_forward_and_back() {
        let (_, map) = path(5).contract_edge((1, 2)).unwrap();
        let set = VertexSet::from_labels(5, [2, 4]).unwrap();
        let img = map.forward(&set);
        assert_eq!(img.to_vec(), vec![1, 3]);
        assert_eq!(map.preimage(&img).to_vec(), vec![1, 2, 4]);
    }
}
