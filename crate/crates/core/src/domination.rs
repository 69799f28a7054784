//! Minimum dominating sets and their refinements.
//!
//! Among minimum dominating sets, an *edge-maximum* one maximises the number
//! of edges it induces, and an *optimal* one is edge-maximum and additionally
//! maximises the degree sum `Σ(D)`. Ties are broken by the least bitmask.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{Members, VertexSet};
use crate::subsets::KSubsets;

/// Degree sum of a set, `Σ(X)`.
pub fn degree_sum(graph: &Graph, set: &VertexSet) -> usize {
    set.iter().map(|v| graph.adjacency_bits(v).count_ones() as usize).sum()
}

/// Domination number and the first minimum dominating set in colex order.
pub fn domination_number(graph: &Graph) -> (usize, VertexSet) {
    let n = graph.order();
    for k in 0..=n {
        if let Some(d) = KSubsets::new(n, k).find(|&d| graph.dominates(&VertexSet::from_bits_unchecked(n, d))) {
            return (k, VertexSet::from_bits_unchecked(n, d));
        }
    }
    unreachable!("V(G) dominates")
}

/// All dominating sets of size `γ(G)`, in colex order.
pub fn enumerate_min_dominating_sets(graph: &Graph) -> Vec<VertexSet> {
    let n = graph.order();
    let (gamma, _) = domination_number(graph);
    KSubsets::new(n, gamma).map(|d| VertexSet::from_bits_unchecked(n, d)).filter(|d| graph.dominates(d)).collect()
}

fn keep_max_by<F: Fn(&VertexSet) -> usize>(sets: Vec<VertexSet>, key: F) -> Vec<VertexSet> {
    let best = sets.iter().map(&key).max();
    sets.into_iter().filter(|s| Some(key(s)) == best).collect()
}

pub fn edge_maximum_min_dominating_sets(graph: &Graph) -> Vec<VertexSet> {
    keep_max_by(enumerate_min_dominating_sets(graph), |d| graph.induced_edge_count(d))
}

/// Every optimal dominating set, in colex order.
pub fn optimal_dominating_sets(graph: &Graph) -> Vec<VertexSet> {
    keep_max_by(edge_maximum_min_dominating_sets(graph), |d| degree_sum(graph, d))
}

/// External private neighbours of `v` relative to `set`: neighbours of `v`
/// outside the set that no other member is adjacent to.
pub fn epn(graph: &Graph, set: &VertexSet, v: usize) -> Result<VertexSet> {
    if set.order() != graph.order() {
        return Err(Error::OrderMismatch { expected: graph.order(), found: set.order() });
    }
    if !set.contains(v) {
        return Err(Error::NotAMember(v));
    }
    let others = Members(set.bits() & !(1 << v)).fold(0u64, |acc, z| acc | graph.adjacency_bits(z));
    let bits = graph.adjacency_bits(v) & !set.bits() & !others;
    Ok(VertexSet::from_bits_unchecked(graph.order(), bits))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OptimalityClass {
    Minimum,
    EdgeMaximum,
    Optimal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EpnEntry {
    pub vertex: usize,
    pub private_neighbors: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationCertificate {
    pub dominating_set: VertexSet,
    pub induced_edges: usize,
    pub degree_sum: usize,
    pub class: OptimalityClass,
    pub epn: Vec<EpnEntry>,
}

impl DominationCertificate {
    /// Certificate for a known dominating set; `class` is recorded as given.
    pub fn for_set(graph: &Graph, set: VertexSet, class: OptimalityClass) -> Result<Self> {
        if !graph.dominates(&set) {
            return Err(Error::InvalidArgument(format!("{set} does not dominate the graph")));
        }
        let epn = set
            .iter()
            .map(|v| Ok(EpnEntry { vertex: v, private_neighbors: epn(graph, &set, v)? }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            dominating_set: set,
            induced_edges: graph.induced_edge_count(&set),
            degree_sum: degree_sum(graph, &set),
            class,
            epn,
        })
    }

    pub fn private_neighbors(&self, v: usize) -> Option<VertexSet> {
        self.epn.iter().find(|e| e.vertex == v).map(|e| e.private_neighbors)
    }

    /// Re-checks the certificate's recorded facts against the graph.
    pub fn verify(&self, graph: &Graph) -> bool {
        let d = &self.dominating_set;
        let mut seen = 0u64;
        let disjoint = self.epn.iter().all(|e| {
            let ok = e.private_neighbors.bits() & (seen | d.bits()) == 0;
            seen |= e.private_neighbors.bits();
            ok
        });
        graph.dominates(d)
            && self.induced_edges == graph.induced_edge_count(d)
            && self.degree_sum == degree_sum(graph, d)
            && disjoint
            && self.epn.len() == d.len()
    }
}

/// The optimal dominating set with the least bitmask.
pub fn optimal_dominating_set(graph: &Graph) -> DominationCertificate {
    let best = optimal_dominating_sets(graph)[0];
    DominationCertificate::for_set(graph, best, OptimalityClass::Optimal).expect("best set dominates")
}
