//! Sum and product throttling numbers.
//!
//! For a fixed size `k` every combining formula is increasing in the
//! propagation time, so `th(G, k)` is the formula applied to `pt(G, k)`. The
//! graph-level search walks `k` upwards and stops once the best value any
//! `k`-set could reach (propagation time 1, or 0 at `k = n`) is no better
//! than the incumbent; each size-`k` scan only looks for propagation times
//! that would beat the incumbent.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::{best_of_size, pt_bits, PropagationTime, RuleKind};
use crate::graph::Graph;
use crate::set::{Members, VertexSet};
use crate::subsets::KSubsets;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ThrottlingKind {
    /// `|B| + pt`
    #[serde(rename = "sum")]
    Sum,
    /// `|B| (1 + pt)`
    #[serde(rename = "prodx")]
    ProductInitialCost,
    /// `|B| pt`, for `B ≠ V(G)` on graphs with an edge
    #[serde(rename = "prodstar")]
    ProductNoInitialCost,
}

impl ThrottlingKind {
    pub const ALL: [ThrottlingKind; 3] =
        [ThrottlingKind::Sum, ThrottlingKind::ProductInitialCost, ThrottlingKind::ProductNoInitialCost];

    pub fn name(self) -> &'static str {
        match self {
            ThrottlingKind::Sum => "sum",
            ThrottlingKind::ProductInitialCost => "prodx",
            ThrottlingKind::ProductNoInitialCost => "prodstar",
        }
    }

    pub fn combine(self, size: usize, pt: u32) -> u64 {
        let (k, t) = (size as u64, u64::from(pt));
        match self {
            ThrottlingKind::Sum => k + t,
            ThrottlingKind::ProductInitialCost => k * (1 + t),
            ThrottlingKind::ProductNoInitialCost => k * t,
        }
    }

    /// Admissible set sizes on a graph of order `n`.
    pub fn k_range(self, n: usize) -> RangeInclusive<usize> {
        match self {
            ThrottlingKind::ProductNoInitialCost => 1..=n.saturating_sub(1),
            _ => 1..=n,
        }
    }

    /// Largest propagation time `t` with `combine(k, t) < bound`, if any.
    fn max_pt_below(self, k: usize, bound: u64) -> Option<u32> {
        let k = k as u64;
        let t = match self {
            ThrottlingKind::Sum => bound.checked_sub(k + 1)?,
            ThrottlingKind::ProductInitialCost => (bound.checked_sub(1)? / k).checked_sub(1)?,
            ThrottlingKind::ProductNoInitialCost => bound.checked_sub(1)? / k,
        };
        Some(u32::try_from(t).unwrap_or(u32::MAX))
    }

    fn check_graph(self, graph: &Graph) -> Result<()> {
        if self == ThrottlingKind::ProductNoInitialCost && !graph.has_any_edge() {
            return Err(Error::Edgeless);
        }
        if graph.order() == 0 {
            return Err(Error::OrderBelowMinimum { order: 0, min: 1 });
        }
        Ok(())
    }

    fn check_k(self, graph: &Graph, k: usize) -> Result<()> {
        let range = self.k_range(graph.order());
        if range.contains(&k) {
            Ok(())
        } else {
            Err(Error::KOutOfRange { k, min: *range.start(), max: *range.end() })
        }
    }
}

impl fmt::Display for ThrottlingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ThrottlingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sum" => Ok(ThrottlingKind::Sum),
            "prodx" | "product" | "x" => Ok(ThrottlingKind::ProductInitialCost),
            "prodstar" | "star" | "*" => Ok(ThrottlingKind::ProductNoInitialCost),
            _ => {
                Err(Error::InvalidArgument(format!("unknown throttling kind `{s}` (expected sum, prodx or prodstar)")))
            }
        }
    }
}

/// `th(G, B)`; `None` when `B` is not a forcing set.
pub fn throttle_set(rule: RuleKind, kind: ThrottlingKind, graph: &Graph, set: &VertexSet) -> Result<Option<u64>> {
    if set.order() != graph.order() {
        return Err(Error::OrderMismatch { expected: graph.order(), found: set.order() });
    }
    if kind == ThrottlingKind::ProductNoInitialCost {
        kind.check_graph(graph)?;
        if set.is_full() {
            return Err(Error::FullSetWithoutInitialCost);
        }
    }
    Ok(pt_bits(rule, graph, set.bits(), u32::MAX).map(|t| kind.combine(set.len(), t)))
}

/// `th(G, k)` with the first colex witness; `None` when no `k`-set forces.
pub fn throttle_k(rule: RuleKind, kind: ThrottlingKind, graph: &Graph, k: usize) -> Result<Option<(u64, VertexSet)>> {
    kind.check_graph(graph)?;
    kind.check_k(graph, k)?;
    Ok(best_of_size(rule, graph, k, u32::MAX)
        .map(|(t, b)| (kind.combine(k, t), VertexSet::from_bits_unchecked(graph.order(), b))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KEntry {
    pub k: usize,
    /// `None` stands for infinity.
    pub value: Option<u64>,
    pub pt: PropagationTime,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThrottlingResult {
    pub rule: RuleKind,
    pub kind: ThrottlingKind,
    pub value: u64,
    pub witness: VertexSet,
    pub witness_pt: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_k: Option<Vec<KEntry>>,
}

impl ThrottlingResult {
    /// Re-derives the value from the witness and checks it forces.
    pub fn verify(&self, graph: &Graph) -> bool {
        pt_bits(self.rule, graph, self.witness.bits(), u32::MAX) == Some(self.witness_pt)
            && self.kind.combine(self.witness.len(), self.witness_pt) == self.value
            && self.per_k.as_ref().is_none_or(|t| t.iter().all(|e| e.value.is_none_or(|v| v >= self.value)))
    }
}

/// Graph-level throttling number with a witness.
pub fn throttle(rule: RuleKind, kind: ThrottlingKind, graph: &Graph) -> Result<ThrottlingResult> {
    kind.check_graph(graph)?;
    let n = graph.order();
    // B = V(G) has propagation time 0; a smaller set that ties it is preferred
    let full = (kind != ThrottlingKind::ProductNoInitialCost).then(|| kind.combine(n, 0));
    // (value, pt, witness)
    let mut best: Option<(u64, u32, u64)> = None;
    for k in 1..n {
        let bound = match (best, full) {
            (Some((v, ..)), _) => v,
            (None, Some(f)) => f + 1,
            (None, None) => u64::MAX,
        };
        let cap = match kind.max_pt_below(k, bound) {
            Some(cap) if cap >= 1 => cap,
            // propagation time 1 cannot beat the incumbent here, nor at any larger k
            _ => break,
        };
        if let Some((t, b)) = best_of_size(rule, graph, k, cap) {
            best = Some((kind.combine(k, t), t, b));
        }
    }
    let (value, witness_pt, witness) = match (best, full) {
        (Some(b), _) => b,
        (None, Some(f)) => (f, 0, VertexSet::full(n).bits()),
        (None, None) => unreachable!("a graph with an edge has a forcing set of size n - 1"),
    };
    Ok(ThrottlingResult {
        rule,
        kind,
        value,
        witness: VertexSet::from_bits_unchecked(n, witness),
        witness_pt,
        per_k: None,
    })
}

/// As [`throttle`], also filling in `th(G, k)` for every admissible `k`.
pub fn throttle_with_table(rule: RuleKind, kind: ThrottlingKind, graph: &Graph) -> Result<ThrottlingResult> {
    let mut result = throttle(rule, kind, graph)?;
    let table = kind
        .k_range(graph.order())
        .map(|k| {
            let best = best_of_size(rule, graph, k, u32::MAX);
            KEntry { k, value: best.map(|(t, _)| kind.combine(k, t)), pt: best.map(|(t, _)| t).into() }
        })
        .collect();
    result.per_k = Some(table);
    Ok(result)
}

/// `k(G, p)`: least `k` whose best standard zero forcing propagation time is
/// exactly `p`, with a witness.
pub fn k_of_p(graph: &Graph, p: u32) -> Option<(usize, VertexSet)> {
    let n = graph.order();
    (1..=n).find_map(|k| match best_of_size(RuleKind::StandardZeroForcing, graph, k, p) {
        Some((t, b)) if t == p => Some((k, VertexSet::from_bits_unchecked(n, b))),
        _ => None,
    })
}

/// `th*_Z(G)` computed as `k(G, 1)`.
pub fn th_star_z_via_identity(graph: &Graph) -> Result<usize> {
    if !graph.has_any_edge() {
        return Err(Error::Edgeless);
    }
    Ok(k_of_p(graph, 1).expect("V minus an endpoint of an edge forces in one step").0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchedSumWitness {
    pub first: VertexSet,
    pub second: VertexSet,
    /// Crossing edges `(a, b)` with `a` in `first`.
    pub matching: Vec<(usize, usize)>,
}

/// Decides whether `V(G)` splits into two equal halves whose crossing edges
/// form a perfect matching.
pub fn is_matched_sum(graph: &Graph) -> Result<Option<MatchedSumWitness>> {
    let n = graph.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if n == 0 {
        return Ok(None);
    }
    let full = VertexSet::full(n).bits();
    // fix vertex 0 in the first half so each split is tried once
    for rest in KSubsets::new(n - 1, n / 2 - 1) {
        let first = rest << 1 | 1;
        let second = full & !first;
        let perfect = (0..n).all(|v| {
            let other = if first >> v & 1 == 1 { second } else { first };
            (graph.adjacency_bits(v) & other).count_ones() == 1
        });
        if perfect {
            let matching =
                Members(first).map(|a| (a, (graph.adjacency_bits(a) & second).trailing_zeros() as usize)).collect();
            return Ok(Some(MatchedSumWitness {
                first: VertexSet::from_bits_unchecked(n, first),
                second: VertexSet::from_bits_unchecked(n, second),
                matching,
            }));
        }
    }
    Ok(None)
}
