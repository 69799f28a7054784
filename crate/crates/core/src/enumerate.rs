//! Exhaustive graph enumeration for property checks.
//!
//! [`graphs_up_to_isomorphism`] grows graphs one vertex at a time: every graph
//! on `n` vertices is some graph on `n - 1` vertices plus a vertex joined to a
//! subset, and every connected graph has a vertex whose removal keeps it
//! connected. Candidates are deduplicated by canonical form.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{canonical_form, CanonicalForm};

pub const MAX_ENUMERATION_ORDER: usize = 9;

fn check_range(n: usize) -> Result<()> {
    if (1..=MAX_ENUMERATION_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")))
    }
}

fn extend(level: &BTreeSet<CanonicalForm>, connected: bool) -> BTreeSet<CanonicalForm> {
    let mut next = BTreeSet::new();
    for form in level {
        let g = form.to_graph();
        let n = g.order();
        let start = u64::from(connected);
        for mask in start..1u64 << n {
            let mut adj: Vec<u64> = (0..n).map(|v| g.adjacency_bits(v) | (mask >> v & 1) << n).collect();
            adj.push(mask);
            next.insert(canonical_form(&Graph::from_adjacency(adj)));
        }
    }
    next
}

/// One representative per isomorphism class, in canonical-form order. Each
/// representative is labelled by its own canonical labelling.
pub fn graphs_up_to_isomorphism(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    check_range(n)?;
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canonical_form(&Graph::new(1, [])?));
    for _ in 1..n {
        level = extend(&level, connected_only);
    }
    Ok(level.iter().map(CanonicalForm::to_graph).collect())
}

/// All graphs of every order in `min..=max`, up to isomorphism.
pub fn graphs_in_range(min: usize, max: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in min.max(1)..=max {
        out.extend(graphs_up_to_isomorphism(n, connected_only)?);
    }
    Ok(out)
}

/// Every labelled graph on `n` vertices, in edge-mask order.
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
    connected_only: bool,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let edges = self.pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::new(self.n, edges).expect("pairs are valid");
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

pub fn labeled_graphs(n: usize, connected_only: bool) -> Result<LabeledGraphs> {
    check_range(n)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let end = 1u64 << pairs.len();
    Ok(LabeledGraphs { n, pairs, next: 0, end, connected_only })
}

/// Labelled enumeration restricted to edge masks with the given high bits,
/// for splitting the stream across workers: `part` of `parts` (a power of two).
pub fn labeled_graphs_part(n: usize, connected_only: bool, part: u64, parts: u64) -> Result<LabeledGraphs> {
    let mut all = labeled_graphs(n, connected_only)?;
    if !parts.is_power_of_two() || part >= parts || parts > all.end {
        return Err(Error::InvalidArgument(format!("cannot split into part {part} of {parts}")));
    }
    let chunk = all.end / parts;
    all.next = part * chunk;
    all.end = all.next + chunk;
    Ok(all)
}
