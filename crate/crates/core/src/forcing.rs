//! Standard zero forcing, PSD forcing and power domination as simultaneous
//! fill processes, with propagation times and forcing numbers.
//!
//! All fills of a time step are computed against the cumulative filled set
//! of the previous step before any of them is applied.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{full_mask, Members, VertexSet};
use crate::subsets::KSubsets;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RuleKind {
    #[serde(rename = "zf")]
    StandardZeroForcing,
    #[serde(rename = "psd")]
    PsdForcing,
    #[serde(rename = "pd")]
    PowerDomination,
}

impl RuleKind {
    pub const ALL: [RuleKind; 3] = [RuleKind::StandardZeroForcing, RuleKind::PsdForcing, RuleKind::PowerDomination];

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            RuleKind::StandardZeroForcing => "zf",
            RuleKind::PsdForcing => "psd",
            RuleKind::PowerDomination => "pd",
        }
    }

    /// Conventional symbol of the associated graph parameter.
    pub fn symbol(self) -> &'static str {
        match self {
            RuleKind::StandardZeroForcing => "Z",
            RuleKind::PsdForcing => "Z+",
            RuleKind::PowerDomination => "gammaP",
        }
    }
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "zf" | "z" | "standard" => Ok(RuleKind::StandardZeroForcing),
            "psd" | "z+" | "zplus" => Ok(RuleKind::PsdForcing),
            "pd" | "gammap" | "power-domination" => Ok(RuleKind::PowerDomination),
            _ => Err(Error::InvalidArgument(format!("unknown rule `{s}` (expected zf, psd or pd)"))),
        }
    }
}

/// Propagation time of a set: finite, or infinite for a non-forcing set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropagationTime {
    Finite(u32),
    Infinite,
}

impl PropagationTime {
    pub fn is_finite(self) -> bool {
        matches!(self, PropagationTime::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            PropagationTime::Finite(t) => Some(t),
            PropagationTime::Infinite => None,
        }
    }
}

impl From<Option<u32>> for PropagationTime {
    fn from(t: Option<u32>) -> Self {
        t.map_or(PropagationTime::Infinite, PropagationTime::Finite)
    }
}

impl fmt::Display for PropagationTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropagationTime::Finite(t) => write!(f, "{t}"),
            PropagationTime::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for PropagationTime {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PropagationTime::Finite(t) => serializer.serialize_u32(*t),
            PropagationTime::Infinite => serializer.serialize_str("infinity"),
        }
    }
}

#[inline]
fn standard_step(graph: &Graph, filled: u64) -> u64 {
    let mut out = 0u64;
    for v in Members(filled) {
        let open = graph.adjacency_bits(v) & !filled;
        if open.count_ones() == 1 {
            out |= open;
        }
    }
    out
}

fn psd_step(graph: &Graph, filled: u64) -> u64 {
    let unfilled = full_mask(graph.order()) & !filled;
    let components = graph.component_masks(unfilled);
    let mut out = 0u64;
    for v in Members(filled) {
        let open = graph.adjacency_bits(v) & unfilled;
        match open.count_ones() {
            0 => {}
            1 => out |= open,
            _ => {
                for &w in &components {
                    let inside = open & w;
                    if inside.count_ones() == 1 {
                        out |= inside;
                    }
                }
            }
        }
    }
    out
}

#[inline]
pub(crate) fn step_bits(rule: RuleKind, graph: &Graph, filled: u64, time_index: u32) -> u64 {
    match rule {
        RuleKind::StandardZeroForcing => standard_step(graph, filled),
        RuleKind::PsdForcing => psd_step(graph, filled),
        RuleKind::PowerDomination if time_index == 1 => graph.closed_neighborhood_bits(filled) & !filled,
        RuleKind::PowerDomination => standard_step(graph, filled),
    }
}

/// Propagation time of `initial` if it is at most `cap`, else `None`.
pub(crate) fn pt_bits(rule: RuleKind, graph: &Graph, initial: u64, cap: u32) -> Option<u32> {
    let full = full_mask(graph.order());
    let mut filled = initial;
    let mut t = 0u32;
    while filled != full {
        if t >= cap {
            return None;
        }
        t += 1;
        let new = step_bits(rule, graph, filled, t);
        if new == 0 {
            return None;
        }
        filled |= new;
    }
    Some(t)
}

fn check_order(graph: &Graph, set: &VertexSet) -> Result<()> {
    if graph.order() == set.order() {
        Ok(())
    } else {
        Err(Error::OrderMismatch { expected: graph.order(), found: set.order() })
    }
}

/// The set of all vertices filled at time `time_index` given `filled`.
/// An empty result means the process has stalled.
pub fn step(rule: RuleKind, graph: &Graph, filled: &VertexSet, time_index: u32) -> Result<VertexSet> {
    check_order(graph, filled)?;
    if time_index == 0 {
        return Err(Error::InvalidArgument("time steps are numbered from 1".into()));
    }
    Ok(VertexSet::from_bits_unchecked(graph.order(), step_bits(rule, graph, filled.bits(), time_index)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TraceOutcome {
    Completed { time: u32 },
    Stalled { filled: VertexSet },
}

/// Step-by-step record of a propagation process.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropagationTrace {
    pub rule: RuleKind,
    pub initial: VertexSet,
    /// `fills[i]` is the set filled during time step `i + 1`.
    pub fills: Vec<VertexSet>,
    /// `cumulative[i]` is the filled set after time step `i`; `cumulative[0]` is the initial set.
    pub cumulative: Vec<VertexSet>,
    /// PSD only: components of the unfilled subgraph seen by each step.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psd_components: Option<Vec<Vec<VertexSet>>>,
    pub outcome: TraceOutcome,
    pub propagation_time: PropagationTime,
}

impl PropagationTrace {
    pub fn is_complete(&self) -> bool {
        matches!(self.outcome, TraceOutcome::Completed { .. })
    }

    pub fn final_set(&self) -> VertexSet {
        *self.cumulative.last().expect("trace has an initial set")
    }
}

pub fn propagate(rule: RuleKind, graph: &Graph, initial: &VertexSet) -> Result<PropagationTrace> {
    check_order(graph, initial)?;
    let n = graph.order();
    let full = full_mask(n);
    let mut filled = initial.bits();
    let mut fills = Vec::new();
    let mut cumulative = vec![*initial];
    let mut components = (rule == RuleKind::PsdForcing).then(Vec::new);
    let mut t = 0u32;
    let outcome = loop {
        if filled == full {
            break TraceOutcome::Completed { time: t };
        }
        t += 1;
        if let Some(c) = components.as_mut() {
            c.push(
                graph
                    .component_masks(full & !filled)
                    .into_iter()
                    .map(|m| VertexSet::from_bits_unchecked(n, m))
                    .collect(),
            );
        }
        let new = step_bits(rule, graph, filled, t);
        if new == 0 {
            break TraceOutcome::Stalled { filled: VertexSet::from_bits_unchecked(n, filled) };
        }
        filled |= new;
        fills.push(VertexSet::from_bits_unchecked(n, new));
        cumulative.push(VertexSet::from_bits_unchecked(n, filled));
    };
    let propagation_time = match outcome {
        TraceOutcome::Completed { time } => PropagationTime::Finite(time),
        TraceOutcome::Stalled { .. } => PropagationTime::Infinite,
    };
    Ok(PropagationTrace {
        rule,
        initial: *initial,
        fills,
        cumulative,
        psd_components: components,
        outcome,
        propagation_time,
    })
}

pub fn propagation_time(rule: RuleKind, graph: &Graph, initial: &VertexSet) -> Result<PropagationTime> {
    check_order(graph, initial)?;
    Ok(pt_bits(rule, graph, initial.bits(), u32::MAX).into())
}

pub fn is_forcing_set(rule: RuleKind, graph: &Graph, initial: &VertexSet) -> Result<bool> {
    Ok(propagation_time(rule, graph, initial)?.is_finite())
}

/// Minimum size of a forcing set for `rule`, with the first such set in colex order.
pub fn parameter_number(rule: RuleKind, graph: &Graph) -> (usize, VertexSet) {
    let n = graph.order();
    for k in 0..=n {
        for b in KSubsets::new(n, k) {
            if pt_bits(rule, graph, b, u32::MAX).is_some() {
                return (k, VertexSet::from_bits_unchecked(n, b));
            }
        }
    }
    unreachable!("the full vertex set always forces")
}

/// Least propagation time at most `cap` over all `k`-subsets, with the first
/// colex witness attaining it.
pub(crate) fn best_of_size(rule: RuleKind, graph: &Graph, k: usize, cap: u32) -> Option<(u32, u64)> {
    let n = graph.order();
    let floor = u32::from(k < n);
    let mut best: Option<(u32, u64)> = None;
    let mut cap = cap;
    for b in KSubsets::new(n, k) {
        if let Some(t) = pt_bits(rule, graph, b, cap) {
            best = Some((t, b));
            if t <= floor {
                break;
            }
            cap = t - 1;
        }
    }
    best
}

/// `pt(G, k)`: the least propagation time over sets of exactly `k` vertices.
pub fn pt_k(rule: RuleKind, graph: &Graph, k: usize) -> Result<(PropagationTime, Option<VertexSet>)> {
    let n = graph.order();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, min: 1, max: n });
    }
    Ok(match best_of_size(rule, graph, k, u32::MAX) {
        Some((t, b)) => (PropagationTime::Finite(t), Some(VertexSet::from_bits_unchecked(n, b))),
        None => (PropagationTime::Infinite, None),
    })
}

/// `pt(G) = pt(G, Y(G))`, the propagation time at minimum cardinality.
pub fn graph_propagation_time(rule: RuleKind, graph: &Graph) -> (PropagationTime, VertexSet) {
    let n = graph.order();
    let (k, fallback) = parameter_number(rule, graph);
    match best_of_size(rule, graph, k, u32::MAX) {
        Some((t, b)) => (PropagationTime::Finite(t), VertexSet::from_bits_unchecked(n, b)),
        None => unreachable!("a minimum forcing set {fallback} exists"),
    }
}
