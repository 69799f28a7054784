//! Power dominating sets built from an optimal dominating set.
//!
//! Let `D` be an optimal dominating set. When `D` is small it already gives
//! a cheap power dominating set with propagation time 1. Otherwise pick one
//! external private neighbour `u_v` per `v ∈ D` into `A`; `G - A` has no
//! isolated vertex, so a minimum dominating set `P` of `G - A` has at most
//! `(n - |D|) / 2` vertices. `P` observes `V - A` in the domination step and
//! each `v ∈ D` then forces its only unobserved neighbour `u_v`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::domination::{domination_number, optimal_dominating_set, DominationCertificate};
use crate::error::{Error, Result};
use crate::forcing::{pt_bits, RuleKind};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::throttling::{throttle, ThrottlingKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BoundTheorem {
    /// `th×_γP(G) ≤ 6n/7` for connected `G` of order at least 3.
    #[serde(rename = "ThX_6n7")]
    ProductSixSevenths,
    /// `th_γP(G) ≤ ⌊n/3⌋ + 2` for connected `G`.
    #[serde(rename = "ThSum_n3plus2")]
    SumThirdPlusTwo,
}

impl BoundTheorem {
    pub fn tag(self) -> &'static str {
        match self {
            BoundTheorem::ProductSixSevenths => "ThX_6n7",
            BoundTheorem::SumThirdPlusTwo => "ThSum_n3plus2",
        }
    }

    pub fn kind(self) -> ThrottlingKind {
        match self {
            BoundTheorem::ProductSixSevenths => ThrottlingKind::ProductInitialCost,
            BoundTheorem::SumThirdPlusTwo => ThrottlingKind::Sum,
        }
    }

    fn min_order(self) -> usize {
        match self {
            BoundTheorem::ProductSixSevenths => 3,
            BoundTheorem::SumThirdPlusTwo => 1,
        }
    }

    /// The bound as a fraction `(numerator, denominator)`.
    pub fn bound(self, n: usize) -> (u64, u64) {
        let n = n as u64;
        match self {
            BoundTheorem::ProductSixSevenths => (6 * n, 7),
            BoundTheorem::SumThirdPlusTwo => (n / 3 + 2, 1),
        }
    }

    /// `|D|` at or below `3n/7` (product) or `n/3` (sum).
    fn small_enough(self, d: usize, n: usize) -> bool {
        match self {
            BoundTheorem::ProductSixSevenths => 7 * d <= 3 * n,
            // for n ≤ 2, D itself is within ⌊n/3⌋ + 2
            BoundTheorem::SumThirdPlusTwo => 3 * d <= n || n <= 2,
        }
    }
}

impl fmt::Display for BoundTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for BoundTheorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ThX_6n7" | "prodx" | "6n7" => Ok(BoundTheorem::ProductSixSevenths),
            "ThSum_n3plus2" | "sum" | "n3plus2" => Ok(BoundTheorem::SumThirdPlusTwo),
            _ => Err(Error::InvalidArgument(format!("unknown bound `{s}` (expected ThX_6n7 or ThSum_n3plus2)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub theorem: BoundTheorem,
    pub order: usize,
    pub dominating: DominationCertificate,
    /// Chosen private neighbour per member of `D`, as `(v, u_v)`.
    pub epn_choices: Vec<(usize, usize)>,
    pub removed: VertexSet,
    pub power_dominating_set: VertexSet,
    pub pt: u32,
    pub bound_numerator: u64,
    pub bound_denominator: u64,
    pub value: u64,
}

impl BoundCertificate {
    /// Whether `value ≤ bound` holds exactly.
    pub fn within_bound(&self) -> bool {
        self.value * self.bound_denominator <= self.bound_numerator
    }

    /// Re-checks every recorded fact against `graph`.
    pub fn verify(&self, graph: &Graph) -> Result<()> {
        let fail = |m: &str| Err(Error::CertificateInvariant(m.to_string()));
        let d = &self.dominating.dominating_set;
        let a = &self.removed;
        let p = &self.power_dominating_set;
        if graph.order() != self.order || !self.dominating.verify(graph) {
            return fail("dominating set certificate does not match the graph");
        }
        if !a.is_empty() {
            if a.len() != d.len() || !a.is_disjoint(d) {
                return fail("A must have one vertex per member of D and avoid D");
            }
            for &(v, u) in &self.epn_choices {
                if !self.dominating.private_neighbors(v).is_some_and(|s| s.contains(u)) || !a.contains(u) {
                    return fail("chosen vertex is not a private neighbour");
                }
            }
            let rest = a.complement();
            let (h, map) = graph.induced_subgraph(&rest)?;
            if !h.isolated_vertices().is_empty() {
                return fail("G - A has an isolated vertex");
            }
            if !p.is_disjoint(a) || !h.dominates(&map.forward(p)) {
                return fail("P does not dominate G - A");
            }
        } else if p != d {
            return fail("without A, P must equal D");
        }
        if pt_bits(RuleKind::PowerDomination, graph, p.bits(), u32::MAX) != Some(self.pt) || self.pt > 2 {
            return fail("measured propagation time is wrong or above 2");
        }
        if self.value != self.theorem.kind().combine(p.len(), self.pt) {
            return fail("value does not match |P| and pt");
        }
        if self.bound() != self.theorem.bound(self.order) || !self.within_bound() {
            return fail("value exceeds the bound");
        }
        Ok(())
    }

    fn bound(&self) -> (u64, u64) {
        (self.bound_numerator, self.bound_denominator)
    }
}

/// Builds the certificate with least-label private neighbour choices.
pub fn construct_pd_certificate(graph: &Graph, theorem: BoundTheorem) -> Result<BoundCertificate> {
    construct_pd_certificate_with(graph, theorem, |_, epn| epn.first().expect("private neighbours are nonempty"))
}

/// As [`construct_pd_certificate`], with `choose(v, epn[v, D])` picking `u_v`.
pub fn construct_pd_certificate_with<F>(graph: &Graph, theorem: BoundTheorem, mut choose: F) -> Result<BoundCertificate>
where
    F: FnMut(usize, VertexSet) -> usize,
{
    let n = graph.order();
    if n < theorem.min_order() {
        return Err(Error::OrderBelowMinimum { order: n, min: theorem.min_order() });
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let dominating = optimal_dominating_set(graph);
    let d = dominating.dominating_set;
    let (mut epn_choices, mut removed, mut p) = (Vec::new(), VertexSet::empty(n), d);
    if !theorem.small_enough(d.len(), n) {
        for entry in &dominating.epn {
            if entry.private_neighbors.is_empty() {
                return Err(Error::CertificateInvariant(format!("vertex {} has no private neighbour", entry.vertex)));
            }
            let u = choose(entry.vertex, entry.private_neighbors);
            if !entry.private_neighbors.contains(u) {
                return Err(Error::InvalidArgument(format!("{u} is not a private neighbour of {}", entry.vertex)));
            }
            epn_choices.push((entry.vertex, u));
            removed = removed.with(u)?;
        }
        let (h, map) = graph.induced_subgraph(&removed.complement())?;
        let (_, ph) = domination_number(&h);
        p = map.preimage(&ph);
    }
    let pt = pt_bits(RuleKind::PowerDomination, graph, p.bits(), u32::MAX)
        .ok_or_else(|| Error::CertificateInvariant("P does not power dominate".into()))?;
    let (bound_numerator, bound_denominator) = theorem.bound(n);
    let cert = BoundCertificate {
        theorem,
        order: n,
        dominating,
        epn_choices,
        removed,
        power_dominating_set: p,
        pt,
        bound_numerator,
        bound_denominator,
        value: theorem.kind().combine(p.len(), pt),
    };
    cert.verify(graph)?;
    Ok(cert)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CorollaryOutcome {
    /// `th× = 6n/7` and `γ = 3n/7`.
    EqualityHolds,
    /// `th× = 6n/7` but `γ ≠ 3n/7`.
    Violated,
    /// `γ = 3n/7` without `th× = 6n/7`.
    ConverseCounterexample,
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub order: usize,
    pub domination_number: usize,
    pub throttling_number: u64,
    pub outcome: CorollaryOutcome,
}

impl CorollaryReport {
    pub fn holds(&self) -> bool {
        self.outcome != CorollaryOutcome::Violated
    }
}

/// Checks that `th×_γP(G) = 6n/7` forces `γ(G) = 3n/7`, and flags graphs
/// where the converse fails.
pub fn verify_corollary(graph: &Graph) -> Result<CorollaryReport> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = graph.order();
    let gamma = domination_number(graph).0;
    let th = throttle(RuleKind::PowerDomination, ThrottlingKind::ProductInitialCost, graph)?.value;
    let sharp = 7 * th == 6 * n as u64;
    let gamma_sharp = 7 * gamma == 3 * n;
    let outcome = match (sharp, gamma_sharp) {
        (true, true) => CorollaryOutcome::EqualityHolds,
        (true, false) => CorollaryOutcome::Violated,
        (false, true) => CorollaryOutcome::ConverseCounterexample,
        (false, false) => CorollaryOutcome::Vacuous,
    };
    Ok(CorollaryReport { order: n, domination_number: gamma, throttling_number: th, outcome })
}
