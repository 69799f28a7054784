//! Exhaustive property suites over enumerated (or supplied) graphs.
//!
//! Each suite checks one family of inequalities or identities on every graph
//! of each order up to `nmax`. Orders above a suite's exhaustive limit are
//! covered by `budget` random labelled graphs drawn from a seeded generator.

use std::time::Instant;

use anyhow::{bail, Result};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Value};
use throttle_core::constructive::{
    construct_pd_certificate, construct_pd_certificate_with, verify_corollary, BoundTheorem,
};
use throttle_core::domination::{domination_number, edge_maximum_min_dominating_sets, epn, optimal_dominating_sets};
use throttle_core::enumerate::{graphs_up_to_isomorphism, MAX_ENUMERATION_ORDER};
use throttle_core::forcing::{parameter_number, propagation_time, step};
use throttle_core::io::to_graph6;
use throttle_core::throttling::{is_matched_sum, th_star_z_via_identity, throttle};
use throttle_core::{Graph, PropagationTime, RuleKind, ThrottlingKind, VertexSet};

use crate::report::{Record, Report};

use RuleKind::{PowerDomination as PD, PsdForcing as PSD, StandardZeroForcing as ZF};
use ThrottlingKind::{ProductInitialCost as PRODX, ProductNoInitialCost as PRODSTAR, Sum as SUM};

/// Random private-neighbour choice functions tried per graph by `construct`.
pub const RANDOM_CHOICES: usize = 100;

#[derive(Clone, Debug)]
pub struct PropsConfig {
    pub nmax: Option<usize>,
    pub budget: usize,
    pub seed: u64,
    /// Check these graphs instead of enumerating.
    pub input: Option<Vec<Graph>>,
}

impl Default for PropsConfig {
    fn default() -> Self {
        Self { nmax: None, budget: 1000, seed: 0x5eed, input: None }
    }
}

/// One failed check on one graph.
#[derive(Clone, Debug)]
pub struct Violation {
    pub check: String,
    pub detail: Value,
}

fn violation(check: impl Into<String>, detail: Value) -> Violation {
    Violation { check: check.into(), detail }
}

type Check = fn(&Graph, &mut StdRng, &PropsConfig) -> Result<Vec<Violation>>;

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    pub connected: bool,
    pub nmin: usize,
    pub default_nmax: usize,
    pub exhaustive_max: usize,
    check: Check,
}

pub fn suites() -> Vec<Suite> {
    let s = |name, description, connected, nmin, default_nmax, check| Suite {
        name,
        description,
        connected,
        nmin,
        default_nmax,
        exhaustive_max: default_nmax,
        check,
    };
    vec![
        s("ore", "gamma(G) <= n/2 without isolated vertices", false, 1, 8, check_ore as Check),
        s(
            "lemma2.2",
            "edge-maximum minimum dominating sets have private neighbours",
            true,
            2,
            7,
            check_private_neighbours,
        ),
        s(
            "lemma2.3",
            "removing chosen private neighbours leaves no isolated vertex",
            true,
            3,
            7,
            check_neighbour_removal,
        ),
        s(
            "lemma3.1",
            "propagation time under deletion, contraction and subdivision",
            true,
            2,
            6,
            check_operation_times,
        ),
        s("prop3.2", "factor bounds on product throttling under graph operations", true, 2, 7, check_factor_bounds),
        s("prop3.12", "th*_Z changes by at most one under graph operations", true, 2, 7, check_zf_unit_steps),
        s("remark1.1", "range of throttling numbers and the universal-vertex criterion", false, 2, 7, check_ranges),
        s("monotonicity", "propagation time never increases on supersets", false, 1, 6, check_monotonicity),
        s("psd-superset", "a PSD step fills at least the standard step", false, 1, 6, check_psd_superset),
        s("thm2.4", "thx_gammaP(G) <= 6n/7 with a constructive certificate", true, 3, 8, check_six_sevenths),
        s("thm2.7", "th_gammaP(G) <= floor(n/3) + 2 with a constructive certificate", true, 1, 8, check_third_plus_two),
        s("cor2.5", "thx_gammaP(G) = 6n/7 forces gamma(G) = 3n/7", true, 3, 8, check_equality_case),
        s("thm3.10", "th*_Z(G) = k(G,1) >= n/2", true, 2, 7, check_k_identity),
        s("thm3.11", "th*_Z(G) = n/2 exactly for matched sums", true, 2, 8, check_matched_sums),
        s("thzx", "thx_Z(G) = n", false, 1, 7, check_thzx),
        s("construct", "certificates for random private-neighbour choices", true, 3, 8, check_construct),
    ]
}

pub fn suite_names() -> Vec<&'static str> {
    suites().iter().map(|s| s.name).collect()
}

fn pt(rule: RuleKind, g: &Graph, set: &VertexSet) -> Result<PropagationTime> {
    Ok(propagation_time(rule, g, set)?)
}

fn th(rule: RuleKind, kind: ThrottlingKind, g: &Graph) -> Result<u64> {
    Ok(throttle(rule, kind, g)?.value)
}

fn all_sets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(move |b| VertexSet::from_bits(n, b).expect("mask fits the order"))
}

fn forcing_sets(rule: RuleKind, g: &Graph) -> Result<Vec<(VertexSet, PropagationTime)>> {
    let mut out = Vec::new();
    for b in all_sets(g.order()) {
        let t = pt(rule, g, &b)?;
        if t.is_finite() {
            out.push((b, t));
        }
    }
    Ok(out)
}

fn best_of(rule: RuleKind, g: &Graph, base: &VertexSet, choices: [usize; 2]) -> Result<PropagationTime> {
    let a = pt(rule, g, &base.with(choices[0])?)?;
    let b = pt(rule, g, &base.with(choices[1])?)?;
    Ok(a.min(b))
}

fn check_ore(g: &Graph, _: &mut StdRng, _: &PropsConfig) -> Result<Vec<Violation>> {
    if !g.isolated_vertices().is_empty() {
        return Ok(vec![]);
    }
    let (gamma, d) = domination_number(g);
    Ok(if 2 * gamma > g.order() {
        vec![violation("2 gamma <= n", json!({ "gamma": gamma, "set": d }))]
    } else {
        vec![]
    })
}

fn check_private_neighbours(g: &Graph, _: &mut StdRng, _: &PropsConfig) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for d in edge_maximum_min_dominating_sets(g) {
        for v in d.iter() {
            if epn(g, &d, v)?.is_empty() {
                out.push(violation("epn[v,D] nonempty", json!({ "D": d, "v": v })));
            }
        }
    }
    Ok(out)
}

fn check_neighbour_removal(g: &Graph, rng: &mut StdRng, cfg: &PropsConfig) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for d in optimal_dominating_sets(g) {
        let options: Vec<Vec<usize>> = d.iter().map(|v| Ok(epn(g, &d, v)?.to_vec())).collect::<Result<_>>()?;
        if options.iter().any(Vec::is_empty) {
            out.push(violation("optimal D has private neighbours", json!({ "D": d })));
            continue;
        }
        let total: usize = options.iter().map(Vec::len).product();
        let exhaustive = g.order() <= 6 || total <= cfg.budget;
        let picks: Vec<Vec<usize>> = if exhaustive {
            (0..total)
                .map(|mut i| {
                    options
                        .iter()
                        .map(|o| {
                            let c = o[i % o.len()];
                            i /= o.len();
                            c
                        })
                        .collect()
                })
                .collect()
        } else {
            (0..cfg.budget).map(|_| options.iter().map(|o| o[rng.gen_range(0..o.len())]).collect()).collect()
        };
        for pick in picks {
            let a = VertexSet::from_labels(g.order(), pick.iter().copied())?;
            let (h, _) = g.induced_subgraph(&a.complement())?;
            if !h.isolated_vertices().is_empty() {
                out.push(violation("G - A has no isolated vertex", json!({ "D": d, "A": a })));
            }
        }
    }
    Ok(out)
}

fn check_operation_times(g: &Graph, _: &mut StdRng, _: &PropsConfig) -> Result<Vec<Violation>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut fail = |item: u32, rule: RuleKind, detail: Value| {
        out.push(violation(format!("item {item} ({})", rule.name()), detail));
    };
    for rule in RuleKind::ALL {
        let on_g = forcing_sets(rule, g)?;
        for (u, v) in g.edges() {
            let minus = g.delete_edge((u, v))?;
            let (sub, _) = g.subdivide_edge((u, v))?;
            let (con, map) = g.contract_edge((u, v))?;
            let y = map.contracted_vertex().expect("contraction records y_e");
            for &(b, t) in &on_g {
                let after = best_of(rule, &minus, &b, [u, v])?;
                if after > t {
                    fail(2, rule, json!({ "edge": [u, v], "B": b, "pt": t.finite(), "after": after.finite() }));
                }
                let lifted = VertexSet::from_bits(n + 1, b.bits())?;
                // w ranges over u, v and z_e
                let after = best_of(rule, &sub, &lifted, [u, v])?.min(pt(rule, &sub, &lifted.with(n)?)?);
                if after > t {
                    fail(7, rule, json!({ "edge": [u, v], "B": b, "pt": t.finite(), "after": after.finite() }));
                }
                if rule == PD {
                    let moved = map.forward(&b.without(u).without(v)).with(y)?;
                    let after = pt(rule, &con, &moved)?;
                    if after > t {
                        fail(5, rule, json!({ "edge": [u, v], "B": b, "pt": t.finite(), "after": after.finite() }));
                    }
                }
            }
            for (b, t) in forcing_sets(rule, &minus)? {
                let after = best_of(rule, g, &b, [u, v])?;
                if after > t {
                    fail(1, rule, json!({ "edge": [u, v], "B'": b, "pt": t.finite(), "after": after.finite() }));
                }
            }
            for (b, t) in forcing_sets(rule, &con)? {
                let back = map.preimage(&b);
                let after = if b.contains(y) { pt(rule, g, &back)? } else { best_of(rule, g, &back, [u, v])? };
                if after > t {
                    fail(4, rule, json!({ "edge": [u, v], "B'": b, "pt": t.finite(), "after": after.finite() }));
                }
            }
            for (b, t) in forcing_sets(rule, &sub)? {
                let base = VertexSet::from_bits(n, b.without(n).bits())?;
                let after = if b.contains(n) { best_of(rule, g, &base, [u, v])? } else { pt(rule, g, &base)? };
                if after > t {
                    fail(6, rule, json!({ "edge": [u, v], "B'": b, "pt": t.finite(), "after": after.finite() }));
                }
            }
        }
        for x in 0..n {
            let (minus, map) = g.delete_vertex(x)?;
            for (b, t) in forcing_sets(rule, &minus)? {
                let back = map.preimage(&b).with(x)?;
                let after = pt(rule, g, &back)?;
                if after > t {
                    fail(3, rule, json!({ "vertex": x, "B'": b, "pt": t.finite(), "after": after.finite() }));
                }
            }
        }
    }
    Ok(out)
}

/// An optional factor `num / den`.
type Factor = Option<(u64, u64)>;

/// `lo · a <= b` and `b <= hi · a`, exactly.
fn within(a: u64, b: u64, lo: Factor, hi: Factor) -> bool {
    lo.is_none_or(|(p, q)| p * a <= q * b) && hi.is_none_or(|(p, q)| q * b <= p * a)
}

const HALF: Factor = Some((1, 2));
const ONE: Factor = Some((1, 1));
const TWO: Factor = Some((2, 1));
const THREE_HALVES: Factor = Some((3, 2));

fn check_factor_bounds(g: &Graph, _: &mut StdRng, _: &PropsConfig) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for rule in [PD, PSD] {
        let star = th(rule, PRODSTAR, g)?;
        let prod = th(rule, PRODX, g)?;
        let mut test = |item: u32,
                        op: Value,
                        h: &Graph,
                        star_bounds: (Factor, Factor),
                        prod_bounds: (Factor, Factor)|
         -> Result<()> {
            if h.has_any_edge() {
                let hs = th(rule, PRODSTAR, h)?;
                if !within(star, hs, star_bounds.0, star_bounds.1) {
                    out.push(violation(
                        format!("item {item} th* ({})", rule.name()),
                        json!({ "op": op, "G": star, "H": hs }),
                    ));
                }
            }
            let hp = th(rule, PRODX, h)?;
            if !within(prod, hp, prod_bounds.0, prod_bounds.1) {
                out.push(violation(
                    format!("item {item} thx ({})", rule.name()),
                    json!({ "op": op, "G": prod, "H": hp }),
                ));
            }
            Ok(())
        };
        for (u, v) in g.edges() {
            test(1, json!({ "delete_edge": [u, v] }), &g.delete_edge((u, v))?, (HALF, TWO), (HALF, TWO))?;
            let (con, _) = g.contract_edge((u, v))?;
            if rule == PD {
                test(3, json!({ "contract": [u, v] }), &con, (HALF, TWO), (HALF, TWO))?;
            } else {
                test(4, json!({ "contract": [u, v] }), &con, (HALF, None), (HALF, None))?;
            }
            let (sub, _) = g.subdivide_edge((u, v))?;
            let prod_hi = if rule == PD { TWO } else { THREE_HALVES };
            test(5, json!({ "subdivide": [u, v] }), &sub, (ONE, TWO), (ONE, prod_hi))?;
        }
        for x in 0..g.order() {
            let (minus, _) = g.delete_vertex(x)?;
            test(2, json!({ "delete_vertex": x }), &minus, (HALF, None), (HALF, None))?;
        }
    }
    Ok(out)
}

fn check_zf_unit_steps(g: &Graph, _: &mut StdRng, _: &PropsConfig) -> Result<Vec<Violation>> {
    let s = th(ZF, PRODSTAR, g)?;
    let mut out = Vec::new();
    let mut test = |op: Value, h: &Graph, below: u64, above: u64| -> Result<()> {
        if h.has_any_edge() {
            let hs = th(ZF, PRODSTAR, h)?;
            if hs + below < s || hs > s + above {
                out.push(violation("th*_Z within one step", json!({ "op": op, "G": s, "H": hs })));
            }
        }
        Ok(())
    };
    for x in 0..g.order() {
        test(json!({ "delete_vertex": x }), &g.delete_vertex(x)?.0, 1, 0)?;
    }
    for (u, v) in g.edges() {
        test(json!({ "delete_edge": [u, v] }), &g.delete_edge((u, v))?, 1, 1)?;
        test(json!({ "contract": [u, v] }), &g.contract_edge((u, v))?.0, 1, 0)?;
        test(json!({ "subdivide": [u, v] }), &g.subdivide_edge((u, v))?.0, 0, 1)?;
    }
    Ok(out)
}

fn check_ranges(g: &Graph, _: &mut StdRng, _: &PropsConfig) -> Result<Vec<Violation>> {
    if !g.has_any_edge() {
        return Ok(vec![]);
    }
    let n = g.order() as u64;
    let mut out = Vec::new();
    for rule in RuleKind::ALL {
        let y = parameter_number(rule, g).0 as u64;
        let (sum, prod, star) = (th(rule, SUM, g)?, th(rule, PRODX, g)?, th(rule, PRODSTAR, g)?);
        let ok = y >= 1 && y < prod && prod <= n && y < sum && sum <= n && star >= 1 && star < n;
        if !ok {
            out.push(violation(
                format!("bounds ({})", rule.name()),
                json!({ "Y": y, "sum": sum, "prodx": prod, "prodstar": star }),
            ));
        }
    }
    let universal = !g.universal_vertices().is_empty();
    let star = th(PD, PRODSTAR, g)?;
    let prod = th(PD, PRODX, g)?;
    if (star == 1) != universal || (prod == 2) != universal {
        out.push(violation(
            "universal vertex criterion",
            json!({ "universal": universal, "prodstar": star, "prodx": prod }),
        ));
    }
    Ok(out)
}

fn check_monotonicity(g: &Graph, _: &mut StdRng, _: &PropsConfig) -> Result<Vec<Violation>> {
    let n = g.order();
    let full = (1u64 << n) - 1;
    let mut out = Vec::new();
    for rule in RuleKind::ALL {
        let times: Vec<PropagationTime> = all_sets(n).map(|b| pt(rule, g, &b)).collect::<Result<_>>()?;
        for (b, &t) in times.iter().enumerate() {
            if (t == PropagationTime::Finite(0)) != (b as u64 == full) {
                out.push(violation(format!("pt = 0 iff B = V ({})", rule.name()), json!({ "B": b, "pt": t.finite() })));
            }
            // every superset of b
            let rest = full & !(b as u64);
            let mut extra = rest;
            loop {
                let sup = b | extra as usize;
                if times[sup] > t {
                    out.push(violation(
                        format!("superset monotonicity ({})", rule.name()),
                        json!({ "B": b, "superset": sup, "pt": t.finite(), "superset_pt": times[sup].finite() }),
                    ));
                }
                if extra == 0 {
                    break;
                }
                extra = (extra - 1) & rest;
            }
        }
    }
    Ok(out)
}

fn check_psd_superset(g: &Graph, _: &mut StdRng, _: &PropsConfig) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for f in all_sets(g.order()) {
        let standard = step(ZF, g, &f, 1)?;
        let psd = step(PSD, g, &f, 1)?;
        if !standard.is_subset(&psd) {
            out.push(violation(
                "standard step within PSD step",
                json!({ "filled": f, "standard": standard, "psd": psd }),
            ));
        }
        let dominate = step(PD, g, &f, 1)?;
        if dominate != g.closed_neighborhood_of(&f)?.difference(&f) {
            out.push(violation("domination step fills N[B]", json!({ "filled": f, "step": dominate })));
        }
        if step(PD, g, &f, 2)? != standard {
            out.push(violation("later power domination steps are standard", json!({ "filled": f })));
        }
    }
    Ok(out)
}

fn certificate_checks(g: &Graph, theorem: BoundTheorem, exhaustive: u64) -> Vec<Violation> {
    match construct_pd_certificate(g, theorem) {
        Err(e) => vec![violation("certificate builds", json!({ "error": e.to_string() }))],
        Ok(c) => {
            let mut out = Vec::new();
            if c.value < exhaustive {
                out.push(violation(
                    "certificate value >= exhaustive value",
                    json!({ "certificate": c.value, "exhaustive": exhaustive }),
                ));
            }
            let d = c.dominating.dominating_set.len();
            if !c.removed.is_empty() && 2 * c.power_dominating_set.len() > g.order() - d {
                out.push(violation(
                    "|P| <= (n - |D|) / 2",
                    json!({ "P": c.power_dominating_set, "D": c.dominating.dominating_set }),
                ));
            }
            out
        }
    }
}

fn check_six_sevenths(g: &Graph, _: &mut StdRng, _: &PropsConfig) -> Result<Vec<Violation>> {
    let n = g.order() as u64;
    let value = th(PD, PRODX, g)?;
    let mut out = certificate_checks(g, BoundTheorem::ProductSixSevenths, value);
    if 7 * value > 6 * n {
        out.push(violation("7 thx <= 6n", json!({ "thx": value })));
    }
    Ok(out)
}

fn check_third_plus_two(g: &Graph, _: &mut StdRng, _: &PropsConfig) -> Result<Vec<Violation>> {
    let n = g.order() as u64;
    let value = th(PD, SUM, g)?;
    let mut out = certificate_checks(g, BoundTheorem::SumThirdPlusTwo, value);
    if value > n / 3 + 2 {
        out.push(violation("th <= floor(n/3) + 2", json!({ "th": value })));
    }
    Ok(out)
}

fn check_equality_case(g: &Graph, _: &mut StdRng, _: &PropsConfig) -> Result<Vec<Violation>> {
    let r = verify_corollary(g)?;
    Ok(if r.holds() { vec![] } else { vec![violation("gamma = 3n/7 at equality", serde_json::to_value(&r)?)] })
}

fn check_k_identity(g: &Graph, _: &mut StdRng, _: &PropsConfig) -> Result<Vec<Violation>> {
    let s = th(ZF, PRODSTAR, g)?;
    let k = th_star_z_via_identity(g)? as u64;
    let mut out = Vec::new();
    if s != k {
        out.push(violation("th*_Z = k(G,1)", json!({ "th*": s, "k": k })));
    }
    if 2 * k < g.order() as u64 {
        out.push(violation("k(G,1) >= n/2", json!({ "k": k })));
    }
    Ok(out)
}

fn check_matched_sums(g: &Graph, _: &mut StdRng, _: &PropsConfig) -> Result<Vec<Violation>> {
    if g.order() % 2 == 1 {
        return Ok(vec![]);
    }
    let s = th(ZF, PRODSTAR, g)?;
    let witness = is_matched_sum(g)?;
    Ok(if (2 * s == g.order() as u64) != witness.is_some() {
        vec![violation("th*_Z = n/2 iff matched sum", json!({ "th*": s, "matched_sum": witness }))]
    } else {
        vec![]
    })
}

fn check_thzx(g: &Graph, _: &mut StdRng, _: &PropsConfig) -> Result<Vec<Violation>> {
    let v = th(ZF, PRODX, g)?;
    Ok(if v != g.order() as u64 { vec![violation("thx_Z = n", json!({ "thx": v }))] } else { vec![] })
}

fn check_construct(g: &Graph, rng: &mut StdRng, _: &PropsConfig) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for theorem in [BoundTheorem::ProductSixSevenths, BoundTheorem::SumThirdPlusTwo] {
        let first = match construct_pd_certificate(g, theorem) {
            Ok(c) => c,
            Err(e) => {
                out.push(violation(format!("{theorem} least-label choice"), json!({ "error": e.to_string() })));
                continue;
            }
        };
        if first.removed.is_empty() {
            continue;
        }
        for _ in 0..RANDOM_CHOICES {
            let mut picks = Vec::new();
            let result = construct_pd_certificate_with(g, theorem, |v, set| {
                let options = set.to_vec();
                let u = options[rng.gen_range(0..options.len())];
                picks.push((v, u));
                u
            });
            if let Err(e) = result {
                out.push(violation(
                    format!("{theorem} random choice"),
                    json!({ "choices": picks, "error": e.to_string() }),
                ));
            }
        }
    }
    Ok(out)
}

fn sample_graphs(n: usize, connected: bool, count: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut rng = StdRng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let g = Graph::new(n, pairs.iter().copied().filter(|_| rng.gen_bool(0.5)))?;
        if !connected || g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

fn graph_seed(seed: u64, g: &Graph) -> u64 {
    to_graph6(g).bytes().fold(seed, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

/// Runs one suite; the report has one aggregate record per order and one
/// record per violation.
pub fn run_suite(name: &str, cfg: &PropsConfig) -> Result<Report> {
    let Some(suite) = suites().into_iter().find(|s| s.name == name) else {
        bail!("unknown suite `{name}` (expected one of: {})", suite_names().join(", "));
    };
    let nmax = cfg.nmax.unwrap_or(suite.default_nmax);
    if nmax > MAX_ENUMERATION_ORDER {
        bail!("--nmax must be at most {MAX_ENUMERATION_ORDER}");
    }
    let start = Instant::now();
    let mut batches: Vec<(usize, &'static str, Vec<Graph>)> = Vec::new();
    match &cfg.input {
        Some(graphs) => {
            let usable = |g: &&Graph| g.order() >= suite.nmin && (!suite.connected || g.is_connected());
            let mut orders: Vec<usize> = graphs.iter().filter(usable).map(Graph::order).collect();
            orders.sort_unstable();
            orders.dedup();
            for n in orders {
                batches.push((n, "input", graphs.iter().filter(usable).filter(|g| g.order() == n).cloned().collect()));
            }
        }
        None => {
            for n in suite.nmin..=nmax {
                if n <= suite.exhaustive_max {
                    batches.push((n, "exhaustive", graphs_up_to_isomorphism(n, suite.connected)?));
                } else {
                    batches.push((n, "sampled", sample_graphs(n, suite.connected, cfg.budget, cfg.seed)?));
                }
            }
        }
    }
    let mut records = Vec::new();
    for (n, mode, graphs) in batches {
        let results: Vec<(String, Vec<Violation>)> = graphs
            .par_iter()
            .map(|g| {
                let mut rng = StdRng::seed_from_u64(graph_seed(cfg.seed, g));
                let found = (suite.check)(g, &mut rng, cfg)
                    .unwrap_or_else(|e| vec![violation("check ran", json!({ "error": format!("{e:#}") }))]);
                (to_graph6(g), found)
            })
            .collect();
        let count: usize = results.iter().map(|(_, v)| v.len()).sum();
        records.push(
            Record::new(format!("{} n={n}", suite.name), json!(0), json!(count))
                .inputs(json!({ "n": n, "graphs": graphs.len(), "mode": mode, "description": suite.description })),
        );
        for (g6, found) in results {
            for v in found {
                records.push(
                    Record::new(format!("{} n={n}: {}", suite.name, v.check), json!("holds"), json!("violated"))
                        .graph(g6.clone())
                        .witness(v.detail),
                );
            }
        }
    }
    Ok(Report::new(format!("props:{}", suite.name), records, start.elapsed().as_millis()))
}
