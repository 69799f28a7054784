//! The table of published values checked by `paper-suite`.
//!
//! Every case recomputes one value (or one value for each listed rule) from
//! scratch and compares it exactly with the expected integer. Cases carry
//! `key=value` tags used by `--filter`.

use std::time::Instant;

use anyhow::{ensure, Context, Result};
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use throttle_core::constructive::{construct_pd_certificate, verify_corollary, BoundTheorem};
use throttle_core::domination::{domination_number, optimal_dominating_set};
use throttle_core::enumerate::graphs_in_range;
use throttle_core::families::{self, Fixture};
use throttle_core::forcing::{parameter_number, propagation_time, pt_k, step};
use throttle_core::io::to_graph6;
use throttle_core::iso::are_isomorphic;
use throttle_core::subsets::KSubsets;
use throttle_core::throttling::{is_matched_sum, k_of_p, th_star_z_via_identity, throttle, throttle_k, throttle_set};
use throttle_core::{Graph, PropagationTime, RuleKind, ThrottlingKind, VertexSet};

use crate::report::{Record, Report};
use crate::source::{apply, resolve, Operation};

use RuleKind::{PowerDomination as PD, PsdForcing as PSD, StandardZeroForcing as ZF};
use ThrottlingKind::{ProductInitialCost as PRODX, ProductNoInitialCost as PRODSTAR, Sum as SUM};

type Run = Box<dyn Fn() -> Result<Record> + Send + Sync>;

pub struct TableCase {
    pub id: String,
    pub tags: Vec<(&'static str, String)>,
    run: Run,
}

impl TableCase {
    fn new(
        id: impl Into<String>,
        tags: &[(&'static str, &str)],
        run: impl Fn() -> Result<Record> + Send + Sync + 'static,
    ) -> Self {
        Self { id: id.into(), tags: tags.iter().map(|&(k, v)| (k, v.to_string())).collect(), run: Box::new(run) }
    }

    pub fn matches(&self, filter: &[(String, String)]) -> bool {
        filter.iter().all(|(k, v)| self.tags.iter().any(|(tk, tv)| tk == k && tv == v))
    }

    pub fn run(&self) -> Record {
        let tags: Map<String, Value> = self.tags.iter().map(|(k, v)| ((*k).to_string(), json!(v))).collect();
        match (self.run)() {
            Ok(mut r) => {
                r.case = self.id.clone();
                if r.inputs.is_null() {
                    r.inputs = json!({ "tags": tags });
                } else if let Value::Object(m) = &mut r.inputs {
                    m.insert("tags".into(), Value::Object(tags));
                }
                r
            }
            Err(e) => Record::new(self.id.clone(), json!("no error"), json!(format!("error: {e:#}")))
                .inputs(json!({ "tags": tags })),
        }
    }
}

/// Parses `key=value` filters.
pub fn parse_filter(spec: &str) -> Result<(String, String)> {
    let (k, v) = spec.split_once('=').with_context(|| format!("filter `{spec}` is not key=value"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

fn graph_of(spec: &str, ops: &[Operation]) -> Result<Fixture> {
    let mut fx = resolve(spec)?;
    for op in ops {
        fx = apply(&fx, op)?;
    }
    Ok(fx)
}

fn del_v(name: &str) -> Operation {
    Operation::DeleteVertex(name.into())
}
fn del_e(name: &str) -> Operation {
    Operation::DeleteEdge(name.into())
}
fn contract(name: &str) -> Operation {
    Operation::Contract(name.into())
}
fn subdivide(name: &str) -> Operation {
    Operation::Subdivide(name.into())
}

/// Scalar for one rule, otherwise an object keyed by rule symbol.
fn per_rule(rules: &[RuleKind], values: Vec<Value>) -> Value {
    if rules.len() == 1 {
        return values.into_iter().next().unwrap_or(Value::Null);
    }
    Value::Object(rules.iter().zip(values).map(|(r, v)| (r.symbol().to_string(), v)).collect())
}

fn pt_json(t: PropagationTime) -> Value {
    serde_json::to_value(t).expect("propagation times serialise")
}

/// Graph-level throttling number for each rule.
fn throttling(
    spec: &'static str,
    ops: Vec<Operation>,
    rules: &'static [RuleKind],
    kind: ThrottlingKind,
    expected: u64,
) -> Run {
    Box::new(move || {
        let fx = graph_of(spec, &ops)?;
        let mut values = Vec::new();
        let mut witnesses = Vec::new();
        for &rule in rules {
            let r = throttle(rule, kind, &fx.graph)?;
            values.push(json!(r.value));
            witnesses.push(json!({ "set": r.witness, "pt": r.witness_pt }));
        }
        Ok(Record::new("", per_rule(rules, vec![json!(expected); rules.len()]), per_rule(rules, values))
            .graph(to_graph6(&fx.graph))
            .inputs(json!({ "graph": fx.name, "kind": kind, "rules": rules }))
            .witness(per_rule(rules, witnesses)))
    })
}

/// A single integer computed by `f` on the resolved graph.
fn value<F>(spec: &'static str, ops: Vec<Operation>, expected: Value, f: F) -> Run
where
    F: Fn(&Fixture) -> Result<(Value, Option<Value>)> + Send + Sync + 'static,
{
    Box::new(move || {
        let fx = graph_of(spec, &ops)?;
        let (computed, witness) = f(&fx)?;
        let mut r =
            Record::new("", expected.clone(), computed).graph(to_graph6(&fx.graph)).inputs(json!({ "graph": fx.name }));
        if let Some(w) = witness {
            r = r.witness(w);
        }
        Ok(r)
    })
}

fn isomorphic_to(
    spec: &'static str,
    ops: Vec<Operation>,
    other: impl Fn() -> Result<Graph> + Send + Sync + 'static,
) -> Run {
    value(spec, ops, json!(true), move |fx| Ok((json!(are_isomorphic(&fx.graph, &other()?)), None)))
}

fn order(spec: &'static str, n: usize) -> Run {
    value(spec, vec![], json!(n), |fx| Ok((json!(fx.graph.order()), None)))
}

fn parameter(spec: &'static str, ops: Vec<Operation>, rule: RuleKind, expected: usize) -> Run {
    value(spec, ops, json!(expected), move |fx| {
        let (y, w) = parameter_number(rule, &fx.graph);
        Ok((json!(y), Some(json!({ "set": w }))))
    })
}

fn least_k_with_pt_at_most(g: &Graph, rule: RuleKind, t: u32) -> Result<usize> {
    (1..=g.order())
        .find(|&k| pt_k(rule, g, k).map(|(p, _)| p.finite().is_some_and(|p| p <= t)).unwrap_or(false))
        .context("no set reaches the propagation time")
}

fn labels(fx: &Fixture, names: &[&str]) -> Result<VertexSet> {
    let vs = names.iter().map(|n| crate::source::vertex(fx, n)).collect::<Result<Vec<_>>>()?;
    Ok(VertexSet::from_labels(fx.graph.order(), vs)?)
}

/// Every published value, in a fixed order.
pub fn table_cases() -> Vec<TableCase> {
    let both: &'static [RuleKind] = &[PD, PSD];
    let mut cases = vec![
        // the 7k-vertex family
        TableCase::new("family_6n7:K2 order 7", &[("example", "2.3"), ("family", "6n7")], order("family_6n7:K2", 7)),
        TableCase::new("family_6n7:C4 order 14", &[("example", "2.3"), ("family", "6n7")], order("family_6n7:C4", 14)),
        TableCase::new(
            "family_6n7:fig1_base order 28",
            &[("figure", "1"), ("example", "2.3"), ("family", "6n7")],
            order("family_6n7:fig1_base", 28),
        ),
        TableCase::new(
            "family_6n7:K2 pt_gammaP(V(H)) = 2",
            &[("example", "2.3"), ("family", "6n7")],
            value("family_6n7:K2", vec![], json!(2), |fx| {
                let b = labels(fx, &["v1", "v2"])?;
                Ok((pt_json(propagation_time(PD, &fx.graph, &b)?), None))
            }),
        ),
        TableCase::new(
            "family_6n7:K2 thx_gammaP(V(H)) = 6",
            &[("example", "2.3"), ("family", "6n7")],
            value("family_6n7:K2", vec![], json!(6), |fx| {
                let b = labels(fx, &["v1", "v2"])?;
                Ok((json!(throttle_set(PD, PRODX, &fx.graph, &b)?), None))
            }),
        ),
        TableCase::new(
            "family_6n7:K2 gammaP = 2",
            &[("example", "2.3"), ("family", "6n7")],
            parameter("family_6n7:K2", vec![], PD, 2),
        ),
        TableCase::new(
            "family_6n7:K2 gamma = 3",
            &[("example", "2.3"), ("family", "6n7"), ("corollary", "2.5")],
            value("family_6n7:K2", vec![], json!(3), |fx| {
                let (g, d) = domination_number(&fx.graph);
                Ok((json!(g), Some(json!({ "set": d }))))
            }),
        ),
        TableCase::new(
            "family_6n7:K2 corollary outcome",
            &[("corollary", "2.5"), ("family", "6n7")],
            value("family_6n7:K2", vec![], json!("equality_holds"), |fx| {
                let r = verify_corollary(&fx.graph)?;
                Ok((serde_json::to_value(r.outcome)?, Some(serde_json::to_value(&r)?)))
            }),
        ),
        TableCase::new(
            "family_6n7:K2 certificate within 6n/7",
            &[("theorem", "2.4"), ("family", "6n7")],
            value("family_6n7:K2", vec![], json!(true), |fx| {
                let c = construct_pd_certificate(&fx.graph, BoundTheorem::ProductSixSevenths)?;
                Ok((json!(c.value <= 6 && c.within_bound()), Some(serde_json::to_value(&c)?)))
            }),
        ),
        TableCase::new(
            "family_6n7:K2 no isolated vertex after removing private neighbours",
            &[("lemma", "2.3"), ("family", "6n7")],
            value("family_6n7:K2", vec![], json!(0), |fx| {
                let cert = optimal_dominating_set(&fx.graph);
                let a = cert
                    .epn
                    .iter()
                    .map(|e| e.private_neighbors.first().context("empty epn"))
                    .collect::<Result<Vec<_>>>()?;
                let a = VertexSet::from_labels(fx.graph.order(), a)?;
                let (h, _) = fx.graph.induced_subgraph(&a.complement())?;
                Ok((json!(h.isolated_vertices().len()), Some(json!({ "A": a }))))
            }),
        ),
        // spider S(2,2,1,1)
        TableCase::new("spider:2,2,1,1 order 7", &[("example", "2.6")], order("spider:2,2,1,1", 7)),
        TableCase::new(
            "spider:2,2,1,1 gamma = 3",
            &[("example", "2.6")],
            value("spider:2,2,1,1", vec![], json!(3), |fx| Ok((json!(domination_number(&fx.graph).0), None))),
        ),
        TableCase::new(
            "spider:2,2,1,1 thx_gammaP = 3",
            &[("example", "2.6")],
            throttling("spider:2,2,1,1", vec![], &[PD], PRODX, 3),
        ),
        TableCase::new(
            "spider:2,2,1,1 corollary converse fails",
            &[("example", "2.6"), ("corollary", "2.5")],
            value("spider:2,2,1,1", vec![], json!("converse_counterexample"), |fx| {
                let r = verify_corollary(&fx.graph)?;
                Ok((serde_json::to_value(r.outcome)?, Some(serde_json::to_value(&r)?)))
            }),
        ),
        // sum bound attained
        TableCase::new(
            "ex11_57:K2 th_gammaP = 4",
            &[("theorem", "2.7")],
            throttling("ex11_57:K2", vec![], &[PD], SUM, 4),
        ),
        TableCase::new(
            "ex11_57:K2 certificate within n/3 + 2",
            &[("theorem", "2.7")],
            value("ex11_57:K2", vec![], json!(true), |fx| {
                let c = construct_pd_certificate(&fx.graph, BoundTheorem::SumThirdPlusTwo)?;
                Ok((json!(c.value <= 4 && c.within_bound()), Some(serde_json::to_value(&c)?)))
            }),
        ),
        // figure 2
        TableCase::new("spider:3,3,3,3,3,3 order 19", &[("example", "3.3")], order("spider:3,3,3,3,3,3", 19)),
        TableCase::new(
            "fig2_spider_plus_e - e = S(3,3,3,3,3,3)",
            &[("example", "3.3")],
            isomorphic_to("fig2_spider_plus_e", vec![del_e("e")], || Ok(families::spider(&[3; 6])?.0)),
        ),
        TableCase::new(
            "spider:3,3,3,3,3,3 first PSD step from c",
            &[("example", "3.3")],
            value("spider:3,3,3,3,3,3", vec![], json!([1, 4, 7, 10, 13, 16]), |fx| {
                let c = labels(fx, &["c"])?;
                Ok((serde_json::to_value(step(PSD, &fx.graph, &c, 1)?)?, None))
            }),
        ),
        TableCase::new(
            "spider:3,3,3,3,3,3 pt_gammaP(G,1) = 3",
            &[("example", "3.3")],
            value("spider:3,3,3,3,3,3", vec![], json!(3), |fx| Ok((pt_json(pt_k(PD, &fx.graph, 1)?.0), None))),
        ),
        TableCase::new(
            "spider:3,3,3,3,3,3 pt_gammaP <= 2 needs 6 vertices",
            &[("example", "3.3")],
            value("spider:3,3,3,3,3,3", vec![], json!(6), |fx| {
                Ok((json!(least_k_with_pt_at_most(&fx.graph, PD, 2)?), None))
            }),
        ),
        TableCase::new(
            "spider:3,3,3,3,3,3 pt_gammaP = 1 needs 7 vertices",
            &[("example", "3.3")],
            value("spider:3,3,3,3,3,3", vec![], json!(7), |fx| {
                Ok((json!(least_k_with_pt_at_most(&fx.graph, PD, 1)?), None))
            }),
        ),
        TableCase::new(
            "spider:3,3,3,3,3,3 th*_Zplus({c}) = 3",
            &[("example", "3.3")],
            value("spider:3,3,3,3,3,3", vec![], json!(3), |fx| {
                Ok((json!(throttle_set(PSD, PRODSTAR, &fx.graph, &labels(fx, &["c"])?)?), None))
            }),
        ),
        TableCase::new(
            "S(3^6) th* = 3",
            &[("figure", "2"), ("example", "3.3")],
            throttling("spider:3,3,3,3,3,3", vec![], both, PRODSTAR, 3),
        ),
        TableCase::new(
            "S(3^6) thx = 4",
            &[("figure", "2"), ("example", "3.3")],
            throttling("spider:3,3,3,3,3,3", vec![], both, PRODX, 4),
        ),
        TableCase::new(
            "fig2_spider_plus_e th* = 6",
            &[("figure", "2"), ("example", "3.3")],
            throttling("fig2_spider_plus_e", vec![], both, PRODSTAR, 6),
        ),
        TableCase::new(
            "fig2_spider_plus_e thx = 8",
            &[("figure", "2"), ("example", "3.3")],
            throttling("fig2_spider_plus_e", vec![], both, PRODX, 8),
        ),
        // figure 3
        TableCase::new(
            "fig3_H1 th*_gammaP = 1",
            &[("figure", "3"), ("example", "3.4")],
            throttling("fig3_H1", vec![], &[PD], PRODSTAR, 1),
        ),
        TableCase::new(
            "fig3_H1 - e th*_gammaP = 2",
            &[("figure", "3"), ("example", "3.4")],
            throttling("fig3_H1", vec![del_e("e")], &[PD], PRODSTAR, 2),
        ),
        TableCase::new(
            "fig3_H2 thx_gammaP = 3",
            &[("figure", "3"), ("example", "3.4")],
            throttling("fig3_H2", vec![], &[PD], PRODX, 3),
        ),
        TableCase::new(
            "fig3_H2 - e thx_gammaP = 6",
            &[("figure", "3"), ("example", "3.4")],
            throttling("fig3_H2", vec![del_e("e")], &[PD], PRODX, 6),
        ),
        TableCase::new("fig3_H2 - e gammaP = 2", &[("example", "3.4")], parameter("fig3_H2", vec![del_e("e")], PD, 2)),
        TableCase::new(
            "fig3_H2 - e pt_gammaP(G,2) = 2",
            &[("example", "3.4")],
            value("fig3_H2", vec![del_e("e")], json!(2), |fx| Ok((pt_json(pt_k(PD, &fx.graph, 2)?.0), None))),
        ),
        TableCase::new(
            "fig3_H2 - e thx_gammaP(G,2) = 6",
            &[("example", "3.4")],
            value("fig3_H2", vec![del_e("e")], json!(6), |fx| {
                let (v, w) = throttle_k(PD, PRODX, &fx.graph, 2)?.context("no forcing 2-set")?;
                Ok((json!(v), Some(json!({ "set": w }))))
            }),
        ),
        TableCase::new(
            "fig3_H2 - e thx_gammaP(G,3) = 6",
            &[("example", "3.4")],
            value("fig3_H2", vec![del_e("e")], json!(6), |fx| {
                let (v, w) = throttle_k(PD, PRODX, &fx.graph, 3)?.context("no forcing 3-set")?;
                Ok((json!(v), Some(json!({ "set": w }))))
            }),
        ),
        TableCase::new(
            "fig3_H3 th*_Zplus = 3",
            &[("figure", "3"), ("example", "3.4")],
            throttling("fig3_H3", vec![], &[PSD], PRODSTAR, 3),
        ),
        TableCase::new(
            "fig3_H3 - e th*_Zplus = 6",
            &[("figure", "3"), ("example", "3.4")],
            throttling("fig3_H3", vec![del_e("e")], &[PSD], PRODSTAR, 6),
        ),
        TableCase::new(
            "fig3_H3 thx_Zplus = 4",
            &[("figure", "3"), ("example", "3.4")],
            throttling("fig3_H3", vec![], &[PSD], PRODX, 4),
        ),
        TableCase::new(
            "fig3_H3 - e thx_Zplus = 8",
            &[("figure", "3"), ("example", "3.4")],
            throttling("fig3_H3", vec![del_e("e")], &[PSD], PRODX, 8),
        ),
        // figure 4
        TableCase::new(
            "fig4_twin th* = 4",
            &[("figure", "4"), ("example", "3.5")],
            throttling("fig4_twin", vec![], both, PRODSTAR, 4),
        ),
        TableCase::new(
            "fig4_twin thx = 6",
            &[("figure", "4"), ("example", "3.5")],
            throttling("fig4_twin", vec![], both, PRODX, 6),
        ),
        TableCase::new(
            "fig4_twin - x th* = 2",
            &[("figure", "4"), ("example", "3.5")],
            throttling("fig4_twin", vec![del_v("x")], both, PRODSTAR, 2),
        ),
        TableCase::new(
            "fig4_twin - x thx = 3",
            &[("figure", "4"), ("example", "3.5")],
            throttling("fig4_twin", vec![del_v("x")], both, PRODX, 3),
        ),
        TableCase::new(
            "fig4_twin - x = S(2,2,2,2)",
            &[("example", "3.5")],
            isomorphic_to("fig4_twin", vec![del_v("x")], || Ok(families::spider(&[2; 4])?.0)),
        ),
        TableCase::new(
            "fig4_twin {c} stalls after the domination step",
            &[("example", "3.5")],
            value("fig4_twin", vec![], json!("infinity"), |fx| {
                Ok((pt_json(propagation_time(PD, &fx.graph, &labels(fx, &["c"])?)?), None))
            }),
        ),
        // figure 5
        TableCase::new(
            "corona:K2:2 = fig5_K2corona",
            &[("example", "3.6")],
            isomorphic_to("corona:K2:2", vec![], || Ok(families::fixture("fig5_K2corona")?.graph)),
        ),
        TableCase::new(
            "fig5_K2corona th*_gammaP = 2",
            &[("figure", "5"), ("example", "3.6")],
            throttling("fig5_K2corona", vec![], &[PD], PRODSTAR, 2),
        ),
        TableCase::new(
            "fig5_K2corona th*_Zplus = 2",
            &[("figure", "5"), ("example", "3.6")],
            throttling("fig5_K2corona", vec![], &[PSD], PRODSTAR, 2),
        ),
        TableCase::new(
            "fig5_K2corona thx_gammaP = 4",
            &[("figure", "5"), ("example", "3.6")],
            throttling("fig5_K2corona", vec![], &[PD], PRODX, 4),
        ),
        TableCase::new(
            "fig5_K2corona pt_Zplus(G,1) = 2",
            &[("example", "3.6")],
            value("fig5_K2corona", vec![], json!(2), |fx| Ok((pt_json(pt_k(PSD, &fx.graph, 1)?.0), None))),
        ),
        TableCase::new(
            "fig5_K2corona / e = K_{1,4}",
            &[("example", "3.6")],
            isomorphic_to("fig5_K2corona", vec![contract("e")], || Ok(families::star(5)?)),
        ),
        TableCase::new(
            "fig5_K2corona / e th*_gammaP = 1",
            &[("figure", "5"), ("example", "3.6")],
            throttling("fig5_K2corona", vec![contract("e")], &[PD], PRODSTAR, 1),
        ),
        TableCase::new(
            "fig5_K2corona / e th*_Zplus = 1",
            &[("figure", "5"), ("example", "3.6")],
            throttling("fig5_K2corona", vec![contract("e")], &[PSD], PRODSTAR, 1),
        ),
        TableCase::new(
            "fig5_K2corona / e thx_gammaP = 2",
            &[("figure", "5"), ("example", "3.6")],
            throttling("fig5_K2corona", vec![contract("e")], &[PD], PRODX, 2),
        ),
        // figure 6
        TableCase::new(
            "fig6_legs5_plus_e th*_gammaP = 2",
            &[("figure", "6"), ("example", "3.7")],
            throttling("fig6_legs5_plus_e", vec![], &[PD], PRODSTAR, 2),
        ),
        TableCase::new(
            "fig6_legs5_plus_e thx_gammaP = 3",
            &[("figure", "6"), ("example", "3.7")],
            throttling("fig6_legs5_plus_e", vec![], &[PD], PRODX, 3),
        ),
        TableCase::new(
            "fig6_legs5_plus_e / e th*_gammaP = 4",
            &[("figure", "6"), ("example", "3.7")],
            throttling("fig6_legs5_plus_e", vec![contract("e")], &[PD], PRODSTAR, 4),
        ),
        TableCase::new(
            "fig6_legs5_plus_e / e thx_gammaP = 6",
            &[("figure", "6"), ("example", "3.7")],
            throttling("fig6_legs5_plus_e", vec![contract("e")], &[PD], PRODX, 6),
        ),
        TableCase::new(
            "fig6_legs5_plus_e pt_gammaP = 1 needs 5 vertices",
            &[("example", "3.7")],
            value("fig6_legs5_plus_e", vec![], json!(5), |fx| {
                Ok((json!(least_k_with_pt_at_most(&fx.graph, PD, 1)?), None))
            }),
        ),
        TableCase::new(
            "fig6_legs5_plus_e / e pt_gammaP = 1 needs 4 vertices",
            &[("example", "3.7")],
            value("fig6_legs5_plus_e", vec![contract("e")], json!(4), |fx| {
                Ok((json!(least_k_with_pt_at_most(&fx.graph, PD, 1)?), None))
            }),
        ),
        TableCase::new("ex3_7_H thx_Zplus = 8", &[("example", "3.7")], throttling("ex3_7_H", vec![], &[PSD], PRODX, 8)),
        TableCase::new(
            "ex3_7_H / e thx_Zplus = 4",
            &[("example", "3.7")],
            throttling("ex3_7_H", vec![contract("e")], &[PSD], PRODX, 4),
        ),
        // figure 7
        TableCase::new(
            "fig7_subdiv thx_gammaP = 3",
            &[("figure", "7"), ("example", "3.9")],
            throttling("fig7_subdiv", vec![], &[PD], PRODX, 3),
        ),
        TableCase::new(
            "fig7_subdiv subdivided thx_gammaP = 6",
            &[("figure", "7"), ("example", "3.9")],
            throttling("fig7_subdiv", vec![subdivide("e")], &[PD], PRODX, 6),
        ),
        // universal vertices
        TableCase::new("corona_tower:K2 order 9", &[("example", "3.10")], order("corona_tower:K2", 9)),
        TableCase::new(
            "corona_tower:K2 th*_gammaP = 1",
            &[("example", "3.10")],
            throttling("corona_tower:K2", vec![], &[PD], PRODSTAR, 1),
        ),
        TableCase::new(
            "corona_tower:K2 thx_gammaP = 2",
            &[("example", "3.10")],
            throttling("corona_tower:K2", vec![], &[PD], PRODX, 2),
        ),
        TableCase::new(
            "corona_tower:K2 - u th*_gammaP = 4",
            &[("example", "3.10")],
            throttling("corona_tower:K2", vec![del_v("u")], &[PD], PRODSTAR, 4),
        ),
        TableCase::new(
            "corona_tower:K2 - u thx_gammaP = 6",
            &[("example", "3.10")],
            throttling("corona_tower:K2", vec![del_v("u")], &[PD], PRODX, 6),
        ),
        TableCase::new(
            "star_plus_edge:6 th*_Zplus = 2",
            &[("example", "3.10")],
            throttling("star_plus_edge:6", vec![], &[PSD], PRODSTAR, 2),
        ),
        TableCase::new(
            "star_plus_edge:6 thx_Zplus = 4",
            &[("example", "3.10")],
            throttling("star_plus_edge:6", vec![], &[PSD], PRODX, 4),
        ),
        TableCase::new(
            "star_plus_edge:6 - c th*_Zplus = 4",
            &[("example", "3.10")],
            throttling("star_plus_edge:6", vec![del_v("c")], &[PSD], PRODSTAR, 4),
        ),
        TableCase::new(
            "star_plus_edge:6 - c thx_Zplus = 5",
            &[("example", "3.10")],
            throttling("star_plus_edge:6", vec![del_v("c")], &[PSD], PRODX, 5),
        ),
        TableCase::new(
            "star_plus_edge:6 {c, endpoint of e} is a PSD forcing set",
            &[("example", "3.10")],
            value("star_plus_edge:6", vec![], json!(true), |fx| {
                let (a, _) = fx.edge("e")?;
                let b = labels(fx, &["c"])?.with(a)?;
                Ok((json!(propagation_time(PSD, &fx.graph, &b)?.is_finite()), None))
            }),
        ),
        // book graphs
        TableCase::new(
            "book:3 order 8 with two vertices of degree 4",
            &[("family", "book")],
            value("book:3", vec![], json!([8, 2]), |fx| {
                Ok((json!([fx.graph.order(), fx.graph.degrees().iter().filter(|&&d| d == 4).count()]), None))
            }),
        ),
        TableCase::new("book:3 Zplus = 2", &[("family", "book")], parameter("book:3", vec![], PSD, 2)),
        TableCase::new(
            "book:3 pt_Zplus(G,2) = 1",
            &[("family", "book")],
            value("book:3", vec![], json!(1), |fx| Ok((pt_json(pt_k(PSD, &fx.graph, 2)?.0), None))),
        ),
        TableCase::new(
            "book:3 th*_Zplus = 2",
            &[("family", "book")],
            throttling("book:3", vec![], &[PSD], PRODSTAR, 2),
        ),
        TableCase::new("book:3 thx_Zplus = 4", &[("family", "book")], throttling("book:3", vec![], &[PSD], PRODX, 4)),
        TableCase::new("book:3 / e Zplus = 4", &[("family", "book")], parameter("book:3", vec![contract("e")], PSD, 4)),
        TableCase::new(
            "book:3 / e th*_Zplus = 4",
            &[("family", "book")],
            throttling("book:3", vec![contract("e")], &[PSD], PRODSTAR, 4),
        ),
        TableCase::new(
            "book:3 / e thx_Zplus = 7",
            &[("family", "book")],
            throttling("book:3", vec![contract("e")], &[PSD], PRODX, 7),
        ),
        TableCase::new(
            "book:3 / e thx_Zplus(G,7) = 7",
            &[("family", "book")],
            value("book:3", vec![contract("e")], json!(7), |fx| {
                Ok((json!(throttle_k(PSD, PRODX, &fx.graph, 7)?.context("V forces")?.0), None))
            }),
        ),
        TableCase::new(
            "book:3 / e has order 7",
            &[("family", "book")],
            value("book:3", vec![contract("e")], json!(7), |fx| Ok((json!(fx.graph.order()), None))),
        ),
        // standard zero forcing
        TableCase::new(
            "thx_Z(G) = n on all graphs of order at most 6",
            &[("identity", "thzx")],
            Box::new(|| {
                let bad = graphs_in_range(1, 6, false)?
                    .into_iter()
                    .filter(|g| throttle(ZF, PRODX, g).map(|r| r.value != g.order() as u64).unwrap_or(true))
                    .count();
                Ok(Record::new("", json!(0), json!(bad)))
            }),
        ),
        TableCase::new(
            "th*_Z(G) = k(G,1) on connected graphs of order 2..6",
            &[("theorem", "3.10")],
            Box::new(|| {
                let bad = graphs_in_range(2, 6, true)?
                    .into_iter()
                    .filter(|g| {
                        let k = th_star_z_via_identity(g).ok();
                        throttle(ZF, PRODSTAR, g).ok().map(|r| r.value) != k.map(|k| k as u64)
                    })
                    .count();
                Ok(Record::new("", json!(0), json!(bad)))
            }),
        ),
        TableCase::new(
            "k(G,1) >= n/2 on connected graphs of order 2..6",
            &[("theorem", "3.10")],
            Box::new(|| {
                let bad = graphs_in_range(2, 6, true)?
                    .into_iter()
                    .filter(|g| th_star_z_via_identity(g).map(|k| 2 * k < g.order()).unwrap_or(true))
                    .count();
                Ok(Record::new("", json!(0), json!(bad)))
            }),
        ),
        TableCase::new(
            "k(P5,1) = 3",
            &[("theorem", "3.10")],
            value("P5", vec![], json!(3), |fx| Ok((json!(k_of_p(&fx.graph, 1).context("no k")?.0), None))),
        ),
        TableCase::new(
            "matched_sum:3 has r^2 = 9 edges",
            &[("family", "matched_sum")],
            value("matched_sum:3", vec![], json!(9), |fx| Ok((json!(fx.graph.size()), None))),
        ),
        TableCase::new(
            "matched_sum:3 k(G,1) = 3",
            &[("theorem", "3.11")],
            value("matched_sum:3", vec![], json!(3), |fx| Ok((json!(k_of_p(&fx.graph, 1).context("no k")?.0), None))),
        ),
        TableCase::new(
            "matched_sum:3 th*_Z = 3",
            &[("theorem", "3.11")],
            throttling("matched_sum:3", vec![], &[ZF], PRODSTAR, 3),
        ),
        TableCase::new(
            "matched_sum:3 recognised as matched sum",
            &[("theorem", "3.11")],
            value("matched_sum:3", vec![], json!(true), |fx| Ok((json!(is_matched_sum(&fx.graph)?.is_some()), None))),
        ),
        TableCase::new(
            "matched_sum:3 - e th*_Z = 4",
            &[("prop", "3.12")],
            throttling("matched_sum:3", vec![del_e("e")], &[ZF], PRODSTAR, 4),
        ),
        TableCase::new(
            "matched_sum:3 - e has no 3-set forcing in one round",
            &[("prop", "3.12")],
            value("matched_sum:3", vec![del_e("e")], json!(0), |fx| {
                let g = &fx.graph;
                let n = g.order();
                let hits = KSubsets::new(n, 3)
                    .filter(|&b| {
                        propagation_time(ZF, g, &VertexSet::from_bits(n, b).expect("in range")).ok()
                            == Some(PropagationTime::Finite(1))
                    })
                    .count();
                Ok((json!(hits), None))
            }),
        ),
    ];

    for r in 1..=4usize {
        let even: &'static str = Box::leak(format!("P{}", 2 * r).into_boxed_str());
        let odd: &'static str = Box::leak(format!("P{}", 2 * r + 1).into_boxed_str());
        cases.push(TableCase::new(
            format!("{even} th*_Z = {r}"),
            &[("theorem", "3.10"), ("family", "path")],
            throttling(even, vec![], &[ZF], PRODSTAR, r as u64),
        ));
        cases.push(TableCase::new(
            format!("{odd} th*_Z = {}", r + 1),
            &[("theorem", "3.10"), ("family", "path")],
            throttling(odd, vec![], &[ZF], PRODSTAR, r as u64 + 1),
        ));
        cases.push(TableCase::new(
            format!("{even} is a matched sum"),
            &[("theorem", "3.11"), ("family", "path")],
            value(even, vec![], json!(true), |fx| Ok((json!(is_matched_sum(&fx.graph)?.is_some()), None))),
        ));
        cases.push(TableCase::new(
            format!("{odd} - endpoint = P{}", 2 * r),
            &[("prop", "3.12"), ("family", "path")],
            isomorphic_to(odd, vec![del_v(&(2 * r).to_string())], move || Ok(families::path(2 * r)?)),
        ));
    }
    for n in 2..=10usize {
        let p: &'static str = Box::leak(format!("P{n}").into_boxed_str());
        cases.push(TableCase::new(
            format!("{p} th* = {}", n.div_ceil(3)),
            &[("example", "3.8"), ("family", "path")],
            throttling(p, vec![], both, PRODSTAR, n.div_ceil(3) as u64),
        ));
        cases.push(TableCase::new(
            format!("{p} thx = {}", 1 + (n - 1).div_ceil(2)),
            &[("example", "3.8"), ("family", "path")],
            throttling(p, vec![], both, PRODX, 1 + (n - 1).div_ceil(2) as u64),
        ));
        cases.push(TableCase::new(
            format!("{p} subdivided = P{}", n + 1),
            &[("example", "3.8"), ("family", "path")],
            isomorphic_to(p, vec![subdivide("0,1")], move || Ok(families::path(n + 1)?)),
        ));
    }
    for n in 5..=8usize {
        let s: &'static str = Box::leak(format!("star:{n}").into_boxed_str());
        let leaf: &'static str = "0,1";
        cases.push(TableCase::new(
            format!("K_1,{} th* = 1", n - 1),
            &[("example", "3.9"), ("family", "star")],
            throttling(s, vec![], both, PRODSTAR, 1),
        ));
        cases.push(TableCase::new(
            format!("K_1,{} subdivided th* = 2", n - 1),
            &[("example", "3.9"), ("family", "star")],
            throttling(s, vec![subdivide(leaf)], both, PRODSTAR, 2),
        ));
        cases.push(TableCase::new(
            format!("K_1,{} thx_Zplus = 2", n - 1),
            &[("example", "3.9"), ("family", "star")],
            throttling(s, vec![], &[PSD], PRODX, 2),
        ));
        cases.push(TableCase::new(
            format!("K_1,{} subdivided thx_Zplus = 3", n - 1),
            &[("example", "3.9"), ("family", "star")],
            throttling(s, vec![subdivide(leaf)], &[PSD], PRODX, 3),
        ));
        cases.push(TableCase::new(
            format!("K_1,{} subdivided pt_gammaP(c) = 2", n - 1),
            &[("example", "3.9"), ("family", "star")],
            value(s, vec![subdivide(leaf)], json!(2), |fx| {
                Ok((pt_json(propagation_time(PD, &fx.graph, &labels(fx, &["c"])?)?), None))
            }),
        ));
        cases.push(TableCase::new(
            format!("K_1,{} / e = K_1,{}", n - 1, n - 2),
            &[("prop", "3.12"), ("family", "star")],
            isomorphic_to(s, vec![contract(leaf)], move || Ok(families::star(n - 1)?)),
        ));
        cases.push(TableCase::new(
            format!("K_1,{} / e th*_Z = {}", n - 1, n - 2),
            &[("prop", "3.12"), ("family", "star")],
            throttling(s, vec![contract(leaf)], &[ZF], PRODSTAR, n as u64 - 2),
        ));
        cases.push(TableCase::new(
            format!("K_1,{} th*_Z = {}", n - 1, n - 1),
            &[("prop", "3.12"), ("family", "star")],
            throttling(s, vec![], &[ZF], PRODSTAR, n as u64 - 1),
        ));
    }
    for (h, k) in [("K2", 1u64), ("P4", 2), ("C4", 2), ("C6", 3)] {
        let spec: &'static str = Box::leak(format!("family_6n7:{h}").into_boxed_str());
        cases.push(TableCase::new(
            format!("{spec} thx_gammaP = {}", 6 * k),
            &[("example", "2.3"), ("family", "6n7")],
            throttling(spec, vec![], &[PD], PRODX, 6 * k),
        ));
    }
    cases
}

/// Runs the cases matching every filter, in table order.
pub fn run_table(filter: &[(String, String)]) -> Report {
    let start = Instant::now();
    let cases: Vec<TableCase> = table_cases().into_iter().filter(|c| c.matches(filter)).collect();
    let records: Vec<Record> = cases.par_iter().map(TableCase::run).collect();
    Report::new("paper-suite", records, start.elapsed().as_millis())
}

/// Checks that the table is well formed: unique ids and tags on every case.
pub fn check_table() -> Result<()> {
    let cases = table_cases();
    let mut ids: Vec<&str> = cases.iter().map(|c| c.id.as_str()).collect();
    ids.sort_unstable();
    let before = ids.len();
    ids.dedup();
    ensure!(ids.len() == before, "duplicate case ids");
    ensure!(cases.iter().all(|c| !c.tags.is_empty()), "untagged case");
    Ok(())
}
