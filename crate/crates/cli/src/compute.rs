//! Single computations behind `throttle compute`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{bail, Result};
use serde_json::{json, Value};
use throttle_core::domination::domination_number;
use throttle_core::families::Fixture;
use throttle_core::forcing::{parameter_number, propagate};
use throttle_core::io::to_graph6;
use throttle_core::throttling::{throttle, throttle_with_table};
use throttle_core::{RuleKind, ThrottlingKind, VertexSet};

use crate::report::{Record, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parameter {
    Gamma,
    Rule(RuleKind),
}

impl FromStr for Parameter {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "gamma" => Parameter::Gamma,
            "z" => Parameter::Rule(RuleKind::StandardZeroForcing),
            "zplus" | "z+" => Parameter::Rule(RuleKind::PsdForcing),
            "gammap" => Parameter::Rule(RuleKind::PowerDomination),
            _ => bail!("unknown parameter `{s}` (expected gamma, Z, Zplus or gammaP)"),
        })
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::Gamma => f.write_str("gamma"),
            Parameter::Rule(r) => f.write_str(r.symbol()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    Throttling(RuleKind, ThrottlingKind),
    Parameter(Parameter),
}

#[derive(Clone, Debug)]
pub struct ComputeRequest {
    pub quantity: Quantity,
    pub per_k: bool,
    pub trace: bool,
    /// Value the result is compared against; without one the record passes.
    pub expect: Option<u64>,
}

fn trace_json(rule: RuleKind, fx: &Fixture, set: &VertexSet) -> Result<Value> {
    Ok(serde_json::to_value(propagate(rule, &fx.graph, set)?)?)
}

/// Computes one value on `fx` and wraps it in a single-record report.
pub fn compute(fx: &Fixture, req: &ComputeRequest) -> Result<Report> {
    let start = Instant::now();
    let g = &fx.graph;
    let (label, value, mut witness) = match req.quantity {
        Quantity::Throttling(rule, kind) => {
            let r = if req.per_k { throttle_with_table(rule, kind, g)? } else { throttle(rule, kind, g)? };
            let mut w = json!({ "set": r.witness, "pt": r.witness_pt });
            if let Some(table) = &r.per_k {
                w["per_k"] = serde_json::to_value(table)?;
            }
            if req.trace {
                w["trace"] = trace_json(rule, fx, &r.witness)?;
            }
            (format!("{}/{}", rule.name(), kind.name()), r.value, w)
        }
        Quantity::Parameter(Parameter::Gamma) => {
            let (gamma, d) = domination_number(g);
            (String::from("gamma"), gamma as u64, json!({ "set": d }))
        }
        Quantity::Parameter(Parameter::Rule(rule)) => {
            let (y, b) = parameter_number(rule, g);
            let mut w = json!({ "set": b });
            if req.trace {
                w["trace"] = trace_json(rule, fx, &b)?;
            }
            (rule.symbol().to_string(), y as u64, w)
        }
    };
    if let Value::Object(m) = &mut witness {
        if !fx.vertices.is_empty() {
            m.insert("vertex_names".into(), json!(fx.vertices));
        }
    }
    let expected = req.expect.unwrap_or(value);
    let record = Record::new(format!("{label} {}", fx.name), json!(expected), json!(value))
        .graph(to_graph6(g))
        .inputs(json!({ "graph": fx.name, "quantity": label, "order": g.order(), "size": g.size() }))
        .witness(witness);
    Ok(Report::new("compute", vec![record], start.elapsed().as_millis()))
}
