//! Report schema shared by every subcommand.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub case: String,
    /// graph6 encoding of the graph the record is about, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    pub inputs: Value,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Record {
    /// A record passes exactly when `computed == expected`.
    pub fn new(case: impl Into<String>, expected: Value, computed: Value) -> Self {
        let pass = expected == computed;
        Self { case: case.into(), graph: None, inputs: Value::Null, expected, computed, pass, witness: None }
    }

    pub fn graph(mut self, graph6: String) -> Self {
        self.graph = Some(graph6);
        self
    }

    pub fn inputs(mut self, inputs: Value) -> Self {
        self.inputs = inputs;
        self
    }

    pub fn witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub suite: String,
    pub tool_version: &'static str,
    pub records: Vec<Record>,
    pub summary: Summary,
    pub wall_time_ms: u128,
}

impl Report {
    pub fn new(suite: impl Into<String>, records: Vec<Record>, wall_time_ms: u128) -> Self {
        let passed = records.iter().filter(|r| r.pass).count();
        let summary = Summary { total: records.len(), passed, failed: records.len() - passed };
        Self {
            schema_version: SCHEMA_VERSION,
            suite: suite.into(),
            tool_version: env!("CARGO_PKG_VERSION"),
            records,
            summary,
            wall_time_ms,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    /// Plain-text table, one line per record.
    pub fn to_table(&self) -> String {
        let show = |v: &Value| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let rows: Vec<[String; 4]> = self
            .records
            .iter()
            .map(|r| {
                let status = if r.pass { "ok" } else { "FAIL" };
                [status.to_string(), r.case.clone(), show(&r.expected), show(&r.computed)]
            })
            .collect();
        let header = ["", "case", "expected", "computed"].map(String::from);
        let mut widths = header.clone().map(|h| h.chars().count());
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&header).chain(&rows) {
            let line: Vec<String> = row.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        let s = self.summary;
        let _ = writeln!(
            out,
            "{}: {} passed, {} failed, {} total ({} ms)",
            self.suite, s.passed, s.failed, s.total, self.wall_time_ms
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn summary_matches_records() {
        let r =
            Report::new("demo", vec![Record::new("a", json!(1), json!(1)), Record::new("b", json!(2), json!(3))], 0);
        assert_eq!(r.summary, Summary { total: 2, passed: 1, failed: 1 });
        assert!(!r.all_passed());
        assert_eq!(r.failures().count(), 1);
        let table = r.to_table();
        assert!(table.contains("FAIL  b"));
        let parsed: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(parsed["summary"]["failed"], 1);
        assert_eq!(parsed["schema_version"], SCHEMA_VERSION);
    }

    #[test]
    fn infinity_and_integers_never_compare_equal() {
        assert!(!Record::new("x", json!("infinity"), json!(3)).pass);
        assert!(Record::new("x", json!("infinity"), json!("infinity")).pass);
    }
}
