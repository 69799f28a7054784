use std::process::{Command, Output};

use serde_json::Value;
use throttle_core::enumerate::graphs_up_to_isomorphism;
use throttle_core::io::to_graph6;

fn throttle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_throttle")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = throttle(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    (out.status.code().unwrap(), serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}")))
}

fn computed(args: &[&str]) -> Value {
    let (code, report) = json(args);
    assert_eq!(code, 0, "{report}");
    report["records"][0]["computed"].clone()
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("throttle-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn compute_examples() {
    assert_eq!(computed(&["compute", "--rule", "pd", "--kind", "prodx", "--fixture", "family_6n7:K2"]), 6);
    let p8 = to_graph6(&throttle_core::families::path(8).unwrap());
    assert_eq!(computed(&["compute", "--rule", "zf", "--kind", "prodstar", "--graph6", &p8]), 4);
    assert_eq!(computed(&["compute", "--parameter", "gamma", "--fixture", "spider:2,2,1,1"]), 3);
}

#[test]
fn operations_apply_in_order() {
    let args = ["compute", "--rule", "psd", "--kind", "prodx", "--fixture", "fig3_H3", "--delete-edge", "e"];
    assert_eq!(computed(&args), 8);
    let args = ["compute", "--rule", "pd", "--kind", "prodstar", "--fixture", "fig4_twin", "--delete-vertex", "x"];
    assert_eq!(computed(&args), 2);
    // contracting then deleting the merged vertex differs from the reverse order
    let a = computed(&["compute", "--parameter", "Z", "--fixture", "P5", "--contract", "0,1", "--delete-vertex", "3"]);
    let b = computed(&["compute", "--parameter", "Z", "--fixture", "P5", "--delete-vertex", "3", "--contract", "0,1"]);
    assert_eq!((a, b), (Value::from(1), Value::from(2)));
    let sub = computed(&["compute", "--rule", "pd", "--kind", "prodx", "--fixture", "fig7_subdiv", "--subdivide", "e"]);
    assert_eq!(sub, 6);
}

#[test]
fn witnesses_tables_and_traces() {
    let (_, report) = json(&["compute", "--rule", "pd", "--kind", "sum", "--fixture", "P6", "--per-k", "--trace"]);
    let w = &report["records"][0]["witness"];
    assert_eq!(w["per_k"].as_array().unwrap().len(), 6);
    assert!(w["trace"].is_object());
    assert_eq!(report["schema_version"], 1);
}

#[test]
fn exit_codes() {
    let ok = throttle(&["compute", "--parameter", "Z", "--fixture", "P4", "--expect", "1"]);
    assert_eq!(ok.status.code(), Some(0));
    let wrong = throttle(&["compute", "--parameter", "Z", "--fixture", "P4", "--expect", "2"]);
    assert_eq!(wrong.status.code(), Some(1));
    let bad_graph = throttle(&["compute", "--parameter", "Z", "--graph6", "C"]);
    assert_eq!(bad_graph.status.code(), Some(2));
    let edgeless = throttle(&["compute", "--rule", "zf", "--kind", "prodstar", "--fixture", "E4"]);
    assert_eq!(edgeless.status.code(), Some(2));
    assert_eq!(throttle(&["compute", "--rule", "zf"]).status.code(), Some(2));
    assert_eq!(throttle(&["props", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(throttle(&["bogus"]).status.code(), Some(2));
}

#[test]
fn paper_suite_filters() {
    let (code, report) = json(&["paper-suite", "--filter", "figure=4"]);
    assert_eq!(code, 0);
    assert_eq!(report["summary"]["total"], 4);
    let (code, report) = json(&["paper-suite", "--filter", "theorem=3.10"]);
    assert_eq!(code, 0);
    let cases: Vec<&str> = report["records"].as_array().unwrap().iter().map(|r| r["case"].as_str().unwrap()).collect();
    assert!(cases.iter().any(|c| c.contains("k(G,1) >= n/2")));
    assert!(cases.iter().any(|c| c.contains("th*_Z(G) = k(G,1)")));
}

#[test]
fn full_paper_suite_passes() {
    let (code, report) = json(&["paper-suite"]);
    assert_eq!(code, 0, "{}", report["records"]);
    assert_eq!(report["summary"]["failed"], 0);
}

#[test]
fn props_reports() {
    let (code, report) = json(&["props", "--suite", "ore", "--nmax", "6"]);
    assert_eq!(code, 0);
    assert_eq!(report["records"].as_array().unwrap().len(), 6);
    let listing = String::from_utf8(throttle(&["props", "--list"]).stdout).unwrap();
    assert!(listing.contains("lemma3.1") && listing.contains("prop3.2"));
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let run = |workers: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_throttle"))
            .args(["props", "--suite", "prop3.12", "--nmax", "6", "--json"])
            .env("THROTTLE_WORKERS", workers)
            .output()
            .unwrap();
        let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
        v["wall_time_ms"] = Value::Null;
        v
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn ingest_graph6_and_edge_lists() {
    let connected6: String = graphs_up_to_isomorphism(6, true).unwrap().iter().map(|g| to_graph6(g) + "\n").collect();
    let path = temp_file("c6.g6", &connected6);
    let out = throttle(&["ingest", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 112);

    let path = temp_file("p3.txt", "3\n0 1\n1 2\n");
    let (code, rows) = json(&["ingest", path.to_str().unwrap(), "--format", "edgelist"]);
    assert_eq!(code, 0);
    assert_eq!(rows[0]["graph6"], to_graph6(&throttle_core::families::path(3).unwrap()));

    let path = temp_file("bad.g6", "D?~\n");
    let out = throttle(&["ingest", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("byte"));
}

#[test]
fn props_on_ingested_graphs() {
    let path = temp_file(
        "paths.g6",
        &(2..=7).map(|n| to_graph6(&throttle_core::families::path(n).unwrap()) + "\n").collect::<String>(),
    );
    let (code, report) = json(&["props", "--suite", "thm3.10", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["records"].as_array().unwrap().len(), 6);
}

#[test]
fn families_list() {
    let out = String::from_utf8(throttle(&["families", "list"]).stdout).unwrap();
    for name in ["fig4_twin", "fig2_spider_plus_e", "spider:"] {
        assert!(out.contains(name), "{name} missing");
    }
}
