use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use phasematch::io::parse_graph;
use phasematch::phase::PhaseTrace;
use serde_json::Value;
use tempfile::TempDir;

fn phasematch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phasematch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn p(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).display().to_string()
}

fn read_trace(path: &str) -> PhaseTrace {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn chain_gen_run_verify() {
    let dir = TempDir::new().unwrap();
    let (g, plan, trace) = (p(&dir, "g.txt"), p(&dir, "plan.json"), p(&dir, "t.json"));
    let meta = ok(&phasematch(&["gen", "--family", "chain", "--k", "6", "--out", &g, "--plan", &plan]));
    let meta: Value = serde_json::from_str(meta.trim()).unwrap();
    assert_eq!(meta["expected_phases"], 6);
    let summary = ok(&phasematch(&["run", &g, "--strategy", "scripted", "--plan", &plan, "--out", &trace]));
    assert!(summary.contains("phases=6"), "{summary}");
    let t = read_trace(&trace);
    assert!(t.phases[1..].iter().all(|ph| ph.paths.len() == 1));
    let report = ok(&phasematch(&["verify", &g, &trace]));
    assert!(report.starts_with("legal phases=6"), "{report}");

    let greedy = p(&dir, "greedy.json");
    let summary = ok(&phasematch(&["run", &g, "--out", &greedy]));
    assert!(summary.contains("bounds_ok=true"), "{summary}");
}

#[test]
fn corrupted_trace_is_named() {
    let dir = TempDir::new().unwrap();
    let (g, trace) = (p(&dir, "g.txt"), p(&dir, "t.json"));
    ok(&phasematch(&["gen", "--family", "pathlb", "--k", "3", "--out", &g]));
    ok(&phasematch(&["run", &g, "--out", &trace]));
    let mut t = read_trace(&trace);
    t.phases.last_mut().unwrap().paths[0].pop();
    fs::write(&trace, serde_json::to_string(&t).unwrap()).unwrap();
    let out = phasematch(&["verify", &g, &trace, "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["legal"], false);
    assert!(!v["report"]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn random_gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (p(&dir, "a.txt"), p(&dir, "b.txt"));
    ok(&phasematch(&["gen", "--family", "random", "--n", "12", "--seed", "7", "--out", &a]));
    ok(&phasematch(&["gen", "--family", "random", "--n", "12", "--seed", "7", "--out", &b]));
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn structured_meta_lists_modulator() {
    let dir = TempDir::new().unwrap();
    let g = p(&dir, "g.txt");
    let meta = ok(&phasematch(&[
        "gen", "--family", "structured", "--class", "cluster", "--k", "4", "--seed", "1", "--out", &g,
    ]));
    let meta: Value = serde_json::from_str(meta.trim()).unwrap();
    assert_eq!(meta["modulator"].as_array().unwrap().len(), 4);
    assert_eq!(meta["seed"], 1);
}

#[test]
fn greedy_matches_hopcroft_karp_on_bipartite() {
    let dir = TempDir::new().unwrap();
    for seed in ["1", "2", "3"] {
        let g = p(&dir, "g.txt");
        ok(&phasematch(&[
            "gen", "--family", "random", "--bipartite", "--n", "40", "--p", "0.1", "--seed", seed, "--out", &g,
        ]));
        let (t1, t2) = (p(&dir, "t1.json"), p(&dir, "t2.json"));
        ok(&phasematch(&["run", &g, "--out", &t1]));
        ok(&phasematch(&["run", &g, "--strategy", "hopcroft-karp", "--out", &t2]));
        assert_eq!(read_trace(&t1).final_size, read_trace(&t2).final_size);
        ok(&phasematch(&["verify", &g, &t2]));
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(phasematch(&["gen", "--family", "chain"]).status.code(), Some(2));
    assert_eq!(phasematch(&["gen", "--family", "nope"]).status.code(), Some(2));
    assert_eq!(phasematch(&["run", "/nonexistent/graph"]).status.code(), Some(2));
    assert_eq!(phasematch(&["bench", "everything"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let g = p(&dir, "g.txt");
    let out = phasematch(&["gen", "--family", "chain", "--k", "12", "--limit-n", "20", "--out", &g]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn illegal_plan_fails_run() {
    let dir = TempDir::new().unwrap();
    let (g, plan) = (p(&dir, "g.txt"), p(&dir, "plan.json"));
    ok(&phasematch(&["gen", "--family", "chain", "--k", "4", "--out", &g, "--plan", &plan]));
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&plan).unwrap()).unwrap();
    v["phases"].as_array_mut().unwrap().remove(1);
    fs::write(&plan, v.to_string()).unwrap();
    let out = phasematch(&["run", &g, "--strategy", "scripted", "--plan", &plan]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("plan rejected"));
}

#[test]
fn params_report_on_p4() {
    let dir = TempDir::new().unwrap();
    let g = p(&dir, "p4.txt");
    fs::write(&g, "p 4 3\ne 0 1\ne 1 2\ne 2 3\n").unwrap();
    let v: Value = serde_json::from_str(&ok(&phasematch(&["params", &g]))).unwrap();
    assert_eq!(v["nd"], 4);
    assert_eq!(v["alpha"], 2);
    assert_eq!(v["mw"], 4);
    assert_eq!(v["classes"]["is_cograph"], false);
    assert_eq!(v["distances"][1]["class"], "cograph");
    assert_eq!(v["distances"][1]["distance"], 1);
}

#[test]
fn replace_shortens_in_clique() {
    let dir = TempDir::new().unwrap();
    let (g, m, path) = (p(&dir, "g.txt"), p(&dir, "m.txt"), p(&dir, "path.txt"));
    let edges: String = (0..8)
        .flat_map(|u| (u + 1..8).map(move |v| format!("e {u} {v}\n")))
        .collect();
    fs::write(&g, format!("p 8 28\n{edges}")).unwrap();
    fs::write(&m, "e 1 2\ne 3 4\ne 5 6\n").unwrap();
    fs::write(&path, "0 1 2 3 4 5 6 7\n").unwrap();
    for method in ["splex:1", "nd", "modular", "independence:1"] {
        let out = ok(&phasematch(&["replace", &g, &m, &path, "--method", method, "--format", "json"]));
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["valid"], true, "{method}");
        assert!(v["length"].as_u64().unwrap() <= 7, "{method}");
    }
    let out = phasematch(&["replace", &g, &m, &path, "--method", "splex"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_small_suites() {
    let dir = TempDir::new().unwrap();
    let csv = p(&dir, "lb.csv");
    ok(&phasematch(&["bench", "lowerbounds", "--chain-max", "5", "--path-max", "4", "--cograph-max", "3", "--out", &csv]));
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("family,params,n,m,strategy,phases_observed,nu,bounds\n"));
    assert_eq!(text.lines().count(), 1 + 4 + 3 + 3);
    assert!(!text.contains("FAIL"));

    let out = ok(&phasematch(&["bench", "upperbounds", "--k", "16", "--runs", "2", "--format", "json"]));
    let rows: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 2 * 3);
    let out = ok(&phasematch(&["bench", "oracle-sweep", "--oracle-n", "5"]));
    assert_eq!(out.lines().count(), 6);
}

#[test]
fn gen_graph_parses_back() {
    let dir = TempDir::new().unwrap();
    let g = p(&dir, "g.txt");
    ok(&phasematch(&["gen", "--family", "cographlb", "--n", "9", "--out", &g]));
    let graph = parse_graph(&fs::read_to_string(Path::new(&g)).unwrap()).unwrap();
    assert_eq!(graph.n(), 14);
}
