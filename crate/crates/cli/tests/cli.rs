use std::process::{Command, Output};

use gbooks::graph::serialize_graph6;
use gbooks::ramsey::RamseyCertificate;
use gbooks::regularity::Partition;
use gbooks::Graph;
use serde_json::Value;

fn gbooks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gbooks"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn records(args: &[&str]) -> Vec<Value> {
    let mut full = args.to_vec();
    full.extend(["--format", "jsonl"]);
    let o = gbooks(&full);
    stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is a JSON record"))
        .collect()
}

#[test]
fn books_on_triangle() {
    let o = gbooks(&["books", "--graph", "Bw", "--r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("bs=1\n"));
    let rec = &records(&["books", "--graph", "Bw", "--r", "2"])[0];
    assert_eq!(rec["schema"], "gbooks.books/1");
    assert_eq!(rec["bs"], 1);
    assert_eq!(rec["base"], serde_json::json!([0, 1]));
    assert_eq!(rec["params"]["r"], 2);
}

#[test]
fn books_reads_a_file_of_graphs() {
    let dir = std::env::temp_dir().join(format!("gbooks-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graphs.g6");
    let k4 = serialize_graph6(&Graph::complete(4));
    std::fs::write(&path, format!("Bw\n\n{k4}\n")).unwrap();
    let recs = records(&["books", "--graph", path.to_str().unwrap(), "--r", "2"]);
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[1]["bs"], 2);
    assert_eq!(recs[1]["index"], 1);
}

#[test]
fn ramsey_summary_line() {
    let o = gbooks(&["ramsey", "--p", "2", "--q", "2", "--r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let k33 = serialize_graph6(&Graph::complete_multipartite(&[3, 3]));
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert_eq!(first, format!("value=7, formula=7, witness={k33}"));
}

#[test]
fn ramsey_certificate_round_trips() {
    let path = std::env::temp_dir().join(format!("gbooks-cert-{}.txt", std::process::id()));
    let o = gbooks(&[
        "ramsey",
        "--p",
        "2",
        "--q",
        "1",
        "--r",
        "2",
        "--certificate-out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let cert = RamseyCertificate::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(cert.value, 6);
    assert!(!cert.matches_formula());
    assert!(cert.check());
}

#[test]
fn ramsey_single_order_counterexample_exits_one() {
    let o = gbooks(&["ramsey", "--p", "2", "--q", "2", "--r", "2", "--order", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("arrows=false at n=6"));
}

#[test]
fn ramsey_cap_exits_two() {
    let o = gbooks(&["ramsey", "--p", "2", "--q", "2", "--r", "2", "--n-cap", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds 5"));
}

#[test]
fn constants_for_two() {
    let rec = &records(&["constants", "--p", "2"])[0];
    assert_eq!(rec["schema"], "gbooks.constants/1");
    assert_eq!(rec["upper_equals_20_pow_minus_3"], true);
    assert_eq!(rec["c_at_most_20_pow_minus_3"], true);
    assert!((rec["c"].as_f64().unwrap() - 8.1787e-5).abs() < 1e-9);
    assert_eq!(records(&["constants", "--p", "2", "--to", "5"]).len(), 4);
}

#[test]
fn half_split_pair_is_irregular() {
    let mut g = Graph::empty(16);
    for (u, v) in (0..4).flat_map(|u| (8..12).map(move |v| (u, v))) {
        g.add_edge(u, v);
    }
    for (u, v) in (4..8).flat_map(|u| (12..16).map(move |v| (u, v))) {
        g.add_edge(u, v);
    }
    let g6 = serialize_graph6(&g);
    let args = [
        "regularity",
        "--graph",
        &g6,
        "--a",
        "0,1,2,3,4,5,6,7",
        "--b",
        "8,9,10,11,12,13,14,15",
        "--epsilon",
        "0.3",
    ];
    let o = gbooks(&args);
    assert_eq!(o.status.code(), Some(1));
    let rec = &records(&args)[0];
    assert_eq!(rec["regular"], false);
    assert_eq!(rec["density"], "1/2");
    assert_eq!(rec["witness"]["density"], "1");
}

#[test]
fn partition_classification() {
    let g = Graph::complete_multipartite(&[4, 4, 4]);
    let path = std::env::temp_dir().join(format!("gbooks-part-{}.txt", std::process::id()));
    std::fs::write(&path, Partition::consecutive(12, 3, 4).unwrap().to_text()).unwrap();
    let g6 = serialize_graph6(&g);
    let rec = &records(&[
        "regularity",
        "--graph",
        &g6,
        "--partition",
        path.to_str().unwrap(),
        "--epsilon",
        "0.1",
        "--d",
        "0.3",
        "--delta",
        "0.4",
        "--c-pr",
        "0.1",
    ])[0];
    assert_eq!(rec["k"], 3);
    assert_eq!(rec["edge_counts"]["high"], 3);
    assert_eq!(rec["edge_counts"]["irregular"], 0);
    assert!(rec["book_bound_fraction"].is_number());
}

#[test]
fn witness_and_pigeonhole() {
    let rec = &records(&[
        "witness",
        "--p",
        "2",
        "--q",
        "3",
        "--r",
        "2",
        "--pigeonhole",
    ])[0];
    assert_eq!(rec["verified"], true);
    assert_eq!(rec["complement_bs"], 2);
    assert_eq!(rec["pigeonhole_result"]["kind"], "book");
    assert_eq!(rec["pigeonhole_result"]["floor"], 2);
    let o = gbooks(&[
        "witness", "--p", "2", "--q", "2", "--r", "2", "--graph", "Bw",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn lower_bound_reports_seed_and_stats() {
    let rec = &records(&[
        "lower-bound",
        "--m",
        "20",
        "--k",
        "1",
        "--r",
        "2",
        "--trials",
        "50",
        "--seed",
        "3",
    ])[0];
    assert_eq!(rec["c_times_big_c_pow_r"], "1/3");
    assert_eq!(rec["n"], 18);
    assert_eq!(rec["params"]["seed"], 3);
    assert_eq!(rec["trials"]["trials"], 50);
    let generated = &records(&[
        "lower-bound",
        "--m",
        "20",
        "--k",
        "1",
        "--r",
        "2",
        "--trials",
        "5",
    ])[0];
    assert_eq!(generated["params"]["seed_generated"], true);
    assert!(generated["params"]["seed"].is_u64());
}

#[test]
fn stability_on_boundary_graph() {
    let mut g = Graph::complete_multipartite(&[56, 56]);
    g.remove_edge(0, 56);
    let g6 = serialize_graph6(&g);
    let rec = &records(&[
        "stability",
        "--graph",
        &g6,
        "--p",
        "2",
        "--alpha",
        "1/12544",
    ])[0];
    assert_eq!(rec["hypothesis_met"], true);
    assert_eq!(rec["guarantees_hold"], true);
    assert_eq!(rec["params"]["alpha_exact"], "1/12544");
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(
        gbooks(&["books", "--graph", "Bw", "--r", "2", "--bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gbooks(&["books", "--graph", "B", "--r", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(gbooks(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        gbooks(&["books", "--graph", "Bw", "--r", "2", "--q", "0"])
            .status
            .code(),
        Some(2)
    );
}
