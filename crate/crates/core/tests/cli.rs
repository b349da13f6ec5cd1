use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_odd-graceful");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn generate_matches_golden_files() {
    for (format, file) in [
        ("json", "c4_p3.json"),
        ("dot", "c4_p3.dot"),
        ("csv", "c4_p3.csv"),
    ] {
        for method in ["closed", "algorithmic"] {
            let o = run(&[
                "generate", "--spec", "C4+P3", "--method", method, "--format", format,
            ]);
            assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
            assert_eq!(stdout(&o), golden(file), "{method} {format}");
        }
    }
}

#[test]
fn generate_json_edge_labels() {
    let o = run(&["generate", "--spec", "C4+P3"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["q"], 6);
    let mut labels: Vec<u64> = doc["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["label"].as_u64().unwrap())
        .collect();
    labels.sort_unstable();
    assert_eq!(labels, [1, 3, 5, 7, 9, 11]);
}

#[test]
fn generate_is_byte_stable() {
    let a = run(&["generate", "--spec", "C8+P12", "--format", "dot"]);
    let b = run(&["generate", "--spec", "C8+P12", "--format", "dot"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn generate_rejects_short_path() {
    let o = run(&["generate", "--spec", "C10+P6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("need n >= 7"));
}

#[test]
fn forced_generate_pipes_into_verify() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("c10_p6.json");
    let o = run(&[
        "generate",
        "--spec",
        "C10+P6",
        "--force",
        "--out",
        doc.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v = run(&["verify", "--input", doc.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).contains("DuplicateVertexLabel: 8 on u9, v6"));

    let v = run(&["verify", "--input", doc.to_str().unwrap(), "--json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&v)).unwrap();
    assert_eq!(report["is_odd_graceful"], false);
    assert_eq!(report["violations"][0]["kind"], "DuplicateVertexLabel");
    assert_eq!(report["violations"][0]["label"], 8);
}

#[test]
fn verify_round_trip_sweep() {
    let dir = tempfile::tempdir().unwrap();
    for (m, n) in [(4, 3), (6, 3), (8, 7), (10, 7), (12, 20), (14, 11)] {
        let doc = dir.path().join(format!("c{m}_p{n}.json"));
        let spec = format!("C{m}+P{n}");
        let o = run(&[
            "generate",
            "--spec",
            &spec,
            "--method",
            "algorithmic",
            "--out",
            doc.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        let v = run(&["verify", "--input", doc.to_str().unwrap()]);
        assert_eq!(v.status.code(), Some(0), "{spec}: {}", stdout(&v));
    }
}

#[test]
fn verify_flags_shared_vertex_label() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("dup.json");
    // u3 takes v2's label 4; edge labels restated to match.
    let text = golden("c4_p3.json")
        .replacen(
            "\"id\": \"u3\",\n      \"label\": 2",
            "\"id\": \"u3\",\n      \"label\": 4",
            1,
        )
        .replacen(
            "\"to\": \"u3\",\n      \"label\": 9",
            "\"to\": \"u3\",\n      \"label\": 7",
            1,
        )
        .replacen(
            "\"to\": \"u4\",\n      \"label\": 5",
            "\"to\": \"u4\",\n      \"label\": 3",
            1,
        );
    std::fs::write(&doc, text).unwrap();
    let v = run(&["verify", "--input", doc.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(1), "{}", stderr(&v));
    assert!(
        stdout(&v).contains("DuplicateVertexLabel: 4 on u3, v2"),
        "{}",
        stdout(&v)
    );
}

#[test]
fn verify_reports_malformed_json() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("cut.json");
    let full = golden("c4_p3.json");
    std::fs::write(&doc, &full[..full.len() / 3]).unwrap();
    let v = run(&["verify", "--input", doc.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(64));
    assert!(
        stderr(&v).contains("malformed JSON at line"),
        "{}",
        stderr(&v)
    );
}

#[test]
fn search_statuses() {
    let o = run(&["search", "--spec", "C3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("status: ExhaustedNone\n"));

    let dir = tempfile::tempdir().unwrap();
    for spec in ["C4", "C4+P3"] {
        let cert = dir.path().join("cert.json");
        let o = run(&["search", "--spec", spec, "--out", cert.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{spec}");
        assert!(stdout(&o).starts_with("status: Found\n"));
        let v = run(&["verify", "--input", cert.to_str().unwrap()]);
        assert_eq!(v.status.code(), Some(0), "{spec}: {}", stdout(&v));
    }

    let o = run(&["search", "--spec", "C7", "--max-nodes", "5"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn search_edge_file() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("tri.edges");
    std::fs::write(&edges, "# triangle\n1 2\n2 3\n3 1\n").unwrap();
    let o = run(&["search", "--edges", edges.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    std::fs::write(&edges, "1 2\n2 3\n3 4\n4 1\n").unwrap();
    let spec = format!("@{}", edges.display());
    let o = run(&["search", "--spec", &spec]);
    assert_eq!(o.status.code(), Some(0));

    std::fs::write(&edges, "1 2\nbad\n").unwrap();
    let o = run(&["search", "--edges", edges.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(64));
    assert!(stderr(&o).contains(":2:"), "{}", stderr(&o));
}

#[test]
fn bench_output_shape() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bench.csv");
    let o = run(&[
        "bench",
        "--q-list",
        "14,140,1400",
        "--reps",
        "2",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rows = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(rows.lines().next(), Some("q,method,nanoseconds"));
    assert_eq!(rows.lines().count(), 1 + 3 * 2 * 2);
    assert!(stdout(&o).contains("# closed: log-log slope"));
    assert!(stdout(&o).contains("# algorithmic: log-log slope"));
}

#[test]
fn bench_rejects_bad_input() {
    assert_eq!(run(&["bench", "--reps", "0"]).status.code(), Some(64));
    let o = run(&["bench", "--q-list", "5"]);
    assert_eq!(o.status.code(), Some(64));
    assert!(stderr(&o).contains("q >= 14"));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["generate"]).status.code(), Some(64));
    assert_eq!(run(&["generate", "--spec", "C4+"]).status.code(), Some(64));
    assert_eq!(
        run(&["generate", "--spec", "C4+C4"]).status.code(),
        Some(64)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
