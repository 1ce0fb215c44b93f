use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use wfp_cli::{codefile, run, Outcome};
use wfp_core::codes::Code;

fn wfp(args: &[&str]) -> Outcome {
    run(std::iter::once("wfp").chain(args.iter().copied()))
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schema").join(format!("{name}.v1.json"));
    let text = std::fs::read_to_string(&path).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&value).unwrap()
}

fn assert_valid(name: &str, json: &str) {
    let value: Value = serde_json::from_str(json).unwrap();
    let s = schema(name);
    if let Err(errors) = s.validate(&value) {
        let msgs: Vec<String> = errors.map(|e| format!("{e} at {}", e.instance_path)).collect();
        panic!("{name}: {msgs:?}\n{json}");
    };
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const GOOD: &str = "3 2 4\n0 0 0\n0 1 1\n1 0 1\n1 1 0\n";
const BAD: &str = "2 2 3\n0 0\n0 1\n1 1\n";

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.txt", GOOD);
    let bad = write(dir.path(), "bad.txt", BAD);
    let broken = write(dir.path(), "broken.txt", "2 2 2\n0 0\n0 2\n");

    let o = wfp(&["verify", good.to_str().unwrap()]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "OK\n"));
    let o = wfp(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.starts_with("violation: X={1,3} frames word 2\n"), "{}", o.stdout);
    let o = wfp(&["verify", broken.to_str().unwrap()]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 3, column 3"), "{}", o.stderr);
    assert_eq!(wfp(&["verify", "/nonexistent/code.txt"]).code, 2);
    assert_eq!(wfp(&["verify", good.to_str().unwrap(), "--t", "3", "--method", "structural"]).code, 2);
    let o = wfp(&["verify", good.to_str().unwrap(), "--t", "1"]);
    assert_eq!(o.code, 0);
    assert!(o.stderr.starts_with("note:"));
}

#[test]
fn other_exit_codes() {
    assert_eq!(wfp(&["bounds", "--n-range", "0..3"]).code, 2);
    assert_eq!(wfp(&["bounds", "--n-range", "5..3"]).code, 2);
    assert_eq!(wfp(&["bounds", "--n-range", "1..65"]).code, 2);
    assert_eq!(wfp(&["search", "--n", "21", "--q", "2"]).code, 2);
    assert_eq!(wfp(&["search", "--n", "3", "--q", "2"]).code, 0);
    assert_eq!(wfp(&["search", "--n", "8", "--q", "2", "--budget", "1000"]).code, 3);
    assert_eq!(wfp(&["maxfam", "--n", "3"]).code, 0);
    assert_eq!(wfp(&["maxfam", "--n", "13"]).code, 2);
    assert_eq!(wfp(&["maxfam", "--n", "8", "--budget", "10"]).code, 3);
    assert_eq!(wfp(&["maxcode", "--n", "3", "--q", "2"]).code, 0);
    assert_eq!(wfp(&["maxcode", "--n", "5", "--q", "2", "--budget", "10"]).code, 3);
    assert_eq!(wfp(&["gen", "--n", "2", "--q", "2", "--m", "5"]).code, 2);
    assert_eq!(wfp(&["scd", "--n", "0"]).code, 2);
    assert_eq!(wfp(&["frobnicate"]).code, 2);
    assert_eq!(wfp(&["--help"]).code, 0);
    assert_eq!(wfp(&["--threads", "0", "bounds", "--n-range", "3"]).code, 2);
}

#[test]
fn binary_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", BAD);
    let out = Command::new(env!("CARGO_BIN_EXE_wfp")).arg("verify").arg(&bad).output().unwrap();
    let lib = wfp(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(lib.code));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);

    let out = Command::new(env!("CARGO_BIN_EXE_wfp")).args(["bounds", "--n-range", "7"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), wfp(&["bounds", "--n-range", "7"]).stdout);
}

#[test]
fn generated_and_found_codes_round_trip() {
    for (n, q, m, seed) in [(8, 4, 10, 1), (1, 2, 2, 0), (5, 3, 20, 7), (12, 2, 100, 3)] {
        let text = wfp(&["gen", "--n", &n.to_string(), "--q", &q.to_string(), "--m", &m.to_string(), "--seed", &seed.to_string()]).stdout;
        let code = codefile::parse(&text).unwrap();
        assert_eq!((code.n(), code.q(), code.len()), (n, q, m));
        assert_eq!(codefile::render(&code), text);
    }
    let o = wfp(&["search", "--n", "4", "--q", "3"]);
    let code = codefile::parse(&o.stdout).unwrap();
    assert_eq!(codefile::render(&code), o.stdout);
    assert_eq!(code.len(), 5);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("found.txt");
    let o = wfp(&["search", "--n", "4", "--q", "2", "--out", out.to_str().unwrap()]);
    assert_eq!((o.code, o.stdout.as_str()), (0, ""));
    let saved = codefile::parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(wfp(&["verify", out.to_str().unwrap()]).code, 0);
    assert_eq!(saved.len(), 5);
}

#[test]
fn gen_matches_golden() {
    let golden = "8 4 10\n2 0 3 0 2 1 3 3\n1 2 1 3 0 0 1 2\n3 3 3 0 0 0 1 3\n0 1 1 0 2 1 0 3\n\
                  0 3 1 2 0 0 1 1\n2 1 2 0 2 3 1 1\n1 2 0 3 0 0 1 2\n0 3 2 0 0 2 1 1\n3 1 1 1 0 1 2 2\n3 2 2 1 3 2 0 2\n";
    assert_eq!(wfp(&["gen", "--n", "8", "--q", "4", "--m", "10", "--seed", "1"]).stdout, golden);
    let c = codefile::parse(golden).unwrap();
    assert_eq!(c.word(0).unwrap(), [2, 0, 3, 0, 2, 1, 3, 3]);
}

#[test]
fn json_reports_match_schemas() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.txt", GOOD);
    let bad = write(dir.path(), "bad.txt", BAD);
    let wide = write(dir.path(), "wide.txt", &wfp(&["gen", "--n", "6", "--q", "3", "--m", "9", "--seed", "4"]).stdout);
    for p in [&good, &bad, &wide] {
        let p = p.to_str().unwrap();
        for method in ["direct", "structural", "both"] {
            assert_valid("verify", &wfp(&["verify", p, "--method", method, "--json"]).stdout);
        }
        assert_valid("verify", &wfp(&["verify", p, "--t", "3", "--method", "direct", "--json"]).stdout);
        assert_valid("analyze", &wfp(&["analyze", p, "--json"]).stdout);
    }
    assert_valid("bounds", &wfp(&["bounds", "--n-range", "1..64", "--format", "json"]).stdout);
    assert_valid("certificate", &wfp(&["maxfam", "--n", "4", "--json", "--timing"]).stdout);
    assert_valid("certificate", &wfp(&["maxfam", "--n", "8", "--budget", "5", "--json"]).stdout);
    assert_valid("certificate", &wfp(&["maxcode", "--n", "3", "--q", "3", "--json"]).stdout);
    assert_valid("certificate", &wfp(&["maxcode", "--n", "6", "--q", "2", "--budget", "1", "--json"]).stdout);
    assert_valid("search", &wfp(&["search", "--n", "3", "--q", "2", "--json", "--timing"]).stdout);
    assert_valid("search", &wfp(&["search", "--n", "9", "--q", "3", "--budget", "500", "--json"]).stdout);
}

#[test]
fn json_values() {
    let v: Value = serde_json::from_str(&wfp(&["bounds", "--n-range", "3", "--format", "json"]).stdout).unwrap();
    let p = &v["rows"][0]["panoui"];
    assert_eq!((p["applicable"].as_bool(), p["formula_value"].as_u64()), (Some(false), Some(2)));
    assert!(p["value"].is_null());

    let v: Value = serde_json::from_str(&wfp(&["maxcode", "--n", "3", "--q", "2", "--json"]).stdout).unwrap();
    assert_eq!(v["optimum"], 4);
    assert_eq!(v["witness"]["words"], serde_json::json!([[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]));
    assert!(v.get("elapsed_seconds").is_none());
}

#[test]
fn bounds_formats() {
    let t = wfp(&["bounds", "--n-range", "7..8"]).stdout;
    let rows: Vec<Vec<&str>> = t.lines().map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows[1], ["7", "36", "32", "28", "28", "improved-odd"]);
    assert_eq!(rows[2], ["8", "71", "57", "53", "53", "improved-even"]);
    let csv = wfp(&["bounds", "--n-range", "3", "--format", "csv"]).stdout;
    assert_eq!(csv.lines().nth(1), Some("3,4,2,false,2,false,4,stinson-wei"));
}

#[test]
fn search_output_is_reproducible() {
    let args = ["search", "--n", "7", "--q", "2", "--budget", "20000", "--seed", "11"];
    let first = wfp(&args);
    assert_eq!(first, wfp(&args));
    for threads in ["2", "4", "7"] {
        let mut with = vec!["--threads", threads];
        with.extend(args);
        assert_eq!(wfp(&with), first, "threads {threads}");
    }
    let json = ["search", "--n", "5", "--q", "3", "--budget", "3000", "--json"];
    assert_eq!(wfp(&json), wfp(&[&["--threads", "3"], &json[..]].concat()));
}

#[test]
fn oracle_output_is_thread_independent() {
    let args = ["maxcode", "--n", "4", "--q", "3", "--json"];
    let one = wfp(&args);
    assert_eq!(one.code, 0);
    assert_eq!(one, wfp(&[&["--threads", "4"], &args[..]].concat()));
    let capped = ["maxcode", "--n", "5", "--q", "2", "--budget", "300"];
    assert_eq!(wfp(&capped), wfp(&[&["--threads", "2"], &capped[..]].concat()));
}

#[test]
fn stdin_is_accepted() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_wfp"))
        .args(["verify", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(GOOD.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!((out.status.code(), out.stdout.as_slice()), (Some(0), b"OK\n".as_slice()));
}

#[test]
fn analyze_table() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.txt", GOOD);
    let o = wfp(&["analyze", good.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.lines().count(), 6);
    assert!(o.stdout.ends_with("d = 0\n"), "{}", o.stdout);
    let code = Code::from_digits(2, &["000", "011", "101", "110"]).unwrap();
    assert_eq!(codefile::parse(GOOD).unwrap(), code);
}

#[test]
fn scd_lists_chains() {
    let o = wfp(&["scd", "--n", "4"]);
    assert_eq!(o.stdout.lines().count(), 6);
    assert_eq!(o.stdout.lines().next(), Some("∅ {1} {1,2} {1,2,3} {1,2,3,4}"));
}
