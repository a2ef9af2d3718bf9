use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const SAMPLE: &str = "bbabaababababaababa\n";

fn strq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strq")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    let prefix = format!("{key}: ");
    out.lines().find_map(|l| l.strip_prefix(prefix.as_str())).unwrap_or_else(|| panic!("no {key} in\n{out}"))
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

fn fixture() -> (TempDir, String) {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "sample.txt", SAMPLE);
    (dir, p)
}

#[test]
fn arrays_reproduce_sample_rows() {
    let (_d, p) = fixture();
    let o = strq(&["arrays", "--input", &p]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "schema"), "strq/1");
    assert_eq!(field(&out, "sa"), "19 14 5 17 12 3 15 10 8 6 18 13 4 16 11 2 9 7 1");
    assert_eq!(field(&out, "bwt"), "bbbbbbabbaaaaaabaaa");
    assert_eq!(field(&out, "phi"), "7 11 12 13 14 8 9 10 2 15 16 17 18 19 3 4 5 6 1");
    assert_eq!(field(&out, "plcp"), "1 9 8 7 6 7 6 5 4 5 4 3 2 1 3 2 1 0 0");
    assert_eq!(out.lines().count(), 12);
}

#[test]
fn measures_report_z_and_r() {
    let (_d, p) = fixture();
    let out = stdout(&strq(&["measures", "--input", &p]));
    assert_eq!(field(&out, "z"), "7");
    assert_eq!(field(&out, "r"), "6");
    assert_eq!(field(&out, "lz77"), "(b,0) (1,1) (a,0) (2,2) (3,3) (7,6) (10,5)");
    assert_eq!(field(&out, "sigma"), "2");
}

#[test]
fn json_output_is_one_document() {
    let (_d, p) = fixture();
    let out = stdout(&strq(&["measures", "--input", &p, "--output", "json"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["z"], 7);
    assert_eq!(v["schema"], "strq/1");
}

#[test]
fn ilf_queries_from_file() {
    let (d, p) = fixture();
    let q = write(&d, "q.txt", "2 1\n19");
    for pred in ["yfast", "binary", "small"] {
        let o = strq(&["ilf", "--input", &p, "--queries", &q, "--pred", pred]);
        assert!(o.status.success());
        let out = stdout(&o);
        assert_eq!(field(&out, "answers"), "7 19 16");
        assert_eq!(field(&out, "mismatches"), "0");
    }
    let bad = write(&d, "bad.txt", "0");
    assert_eq!(strq(&["ilf", "--input", &p, "--queries", &bad]).status.code(), Some(2));
}

#[test]
fn lcp_rmq_and_lce() {
    let (d, p) = fixture();
    let q = write(&d, "r.txt", "1 19\n");
    let out = stdout(&strq(&["lcp-rmq", "--input", &p, "--queries", &q]));
    assert_eq!(field(&out, "answers"), "11");
    let q = write(&d, "l.txt", "3 12 4 4");
    let out = stdout(&strq(&["lce", "--input", &p, "--queries", &q]));
    assert_eq!(field(&out, "answers"), "8 16");
    let o = strq(&["lcp-rmq", "--input", &p, "--bench", "--reps", "1", "--random", "20"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("ns_per_query: "));
    assert_eq!(strq(&["lce", "--input", &p, "--epsilon", "1.5"]).status.code(), Some(2));
}

#[test]
fn integer_input() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "t.txt", "1 1 0 1 0 0 1 0 1 0 1 0 1 0 0 1 0 1 0");
    let out = stdout(&strq(&["arrays", "--input", &p, "--format", "ints"]));
    assert_eq!(field(&out, "bwt"), "1 1 1 1 1 1 0 1 1 0 0 0 0 0 0 1 0 0 0");
    let bad = write(&dir, "bad.txt", "1 two");
    assert_eq!(strq(&["measures", "--input", &bad, "--format", "ints"]).status.code(), Some(2));
}

#[test]
fn gadget_verify_exit_codes() {
    let o = strq(&["gadget-verify", "--kind", "lcp-select", "--size", "5", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "mismatches"), "0");
    assert_eq!(field(&out, "instances"), "120");
    assert_eq!(strq(&["gadget-verify", "--kind", "lcp-select", "--size", "5"]).status.code(), Some(2));
    assert_eq!(
        strq(&["gadget-verify", "--kind", "bwt-color", "--size", "2", "--exhaustive", "--trials", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(strq(&["gadget-verify", "--kind", "plcp", "--size", "2", "--exhaustive"]).status.code(), Some(2));
    assert_eq!(strq(&["gadget-verify", "--kind", "isa-count", "--size", "0", "--exhaustive"]).status.code(), Some(2));
}

#[test]
fn seeded_runs_are_byte_identical_across_workers() {
    let run = |workers: &str| {
        let o = strq(&[
            "gadget-verify",
            "--kind",
            "bwt-color",
            "--size",
            "9",
            "--trials",
            "40",
            "--seed",
            "11",
            "--workers",
            workers,
            "--output",
            "json",
        ]);
        assert!(o.status.success());
        o.stdout
    };
    let one = run("1");
    assert_eq!(one, run("1"));
    assert_eq!(one, run("3"));
}

#[test]
fn missing_file_is_a_usage_error() {
    let o = strq(&["arrays", "--input", "/nonexistent/strq-input"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot read"));
    assert!(!Path::new("/nonexistent/strq-input").exists());
}

#[test]
fn help_lists_every_subcommand() {
    let out = stdout(&strq(&["--help"]));
    for sub in ["arrays", "measures", "ilf", "ilf-bench", "lcp-rmq", "lce", "gadget-verify"] {
        assert!(out.contains(sub), "{sub} missing from help");
    }
}
