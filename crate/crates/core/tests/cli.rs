//! End-to-end runs of the `gmosaic` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn gmosaic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gmosaic"))
        .args(args)
        .output()
        .expect("spawn gmosaic")
}

fn stdout_of(args: &[&str]) -> String {
    let out = gmosaic(args);
    assert!(out.status.success(), "gmosaic {args:?} failed: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("gmosaic-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn count_prints_the_bare_number() {
    assert_eq!(stdout_of(&["count", "5", "5"]), "9899808106\n");
    assert_eq!(stdout_of(&["count", "1", "7"]), "1\n");
    assert_eq!(stdout_of(&["count", "2", "3"]), "5\n");

    let out = gmosaic(&["count", "3", "3"]);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.starts_with("# count 3 3: 71 via formula"), "stderr was {stderr:?}");
}

#[test]
fn count_json_has_the_exact_report_shape() {
    let raw = stdout_of(&["count", "6", "6", "--json"]);
    let report: serde_json::Value = raw.parse().unwrap();
    let obj = report.as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["backend", "cols", "count", "elapsed_ms", "method", "rows"]);
    assert_eq!(obj["rows"], 6);
    assert_eq!(obj["cols"], 6);
    assert_eq!(obj["count"], "21965008855047380");
    assert_eq!(obj["method"], "formula");
    assert_eq!(obj["backend"], "fixed128");
    assert!(obj["elapsed_ms"].as_f64().unwrap() >= 0.0);
}

#[test]
fn count_honors_the_backend_flag() {
    let raw = stdout_of(&["count", "3", "3", "--backend", "bignum", "--json"]);
    let report: serde_json::Value = raw.parse().unwrap();
    assert_eq!(report["count"], "71");
    assert_eq!(report["backend"], "bignum");

    let special = stdout_of(&["count", "1", "4", "--backend", "bignum", "--json"]);
    let report: serde_json::Value = special.parse().unwrap();
    assert_eq!(report["method"], "special-case");
}

#[test]
fn count_rejects_bad_grids() {
    let zero = gmosaic(&["count", "0", "5"]);
    assert_eq!(exit_code(&zero), 2);
    let stderr = String::from_utf8(zero.stderr).unwrap();
    assert!(stderr.contains("at least 1x1"), "stderr was {stderr:?}");

    let huge = gmosaic(&["count", "12", "12"]);
    assert_eq!(exit_code(&huge), 2);
    let stderr = String::from_utf8(huge.stderr).unwrap();
    assert!(stderr.contains("2^20 exceeds the limit 2^14"), "stderr was {stderr:?}");
}

#[test]
fn thread_count_does_not_change_the_answer() {
    let one = stdout_of(&["count", "6", "6", "--threads", "1"]);
    let two = stdout_of(&["count", "6", "6", "--threads", "2"]);
    assert_eq!(one, two);
    assert_eq!(one, "21965008855047380\n");

    let zero = gmosaic(&["count", "3", "3", "--threads", "0"]);
    assert_eq!(exit_code(&zero), 2);
}

#[test]
fn state_matrix_dumps_are_exact() {
    assert_eq!(stdout_of(&["matrix", "state", "O+", "1"]), "2\n1 1\n1 5\n");
    assert_eq!(stdout_of(&["matrix", "state", "X+", "0"]), "1\n1\n");
    assert_eq!(stdout_of(&["matrix", "state", "x-", "1"]), "2\n0 1\n1 1\n");
}

#[test]
fn magnified_dump_matches_on_stdout_and_file() {
    let expected = "4\n1 0 0 1\n0 1 1 1\n0 1 1 1\n1 1 1 5\n";
    assert_eq!(stdout_of(&["matrix", "magnified", "1", "1"]), expected);

    let path = std::env::temp_dir().join(format!("gmosaic-cli-{}-mag.txt", std::process::id()));
    let path_str = path.to_str().unwrap();
    let direct = stdout_of(&["matrix", "magnified", "1", "1", "--out", path_str]);
    assert_eq!(direct, "", "nothing on stdout when --out is given");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), expected);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn mosaic_validate_classifies_and_prints_boundaries() {
    let blank = temp_file("blank.mosaic", "1 1\n0\n");
    let out = stdout_of(&["mosaic", "validate", blank.to_str().unwrap()]);
    assert_eq!(out, "graph-mosaic\nleft: x\nright: x\ntop: x\nbottom: x\n");

    let line = temp_file("line.mosaic", "1 1\n5\n");
    let out = stdout_of(&["mosaic", "validate", line.to_str().unwrap()]);
    assert_eq!(out, "suitably-connected\nleft: o\nright: o\ntop: x\nbottom: x\n");

    let broken = temp_file("broken.mosaic", "2 1\n1\n0\n");
    let out = stdout_of(&["mosaic", "validate", broken.to_str().unwrap()]);
    assert!(out.starts_with("invalid\n"), "output was {out:?}");

    let junk = temp_file("junk.mosaic", "1 1\nZ\n");
    let out = gmosaic(&["mosaic", "validate", junk.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        stderr.contains("line 2, column 1") && stderr.contains("invalid tile digit 'Z'"),
        "stderr was {stderr:?}"
    );

    for path in [blank, line, broken, junk.clone()] {
        let _ = std::fs::remove_file(path);
    }
    let _ = std::fs::remove_file(junk);
}

#[test]
fn mosaic_render_draws_edge_marks() {
    let path = temp_file("render.mosaic", "1 1\n6\n");
    let out = stdout_of(&["mosaic", "render", path.to_str().unwrap()]);
    assert_eq!(out, " | \n | \n | \n");
    let _ = std::fs::remove_file(path);
}

#[test]
fn verify_reports_per_suite_and_catches_corruption() {
    let out = gmosaic(&["verify", "9"]);
    assert_eq!(exit_code(&out), 0);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let ok_lines = stdout.lines().filter(|l| l.ends_with("ok")).count();
    assert_eq!(ok_lines, 4, "stdout was {stdout:?}");
    for suite in ["state-matrices", "magnified", "graph-counts", "bridge-counts"] {
        assert!(stdout.contains(suite), "missing suite {suite}: {stdout:?}");
    }

    let out = gmosaic(&["verify", "9", "--corrupt-weights"]);
    assert_eq!(exit_code(&out), 1);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("MISMATCH at"), "stdout was {stdout:?}");
    assert!(stdout.contains("formula:"), "stdout was {stdout:?}");
    assert!(stdout.contains("oracle:"), "stdout was {stdout:?}");

    let over = gmosaic(&["verify", "25"]);
    assert_eq!(exit_code(&over), 2);
}
