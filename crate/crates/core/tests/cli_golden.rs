use std::io::Write;
use std::process::{Command, Stdio};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_with(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_knotinv"));
    cmd.args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env_remove("KNOT_GUARD_LIMIT")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_with(args, "", &[])
}

fn golden(args: &[&str], expected: &str) {
    let r = run(args);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    assert_eq!(r.stdout, expected, "{args:?}");
    assert_eq!(run(args).stdout, r.stdout, "{args:?} is not byte-stable");
}

#[test]
fn snf_text() {
    golden(
        &["snf", "fixtures/trefoil_coloring.json"],
        "diag: 1 3 0\nnormal: 3 0\ndeltas: 1 3 0\n",
    );
}

#[test]
fn snf_zero_matrix_from_stdin() {
    let zero = r#"{"rows": 3, "cols": 3, "entries": [["0","0","0"],["0","0","0"],["0","0","0"]]}"#;
    let r = run_with(&["snf", "-"], zero, &[]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("diag: 0 0 0\n"), "{}", r.stdout);
}

#[test]
fn snf_json() {
    golden(
        &["--format", "json", "snf", "fixtures/trefoil_coloring.json"],
        "{\n  \"deltas\": [\n    \"1\",\n    \"3\",\n    \"0\"\n  ],\n  \"diag\": [\n    \"1\",\n    \"3\",\n    \"0\"\n  ],\n  \"normal\": [\n    \"3\",\n    \"0\"\n  ]\n}\n",
    );
}

#[test]
fn snf_guard_note() {
    let r = run_with(
        &["snf", "fixtures/trefoil_coloring.json"],
        "",
        &[("KNOT_GUARD_LIMIT", "2")],
    );
    assert_eq!(r.code, 0);
    assert!(
        r.stdout
            .ends_with("deltas: skipped (size 3 exceeds minor guard 2)\n"),
        "{}",
        r.stdout
    );
}

#[test]
fn snf_large_fixture_skips_minors() {
    let r = run(&["snf", "fixtures/p5374_seifert.json"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("normal: 2\n"), "{}", r.stdout);
    assert!(r
        .stdout
        .contains("deltas: skipped (size 16 exceeds minor guard 8)"));
}

#[test]
fn malformed_json_is_a_usage_error() {
    let r = run_with(&["snf", "-"], "{\"rows\":", &[]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("error:"), "{}", r.stderr);
    assert!(r.stdout.is_empty());
}

#[test]
fn pretzel_outputs() {
    golden(&["pretzel", "P(1,1,1)", "--diagonal"], "1 3 0\n");
    golden(&["pretzel", "P(3,5,7)", "--diagonal"], "1 71 0\n");
    golden(&["pretzel", "P(5,3,7,4)", "--determinant"], "389\n");
    golden(
        &["pretzel", "P(1,1,1)", "--matrix"],
        "-1  2 -1\n-1 -1  2\n 2 -1 -1\n",
    );
    golden(
        &["--format", "json", "pretzel", "P(3,5,7)", "--diagonal"],
        "{\n  \"diagonal\": [\n    \"1\",\n    \"71\",\n    \"0\"\n  ],\n  \"spec\": \"P(3,5,7)\"\n}\n",
    );
}

#[test]
fn pretzel_diagram_matches_fixture() {
    let fixture = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/fixtures/trefoil.json"
    ))
    .unwrap();
    golden(&["pretzel", "P(1,1,1)", "--diagram"], &fixture);
}

#[test]
fn pretzel_needs_three_tassels() {
    let r = run(&["pretzel", "P(2)", "--diagonal"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("N >= 3"), "{}", r.stderr);
}

#[test]
fn coloring_outputs() {
    golden(
        &["colorings", "P(1,1,1)", "--mod", "3", "--brute"],
        "9 9 AGREE\n",
    );
    golden(&["colorings", "P(1,1,1)", "--mod", "5"], "5\n");
    golden(
        &["colorings", "fixtures/trefoil.json", "--mod", "6"],
        "18\n",
    );
    golden(
        &["colorings", "P(3,5,7)", "--mod", "12", "--brute"],
        "12 12 AGREE\n",
    );
    golden(
        &["--format", "json", "colorings", "P(1,1,1)", "--mod", "3"],
        "{\n  \"count\": \"9\",\n  \"modulus\": 3\n}\n",
    );
}

#[test]
fn coloring_errors() {
    assert_eq!(run(&["colorings", "P(1,1,1)", "--mod", "1"]).code, 2);
    let r = run_with(
        &["colorings", "P(3,5,7)", "--mod", "12", "--brute"],
        "",
        &[("KNOT_GUARD_LIMIT", "enumeration=100")],
    );
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("guard exceeded"), "{}", r.stderr);
}

#[test]
fn determinant_outputs() {
    golden(&["determinant", "fixtures/trefoil.json"], "3\n");
    golden(&["determinant", "P(5,3,7,4)"], "389\n");
}

#[test]
fn alexander_outputs() {
    golden(&["alexander", "Podd(0,0,0)"], "1 - t + t^2\n");
    golden(&["alexander", "Podd(1,1,1)"], "7 - 13*t + 7*t^2\n");
    golden(
        &["alexander", "Podd(1,2,3)", "--closed-form"],
        "18 - 35*t + 18*t^2\nclosed form: 18 - 35*t + 18*t^2\nclosed form check: AGREE\n",
    );
}

#[test]
fn strict_promotes_disagreement() {
    let args = ["alexander", "Podd(1,2,3,1,1)", "--closed-form", "--printed"];
    let lax = run(&args);
    assert_eq!(lax.code, 0);
    assert!(
        lax.stdout.ends_with("closed form check: DISAGREE\n"),
        "{}",
        lax.stdout
    );
    let mut strict = vec!["--strict"];
    strict.extend(args);
    assert_eq!(run(&strict).code, 1);
}

#[test]
fn reference_fixture_report() {
    let r = run(&[
        "--strict",
        "alexander",
        "Peven(2,1,3;2)",
        "--check-paper-fixture",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert!(lines[0].starts_with("2 + 192*t + 972*t^2 - 12289*t^3"));
    assert!(lines.contains(&"reference matrix: MATCH"));
    assert!(lines.contains(&"determinant routes: AGREE"));
    assert!(lines.contains(&"verdict: MATCH"));
    assert!(lines.contains(&"computed: Δ(1) = 1, Δ(-1) = 1712421"));
    assert!(lines.contains(&"coloring determinant: 389 (differs from |Δ(-1)|)"));
}

#[test]
fn diagram_surgery() {
    golden(
        &["diagram", "fixtures/trefoil.json", "--r1", "0"],
        "crossings: 4\ncomponents: 1\ndeterminant: 3\n{\"n\":4,\"crossings\":[{\"over\":2,\"under_in\":1,\"under_out\":0},{\"over\":0,\"under_in\":2,\"under_out\":1},{\"over\":1,\"under_in\":3,\"under_out\":2},{\"over\":3,\"under_in\":0,\"under_out\":3}]}\n",
    );
    let r = run(&[
        "diagram",
        "fixtures/trefoil.json",
        "--r2",
        "0,1",
        "--r1",
        "2",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(
        r.stdout
            .starts_with("crossings: 6\ncomponents: 1\ndeterminant: 3\n"),
        "{}",
        r.stdout
    );
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["snf", "no/such/file.json"]).code, 2);
    assert_eq!(run(&["pretzel", "P(1,1,1)"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}
