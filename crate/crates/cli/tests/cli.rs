use std::io::Write;
use std::process::{Command, Output};

fn divpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_divpoly")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn bfile(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

/// Drops the `elapsed=` field so runs can be compared byte for byte.
fn untimed(text: &str) -> String {
    text.lines()
        .map(|line| line.split(" elapsed=").next().unwrap())
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn compute_formats() {
    let out = divpoly(&["compute", "--family", "L", "--n", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "family L\nn 6\ncenter 5\ncoeffs [1,1,1,2,2,2,2,2,1,1,1]\n");

    let out = divpoly(&["compute", "--family", "P", "--n", "2", "--format", "csv"]);
    assert_eq!(stdout(&out), "-1,1\n0,1\n1,1\n");

    let out = divpoly(&["compute", "--family", "p", "--n", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["family"], "P");
    assert_eq!(doc["center"], 2);
    assert_eq!(doc["coeffs"].as_array().unwrap().len(), 5);
}

#[test]
fn eval_points() {
    let out = divpoly(&["eval", "--family", "L", "--n", "6", "--at", "-1"]);
    assert_eq!(stdout(&out), "0\n");
    let out = divpoly(&["eval", "--family", "L", "--n", "6", "--at", "1"]);
    assert_eq!(stdout(&out), "16\n");
    let out = divpoly(&["eval", "--family", "P", "--n", "2", "--at", "i"]);
    assert_eq!(stdout(&out), "a=0 b=1 order=4 norm_squared=1\n");
    let out = divpoly(&["eval", "--family", "P", "--n", "3", "--at", "zeta3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // 3 * 2Re P_3(zeta3) = r_{1,1,1}(3) = 6
    assert_eq!(doc["real_part_doubled"], 2);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["compute", "--family", "L", "--n", "0"][..],
        &["compute", "--family", "Q", "--n", "3"],
        &["eval", "--family", "L", "--n", "3", "--at", "zeta5"],
        &["verify", "--suite", "nope"],
        &["verify", "--suite", "lemmas", "--range", "5..2"],
        &["oeis-check", "--seq", "A002324", "--bfile", "/nonexistent/b.txt"],
    ] {
        let out = divpoly(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn verify_passes_and_is_worker_independent() {
    let one = divpoly(&["verify", "--suite", "theorem-main", "--range", "1..600"]);
    assert_eq!(one.status.code(), Some(0), "{}", stdout(&one));
    assert!(stdout(&one).lines().all(|l| l.starts_with("PASS ")));
    let four = divpoly(&["verify", "--suite", "theorem-main", "--range", "1..600", "--workers", "4"]);
    assert_eq!(untimed(&stdout(&one)), untimed(&stdout(&four)));

    let series = divpoly(&["verify", "--suite", "series", "--order", "12", "--format", "json"]);
    assert_eq!(series.status.code(), Some(0));
    for line in stdout(&series).lines() {
        let doc: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(doc["fail"], 0);
    }
}

#[test]
fn oeis_check_exit_codes() {
    let good = bfile("# A096936\n1 1\n2 0\n3 1\n4 3\n5 0\n6 0\n\n7 2\n");
    let out = divpoly(&["oeis-check", "--seq", "A096936", "--bfile", good.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let bad = bfile("1 1\n2 0\n3 1\n4 2\n5 0\n6 0\n");
    let out = divpoly(&["oeis-check", "--seq", "A096936", "--bfile", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("n=4 expected=2 actual=3"), "{}", stdout(&out));

    let empty = bfile("# nothing here\n");
    let out = divpoly(&["oeis-check", "--seq", "A002324", "--bfile", empty.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let malformed = bfile("1 1\n2 zero\n");
    let out = divpoly(&["oeis-check", "--seq", "A002324", "--bfile", malformed.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));
}
