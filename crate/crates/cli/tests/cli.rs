use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_compknot"));
    c.env_remove("COMPKNOT_FIXTURES");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

fn copy_fixtures(dst: &Path) {
    for knot in ["t3_2", "t4_3"] {
        std::fs::create_dir_all(dst.join(knot)).unwrap();
        for e in std::fs::read_dir(fixture_root().join(knot)).unwrap() {
            let e = e.unwrap();
            std::fs::copy(e.path(), dst.join(knot).join(e.file_name())).unwrap();
        }
    }
}

#[test]
fn compute_trefoil_fundamental() {
    let o = run(&["compute", "--knot", "3,2", "--color", "0|1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\t-1\t1\n1\t1\t1\n-1\t0\t2\n");
    let o = run(&["compute", "--knot", "3,2", "--weight", "w1", "--format", "text"]);
    assert_eq!(stdout(&o), "a*q^-1 + a*q - a^2\n");
}

#[test]
fn compute_unknot_is_one() {
    let o = run(&["compute", "--knot", "2,1", "--color", "1|1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\t0\t0\n");
}

#[test]
fn show_terms_rows() {
    let o = run(&["compute", "--knot", "3,2", "--color", "1|1", "--show-terms", "--format", "summary"]);
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().filter(|l| l.contains("\tc=")).collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[0], "1|1\tc=0\ttheta=a^-1\tdim=[N-1][N+1]");
    assert!(rows.contains(&"2|2\tc=1\ttheta=a^-2*q^-2\tdim=[N-1][N]^2[N+3]/[2]^2"));
    assert!(rows.contains(&"0|0\tc=1\ttheta=1\tdim=1"));
    assert!(out.contains("terms=16\n"));
}

#[test]
fn expand_rows() {
    let out = stdout(&run(&["expand", "--color", "0|1", "--r", "2"]));
    assert_eq!(out, "0|1,1 -1\n0|2 1\n");
    let out = stdout(&run(&["expand", "--color", "1|1", "--r", "2"]));
    assert!(out.lines().any(|l| l == "0|0 1"));
    let out = stdout(&run(&["expand", "--color", "0|2,1", "--r", "1"]));
    assert_eq!(out, "0|2,1 1\n");
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(run(&["compute", "--knot", "4,2", "--color", "0|1"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--knot", "3,2", "--color", "x|1"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "--weight", "3q", "--r", "2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn verify_connection_suite() {
    let o = run(&["verify", "--suite", "connection"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS connection/")).count(), 8);
    assert!(out.ends_with("summary pass=8 fail=0 skip=0 conjecture_fail=0\n"));
}

#[test]
fn verify_exceptional_suite() {
    let o = run(&["verify", "--suite", "exceptional"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for g in ["E8", "E7", "A2", "A1"] {
        assert!(out.contains(&format!("PASS exceptional/t3_2/{g}/")), "{g}");
    }
    for g in ["D4", "E6"] {
        assert!(out.contains(&format!("SKIP exceptional/t3_2/{g}/")), "{g}");
    }
}

#[test]
fn corrupted_fixture_fails_with_diff() {
    let dir = tempfile::tempdir().unwrap();
    copy_fixtures(dir.path());
    let p = dir.path().join("t3_2/w1,w1.poly");
    let text = std::fs::read_to_string(&p).unwrap();
    let (head, body) = text.split_at(text.find("\n1\t").unwrap() + 1);
    std::fs::write(&p, format!("{head}2{}", &body[1..])).unwrap();
    let o = bin()
        .args(["verify", "--suite", "connection"])
        .env("COMPKNOT_FIXTURES", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL integrity/t3_2/w1,w1.poly"));
    assert!(out.contains("FAIL connection/t3_2/w1,w1"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("diff: "));
}

#[test]
fn missing_fixture_strict_and_lenient() {
    let dir = tempfile::tempdir().unwrap();
    copy_fixtures(dir.path());
    std::fs::remove_file(dir.path().join("t3_2/jd-e8.poly")).unwrap();
    let d = dir.path().to_str().unwrap();
    let o = run(&["verify", "--suite", "exceptional", "--fixtures", d, "--strict"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "--suite", "exceptional", "--fixtures", d]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("SKIP exceptional/t3_2/E8/jd-e8"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "duality"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["compute", "--knot", "4,3", "--color", "1|1", "--unnormalized"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
