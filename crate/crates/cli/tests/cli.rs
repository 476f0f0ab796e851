use std::path::Path;
use std::process::{Command, Output};

fn committee(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_committee")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

const E1_PAV: &str = "pav 2 7 2\n3 3\n0 1\n1 2\n0\n";

#[test]
fn solve_yes_and_no() {
    let dir = tempfile::tempdir().unwrap();
    let yes = write(dir.path(), "yes.appr", E1_PAV);
    let o = committee(&["solve", &yes, "--witness"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("yes\n"));
    assert!(out.contains("algorithm pav-deg22"));
    assert!(out.contains("committee {0,1}"));

    let no = write(dir.path(), "no.appr", "mav 1 1 1\n3 3\n0 1\n1 2\n0\n");
    let o = committee(&["solve", &no, "--algo", "mav-tw"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("no\n"));
}

#[test]
fn every_solver_name_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "ccav.appr", "ccav 2 3 1\n3 3\n0 1\n1 2\n0\n");
    for algo in ["brute", "ccav-bb", "ccav-tw", "ccav-deg2", "auto"] {
        let o = committee(&["solve", &f, "--algo", algo]);
        assert_eq!(o.status.code(), Some(0), "{algo}");
    }
    let o = committee(&["solve", &f, "--algo", "pav-bb"]);
    assert_eq!(o.status.code(), Some(2));
    let o = committee(&["solve", &f, "--algo", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "big.appr", "ccav 10 1 1\n30 1\n0\n");
    let o = committee(&["solve", &f, "--algo", "brute"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn score_and_params() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "e1.appr", E1_PAV);
    let o = committee(&["score", &f, "--committee", "0,1"]);
    assert_eq!(stdout(&o).trim(), "7/2");
    let o = committee(&["score", &f, "--committee", "2", "--rule", "mav"]);
    assert_eq!(stdout(&o).trim(), "3");
    let o = committee(&["score", &f, "--committee", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = committee(&["params", &f]);
    assert_eq!(stdout(&o).trim(), "m=3 n=3 k=2 kbar=1 delta_v=2 delta_c=2 tw_upper=1 alpha=3");
}

#[test]
fn gen_is_deterministic() {
    let args =
        ["gen", "--m", "5", "--n", "4", "--max-dv", "2", "--seed", "1", "--rule", "ccav", "--k", "2", "--d", "3"];
    let a = committee(&args);
    let b = committee(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).starts_with("ccav 2 3 1\n5 4\n"));
    let o = committee(&["gen", "--m", "2", "--n", "3", "--max-dc", "1", "--min-vote", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reduce_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.gr", "p 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let out = dir.path().join("vc.appr");
    let o = committee(&["reduce", "--from", "vc", &k3, "--kappa", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(committee(&["solve", out.to_str().unwrap()]).status.code(), Some(0));

    let o = committee(&["reduce", "--from", "mvs", &k3, "--kappa", "1", "--ell", "0"]);
    assert!(stdout(&o).starts_with("pav 2 4 1\n"));
    let path = write(dir.path(), "path.gr", "p 3 2\ne 1 2\ne 2 3\n");
    let o = committee(&["reduce", "--from", "mvs", &path, "--kappa", "1"]);
    assert_eq!(o.status.code(), Some(2));

    let phs = write(dir.path(), "h.phs", "phs 1 2\n3 3\n0 1\n1 2\n0\n");
    let o = committee(&["reduce", "--from", "phs", &phs]);
    assert_eq!(stdout(&o), "ccav 1 2 1\n3 3\n0 1\n1 2\n0\n");
}

#[test]
fn verify_and_bench() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.appr", E1_PAV);
    write(dir.path(), "b.appr", "mav 1 2 1\n3 3\n0 1\n1 2\n0\n");
    let o = committee(&["verify", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2 instances, 0 disagreements"));

    let csv = dir.path().join("bench.csv");
    let o = committee(&["bench", dir.path().to_str().unwrap(), "--csv", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(csv).unwrap();
    assert!(text.starts_with("id,rule,m,n,k,"));
    assert!(text.lines().any(|l| l.starts_with("a.appr,pav,") && l.contains(",dispatch,yes,")));
}
