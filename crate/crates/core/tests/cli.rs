use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use latticekit::io::Document;
use latticekit::iso::is_isomorphic;
use latticekit::{Lattice, Poset};
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_latticekit"));
    c.env_remove("LATTICEKIT_CAP");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn file(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn json_of(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn poset_of(v: &Value) -> Poset {
    let n = v["n"].as_u64().unwrap() as usize;
    let covers: Vec<(usize, usize)> = v["covers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c[0].as_u64().unwrap() as usize, c[1].as_u64().unwrap() as usize))
        .collect();
    Poset::from_covers(n, &covers).unwrap()
}

fn diagnostic(out: &Output) -> Value {
    serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap()
}

#[test]
fn coalition_of_chains() {
    let dir = tempfile::tempdir().unwrap();
    for (n, size) in [(1usize, 2usize), (2, 4)] {
        let out = dir.path().join(format!("c{n}.json"));
        let dot = dir.path().join(format!("c{n}.dot"));
        let res = run(&["coalition", "--chain", &n.to_string(), "--out", out.to_str().unwrap(), "--dot", dot.to_str().unwrap()]);
        assert!(res.status.success(), "{res:?}");
        let v = json_of(&out);
        assert_eq!(v["kind"], "lattice");
        let p = poset_of(&v);
        assert_eq!(p.len(), size);
        assert!(p.is_chain());
        assert!(std::fs::read_to_string(&dot).unwrap().contains("rank=same"));
    }
    let res = run(&["coalition", "--chain", "2"]);
    let v: Value = serde_json::from_slice(&res.stdout).unwrap();
    assert_eq!(v["names"], serde_json::json!(["{}", "{0}", "{1}", "{0,1}"]));
}

#[test]
fn coalition_of_non_upper_bound_free_poset() {
    let dir = tempfile::tempdir().unwrap();
    let lambda = file(dir.path(), "lambda.json", r#"{"kind":"poset","n":3,"covers":[[0,2],[1,2]],"names":["a","b","t"]}"#);
    let out = dir.path().join("out.json");
    let res = run(&["coalition", "--poset", lambda.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(res.status.success());
    let v = json_of(&out);
    assert_eq!(v["kind"], "poset");
    assert_eq!(v["is_lattice"], false);
    assert!(v.get("meet").is_none());
}

#[test]
fn size_cap_from_environment() {
    let res = bin().args(["coalition", "--chain", "3"]).env("LATTICEKIT_CAP", "2").output().unwrap();
    assert_eq!(res.status.code(), Some(2));
    let d = diagnostic(&res);
    assert_eq!(d["error"], "size_cap");
    assert_eq!(d["exit_code"], 2);
}

#[test]
fn double_commands() {
    let dir = tempfile::tempdir().unwrap();
    let chain = file(dir.path(), "c2.json", r#"{"kind":"lattice","n":2,"covers":[[0,1]]}"#);
    let eq = file(dir.path(), "eq.json", r#"{"kind":"tolerance","pairs":[]}"#);
    let full = file(dir.path(), "full.json", r#"{"pt_edges":[[0,1]]}"#);
    let out = dir.path().join("d.json");
    let o = out.to_str().unwrap();

    let res = run(&["double", "--lattice", chain.to_str().unwrap(), "--tolerance", eq.to_str().unwrap(), "--out", o]);
    assert!(res.status.success(), "{res:?}");
    let grid = Lattice::chain(2).product(&Lattice::chain(2));
    let v = json_of(&out);
    assert!(is_isomorphic(&poset_of(&v), grid.poset()));
    assert_eq!(v["names"], serde_json::json!(["(0,0)", "(0,1)", "(1,0)", "(1,1)"]));

    for method in ["closure", "covers", "both"] {
        let res = run(&[
            "double", "--lattice", chain.to_str().unwrap(), "--tolerance", full.to_str().unwrap(), "--method", method, "--out", o,
        ]);
        assert!(res.status.success());
        assert!(poset_of(&json_of(&out)).is_chain());
    }

    let n5 = file(dir.path(), "n5.json", r#"{"n":5,"covers":[[0,1],[1,2],[2,4],[0,3],[3,4]]}"#);
    let res = run(&["double", "--lattice", n5.to_str().unwrap(), "--tolerance", eq.to_str().unwrap()]);
    assert_eq!(res.status.code(), Some(3));
    assert_eq!(diagnostic(&res)["error"], "host_not_modular");

    let c3 = file(dir.path(), "c3.json", r#"{"n":3,"covers":[[0,1],[1,2]]}"#);
    let wide = file(dir.path(), "wide.json", r#"{"pairs":[[0,1],[1,2],[0,2]]}"#);
    let res = run(&["double", "--lattice", c3.to_str().unwrap(), "--tolerance", wide.to_str().unwrap()]);
    assert_eq!(res.status.code(), Some(3));
    assert_eq!(diagnostic(&res)["error"], "not_doubling");
}

#[test]
fn validation_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = file(dir.path(), "bad.json", r#"{"n":3,"covers":[[0,1],[1,2],[0,2]]}"#);
    let res = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(res.status.code(), Some(2));
    assert_eq!(diagnostic(&res)["error"], "not_a_cover");

    let res = run(&["check", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(res.status.code(), Some(5));
    assert_eq!(diagnostic(&res)["error"], "io");

    let junk = file(dir.path(), "junk.json", "not json");
    let res = run(&["export-dot", junk.to_str().unwrap()]);
    assert_eq!(res.status.code(), Some(2));
    assert_eq!(diagnostic(&res)["error"], "parse");
}

#[test]
fn check_reports_properties() {
    let dir = tempfile::tempdir().unwrap();
    let m3 = file(dir.path(), "m3.json", r#"{"n":5,"covers":[[0,1],[0,2],[0,3],[1,4],[2,4],[3,4]]}"#);
    let res = run(&["check", m3.to_str().unwrap()]);
    assert!(res.status.success());
    let v: Value = serde_json::from_slice(&res.stdout).unwrap();
    assert_eq!(v["modular"], true);
    assert_eq!(v["distributive"], false);
    assert_eq!(v["shapes_agree"], true);

    let c3 = file(dir.path(), "c3.json", r#"{"n":3,"covers":[[0,1],[1,2]]}"#);
    let t = file(dir.path(), "t.json", r#"{"pairs":[[0,1],[1,2]]}"#);
    let res = run(&["check", c3.to_str().unwrap(), "--tolerance", t.to_str().unwrap()]);
    let v: Value = serde_json::from_slice(&res.stdout).unwrap();
    assert_eq!(v["tolerance"]["blocks"], serde_json::json!([[0, 1], [1, 2]]));
    assert_eq!(v["tolerance"]["congruence"], false);
    assert_eq!(v["tolerance"]["doubling"], true);

    let t = file(dir.path(), "t2.json", r#"{"pairs":[[0,1]]}"#);
    let res = run(&["check", m3.to_str().unwrap(), "--tolerance", t.to_str().unwrap()]);
    assert_eq!(res.status.code(), Some(2));
    assert_eq!(diagnostic(&res)["error"], "not_compatible");
}

#[test]
fn export_dot() {
    let dir = tempfile::tempdir().unwrap();
    let grid = file(dir.path(), "g.json", r#"{"n":4,"covers":[[0,1],[0,2],[1,3],[2,3]],"names":["0","a","b","1"]}"#);
    let res = run(&["export-dot", grid.to_str().unwrap()]);
    assert!(res.status.success());
    let text = String::from_utf8(res.stdout).unwrap();
    assert_eq!(text.matches("rank=same").count(), 3);
    assert!(text.contains("label=\"a\""));
}

#[test]
fn verify_suites() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let res = run(&["verify", "--suite", "coalition", "--max-chain", "5", "--out", out.to_str().unwrap()]);
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stdout));
    let stdout = String::from_utf8(res.stdout).unwrap();
    assert_eq!(stdout.lines().count(), 4);
    assert!(stdout.lines().all(|l| l.starts_with("PASS")));
    let doc = Document::parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let Document::Report(report) = doc else { panic!("expected a report") };
    assert!(report.passed());

    let res = run(&["verify", "--suite", "jakubik"]);
    assert!(res.status.success());

    let start = std::time::Instant::now();
    let a = run(&["verify", "--suite", "all", "--max-chain", "2", "--seed", "9"]);
    assert!(a.status.success());
    assert!(start.elapsed().as_secs() < 30);
    let b = run(&["verify", "--suite", "all", "--max-chain", "2", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
}
