//! The `svdyn` binary end to end: files, reports and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use svdyn::format::parse;

fn svdyn(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_svdyn"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Scratch {
        let dir = std::env::temp_dir().join(format!("svdyn-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn path(&self, name: &str) -> String {
        self.0.join(name).display().to_string()
    }

    fn corpus(&self, name: &str) -> String {
        let out = self.path(&format!("{name}.plrel"));
        assert_eq!(svdyn(&["corpus", name, "-o", &out], &[]).status.code(), Some(0));
        out
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

#[test]
fn check_asserts_set_the_exit_code() {
    let s = Scratch::new("check");
    let ex = s.corpus("ex2_11");
    let o = svdyn(&["check", &ex, "--assert", "weak_ivp"], &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness.weak_ivp: {\"x1\":\"1/2\",\"x2\":\"1/4\",\"y1\":\"0/1\"}"));
    let tent = s.corpus("tent");
    assert_eq!(svdyn(&["check", &tent, "--assert", "ivp", "--assert", "light"], &[]).status.code(), Some(0));
}

#[test]
fn reports_are_reproducible() {
    let s = Scratch::new("repro");
    let ex = s.corpus("ex2_15");
    let a = svdyn(&["check", &ex, "--json"], &[]);
    let b = svdyn(&["check", &ex, "--json"], &[]);
    assert_eq!(a.stdout, b.stdout);
    let json: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(json["results"]["light"], serde_json::Value::Bool(false));
    assert_eq!(json["input"]["sha256"].as_str().unwrap().len(), 64);
    assert!(json.get("timing_ms").is_none());
    let timed: serde_json::Value = serde_json::from_slice(&svdyn(&["check", &ex, "--json", "--timing"], &[]).stdout).unwrap();
    assert!(timed.get("timing_ms").is_some());
}

#[test]
fn parse_errors_name_the_line() {
    let s = Scratch::new("parse");
    let bad = s.path("bad.plrel");
    std::fs::write(&bad, "plrel v1\nseg 0 0 1/2 1\nrect 0 0 3/2 1\n").unwrap();
    let o = svdyn(&["check", &bad], &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(svdyn(&["cycle"], &[]).status.code(), Some(2));
    assert_eq!(svdyn(&["corpus", "nonesuch", "-o", "/dev/null"], &[]).status.code(), Some(2));
    assert_eq!(svdyn(&["--version"], &[]).status.code(), Some(0));
    assert_eq!(svdyn(&["truncate", "--help"], &[]).status.code(), Some(0));
}

#[test]
fn compose_writes_a_canonical_file() {
    let s = Scratch::new("compose");
    let ex = s.corpus("ex2_10");
    let out = s.path("sq.plrel");
    assert_eq!(svdyn(&["compose", &ex, &ex, "-o", &out], &[]).status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(parse(&text).unwrap(), svdyn::constructions::corpus("ex2_10").unwrap());
}

#[test]
fn truncation_cap_exits_three() {
    let s = Scratch::new("cap");
    let tent = s.corpus("tent");
    let o = svdyn(&["truncate", &tent, "--depth", "5"], &[("SVDYN_CELL_CAP", "10")]);
    assert_eq!(o.status.code(), Some(3));
    let o = svdyn(&["truncate", &tent, "--depth", "9"], &[]);
    assert_eq!(o.status.code(), Some(3));
    let o = svdyn(&["truncate", &tent, "--depth", "3", "--connected", "--assert"], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cells: 8\n"));
}

#[test]
fn disconnected_truncation_fails_its_assertion() {
    let s = Scratch::new("disc");
    let d = s.corpus("diag_plus_point");
    let o = svdyn(&["truncate", &d, "--depth", "1", "--connected", "--assert"], &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("connected: false\n"));
}

#[test]
fn cycles_and_spans() {
    let s = Scratch::new("cyc");
    let tent = s.corpus("tent");
    let o = svdyn(&["cycle", &tent, "--period", "3"], &[]);
    assert!(stdout(&o).contains("[\"2/9\",\"4/9\",\"8/9\"]"));
    let o = svdyn(&["span", &tent, "--period", "3", "--max", "6", "--assert"], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all_found: true"));
    assert_eq!(stdout(&svdyn(&["sarkovskii", "6", "12"], &[])), "true\n");
}

#[test]
fn desingularize_and_plot() {
    let s = Scratch::new("desing");
    let sq = s.corpus("square");
    let out = s.path("light.plrel");
    let o = svdyn(&["desingularize", &sq, "--cycle", "0,1/2,1", "-o", &out], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(svdyn(&["check", &out, "--assert", "light", "--assert", "ivp"], &[]).status.code(), Some(0));
    let bad = svdyn(&["desingularize", &sq, "--cycle", "1/2,1/2", "-o", &out], &[]);
    assert_eq!(bad.status.code(), Some(2));

    let svg = s.path("p.svg");
    assert_eq!(svdyn(&["plot", &out, "-o", &svg], &[]).status.code(), Some(0));
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    let o = svdyn(&["plot", &sq, "-o", &svg, "--depth", "2", "--coords", "0,3"], &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(Path::new(&svg).exists());
}
