//! End-to-end checks of the command-line surface: exit-code conventions,
//! artifact formats, determinism, and re-validation of emitted artifacts.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fpinv"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin()
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

struct Sandbox {
    dir: PathBuf,
}

impl Sandbox {
    fn new(name: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("fpinv-cli-{name}-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        std::fs::create_dir_all(&dir).unwrap();
        Sandbox { dir }
    }

    fn write(&self, name: &str, content: &str) -> PathBuf {
        let path = self.dir.join(name);
        std::fs::write(&path, content).unwrap();
        path
    }

    fn read(&self, name: &str) -> String {
        std::fs::read_to_string(self.dir.join(name)).unwrap()
    }
}

impl Drop for Sandbox {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.dir);
    }
}

const BICYCLIC: &str = "gens: a ;\nrels: a a^-1 = 1 ;\nflags: e_unitary ;\n";
const FREE2: &str = "gens: a b ;\nflags: e_unitary ;\n";

#[test]
fn tribool_exit_codes() {
    let sb = Sandbox::new("tri");
    sb.write("bicyclic.imp", BICYCLIC);

    let out = run(
        &[
            "stephen",
            "test-equal",
            "-p",
            "bicyclic.imp",
            "-u",
            "a a^-1",
            "-w",
            "1",
            "--rounds",
            "5",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(0), "{out:?}");

    // a^-1 a = 1 fails in the bicyclic monoid but has trivial group image:
    // unknown at every budget.
    let out = run(
        &[
            "stephen",
            "test-equal",
            "-p",
            "bicyclic.imp",
            "-u",
            "a^-1 a",
            "-w",
            "1",
            "--rounds",
            "6",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(2));

    sb.write("free2.imp", FREE2);
    let out = run(
        &[
            "stephen",
            "test-equal",
            "-p",
            "free2.imp",
            "-u",
            "a",
            "-w",
            "b",
            "--oracle",
            "fg:2",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(1));

    let out = run(
        &[
            "stephen",
            "right-unit",
            "-p",
            "bicyclic.imp",
            "-w",
            "a",
            "--rounds",
            "5",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(0));

    let out = run(
        &[
            "stephen",
            "test-geq",
            "-p",
            "bicyclic.imp",
            "-u",
            "1",
            "-w",
            "a^-1 a",
            "--rounds",
            "4",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(0));
    let out = run(
        &[
            "stephen",
            "test-geq",
            "-p",
            "bicyclic.imp",
            "-u",
            "a^-1 a",
            "-w",
            "1",
            "--rounds",
            "8",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn approx_writes_dot_artifacts() {
    let sb = Sandbox::new("dot");
    sb.write("free2.imp", FREE2);
    let out = run(
        &[
            "stephen",
            "approx",
            "-p",
            "free2.imp",
            "-w",
            "a b b^-1",
            "--dot",
            "out.dot",
            "--json",
            "out.json",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("vertices 3"));
    let dot = sb.read("out.dot");
    assert_eq!(dot.matches("shape=doublecircle").count(), 1);
    assert_eq!(dot.matches("shape=square").count(), 1);
    assert_eq!(dot.matches("->").count(), 2, "one arrow per positive edge");
    let json: serde_json::Value = serde_json::from_str(&sb.read("out.json")).unwrap();
    assert_eq!(json["vertices"], 3);
    assert_eq!(json["saturated"], true);
}

#[test]
fn data_and_precondition_exit_codes() {
    let sb = Sandbox::new("errs");
    let out = run(
        &["stephen", "approx", "-p", "missing.imp", "-w", "a"],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(65));

    sb.write("nounit.imp", "gens: a ;\nrels: a a^-1 = 1 ;\n");
    let out = run(
        &[
            "distortion",
            "profile",
            "-p",
            "nounit.imp",
            "-w",
            "1",
            "--oracle",
            "fg:1",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(66));

    sb.write("bicyclic.imp", BICYCLIC);
    let out = run(
        &[
            "stephen",
            "test-equal",
            "-p",
            "bicyclic.imp",
            "-u",
            "a",
            "-w",
            "a",
            "--oracle",
            "fg:9",
        ],
        &sb.dir,
    );
    assert_eq!(
        out.status.code(),
        Some(65),
        "oracle arity mismatch is a data error"
    );

    let out = run(&["bogus"], &sb.dir);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn distortion_profile_artifact_revalidates() {
    let sb = Sandbox::new("dist");
    sb.write("free2.imp", FREE2);
    let args = [
        "distortion",
        "profile",
        "-p",
        "free2.imp",
        "-w",
        "a b b^-1 a",
        "--oracle",
        "fg:2",
        "--radius",
        "8",
        "--rounds",
        "3",
        "--json",
        "table.json",
    ];
    let out1 = run(&args, &sb.dir);
    assert_eq!(out1.status.code(), Some(0));
    let text1 = sb.read("table.json");
    // Determinism: identical run, byte-identical artifact and stdout.
    let out2 = run(&args, &sb.dir);
    assert_eq!(stdout(&out1), stdout(&out2));
    assert_eq!(text1, sb.read("table.json"));
    // The table re-validates: rows are monotone with phi_hat >= r on a tree.
    let json: serde_json::Value = serde_json::from_str(&text1).unwrap();
    let rows = json["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    let mut prev = 0;
    for row in rows {
        let r = row["r"].as_u64().unwrap();
        let phi = row["phi_hat"].as_u64().unwrap();
        assert_eq!(phi, r, "munn trees embed isometrically");
        assert!(phi >= prev);
        prev = phi;
    }
}

#[test]
fn finverse_max_and_wedge() {
    let sb = Sandbox::new("finv");
    let out = run(
        &[
            "fixture",
            "bs",
            "--n",
            "2",
            "-o",
            "bs2.imp",
            "--rules-out",
            "bs2.rules",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(0));

    let out = run(
        &[
            "finverse",
            "max",
            "-p",
            "bs2.imp",
            "-g",
            "b",
            "--oracle",
            "rw:bs2.rules",
            "--rounds",
            "10",
            "--max-vertices",
            "40000",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("representative: b"), "{text}");
    assert!(text.contains("certificate"), "{text}");

    sb.write("bicyclic.imp", BICYCLIC);
    let out = run(
        &[
            "finverse",
            "wedge",
            "-p",
            "bicyclic.imp",
            "-s",
            "a",
            "-t",
            "a a a^-1",
            "--oracle",
            "fg:1",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "a");

    let out = run(
        &[
            "finverse",
            "phi",
            "-p",
            "bicyclic.imp",
            "-n",
            "2",
            "--oracle",
            "fg:1",
            "--rounds",
            "8",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("phi(2) = "));
}

#[test]
fn prefix_member_exit_codes() {
    let sb = Sandbox::new("prefix");
    sb.write("bicyclic.imp", BICYCLIC);
    let out = run(
        &[
            "prefix",
            "member",
            "-p",
            "bicyclic.imp",
            "-g",
            "a",
            "--oracle",
            "fg:1",
            "--phi",
            "linear",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(0));
    let out = run(
        &[
            "prefix",
            "member",
            "-p",
            "bicyclic.imp",
            "-g",
            "a^-1",
            "--oracle",
            "fg:1",
            "--phi",
            "linear",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(1));
    let out = run(
        &[
            "prefix",
            "member",
            "-p",
            "bicyclic.imp",
            "-g",
            "1",
            "--oracle",
            "fg:1",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn propa_transport_roundtrip() {
    let sb = Sandbox::new("propa");
    sb.write("y.json", r#"{"dist": [[0.0, 1.0], [1.0, 0.0]]}"#);
    sb.write(
        "x.json",
        r#"{"dist": [[0.0, 1.0, 2.0], [1.0, 0.0, 1.0], [2.0, 1.0, 0.0]]}"#,
    );
    sb.write("f.json", "[0, 0, 1]");
    sb.write(
        "xi.json",
        r#"{"eps": 2.0, "R": 1.0, "S": 1.0, "xi": {"0": {"0": 0.5, "1": 0.5}, "1": {"1": 1.0}}}"#,
    );
    let out = run(
        &[
            "propa",
            "transport",
            "-X",
            "x.json",
            "-Y",
            "y.json",
            "-f",
            "f.json",
            "-w",
            "xi.json",
            "-o",
            "zeta.json",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert!(stdout(&out).contains("output-check ok"));

    // The emitted witness re-validates through the checker.
    let out = run(
        &["propa", "check", "-X", "x.json", "-w", "zeta.json"],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(0));

    // A witness that violates its own parameters is reported and fails.
    sb.write(
        "bad.json",
        r#"{"eps": 0.5, "R": 1.0, "S": 0.0, "xi": {"0": {"0": 1.0}, "1": {"1": 1.0}}}"#,
    );
    let out = run(
        &["propa", "check", "-X", "y.json", "-w", "bad.json"],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("violation"));
}

#[test]
fn fixture_outputs_parse_back() {
    let sb = Sandbox::new("fixtures");
    let out = run(&["fixture", "scary"], &sb.dir);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("b c b^-1 a d^-1 a^-1 c^-1 c d^-1 d = 1"));

    let out = run(
        &[
            "fixture",
            "gray",
            "--gens",
            "x",
            "--relator",
            "1",
            "--s-word",
            "x",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("x x^-1 t x t^-1 t x^-1 t^-1 x^-1 x = 1"));

    let out = run(
        &[
            "fixture", "clifford", "--y-gens", "a", "--x-gens", "a_p", "--map", "0",
        ],
        &sb.dir,
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("e a_p = a"));
    assert!(text.contains("e e = e"));

    let out = run(&["fixture", "bs", "--n", "0"], &sb.dir);
    assert_eq!(out.status.code(), Some(65));
}
