use std::process::{Command, Output};

use serde_json::Value;

fn frl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = frl(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn betti_all_routes_on_square() {
    let o = frl(&["betti", "--route", "all", "square", "--coeff", "q"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("routes agree: hochster, koszul, cells"));
    let v = json(&["betti", "--route", "all", "square"]);
    let entries: Vec<(u64, u64, u64)> = v["table"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["i"].as_u64().unwrap(),
                e["j2"].as_u64().unwrap(),
                e["beta"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(entries, vec![(0, 0, 1), (1, 4, 2), (2, 8, 1)]);
}

#[test]
fn dehn_sommerville_on_torus() {
    let o = frl(&["ds", "torus7"]);
    let s = stdout(&o);
    assert!(s.contains("h = (1,4,10,-1)"));
    assert!(s.contains("h3 - h0 = -2 (expected -2) ok"));
    assert!(s.contains("h2 - h1 = 6 (expected 6) ok"));
    assert!(s.contains("generalized Dehn-Sommerville: holds"));
}

#[test]
fn complement_and_goresky_macpherson_agree() {
    let a = json(&["complement", "points:3"]);
    let b = json(&["gm", "points:3"]);
    assert_eq!(a["dims"], b["dims"]);
    assert_eq!(a["dims"], serde_json::json!([1, 0, 0, 3, 2]));
}

#[test]
fn exit_codes() {
    assert_eq!(frl(&["info", "no-such-complex"]).status.code(), Some(2));
    assert_eq!(
        frl(&["info", "square", "--coeff", "f4"]).status.code(),
        Some(3)
    );
    assert_eq!(frl(&["gm", "simplex:3"]).status.code(), Some(3));
    assert_eq!(
        frl(&["quotient", "boundary:3", "--matrix", "1,0,0;0,1,0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        frl(&["quotient", "boundary:3", "--matrix", "1,x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(frl(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn generated_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in [("c.json", false), ("c.txt", true)] {
        let path = dir.path().join(name);
        let p = path.to_str().unwrap();
        let mut args = vec!["generate", "cyclic:4:7", "--output", p];
        if text {
            args.push("--text");
        }
        assert!(frl(&args).status.success());
        let direct = json(&["info", "cyclic:4:7"]);
        let read = json(&["info", p]);
        assert_eq!(direct, read);
        for cmd in [
            "fvector",
            "gcheck",
            "homology",
            "cm",
            "gorenstein",
            "hilbert",
            "chi",
            "ds",
            "complement",
            "gm",
            "alexander",
        ] {
            assert!(frl(&[cmd, p]).status.success(), "{cmd}");
        }
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["betti", "--route", "all", "stacked:3:3:7"][..],
        &["info", "stacked:3:4:1"],
        &["chi", "torus7"],
    ] {
        assert_eq!(frl(args).stdout, frl(args).stdout);
    }
}

#[test]
fn quotient_and_field_choice() {
    let v = json(&[
        "quotient",
        "square",
        "--matrix",
        "{\"rows\":[[1,0,-1,0],[0,1,0,-1]]}",
    ]);
    assert_eq!(v["dims"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["equals_h"], Value::Bool(true));
    let q = json(&["homology", "torus7"]);
    let f2 = json(&["homology", "torus7", "--coeff", "f2"]);
    assert_eq!(q["reduced_homology"], f2["reduced_homology"]);
}

#[test]
fn thread_cap_is_accepted() {
    let o = Command::new(env!("CARGO_BIN_EXE_frl"))
        .args(["betti", "pentagon"])
        .env("FRL_THREADS", "1")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).contains("Z_K Betti numbers: 1,0,0,5,5,0,0,1"));
}
