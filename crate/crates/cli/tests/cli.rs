use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclespan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cyclespan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn verify_all_on_k4_passes() {
    let out = run(&["verify-all", "--gen", "k4"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["graph"], "k4");
    assert_eq!(report["elapsed_ms"], 0);
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 9);
    assert!(checks.iter().all(|c| c["pass"] == true));
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn decompose_square_into_triangles() {
    let out = run(&["decompose", "--gen", "k4", "--circuit", "0,2,3,5"]);
    assert_eq!(out.status.code(), Some(0));
    let cert = json(&out);
    assert_eq!(cert["target"], serde_json::json!([0, 2, 3, 5]));
    let parts = cert["parts"].as_array().unwrap();
    assert_eq!(parts.len(), 2);
    assert!(parts.iter().all(|p| p.as_array().unwrap().len() == 3));
}

#[test]
fn decompose_rejects_odd_sets() {
    let out = run(&["decompose", "--gen", "k4", "--circuit", "0,3,5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cycle space"));
}

#[test]
fn prism_has_five_nc_circuits() {
    let out = run(&["nc", "--gen", "prism"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out).as_array().unwrap().len(), 5);
}

#[test]
fn theta_for_one_thread() {
    let out = run(&["theta", "--gen", "k4", "--thread", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let pair = json(&out);
    let mut both = vec![pair["p"].to_string(), pair["q"].to_string()];
    both.sort();
    assert_eq!(both, vec!["[0,1,3]", "[0,2,4]"]);
    assert_eq!(pair["source"], "maximization");
}

#[test]
fn other_subcommands_produce_json() {
    let cases: [(&str, usize); 6] = [
        ("circuits", 7),
        ("threads", 6),
        ("basis", 3),
        ("bonds", 7),
        ("theta", 6),
        ("blocks", 2),
    ];
    for (cmd, len) in cases {
        let out = run(&[cmd, "--gen", "k4"]);
        assert_eq!(out.status.code(), Some(0), "{cmd}");
        let v = json(&out);
        let size = v
            .as_array()
            .map_or_else(|| v.as_object().unwrap().len(), Vec::len);
        assert_eq!(size, len, "{cmd}");
    }
    let out = run(&["ears", "--gen", "prism"]);
    assert_eq!(json(&out)["steps"].as_array().unwrap().len(), 1);
    let out = run(&["whitney", "--gen", "k33"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["equal"], true);
    let info = json(&run(&["info", "--gen", "petersen"]));
    assert_eq!(
        (info["vertices"].as_u64(), info["edges"].as_u64()),
        (Some(10), Some(15))
    );
}

#[test]
fn quiet_prints_nothing() {
    let out = run(&["verify-all", "--gen", "k4", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}

#[test]
fn edge_list_files_round_trip() {
    let out = run(&["gen", "--gen", "random3c-9", "--seed", "7", "--edge-list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("9 "));
    let path = scratch_file("r9.txt", &text);
    let from_file = json(&run(&["info", "--input", path.to_str().unwrap()]));
    let generated = json(&run(&["info", "--gen", "random3c-9", "--seed", "7"]));
    assert_eq!(from_file["fingerprint"], generated["fingerprint"]);
    assert_eq!(from_file["three_connected"], true);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["nc"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate", "--gen", "k4"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "--gen", "k4"]).status.code(), Some(2));
    assert_eq!(
        run(&["decompose", "--gen", "k4", "--circuit", "a,b"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["nc", "--gen", "k4", "--input", "x.txt"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["nc", "--gen", "k4", "--json", "--quiet"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn runtime_errors_exit_one() {
    let bad = scratch_file("loop.txt", "2 1\n0 0\n");
    let out = run(&["info", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("loop"));
    let garbled = scratch_file("garbled.txt", "3 2\n0 1\n1 x\n");
    let out = run(&["info", "--input", garbled.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3, column 3"));
    assert_eq!(run(&["nc", "--gen", "dodecahedron"]).status.code(), Some(1));
    assert_eq!(
        run(&["theta", "--gen", "k4", "--thread", "0,1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["ears", "--gen", "wheel-2"]).status.code(), Some(1));
}

#[test]
fn verify_all_skips_checks_outside_their_preconditions() {
    // A 5-cycle: connectivity-dependent checks are skipped, the rest pass.
    let path = scratch_file("c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let out = run(&["verify-all", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let skipped = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["details"].as_str().unwrap().starts_with("skipped"))
        .count();
    assert_eq!(skipped, 7);
}

#[test]
fn output_is_deterministic() {
    let cases: [&[&str]; 2] = [
        &["verify-all", "--gen", "petersen"],
        &["decompose", "--gen", "prism", "--circuit", "1,2,3,6,7"],
    ];
    for args in cases {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}
