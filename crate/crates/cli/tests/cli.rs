use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf12")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_c_passes() {
    let out = run(&["catalog", "verify", "C"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "hopf12.cli.v1");
    assert_eq!(v["pass"], true);
}

#[test]
fn perturbed_multiplication_fails_verification() {
    let out = run(&["catalog", "verify", "C", "--perturb", "mult:0,0,0:+1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], false);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["catalog", "verify", "Q"][..],
        &["catalog", "verify", "C", "--perturb", "mult:99,0,0:1"],
        &["catalog", "verify", "C", "--perturb", "nonsense"],
        &["nichols", "--module", "V13"],
        &["bosonize", "--module", "W7"],
        &["--threads", "0", "catalog", "verify", "C"],
        &["--theta-sign", "sideways", "catalog", "verify", "C"],
        &["no-such-command"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

/// An infinite Nichols algebra has no finite bosonization: a computed failure, not a usage error.
#[test]
fn bosonizing_an_infinite_case_fails() {
    let out = run(&["bosonize", "--module", "V10"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("no vanishing degree"));
}

#[test]
fn export_double_has_144_basis_elements() {
    let out = run(&["catalog", "export", "D"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["dim"], 144);
    assert_eq!(v["result"]["schema"], "hopf12.findimhopf.v1");
}

#[test]
fn ext_table_is_supported_on_characters() {
    let v = json(&run(&["modules", "ext-table"]));
    let t = v["result"]["ext1"].as_array().unwrap();
    assert_eq!(t.len(), 36);
    for (i, row) in t.iter().enumerate() {
        for (j, e) in row.as_array().unwrap().iter().enumerate() {
            if i >= 6 || j >= 6 {
                assert_eq!(e, 0);
            }
        }
    }
    assert_eq!(run(&["--paper-check", "modules", "ext-table"]).status.code(), Some(1));
}

#[test]
fn quiver_dot_output() {
    let out = run(&["modules", "quiver", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("->").count(), 12);
}

#[test]
fn nichols_ranks_of_a_six_dimensional_case() {
    let out = run(&["nichols", "--module", "V31", "--maxdeg", "6", "--relations", "--paper-check"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let ranks: Vec<u64> = v["result"]["ranks"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(ranks, vec![1, 2, 2, 1, 0, 0, 0]);
    assert_eq!(v["result"]["verdict"]["kind"], "finite");
    assert_eq!(v["result"]["relations"][1]["new_relations"][0], "v2v2v2");
}

#[test]
fn bosonization_with_presentation() {
    let dir = std::env::temp_dir().join(format!("hopf12-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("v24.json");
    let out = run(&["bosonize", "--module", "V24", "--verify-presentation", "--export", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let exported: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(exported["dim"], 72);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn printed_tables_differ_only_for_projectives() {
    let out = run(&["yd", "verify-paper"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let m = v["result"]["mismatches"].as_array().unwrap();
    assert_eq!(m.len(), 30);
    assert!(m.iter().all(|x| x["module"].as_str().unwrap().starts_with('P')));
    assert_eq!(run(&["--paper-check", "yd", "braiding", "V22"]).status.code(), Some(0));
}

#[test]
fn output_is_identical_across_thread_counts_and_out_files() {
    let a = run(&["--threads", "1", "nichols", "--module", "P0", "--maxdeg", "4"]);
    let b = run(&["--threads", "4", "nichols", "--module", "P0", "--maxdeg", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let path = std::env::temp_dir().join(format!("hopf12-out-{}.json", std::process::id()));
    let c = run(&["--threads", "3", "--out", path.to_str().unwrap(), "nichols", "--module", "P0", "--maxdeg", "4"]);
    assert_eq!(c.status.code(), Some(0));
    assert!(c.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn shallow_full_report_is_marked_partial() {
    let out = run(&["--maxdeg", "2", "full-report"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["result"]["partial"], true);
    assert_eq!(v["result"]["criteria"].as_array().unwrap().len(), 11);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert_eq!(stderr.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).count(), 11);
}
