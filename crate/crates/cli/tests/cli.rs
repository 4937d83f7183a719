use std::process::{Command, Output};

use serde_json::Value;

fn injcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_injcat"))
        .args(args)
        .env_remove("INJCAT_CONFIG")
        .output()
        .expect("run injcat")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn empty_slice_is_one_node() {
    let o = injcat(&["quiver", "--max-size", "0", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["node_count"], 1);
    assert_eq!(v["nodes"][0]["partition"], "0");
    assert_eq!(v["arrow_count"], 0);
}

#[test]
fn dot_output_lists_the_lattice() {
    let o = injcat(&["quiver", "--max-size", "4", "--format", "dot"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches(" -> ").count(), 14);
    assert!(dot.contains("\"2,1\" -> \"2,2\";"));
}

#[test]
fn signed_quiver_carries_row_and_arrow_signs() {
    let o = injcat(&["quiver", "--max-size", "4", "--signs", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let sign = |a: &str, b: &str| {
        v["arrows"]
            .as_array()
            .unwrap()
            .iter()
            .find(|x| x["from"] == a && x["to"] == b)
            .unwrap()["sign"]
            .clone()
    };
    assert_eq!(sign("1", "1,1"), -1);
    assert_eq!(sign("2,1", "2,1,1"), -1);
    assert_eq!(sign("2", "3"), 1);
    let node = v["nodes"].as_array().unwrap().iter().find(|n| n["partition"] == "1,1").unwrap();
    assert_eq!(node["row_signs"], serde_json::json!([1, -1, 1]));
    let text = stdout(&injcat(&["quiver", "--max-size", "2", "--signs"]));
    assert!(text.contains("1 -> 1,1  [-1]"));
}

#[test]
fn verify_targets_pass() {
    for args in [
        &["verify", "signs", "--max-size", "10"][..],
        &["verify", "resolution", "--xi", "2,1", "--depth", "6"],
        &["verify", "morita", "--n", "3"],
        &["verify", "qdual", "--max-size", "6"],
        &["verify", "idempotents", "--n", "3"],
    ] {
        let o = injcat(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains(": pass"));
    }
}

#[test]
fn json_certificates_are_byte_stable() {
    let args = ["verify", "resolution", "--xi", "2,1", "--depth", "5", "--format", "json", "--no-timing"];
    let a = injcat(&args);
    let b = injcat(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["elapsed_ms"], 0);
    assert_eq!(v["schema_version"], 1);
    assert!(v["counts"]["objects_checked"].as_u64().unwrap() > 0);
    assert!(v.get("first_failure").is_none() || v["first_failure"].is_null());
}

#[test]
fn matrices_can_be_dumped() {
    let o = injcat(&["verify", "resolution", "--xi", "1", "--depth", "2", "--format", "json", "--dump-matrices"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let chains = v["details"]["matrices"].as_array().unwrap();
    let c = chains.iter().find(|c| c["object"] == "2,1").unwrap();
    assert_eq!(c["differentials"][0]["entries"], serde_json::json!([[1, -1]]));
}

#[test]
fn pieri_table_rows() {
    let o = injcat(&["table", "pieri", "--mu", "2", "--m", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(4):1\n(3,1):1\n(2,2):1\n(2,1,1):0\n");
}

#[test]
fn betti_table_of_the_empty_diagram_is_one_column() {
    let o = injcat(&["table", "betti", "--xi", "0", "--depth", "4"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines.iter().all(|l| l.split(": ").nth(1).unwrap().split(' ').count() == 1));
    assert!(lines[4].ends_with("(1,1,1,1)"));
}

#[test]
fn dual_dimension_table_is_the_vertical_strip_indicator() {
    let o = injcat(&["table", "dualdims", "--max-size", "5", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    for row in v["pairs"].as_array().unwrap() {
        assert_eq!(row["dual_dim"], row["vertical_strip"]);
    }
    let text = stdout(&injcat(&["table", "dualdims", "--max-size", "3"]));
    assert!(text.contains("(1) -> (1,1,1): 1"));
    assert!(text.contains("(1) -> (3): 0"));
}

#[test]
fn usage_and_bound_errors_exit_two() {
    assert_eq!(injcat(&["verify", "qdual", "--max-size", "13"]).status.code(), Some(2));
    assert_eq!(injcat(&["verify", "resolution", "--xi", "1,3"]).status.code(), Some(2));
    assert_eq!(injcat(&["quiver"]).status.code(), Some(2));
    assert_eq!(injcat(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(injcat(&["table", "pieri", "--mu", "2"]).status.code(), Some(2));
    let o = injcat(&["--bound", "nonsense=3", "verify", "signs"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn config_file_and_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bounds.toml");
    std::fs::write(&cfg, "dual_size = 4\n").unwrap();
    let run = |extra: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_injcat"))
            .env("INJCAT_CONFIG", &cfg)
            .args(extra)
            .output()
            .unwrap()
    };
    assert_eq!(run(&["verify", "qdual", "--max-size", "5"]).status.code(), Some(2));
    assert_eq!(run(&["--bound", "dual_size=5", "verify", "qdual", "--max-size", "5"]).status.code(), Some(0));
    std::fs::write(&cfg, "no_such_bound = 1\n").unwrap();
    assert_eq!(run(&["verify", "signs", "--max-size", "3"]).status.code(), Some(2));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let o = injcat(&["verify", "signs", "--max-size", "6", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "verify signs");
}

#[test]
fn thread_count_is_accepted() {
    let o = injcat(&["--threads", "2", "verify", "qdual", "--max-size", "5"]);
    assert_eq!(o.status.code(), Some(0));
}
