use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cyclotile(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cyclotile"));
    cmd.args(args).env_remove("CYCLOTILE_BUDGET");
    cmd
}

fn run(args: &[&str]) -> Output {
    cyclotile(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn spectrum_found_and_refuted() {
    let o = run(&["spectrum", "--set", "n=12:0,1,2", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json_out(&o);
    assert_eq!(v["spectral"], true);
    assert_eq!(v["exhaustive"], true);
    assert_eq!(v["zero_set"], serde_json::json!([3]));
    let lambda = v["lambda"].as_str().unwrap();
    let check = run(&["spectrum", "--set", lambda, "--json"]);
    assert_eq!(json_out(&check)["spectral"], true);

    let o = run(&["spectrum", "--set", "n=8:0,1,3", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_out(&o)["spectral"], false);
}

#[test]
fn budget_exhaustion_exit_code_and_env() {
    let o = run(&["spectrum", "--set", "n=8:0,1,3", "--budget", "0", "--json"]);
    assert_eq!(code(&o), 2);
    assert_eq!(json_out(&o)["spectral"], "unknown");

    let o = cyclotile(&["tile", "--set", "n=8:0,1,3", "--json"])
        .env("CYCLOTILE_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    assert_eq!(json_out(&o)["tile"], "unknown");

    // an explicit flag beats the environment
    let o = cyclotile(&["tile", "--set", "n=8:0,1,3", "--budget", "unlimited", "--json"])
        .env("CYCLOTILE_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert_eq!(json_out(&o)["tile"], false);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&run(&["spectrum", "--set", "n=8:0,9"])), 1);
    assert_eq!(code(&run(&["spectrum", "--set", "garbage"])), 1);
    assert_eq!(code(&run(&["no-such-command"])), 1);
    assert_eq!(code(&run(&["campaign", "--n", "8", "--budget", "lots"])), 1);
    assert_eq!(code(&run(&["lemma", "--which", "proj", "--set", "n=12:0,4,8"])), 1);
    assert_eq!(code(&run(&["crosscheck", "--n", "31"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn tile_with_and_without_pruning() {
    for extra in [&[][..], &["--no-pruning"][..]] {
        let mut args = vec!["tile", "--set", "n=12:0,1,2", "--json"];
        args.extend_from_slice(extra);
        let o = run(&args);
        assert_eq!(code(&o), 0);
        let v = json_out(&o);
        assert_eq!(v["tile"], true);
        assert!(v["complement"].as_str().unwrap().starts_with("n=12:0,"));
    }
}

#[test]
fn small_commands() {
    let o = run(&["t1t2", "--set", "n=12:0,1,2", "--json"]);
    let v = json_out(&o);
    assert_eq!(
        (v["t1"].as_bool(), v["t2"].as_bool(), v["product"].as_u64()),
        (Some(true), Some(true), Some(3))
    );

    let o = run(&["zeros", "--set", "n=12:0,6"]);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "[4, 12]");

    let o = run(&["cyclo", "--d", "12"]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "1*x^0 + -1*x^2 + 1*x^4");

    let o = run(&["cube", "--multiset", "n=30:0,10,20,3,9,15,21,27", "--m", "30", "--json"]);
    assert_eq!(json_out(&o)["holds"], true);

    let o = run(&[
        "lemma",
        "--which",
        "genpair",
        "--set",
        "n=60:0,6,10,15",
        "--x",
        "2",
        "--y",
        "3",
        "--json",
    ]);
    assert_eq!(json_out(&o)["witness"], serde_json::json!([10, 15]));
}

fn campaign(dir: &Path, extra: &[&str]) -> Output {
    let json = dir.join("r.json");
    let csv = dir.join("r.csv");
    let mut args = vec![
        "campaign",
        "--n",
        "24",
        "--sizes",
        "1-8",
        "--json",
        json.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ];
    args.extend_from_slice(extra);
    run(&args)
}

#[test]
fn campaign_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let o = campaign(dir.path(), &[]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(report["summary"]["failures"], 0);
    assert_eq!(report["summary"]["sizes_budget_limited"], serde_json::json!([]));
    let csv = std::fs::read_to_string(dir.path().join("r.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,size,exhaustive,examined,spectral,tiles,t1t2"));
    assert_eq!(lines.count(), 8);
}

#[test]
fn campaign_budget_limited_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = campaign(dir.path(), &["--budget", "100"]);
    assert_eq!(code(&o), 2);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert!(!report["budget_exhausted"].as_array().unwrap().is_empty());
}

#[test]
fn interrupted_campaign_resumes_to_the_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().join("c.ckpt");
    let ckpt = ckpt.to_str().unwrap();

    let o = campaign(dir.path(), &["--checkpoint", ckpt, "--stop-after-units", "3"]);
    assert_eq!(code(&o), 4, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(Path::new(ckpt).exists());

    // the checkpoint belongs to this configuration only
    let o = campaign(dir.path(), &["--checkpoint", ckpt, "--seed", "9"]);
    assert_eq!(code(&o), 1);

    let o = campaign(dir.path(), &["--checkpoint", ckpt]);
    assert_eq!(code(&o), 0);
    let resumed = std::fs::read_to_string(dir.path().join("r.json")).unwrap();
    let v: Value = serde_json::from_str(&resumed).unwrap();
    assert!(v["execution"]["units_resumed"].as_u64().unwrap() >= 3);

    let fresh_dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&campaign(fresh_dir.path(), &[])), 0);
    let fresh = std::fs::read_to_string(fresh_dir.path().join("r.json")).unwrap();
    assert_eq!(
        cyclotile::verifier::strip_execution(&resumed).unwrap(),
        cyclotile::verifier::strip_execution(&fresh).unwrap()
    );
}

#[test]
fn crosscheck_small_groups() {
    let o = run(&["crosscheck", "--n", "8,12", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json_out(&o);
    let classes: Vec<u64> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["classes"].as_u64().unwrap())
        .collect();
    assert_eq!(classes, vec![23, 157]);
}
