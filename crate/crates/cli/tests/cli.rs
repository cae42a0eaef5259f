use std::process::{Command, Output};

use serde_json::Value;

fn barspin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_barspin")).args(args).output().expect("binary runs")
}

fn barspin_with_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_barspin"))
        .args(args)
        .env("BARSPIN_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = barspin(&full);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn validator() -> jsonschema::Validator {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

#[test]
fn blocks_for_seven_at_three() {
    let o = barspin(&["blocks", "--group", "sym", "--n", "7", "--p", "3", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("core (1) w=2 sign +1: 6 characters"), "{text}");
    // the associate pair ξ(5,2)± of defect zero sits in two blocks
    assert!(text.contains("core (5,2) w=0 (+) sign -1: 1 character, defect zero"), "{text}");
    assert!(text.contains("core (5,2) w=0 (-) sign -1: 1 character, defect zero"), "{text}");

    let v = json(&["blocks", "--group", "sym", "--n", "7", "--p", "3"]);
    let blocks = v["blocks"].as_array().unwrap();
    assert_eq!(blocks[0]["block"]["core"], serde_json::json!([1]));
    assert_eq!(blocks[0]["characters"].as_array().unwrap().len(), 6);
    assert!(blocks[1..].iter().all(|b| b["block"]["core"] == serde_json::json!([5, 2]) && b["defect_zero"] == true));
}

#[test]
fn verify_worked_instance() {
    let o = barspin(&["verify", "--group", "sym", "--n", "3", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("ξ(3) = ξ(2,1)+ + ξ(2,1)-"), "{text}");
    assert!(text.ends_with("1 blocks: 1 passed, 0 failed\n"), "{text}");

    let v = json(&["verify", "--group", "sym", "--n", "3", "--p", "3"]);
    let report = &v["reports"][0];
    assert_eq!(report["verdict"], "pass");
    let shapes: Vec<&Value> = report["candidates"].as_array().unwrap().iter().map(|c| &c["shape"]).collect();
    assert_eq!(shapes, [&serde_json::json!([2, 1]), &serde_json::json!([2, 1])]);
    assert_eq!(report["relations"][0]["label"]["shape"], serde_json::json!([3]));
    assert_eq!(report["relations"][0]["coordinates"], serde_json::json!(["1", "1"]));
}

#[test]
fn empty_bar_partition_is_its_own_core() {
    let v = json(&["cores", "--n", "0", "--p", "3"]);
    let parts = v["partitions"].as_array().unwrap();
    assert_eq!(parts.len(), 1);
    assert_eq!(parts[0]["partition"], serde_json::json!([]));
    assert_eq!(parts[0]["core"], serde_json::json!([]));
    assert_eq!(parts[0]["quotient"], serde_json::json!({"lambda0": [], "components": [[]]}));
}

#[test]
fn core_filter_selects_blocks() {
    let v = json(&["verify", "--n", "7", "--p", "3", "--core", "5,2"]);
    assert_eq!(v["summary"], serde_json::json!({"blocks": 2, "passed": 2, "failed": 0}));
    let v = json(&["basic-set", "--n", "6", "--p", "3", "--core", ""]);
    let b = &v["blocks"][0];
    assert_eq!(b["block"]["weight"], 2);
    assert_eq!(b["basic_set"].as_array().unwrap().len(), b["brauer_count"].as_u64().unwrap() as usize);
}

#[test]
fn usage_errors_exit_with_two() {
    let cases: &[&[&str]] = &[
        &[],
        &["frobnicate", "--n", "3", "--p", "3"],
        &["verify", "--n", "3", "--p", "3", "--colour"],
        &["verify", "--n", "3"],
        &["verify", "--n", "0", "--p", "3"],
        &["verify", "--n", "3", "--p", "4"],
        &["verify", "--n", "3", "--p", "3", "--group", "gl"],
        &["verify", "--n", "7", "--p", "3", "--core", "2,1"],
        &["verify", "--n", "7", "--p", "3", "--core", "1,2"],
        &["verify", "--n", "7", "--p", "3", "--core", "3"],
        &["verify", "--n", "3", "--p", "3", "--format", "xml"],
    ];
    for args in cases {
        let o = barspin(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"), "{args:?}");
    }
    let o = barspin_with_threads(&["verify", "--n", "3", "--p", "3"], "zero");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn summary_counts_every_block() {
    for group in ["sym", "alt"] {
        for p in ["3", "5", "7"] {
            let v = json(&["verify", "--group", group, "--n", "10", "--p", p]);
            let total = v["reports"].as_array().unwrap().len() as u64;
            assert_eq!(v["summary"]["blocks"], total);
            assert_eq!(v["summary"]["passed"], total);
            assert_eq!(v["summary"]["failed"], 0);
        }
    }
}

#[test]
fn output_does_not_depend_on_thread_count() {
    for verb in ["verify", "counts", "isometry"] {
        let args = [verb, "--group", "alt", "--n", "10", "--p", "3", "--format", "json"];
        let one = barspin_with_threads(&args, "1");
        let many = barspin_with_threads(&args, "8");
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(one.stdout, many.stdout, "{verb}");
        assert_eq!(barspin(&args).stdout, one.stdout, "{verb}");
    }
}

#[test]
fn json_reports_match_the_schema() {
    let validator = validator();
    let mut checked = 0;
    let mut check = |v: Value| {
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| format!("{} at {}", e, e.instance_path)).collect();
        assert!(errors.is_empty(), "{}: {errors:?}", v["verb"]);
        checked += 1;
    };
    check(json(&["cores", "--n", "0", "--p", "3"]));
    check(json(&["selftest"]));
    for group in ["sym", "alt"] {
        for n in ["1", "4", "7"] {
            for p in ["3", "5"] {
                for verb in ["cores", "blocks", "basic-set", "verify", "counts", "isometry"] {
                    check(json(&[verb, "--group", group, "--n", n, "--p", p]));
                }
            }
        }
    }
    assert_eq!(checked, 2 + 2 * 3 * 2 * 6);
}

#[test]
fn schema_rejects_malformed_reports() {
    let validator = validator();
    let mut v = json(&["verify", "--n", "3", "--p", "3"]);
    assert!(validator.is_valid(&v));
    v["reports"][0]["verdict"] = Value::from("maybe");
    assert!(!validator.is_valid(&v));
    let mut v = json(&["blocks", "--n", "3", "--p", "3"]);
    v["blocks"][0]["block"]["sign"] = Value::from(0);
    assert!(!validator.is_valid(&v));
    assert!(!validator.is_valid(&serde_json::json!({"verb": "unknown"})));
}

#[test]
fn selftest_and_counts_pass() {
    let o = barspin(&["selftest"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().all(|l| l.starts_with("[PASS]")), "{text}");

    let v = json(&["counts", "--n", "7", "--p", "3"]);
    let b = &v["blocks"][0];
    assert_eq!((b["basic_set"].as_u64(), b["brauer_count"].as_u64(), b["rank"].as_u64()), (Some(2), Some(2), Some(2)));
}

#[test]
fn isometry_reports_signed_local_labels() {
    let v = json(&["isometry", "--n", "5", "--p", "3"]);
    let first = &v["blocks"][0];
    let entries = first["local"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 3);
    assert!(entries.iter().all(|e| e["target"]["kind"] == "local" && e["target"]["side"] == "H"));
    assert_eq!(first["swaps"][0]["pair"], serde_json::json!([3, 2]));
    assert_eq!(first["swaps"][0]["perfect"], true);
    let alt = json(&["isometry", "--group", "alt", "--n", "6", "--p", "3"]);
    assert!(alt["blocks"].as_array().unwrap().iter().all(|b| b["local"].is_null()));
}
