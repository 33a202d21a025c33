//! Golden-file tests: every invocation's stdout must match the committed
//! expectation byte for byte. Regenerate with
//! `HK_REGEN_GOLDEN=1 cargo test -p hk-cli --test golden`.

mod common;

use common::{cases, golden_path, run_hk};

#[test]
fn golden_outputs_match() {
    let regen = std::env::var_os("HK_REGEN_GOLDEN").is_some();
    for (name, args) in cases() {
        let out = run_hk(&args);
        assert!(
            out.status.success(),
            "`hk {}` failed: {}",
            args.join(" "),
            String::from_utf8_lossy(&out.stderr)
        );
        let path = golden_path(name);
        if regen {
            std::fs::write(&path, &out.stdout).expect("write golden");
            continue;
        }
        let expected = std::fs::read(&path)
            .unwrap_or_else(|e| panic!("missing golden {}: {e}", path.display()));
        if expected != out.stdout {
            panic!(
                "golden mismatch for `{name}`\n--- expected\n{}\n--- actual\n{}",
                String::from_utf8_lossy(&expected),
                String::from_utf8_lossy(&out.stdout)
            );
        }
    }
}

#[test]
fn exit_codes() {
    // Domain error: non-cycle graph for a cycle-only operation.
    let out = run_hk(&["fmap", "--path", "3", "--word", "1"]);
    assert_eq!(out.status.code(), Some(1));
    // Usage errors: unknown flag, missing file, zero lambda, zero budget.
    let out = run_hk(&["pi-check", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run_hk(&["pi-check", "tests/fixtures/does_not_exist.graph"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run_hk(&["rep", "--builtin", "M1", "--lambda", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run_hk(&["normalize", "--cycle", "3", "--word", "1", "--budget", "0"]);
    assert_eq!(out.status.code(), Some(2));
    // Domain error: malformed graph content (double arrow).
    let tmp = std::env::temp_dir().join("hk_double_arrow.graph");
    std::fs::write(&tmp, "2\n1 -> 2\n2 -> 1\n").unwrap();
    let out = run_hk(&["pi-check", tmp.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 3"), "missing offending line: {stderr}");
}

#[test]
fn word_letter_out_of_range_is_domain_error() {
    let out = run_hk(&["normalize", "--cycle", "3", "--word", "4 1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_failure_exits_nonzero() {
    // kmax is fine here; a corrupted file is exercised in the core tests.
    // Instead check verify's happy path exit and json shape.
    let out = run_hk(&["verify", "--builtin", "M0", "--lambda", "1/3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verified"], serde_json::Value::Bool(true));
}

#[test]
fn rep_json_shape() {
    let out = run_hk(&["rep", "--builtin", "M1", "--lambda", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim"], serde_json::json!(1));
    assert_eq!(v["lambda"], serde_json::json!("1"));
    assert_eq!(v["generators"].as_array().unwrap().len(), 9);
}

#[test]
fn catalog_json_schema_fields() {
    let out = run_hk(&["catalog", "--cycle", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], serde_json::json!(1));
    assert_eq!(v["pi"], serde_json::json!(true));
    assert_eq!(v["one_dim_count"], serde_json::json!(7));
    assert_eq!(v["maximal_ideal_structure"], serde_json::json!("tensor-product of per-component choices"));
    assert_eq!(v["theta_prime"].as_array().unwrap().len(), 3);
    assert_eq!(v["components"].as_array().unwrap().len(), 1);
}
