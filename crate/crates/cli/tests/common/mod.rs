use std::path::PathBuf;
use std::process::{Command, Output};

/// The golden invocations: (name, args). Paths are relative to the package
/// root; `run_hk` sets the working directory accordingly.
pub fn cases() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("pi_check_c3", vec!["pi-check", "tests/fixtures/c3.graph"]),
        ("pi_check_joined", vec!["pi-check", "tests/fixtures/two_cycles_path.graph"]),
        ("core_pendant", vec!["core", "tests/fixtures/pendant.graph"]),
        ("components_c3_c4", vec!["components", "tests/fixtures/c3_c4.graph"]),
        ("idempotents_cycle3", vec!["idempotents", "--cycle", "3"]),
        ("idempotents_path2", vec!["idempotents", "--path", "2"]),
        ("normalize_braid", vec!["normalize", "--cycle", "3", "--word", "1 2 1"]),
        ("equal_braid", vec!["equal", "--cycle", "3", "--left", "1 2 1", "--right", "2 1 2"]),
        ("equal_distinct", vec!["equal", "--cycle", "3", "--left", "3 2 1", "--right", "3 1 2"]),
        ("fmap_level0", vec!["fmap", "--cycle", "3", "--word", "3 2 1"]),
        ("fmap_level1", vec!["fmap", "--cycle", "3", "--word", "3 1 2"]),
        ("support_level1", vec!["support", "--cycle", "3", "--word", "3 1 2"]),
        ("classify_level1", vec!["classify", "--cycle", "3", "--word", "3 1 2"]),
        ("classify_pair", vec!["classify", "--cycle", "3", "--word", "3 1"]),
        ("sandwich_m1", vec!["sandwich", "--builtin", "M1"]),
        ("sandwich_m0_eval", vec!["sandwich", "--builtin", "M0", "--lambda", "-1"]),
        ("rep_m1_one", vec!["rep", "--builtin", "M1", "--lambda", "1", "--json"]),
        ("rep_m0_minus_one", vec!["rep", "--builtin", "M0", "--lambda", "-1", "--json"]),
        ("verify_m1", vec!["verify", "--builtin", "M1", "--lambda", "2", "--kmax", "4"]),
        ("extend_m0", vec!["extend", "--builtin", "M0", "--lambda", "-1"]),
        ("catalog_c3_json", vec!["catalog", "--cycle", "3", "--json"]),
        ("catalog_c3_singleton", vec!["catalog", "tests/fixtures/c3_singleton.graph", "--json"]),
        ("catalog_joined_text", vec!["catalog", "tests/fixtures/two_cycles_path.graph"]),
        ("sandwich_from_file", vec!["sandwich", "--data", "tests/fixtures/m1.sandwich"]),
        (
            "catalog_c3_with_data",
            vec![
                "catalog",
                "--cycle",
                "3",
                "--data",
                "tests/fixtures/m0.sandwich",
                "--data",
                "tests/fixtures/m1.sandwich",
            ],
        ),
        (
            "extend_m1_at_negative",
            vec!["extend", "--builtin", "M1", "--lambda", "2", "--exp", "-1", "--a", "1", "--b", "2"],
        ),
    ]
}

pub fn package_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    package_root().join("tests").join("golden").join(format!("{name}.txt"))
}

pub fn run_hk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hk"))
        .args(args)
        .current_dir(package_root())
        .output()
        .expect("binary runs")
}
