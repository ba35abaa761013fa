//! Golden CLI invocations shared by the CLI and acceptance tests.

use std::path::PathBuf;
use std::process::{Command, Output};

pub const GOLDEN: &[(&str, &[&str])] = &[
    ("classes_sym4", &["classes", "sym:4"]),
    ("classes_cyc1", &["classes", "cyc:1"]),
    ("classes_klein", &["classes", "gens:(1 2)(3 4),(1 3)(2 4)"]),
    ("rationality_sym4", &["rationality", "sym:4"]),
    ("rationality_alt4", &["rationality", "alt:4"]),
    ("rationality_dih10", &["rationality", "dih:10"]),
    ("rationality_quat8", &["rationality", "quat:8"]),
    ("fixtable_sym4_subsets", &["fixtable", "sym:4", "--geometry", "subsets"]),
    ("fixtable_sym3_coset", &["fixtable", "sym:3"]),
    ("fixtable_sym3_coset_all", &["fixtable", "sym:3", "--scope", "all"]),
    ("separate_sym5", &["separate", "sym:5"]),
    ("separate_cyc6", &["separate", "cyc:6"]),
    ("separate_cyc1", &["separate", "cyc:1"]),
    ("separate_sym4_all", &["separate", "sym:4", "--scope", "all"]),
    ("demo_subsets_1", &["demo-subsets", "1"]),
    ("demo_subsets_4", &["demo-subsets", "4"]),
    ("demo_subsets_7", &["demo-subsets", "7"]),
    ("export_sym3", &["export", "sym:3"]),
    ("export_cyc1", &["export", "cyc:1"]),
    ("export_sym4_subsets", &["export", "sym:4", "--geometry", "subsets"]),
    ("classes_sym4_json", &["--format", "json", "classes", "sym:4"]),
    ("rationality_alt4_json", &["--format", "json", "rationality", "alt:4"]),
    (
        "fixtable_sym4_subsets_json",
        &["--format", "json", "fixtable", "sym:4", "--geometry", "subsets"],
    ),
    ("separate_cyc6_json", &["--format", "json", "separate", "cyc:6"]),
    ("demo_subsets_4_json", &["--format", "json", "demo-subsets", "4"]),
];

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratgeom"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden_path(name: &str) -> PathBuf {
    let ext = if name.ends_with("_json") { "json" } else { "txt" };
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/{name}.{ext}"))
}

/// Runs every golden command twice and compares both runs to the checked-in
/// file. Returns the names that differ.
pub fn golden_mismatches() -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut bad = Vec::new();
    for (name, args) in GOLDEN {
        let (first, second) = (stdout(args), stdout(args));
        let path = golden_path(name);
        if update {
            std::fs::write(&path, &first).unwrap();
        }
        let stored = std::fs::read_to_string(&path).unwrap_or_default();
        if first != second || first != stored {
            bad.push(name.to_string());
        }
    }
    bad
}
