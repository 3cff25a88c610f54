//! Golden-file acceptance for the CLI: every subcommand's JSON output must
//! match its committed golden byte-for-byte under `--seed 0`, and exit
//! codes must honor the 0/1/2 contract.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_ortho"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
        out.status.code().expect("exit code"),
    )
}

/// All covered invocations: (golden file stem, args).
fn cases() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("eval", vec!["eval", "hypot(3,4)", "--json"]),
        ("eval_sqrt2", vec!["eval", "1 + hypot(1,1)^3", "--json"]),
        (
            "closure",
            vec!["closure", "1,1,1,1", "1,-1,0,0", "--json"],
        ),
        ("line", vec!["line", "1,0,0,0", "0,1,0,0", "--json"]),
        (
            "axioms_r4",
            vec!["axioms", "--space", "R4", "--samples", "25", "--seed", "0", "--json"],
        ),
        (
            "axioms_h4",
            vec!["axioms", "--space", "H4", "--samples", "10", "--seed", "0", "--json"],
        ),
        (
            "transport",
            vec!["transport", "1,0,0,0;0,1,0,0", "0,0,1,1;1,-1,0,0", "--json"],
        ),
        ("rotate", vec!["rotate", "1,0,0,0", "1,1,0,0", "--json"]),
        (
            "flag",
            vec!["flag", "1,0,0,0", "0,1,0,0", "0,0,1,0", "0,0,0,1", "--json"],
        ),
        ("so2", vec!["so2", "--samples", "6", "--seed", "0", "--json"]),
        (
            "embed",
            vec![
                "embed",
                "1,1;1,hypot(1,1)",
                "--target",
                "2",
                "--samples",
                "10",
                "--seed",
                "0",
                "--json",
            ],
        ),
        (
            "quat_hypot",
            vec!["quat", "hypot", "1+1i+1j+1k", "1/2", "--json"],
        ),
        ("quat_no_sqrt2", vec!["quat", "no-sqrt2", "--json"]),
        (
            "classify",
            vec![
                "classify", "--size", "5", "--edges", "0-1,1-2,2-3,3-4,4-0", "--json",
            ],
        ),
        (
            "classify_boolean",
            vec![
                "classify", "--size", "4", "--edges",
                "0-1,0-2,0-3,1-2,1-3,2-3", "--json",
            ],
        ),
    ]
}

#[test]
fn criterion_10_cli_goldens() {
    let started = Instant::now();
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/goldens");
    let mut pass = true;
    for (stem, args) in cases() {
        let (stdout, stderr, code) = run(&args);
        if code != 0 {
            eprintln!("{stem}: exit {code}, stderr: {stderr}");
            pass = false;
            continue;
        }
        let golden_path = dir.join(format!("{stem}.json"));
        let golden = std::fs::read_to_string(&golden_path)
            .unwrap_or_else(|_| panic!("missing golden {golden_path:?}"));
        if stdout != golden {
            eprintln!("{stem}: output differs from {golden_path:?}");
            pass = false;
        }
        // JSON round-trip
        let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
        let reparsed: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        if v != reparsed {
            pass = false;
        }
    }
    println!(
        "ACCEPTANCE 10 (CLI golden files): {} [{:.2?}]",
        if pass { "PASS" } else { "FAIL" },
        started.elapsed()
    );
    assert!(pass, "acceptance criterion 10 (CLI golden files) failed");
}

#[test]
fn exit_code_contract() {
    // usage / parse errors exit 2
    let (_, _, code) = run(&["eval", "1/0"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["eval", "1 +"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["nonsense"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["axioms", "--space", "X4"]);
    assert_eq!(code, 2);
    // success exits 0
    let (_, _, code) = run(&["eval", "2^10"]);
    assert_eq!(code, 0);
}

#[test]
fn seeds_change_samples_deterministically() {
    let args = ["so2", "--samples", "5", "--seed", "1", "--json"];
    let (a, _, _) = run(&args);
    let (b, _, _) = run(&args);
    assert_eq!(a, b);
    let (c, _, _) = run(&["so2", "--samples", "5", "--seed", "2", "--json"]);
    assert_ne!(a, c);
}
