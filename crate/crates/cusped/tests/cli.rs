//! End-to-end checks of the command-line binary: exit codes and output
//! stability.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_cusped"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).into_owned(),
    )
}

#[test]
fn verify_example_exit_codes() {
    let (code, out) = run(&["verify-example", "borromean"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("[PASS]"));

    // Unknown example: input error.
    let (code, _) = run(&["verify-example", "unknown-example"]);
    assert_eq!(code, 2);

    // Missing fixture directory: skip notice with exit 3.
    let (code, out) = run(&[
        "--data-dir",
        "/definitely/not/a/path",
        "verify-example",
        "borromean",
    ]);
    assert_eq!(code, 3);
    assert!(out.contains("SKIPPED"));
}

#[test]
fn scan_and_audit_exit_zero() {
    let (code, out) = run(&["scan", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("feasible-multiply-transitive"));
    let (code, _) = run(&["scan", "9"]);
    assert_eq!(code, 2);
    let (code, out) = run(&["--json", "audit-gamma9"]);
    assert_eq!(code, 0);
    let parsed: serde_json::Value = serde_json::from_str(&out).expect("valid JSON envelope");
    assert_eq!(parsed["pass"], true);
    assert_eq!(parsed["results"]["order72_count"], 3);
}

#[test]
fn check_group_and_gl2z() {
    let dir = tempdir();
    let group_file = dir.join("s4.grp");
    std::fs::write(&group_file, "4\n(0 1)\n(0 1 2 3)\n").unwrap();
    let (code, out) = run(&["check-group", group_file.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("k=4"));

    let (code, out) = run(&["gl2z", "normal-form", "[[0,-1],[1,1]]"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("round-trip"));

    let closure_file = dir.join("ac.mats");
    std::fs::write(&closure_file, "[[-1,0],[0,1]]\n[[0,1],[1,0]]\n").unwrap();
    let (code, out) = run(&["gl2z", "closure", closure_file.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");

    // Malformed matrix: input error.
    let (code, _) = run(&["gl2z", "normal-form", "[[2,0],[0,1]]"]);
    assert_eq!(code, 2);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn json_output_is_stable_across_runs() {
    let a = run(&["--json", "scan", "3"]);
    let b = run(&["--json", "scan", "3"]);
    assert_eq!(a, b);
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("cusped-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
