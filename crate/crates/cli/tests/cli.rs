//! End-to-end tests of the command-line interface, including the cache
//! round trip between `chain` and `design-check`.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spherecode"))
}

fn tmp_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("spherecode-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn lp_spherical_certificate() {
    let out = bin()
        .args([
            "lp",
            "spherical",
            "--poly",
            "(x+1/2)^2*(x+1/8)^2*(x-1/4)",
            "--dim",
            "22",
            "--t",
            "1/4",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("891"));
}

#[test]
fn lp_spherical_invalid_certificate_exits_1() {
    let out = bin()
        .args([
            "lp",
            "spherical",
            "--poly",
            "0,0,1",
            "--dim",
            "22",
            "--t",
            "1/4",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn lp_binary_and_constant_weight() {
    let out = bin()
        .args(["lp", "binary", "--n", "21", "--dmin", "8", "--dmax", "16"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "512");

    let out = bin()
        .args(["lp", "binary", "--n", "22", "--dmin", "8", "--dmax", "22"])
        .output()
        .unwrap();
    assert_eq!(stdout(&out).trim(), "1024");

    let out = bin()
        .args(["lp", "cw", "--n", "21", "--d", "8", "--w", "5"])
        .output()
        .unwrap();
    assert_eq!(stdout(&out).trim(), "21");
}

#[test]
fn usage_errors_exit_2() {
    let out = bin().args(["lp", "binary", "--n", "21"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args([
            "lp",
            "spherical",
            "--poly",
            "(x+1",
            "--dim",
            "22",
            "--t",
            "1/4",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_input_exits_3() {
    let out = bin()
        .args([
            "design-check",
            "--input",
            "/nonexistent/code.vset",
            "--max-k",
            "3",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn golay_json_shape() {
    let out = bin().args(["--format", "json", "golay"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["words"], 4096);
    assert_eq!(v["octads"], 759);
    assert_eq!(v["weight_distribution"]["12"], 2576);
}

#[test]
fn chain_design_check_scheme_round_trip() {
    let dir = tmp_dir("roundtrip");
    let cache = dir.join("cache");
    let file = dir.join("c891.vset");

    let out = bin()
        .args(["--cache-dir"])
        .arg(&cache)
        .args(["chain", "--depth", "2", "--out"])
        .arg(&file)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    // byte-reproducible export
    let first = std::fs::read(&file).unwrap();
    let out = bin()
        .args(["--cache-dir"])
        .arg(&cache)
        .args(["chain", "--depth", "2", "--out"])
        .arg(&file)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        first,
        std::fs::read(&file).unwrap(),
        "chain export not reproducible"
    );

    // the exported code re-reads into the same design strength the
    // in-memory pipeline certifies
    let out = bin()
        .args([
            "--format",
            "json",
            "design-check",
            "--max-k",
            "6",
            "--input",
        ])
        .arg(&file)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["size"], 891);
    assert_eq!(v["dim"], 22);
    assert_eq!(v["design_strength"], 5);

    // intersection numbers from the file
    let out = bin()
        .args(["scheme", "--input"])
        .arg(&file)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("P_1(1/4,1/4) = 336"));
    assert!(text.contains("invariants: pass"));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn unique_891_json_deterministic_across_thread_counts() {
    let dir = tmp_dir("unique");
    let cache = dir.join("cache");
    let run = |threads: &str| -> serde_json::Value {
        let out = bin()
            .args(["--cache-dir"])
            .arg(&cache)
            .args(["--format", "json", "--threads", threads, "unique", "891"])
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        serde_json::from_str(&stdout(&out)).unwrap()
    };
    let mut a = run("1");
    let mut b = run("2");
    assert_eq!(a["pass"], true);
    // timings are excluded from the determinism contract
    a.as_object_mut().unwrap().remove("timings");
    b.as_object_mut().unwrap().remove("timings");
    assert_eq!(a, b, "JSON output changed across thread counts");
    std::fs::remove_dir_all(&dir).ok();
}
