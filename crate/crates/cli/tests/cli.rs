use assert_cmd::Command;

fn bin() -> Command {
    let mut c = Command::cargo_bin("pdedekind").unwrap();
    c.env_remove("PDEDEKIND_CONFIG");
    c
}

fn stdout(args: &[&str]) -> String {
    let out = bin().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn classical_sum() {
    let out = stdout(&["compute", "classical", "--d", "1", "--c", "3"]);
    assert_eq!(out.lines().next(), Some("1/18"));
    assert!(out.contains("0.055555555555556"));
}

#[test]
fn ramanujan_p1_at_zero() {
    let out = stdout(&["compute", "P", "--n", "1", "--x", "0", "--seq", "ramanujan:k=6"]);
    assert_eq!(out.lines().next(), Some("-1"));
}

#[test]
fn periodic_sum_with_auto_b() {
    // direct summation: b = 1, Σ_{n=1}^{6} B(n) P1(n/6) P1(4n/3, A_3) with A, B principal mod 2
    let out = stdout(&[
        "compute", "periodic", "--family", "BbAc", "--d", "4", "--c", "3", "--b", "auto", "--A", "char:k=2,i=0", "--B",
        "char:k=2,i=0",
    ]);
    assert_eq!(out.lines().next(), Some("2/9"));
}

#[test]
fn gauss_sum_mod_4() {
    let out = stdout(&["compute", "P", "--n", "1", "--x", "0", "--seq", "gauss:k=4,i=1"]);
    assert_eq!(out.lines().next(), Some("z4^1"));
}

fn column(out: &str, col: usize) -> Vec<String> {
    out.lines()
        .skip(1)
        .take_while(|l| !l.starts_with("parity"))
        .map(|l| l.split('\t').nth(col).unwrap().to_string())
        .collect()
}

#[test]
fn sequence_tables() {
    assert_eq!(column(&stdout(&["sequence", "ramanujan:k=4"]), 1), ["2", "0", "-2", "0"]);
    assert_eq!(column(&stdout(&["sequence", "dft:(const:k=3)"]), 1), ["1", "0", "0"]);
    let out = stdout(&["sequence", "char:k=6,i=1"]);
    assert_eq!(column(&out, 1), ["0", "1", "0", "0", "0", "-1"]);
    assert!(out.contains("parity: odd"));
    assert!(out.contains("character: imprimitive"));
}

#[test]
fn empty_verify() {
    let out = stdout(&["verify", "--filter", "nonexistent"]);
    assert_eq!(out.trim(), "0/0");
}

#[test]
fn verify_example_is_deterministic() {
    let args = ["verify", "--filter", "N_ex1", "--no-timing", "--format", "json", "--jobs", "3"];
    let a = stdout(&args);
    assert_eq!(a.lines().last(), Some("5/5"));
    for line in a.lines().take(5) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        for key in ["id", "params", "mode", "residual", "pass", "tail", "elapsed_ms"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
    }
    assert_eq!(a, stdout(&args));
}

#[test]
fn failing_verification_exits_1() {
    bin().args(["verify", "--filter", "N_cauchy"]).assert().code(1);
}

#[test]
fn domain_errors_exit_2() {
    let out = bin().args(["compute", "classical", "--d", "2", "--c", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd(c,d) = 1"));
    bin().args(["sequence", "bogus:k=3"]).assert().code(2);
    bin().args(["compute", "classical", "--d", "1"]).assert().code(2);
    bin().args(["frobnicate"]).assert().code(2);
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pd.conf");
    std::fs::write(&path, "format = json\n").unwrap();
    let out = bin().env("PDEDEKIND_CONFIG", &path).args(["compute", "classical", "--d", "1", "--c", "3"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], "1/18");
    let out = bin()
        .env("PDEDEKIND_CONFIG", &path)
        .args(["--format", "text", "compute", "classical", "--d", "1", "--c", "3"])
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("1/18\n"));
    std::fs::write(&path, "tolerance.N_cauchy = 0.5\n").unwrap();
    bin().env("PDEDEKIND_CONFIG", &path).args(["verify", "--filter", "N_cauchy"]).assert().code(0);
    std::fs::write(&path, "jobs = 0\n").unwrap();
    bin().env("PDEDEKIND_CONFIG", &path).args(["list-identities"]).assert().code(2);
}

#[test]
fn lists_every_identity() {
    let out = stdout(&["list-identities"]);
    assert_eq!(out.lines().count(), 30);
    assert!(out.lines().any(|l| l.starts_with("N14 ")));
}
