use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn horrocks(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_horrocks"));
    cmd.current_dir(root()).args(args);
    for var in ["HORROCKS_FORMAT", "HORROCKS_CHAR", "HORROCKS_L_RANGE"] {
        cmd.env_remove(var);
    }
    cmd.envs(env.iter().copied());
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(root().join("tests/golden").join(name)).unwrap()
}

#[test]
fn golden_tables() {
    for table in ["spectra", "terms", "candidates", "dimensions"] {
        let out = horrocks(&["tables", "--paper", "--format", "csv", "--table", table], &[]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), golden(&format!("{table}.csv")), "{table}");
    }
    let out = horrocks(&["tables", "--paper"], &[]);
    assert_eq!(stdout(&out), golden("paper_tables.txt"));
}

#[test]
fn table_rows_of_interest() {
    let dims = golden("dimensions.csv");
    assert!(dims.lines().any(|l| l.starts_with("\"X_5^10\"") && l.ends_with("168,9,216,468,75")));
    let terms = golden("terms.csv");
    assert!(terms.contains("\"X_2^10\",1,\"ρ(-2)=1, ρ(-1)∈{2,3}\""));
    assert_eq!(golden("spectra.csv").lines().count(), 13);
}

#[test]
fn spectra_command() {
    let out = horrocks(&["spectra", "--c2", "10", "--format", "csv"], &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 1 + 12);
    let out = horrocks(&["spectra", "--c2", "4"], &[]);
    assert_eq!(stdout(&out).lines().count(), 1 + 2);
    let out = horrocks(&["spectra", "--c2", "7"], &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn candidates_command() {
    let out = horrocks(&["candidates", "--c2", "10", "--format", "json"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    let listed: Vec<_> = rows.iter().filter(|r| r["spectrum"] != "X_1^10" && r["spectrum"] != "X_12^10").collect();
    assert_eq!(listed.len(), 34);
    let r1 = rows.iter().filter(|r| r["verdict"]["kind"] == "ELIMINATED" && r["verdict"]["rule"] == "R1").count();
    assert_eq!(r1, 10);

    let out = horrocks(&["candidates", "--c2", "10", "--negative", "--format", "csv"], &[]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1 + 6);
    assert!(text.contains("ELIMINATED(R5)"));

    let out = horrocks(&["candidates", "--c2", "8", "--format", "csv"], &[]);
    let text = stdout(&out);
    for m in 9..=17 {
        assert!(text.contains(&format!("EXISTS(M_{m})")), "M_{m}");
    }
    assert_eq!(horrocks(&["candidates", "--c2", "0"], &[]).status.code(), Some(2));
}

#[test]
fn verify_command() {
    let out = horrocks(&["verify", "fixtures/prop3_monad_1.json", "--spectrum", "1,2,1,1"], &[]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = horrocks(&["verify", "fixtures/prop3_monad_2.json", "--spectrum", "1,2,2"], &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("h1(E(-1)): 11"));
    let out = horrocks(&["verify", "fixtures/prop3_monad_1.json", "--spectrum", "1,2,2"], &[]);
    assert_eq!(out.status.code(), Some(1));
    let both = horrocks(&["verify", "fixtures/prop3_monad_1.json", "fixtures/prop3_monad_2.json", "--format", "json"], &[]);
    assert_eq!(both.status.code(), Some(0));
    let reports: Vec<serde_json::Value> = serde_json::from_slice(&both.stdout).unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[1]["report"]["outcome"], "PASS");
}

#[test]
fn verify_rejects_bad_input() {
    let dir = std::env::temp_dir().join(format!("horrocks-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let corrupt = dir.join("corrupt.json");
    let text = std::fs::read_to_string(root().join("fixtures/prop3_monad_1.json")).unwrap();
    std::fs::write(&corrupt, &text[..text.len() / 2]).unwrap();
    let c = corrupt.to_str().unwrap();
    let out = horrocks(&["verify", c], &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert_eq!(horrocks(&["verify", "no/such/file.json"], &[]).status.code(), Some(2));
    let f = "fixtures/prop3_monad_1.json";
    assert_eq!(horrocks(&["verify", f, "--spectrum", "1,2,x"], &[]).status.code(), Some(2));
    assert_eq!(horrocks(&["verify", f, "--char", "32001"], &[]).status.code(), Some(2));
    assert_eq!(horrocks(&["verify", f, "--l-range", "3"], &[]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
    assert!(!Path::new(c).exists());
}

#[test]
fn environment_overrides() {
    let out = horrocks(&["spectra", "--c2", "6"], &[("HORROCKS_FORMAT", "csv")]);
    assert!(stdout(&out).starts_with("\"label\",\"multiplicities\",\"spectrum\""));
    let out = horrocks(
        &["verify", "fixtures/prop3_monad_2.json", "--spectrum", "1,2,2"],
        &[("HORROCKS_CHAR", "101"), ("HORROCKS_L_RANGE", "-3..-2")],
    );
    let text = stdout(&out);
    assert!(text.contains("mod 101"), "{text}");
    assert!(!text.contains("h1(E(-8))"));
    // flags win over the environment
    let out = horrocks(&["spectra", "--c2", "6", "--format", "json"], &[("HORROCKS_FORMAT", "csv")]);
    assert!(stdout(&out).starts_with('['));
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["tables", "--paper", "--format", "json"];
    let first = horrocks(&args, &[]);
    for _ in 0..3 {
        assert_eq!(horrocks(&args, &[]).stdout, first.stdout);
    }
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["dimensions"].as_array().unwrap().len(), 7);
}
