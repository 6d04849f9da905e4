use std::fs;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_seahorse"))
}

#[test]
fn run_writes_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("exp.toml");
    fs::write(
        &cfg,
        "problems = [\"spring\"]\nruns = 2\n[[algorithms]]\nname = \"msho\"\nparams = { pop = 10, max_iter = 20 }\n\
         [[algorithms]]\nname = \"sho\"\nparams = { pop = 10, max_iter = 20 }\n",
    )
    .unwrap();
    let out = dir.path().join("out");
    let status = bin()
        .args(["run", cfg.to_str().unwrap(), "--out", out.to_str().unwrap(), "--threads", "1"])
        .status()
        .unwrap();
    assert!(status.success());
    for f in ["runs.csv", "convergence.csv", "report.json", "report.txt"] {
        assert!(out.join(f).exists(), "{f}");
    }
}

#[test]
fn bad_config_prints_error_line() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("exp.toml");
    fs::write(&cfg, "algorithms = [\"msho\"]\nproblems = [\"sprng\"]\n").unwrap();
    let out = bin().args(["run", cfg.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: kind=parse message="), "{err}");
    assert!(err.contains("problems[0]") && err.contains("spring"), "{err}");
}

#[test]
fn missing_config_is_io_error() {
    let out = bin().args(["run", "/nonexistent/exp.toml"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error: kind=io"));
}

#[test]
fn listings() {
    let out = bin().args(["list-problems", "--json"]).output().unwrap();
    let names: Vec<String> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(names.len(), 19);
    let out = bin().arg("list-algorithms").output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "sho\nmsho\n");
    let out = bin().args(["validate-fixtures"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().any(|l| l.starts_with("refrigeration") && l.contains("FLAG")));
}
