use std::process::Command;

fn symred(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_symred")).args(args).output().expect("spawn symred")
}

#[test]
fn unknown_case_is_a_usage_error() {
    let out = symred(&["nosuchcase"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown case"));
    assert_eq!(symred(&["sp:1:1", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(symred(&["sp:9:9"]).status.code(), Some(2));
}

#[test]
fn passing_case_exits_zero() {
    let out = symred(&["sp:1:1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("[pass] sp:1:1"), "{text}");
    assert!(text.contains("1/1 cases passed"));
}

#[test]
fn resource_limit_exits_three() {
    assert_eq!(symred(&["sym3", "--degree-bound", "2"]).status.code(), Some(3));
}

#[test]
fn json_is_reproducible_and_sorted() {
    let args = ["sym3", "sp:1:2", "poincare", "--json", "--no-timing", "--workers", "3"];
    let a = symred(&args);
    let b = symred(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["poincare", "sp:1:2", "sym3"]);
    for r in v.as_array().unwrap() {
        assert_eq!(r["millis"], 0);
        assert_eq!(r["verdict"], "pass");
    }
}

#[test]
fn export_writes_one_file_per_ideal() {
    let dir = tempfile::tempdir().unwrap();
    let out = symred(&["sym3", "--export-ideals", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert!(!files.is_empty());
    for f in files {
        let name = f.file_name().unwrap().to_string_lossy().into_owned();
        assert!(name.starts_with("sym3__") && name.ends_with(".txt"), "{name}");
        let body = std::fs::read_to_string(&f).unwrap();
        assert!(!body.trim().is_empty(), "{name} is empty");
    }
}
