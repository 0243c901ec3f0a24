use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hecke-wgraph"));
    c.env_remove("HECKE_WGRAPH_CACHE_DIR");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn group_order() {
    assert!(stdout(&["group", "--type", "I2(7)"]).contains("order 14"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&["group", "--type", "B3", "--format", "json"])).unwrap();
    assert_eq!(v["order"], 48);
    assert_eq!(
        v["lengthDistribution"],
        serde_json::json!([1, 3, 5, 7, 8, 8, 7, 5, 3, 1])
    );
}

#[test]
fn matrix_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a2.txt");
    fs::write(&path, "2\n1 3\n3 1\n").unwrap();
    assert!(stdout(&["group", "--matrix", path.to_str().unwrap()]).contains("order 6"));
    fs::write(&path, "3\n1 3 3\n3 1 3\n3 3 1\n").unwrap();
    let out = run(&["group", "--matrix", path.to_str().unwrap(), "--cap", "100"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("100"));
}

#[test]
fn wgraph_a2_json_and_dot() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["wgraph", "--type", "A2", "--j", "1", "--format", "json"])).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 2);
    let edges = v["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 1);
    assert_eq!(edges[0]["mu"], 1);
    let dot = stdout(&["wgraph", "--type", "A2", "--j", "1", "--format", "dot"]);
    assert!(dot.contains("label=\"s1|1\"") && dot.contains("label=\"1\""));
}

#[test]
fn type_a_commands() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["transition", "--lambda", "2,1", "--format", "json"])).unwrap();
    assert_eq!(v["P"][0][1], serde_json::json!([[1, -1]]));
    assert_eq!(v["mu"][0][1], 1);
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["specht", "--lambda", "2,1", "--format", "json"])).unwrap();
    assert_eq!(v["actions"][0]["matrix"][0][1], serde_json::json!([[2, -1]]));
    let v: serde_json::Value = serde_json::from_str(&stdout(&["murphy", "--n", "3", "--format", "json"])).unwrap();
    assert_eq!((v["count"].as_u64(), v["rank"].as_u64()), (Some(6), Some(6)));
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["specht", "--type", "A2", "--j", "1", "--format", "json"])).unwrap();
    assert_eq!(v["basis"], serde_json::json!(["s1", "s2s1"]));
}

#[test]
fn rank_diagnostic_a2() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["rankdiag", "--type", "A2", "--format", "json"])).unwrap();
    assert_eq!(v["groupOrder"], 6);
    assert_eq!(v["sumOfSquares"], 10);
    assert!(v["rank"].as_u64().unwrap() <= 6);
    assert!(v["note"].as_str().unwrap().contains("not form a basis"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["group"][..],
        &["group", "--type", "A2", "--bogus"],
        &["group", "--type", "Q5"],
        &["ej", "--type", "A2", "--j", "3"],
        &["specht", "--lambda", "1,2"],
        &["specht", "--lambda", "2,1", "--type", "A2"],
        &["murphy", "--n", "5", "--cap", "100"],
        &["cells", "--type", "A2", "--format", "dot"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = run(&["murphy", "--n", "5", "--cap", "100"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap is 100"));
    let out = run(&["group", "--type", "A2", "--bogus"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--bogus"));
}

#[test]
fn verify_b3_fast_passes() {
    let out = run(&["verify", "--type", "B3", "--level", "fast"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("all assertive suites passed"));
}

fn cache_file(dir: &Path) -> std::path::PathBuf {
    let entries: Vec<_> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(entries.len(), 1);
    entries[0].clone()
}

#[test]
fn corrupted_cache_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    stdout(&["klpoly", "--type", "A3", "--cache-dir", d]);
    let path = cache_file(dir.path());
    let mut cache: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    // flip the sign of the coefficient of T_e in C_{s1}
    let column = cache["columns"][1].as_array_mut().unwrap();
    let entry = column.iter_mut().find(|e| e[0] == 0).unwrap();
    entry[1] = serde_json::json!([[1, 1]]);
    fs::write(&path, serde_json::to_string(&cache).unwrap()).unwrap();
    let out = run(&["verify", "--type", "A3", "--cache-dir", d]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL kl-basis"));
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["cells", "--type", "A2"])
        .env("HECKE_WGRAPH_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(cache_file(dir.path())
        .file_name()
        .unwrap()
        .to_str()
        .unwrap()
        .starts_with("kl-"));
    let warm = bin()
        .args(["cells", "--type", "A2"])
        .env("HECKE_WGRAPH_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.stdout, warm.stdout);
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["group", "--type", "B3", "--format", "json"],
        vec!["klpoly", "--type", "A3", "--format", "json"],
        vec!["ej", "--type", "B3", "--j", "1,3", "--format", "json"],
        vec!["wgraph", "--type", "B3", "--j", "2", "--format", "dot"],
        vec!["cells", "--type", "A3"],
        vec!["specht", "--lambda", "3,2"],
        vec!["murphy", "--n", "3"],
        vec!["transition", "--lambda", "2,2", "--format", "json"],
        vec!["verify", "--type", "A2", "--level", "full", "--format", "json"],
        vec!["rankdiag", "--type", "B2"],
    ];
    for args in commands {
        assert_eq!(stdout(&args), stdout(&args), "{args:?}");
        let files: Vec<Vec<u8>> = (0..2)
            .map(|k| {
                let path = dir.path().join(format!("out{k}"));
                let mut full = args.clone();
                full.extend(["--output", path.to_str().unwrap()]);
                assert_eq!(run(&full).status.code(), Some(0));
                fs::read(&path).unwrap()
            })
            .collect();
        assert_eq!(files[0], files[1], "{args:?}");
        assert_eq!(files[0], stdout(&args).into_bytes());
    }
}
