use std::process::Command;

fn triarray(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_triarray")).args(args).env("QF_THREADS", "2").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn enumerate_lists_in_canonical_order() {
    assert_eq!(triarray(&["enumerate", "--dim", "1,1"]), (0, "1,0/1\n0,1/1\n".into(), String::new()));
    let (code, out, _) = triarray(&["enumerate", "--dim", "3,3,3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 20);
    assert_eq!(out.lines().next(), Some("3,0,0/3,0/3"));
}

#[test]
fn transform_and_inverse() {
    assert_eq!(triarray(&["transform", "--triangle", "0,0,3/0,3/3"]).1, "3,0,0/3,0/3\n");
    assert_eq!(triarray(&["inverse", "--triangle", "0,1,2/1,2/3"]).1, "2,1,0/3,0/3\n");
    let (code, out, _) = triarray(&["transform", "--triangle", "0,1,2/1,2/3", "--trace"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.contains("raise(")));
    assert_eq!(out.lines().last(), Some("2,1,0/3,0/3"));
    let (_, out, _) = triarray(&["inverse", "--triangle", "0,1,2/1,2/3", "--trace"]);
    assert!(out.lines().any(|l| l.contains("B(") && l.contains("I=")));
}

#[test]
fn order_prints_relation() {
    assert_eq!(triarray(&["order", "--left", "0,1,2/1,2/3", "--right", "0,0,3/0,3/3"]).1, "<\n");
    assert_eq!(triarray(&["order", "--left", "0,0,3/0,3/3", "--right", "0,1,2/1,2/3"]).1, ">\n");
    assert_eq!(triarray(&["order", "--left", "1,0/1", "--right", "1,0/1"]).1, "=\n");
    assert_eq!(triarray(&["order", "--left", "0,1,2/1,2/3", "--right", "1,0,2/0,3/3"]).1, "incomparable\n");
}

#[test]
fn dim_and_json() {
    assert_eq!(triarray(&["dim", "--triangle", "0,0,3/0,3/3"]).1, "orbit_dim 18\nflag_dim 0\nfiber_dim 18\n");
    let (code, out, _) = triarray(&["--format", "json", "transform", "--triangle", "1,0/1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["output"], "0,1/1");
    let (_, out, _) = triarray(&["enumerate", "--dim", "1,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0], serde_json::json!({"n": 2, "chutes": [[1, 0], [1]]}));
}

#[test]
fn hasse_outputs() {
    let (_, dot, _) = triarray(&["hasse", "--dim", "3,3,3", "--dot"]);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 30);
    let (_, json, _) = triarray(&["hasse", "--dim", "3,3,3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["covers"].as_array().unwrap().len(), 30);
    assert_eq!(v["dims"].as_array().unwrap().len(), 20);
    let (_, text, _) = triarray(&["hasse", "--dim", "1,1"]);
    assert_eq!(text, "1,0/1 < 0,1/1\n");
}

#[test]
fn oracle_reports_agreement() {
    let (code, out, _) =
        triarray(&["oracle", "--triangle", "0,0,3/0,3/3", "--seed", "9", "--trials", "3", "--range", "7"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("3,0,0/3,0/3\n"));
    assert!(out.contains("agree: yes"));
}

#[test]
fn verify_summary() {
    let (code, out, _) = triarray(&["verify", "--max-n", "3", "--max-entry", "2"]);
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("24 properties, 24 passed, 0 failed"), "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn output_is_independent_of_thread_count() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_triarray"))
            .args(["verify", "--max-n", "3", "--max-entry", "2"])
            .env("QF_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("0"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["transform", "--triangle", "0,1/2/3"],
        vec!["transform", "--triangle", "0,2/1"],
        vec!["order", "--left", "1,0/1", "--right", "0,1/2"],
        vec!["enumerate"],
        vec!["enumerate", "--dim", "1,x"],
        vec!["frobnicate"],
    ] {
        let (code, out, err) = triarray(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}
