use std::process::Command;

fn run(args: &[&str]) -> (Option<i32>, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_spechtkit")).args(args).output().expect("binary runs");
    (out.status.code(), String::from_utf8_lossy(&out.stdout).into_owned(), String::from_utf8_lossy(&out.stderr).into_owned())
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).expect("json output")
}

#[test]
fn restrict_and_mullineux() {
    let (code, out, _) = run(&["restrict", "8,6,2,1,1", "-p", "3"]);
    assert_eq!(code, Some(0));
    assert_eq!(json(&out)["restrictisation"], serde_json::json!([6, 5, 4, 2, 1]));
    let (code, out, _) = run(&["restrict", "4,4,4,3", "-p", "3", "--word", "1,2,1"]);
    assert_eq!(code, Some(0));
    assert_eq!(json(&out)["lightning"], true);
    let (code, _, _) = run(&["mullineux", "3,2", "-p", "3"]);
    assert_eq!(code, Some(0));
}

#[test]
fn verify_exit_codes_and_file() {
    let path = std::env::temp_dir().join(format!("spechtkit-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&["verify", "--suite", "jm_crosscheck", "-p", "3", "--max-n", "8", "--jobs", "2", "--json", p]);
    assert_eq!(code, Some(0));
    let file = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(out.trim_end(), file);
    assert_eq!(json(&out)["failures"], serde_json::json!([]));

    let (code, _, err) = run(&["verify", "--suite", "nope", "-p", "3", "--max-n", "4"]);
    assert_eq!(code, Some(2));
    assert!(json(&err)["error"].as_str().unwrap().contains("unknown suite"));
}

#[test]
fn carter_payne_nodes() {
    let (code, out, _) = run(&["hom", "cp", "6", "-p", "3", "--remove", "1,6", "--add", "2,1"]);
    assert_eq!(code, Some(0));
    assert!(json(&out)["composite_error"].is_string());
    let (code, _, _) = run(&["hom", "cp", "6", "-p", "3", "--remove", "1", "--add", "2,1"]);
    assert_eq!(code, Some(2));
}
