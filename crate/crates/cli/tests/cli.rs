use std::process::{Command, Output};

fn fracstefan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracstefan")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

#[test]
fn wright_single_value() {
    let v: f64 = stdout(&fracstefan(&["wright", "--x", "-2", "--rho", "-0.5", "--beta", "1"]))
        .trim()
        .parse()
        .unwrap();
    // erfc(1)
    assert!((v - 0.157299207050285).abs() < 1e-14);
    assert_eq!(stdout(&fracstefan(&["wright", "--x", "0", "--rho", "-0.5", "--beta", "1"])), "1\n");
}

#[test]
fn wright_table() {
    let text = stdout(&fracstefan(&[
        "wright", "--from", "-1", "--to", "0", "--rows", "11", "--rho", "-0.3", "--beta", "0.7",
    ]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,value");
    assert_eq!(lines.len(), 12);
    assert!(lines[1].starts_with("-1,"));
    assert!(lines[11].starts_with("0,"));
}

#[test]
fn solve_reports_one_root() {
    let v = json(&fracstefan(&["solve", "--preset", "test1", "--alpha", "0.5", "--flavor", "rl"]));
    assert_eq!(v["flavor"], "rl");
    assert_eq!(v["roots_found"], 1);
    assert!(v["coefficient"].as_f64().unwrap() > 0.0);
    assert!(v["residual"].as_f64().unwrap().abs() < 1e-10);
}

#[test]
fn classical_ignores_alpha() {
    let a = stdout(&fracstefan(&["solve", "--preset", "test2", "--flavor", "classical"]));
    let b = stdout(&fracstefan(&["solve", "--preset", "test2", "--flavor", "classical", "--alpha", "0.3"]));
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| fracstefan(args).status.code().unwrap();
    assert_eq!(code(&["solve", "--preset", "test9", "--alpha", "0.5", "--flavor", "rl"]), 2);
    assert_eq!(code(&["solve", "--lam", "1", "--alpha", "0.5", "--flavor", "rl"]), 2);
    assert_eq!(code(&["solve", "--preset", "test1", "--alpha", "1.5", "--flavor", "caputo"]), 2);
    assert_eq!(code(&["solve", "--preset", "test1", "--alpha", "0.5", "--flavor", "nope"]), 2);
    assert_eq!(
        code(&["solve", "--preset", "test1", "--alpha", "0.5", "--flavor", "rl", "--scan-lo", "5", "--scan-hi", "6"]),
        3
    );
    assert_eq!(code(&["field", "--preset", "test2", "--alpha", "0.5", "--flavor", "rl", "--nx", "1"]), 2);
    assert_eq!(code(&["sweep", "--preset", "test1", "--alphas", "0.5,1.5"]), 2);
    assert_eq!(code(&["solve", "--config", "/nonexistent/run.json", "--flavor", "rl"]), 1);
}

#[test]
fn sweep_rows_are_sorted() {
    let text = stdout(&fracstefan(&["sweep", "--preset", "test3", "--alphas", "0.9,0.2,0.5"]));
    let alphas: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(alphas, ["0.2", "0.5", "0.9"]);
}

#[test]
fn config_file_sits_under_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(&cfg, r#"{"preset": "test4", "alpha": 0.6, "flavor": "caputo"}"#).unwrap();
    let path = cfg.to_str().unwrap();

    let from_file = json(&fracstefan(&["solve", "--config", path]));
    let explicit = json(&fracstefan(&["solve", "--preset", "test4", "--alpha", "0.6", "--flavor", "caputo"]));
    assert_eq!(from_file, explicit);

    let overridden = json(&fracstefan(&["solve", "--config", path, "--flavor", "rl"]));
    assert_eq!(overridden["flavor"], "rl");
    assert_ne!(overridden["coefficient"], from_file["coefficient"]);

    std::fs::write(&cfg, r#"{"preset": "test4", "typo": 1}"#).unwrap();
    assert_eq!(fracstefan(&["solve", "--config", path, "--flavor", "rl"]).status.code(), Some(2));
}

#[test]
fn field_output_is_reproducible_across_thread_counts() {
    let args = ["field", "--preset", "test2", "--alpha", "0.7", "--flavor", "caputo", "--nx", "21", "--nt", "10"];
    let one = Command::new(env!("CARGO_BIN_EXE_fracstefan"))
        .args(args)
        .env("FRACSTEFAN_THREADS", "1")
        .output()
        .unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_fracstefan"))
        .args(args)
        .env("FRACSTEFAN_THREADS", "4")
        .output()
        .unwrap();
    let text = stdout(&one);
    assert_eq!(text, stdout(&many));
    assert_eq!(text.lines().count(), 1 + 21 * 10);
    assert_eq!(text.lines().next(), Some("y,tau,u"));
}

#[test]
fn verify_passes_and_coarse_fails() {
    let v = json(&fracstefan(&["verify", "--preset", "test1", "--alpha", "0.5", "--flavor", "rl", "--grid", "512"]));
    assert_eq!(v["pass"], true);
    assert_eq!(v["pde"].as_array().unwrap().len(), 2);
    assert!(v["limit_interchange"]["relative_gap"].as_f64().unwrap() > 1e-6);

    let c = json(&fracstefan(&["verify", "--preset", "test1", "--flavor", "classical"]));
    assert_eq!(c["pass"], true);
    assert!(c["limit_interchange"].is_null());
    assert!(c["pde"][0]["ratio"].is_null());

    let out = fracstefan(&["verify", "--preset", "test2", "--alpha", "0.5", "--flavor", "rl", "--coarse"]);
    assert_eq!(out.status.code(), Some(4));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], false);
}
