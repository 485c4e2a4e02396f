use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_assoc-poly"));
    c.env_remove("ASSOC_POLY_ORDER");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_one_value_per_degree() {
    let o = run(&["eval", "--family", "amp", "--beta", "1", "--c", "1/2", "--gamma", "1", "--x", "1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n3\n10\n");
}

#[test]
fn eval_json_and_variant() {
    let o = run(&[
        "eval", "--family", "amp", "--beta", "1", "--c", "1/2", "--gamma", "1", "--x", "1", "--n", "2", "--format", "json",
    ]);
    assert_eq!(stdout(&o).trim(), r#"["1","3","10"]"#);
    let o = run(&[
        "eval", "--family", "amp", "--beta", "1", "--c", "1/2", "--gamma", "1", "--x", "1", "--n", "2", "--variant", "amp-b",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("10"));
}

#[test]
fn bad_input_exits_two() {
    let o = run(&["eval", "--family", "amp", "--beta", "x/y", "--c", "1/2", "--x", "1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["eval", "--family", "amp", "--c", "1/2", "--x", "1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--beta"));
    let o = run(&["verify", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn coeffs_reproduce_eval() {
    let family = ["--family", "acp", "--a", "2", "--gamma", "1/2"];
    let mut args = vec!["coeffs"];
    args.extend(family);
    args.extend(["--n", "4"]);
    let csv = stdout(&run(&args));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,c0,c1,c2,c3,c4"));
    let x = assoc_poly::Rational::new(3.into(), 7.into());
    let mut args = vec!["eval"];
    args.extend(family);
    args.extend(["--x", "3/7", "--n", "4"]);
    let values: Vec<String> = stdout(&run(&args)).lines().map(String::from).collect();
    for (row, expected) in lines.zip(values) {
        let cs: Vec<assoc_poly::Rational> = row.split(',').skip(1).map(|c| c.parse().unwrap()).collect();
        let v = cs.iter().rev().fold(assoc_poly::Rational::from_integer(0.into()), |acc, c| acc * &x + c);
        assert_eq!(v.to_string(), expected);
    }
}

#[test]
fn gf_order_from_environment() {
    let o = bin()
        .args(["gf", "--id", "acp-gf", "--a", "2", "--gamma", "1", "--x", "1"])
        .env("ASSOC_POLY_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 5);
    let o = run(&["gf", "--id", "acp-gf", "--a", "2", "--gamma", "1", "--x", "1", "--order", "2"]);
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&["verify", "--suite", "finite-sum", "--seed", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["suite"], "finite-sum");
    assert_eq!(report["seed"], 3);
    assert_eq!(report["summary"]["failed"], 0);
}

#[test]
fn self_test_fails_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("self.json");
    let o = run(&["verify", "--suite", "self-test", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report["summary"]["failed"].as_u64().unwrap() >= 1);
}
