use std::path::PathBuf;
use std::process::{Command, Output};

use turan_lab::classes::{sample, ClassSpec};
use turan_lab::Polynomial;

fn turan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_turan")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("turan-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

#[test]
fn ratio_of_x_minus_one() {
    let dir = scratch("ratio");
    let path = dir.join("p.json");
    std::fs::write(&path, r#"{"leading": [1, 0], "zeros": [[1, 0]]}"#).unwrap();
    let out = turan(&["ratio", "--poly", path.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "0.5");

    let out = turan(&["ratio", "--zeros", "[[1,0]]", "--interval", "-1", "0", "--format", "json"]);
    assert_eq!(json(&out)["value"], 0.5);
}

#[test]
fn lemma32_single_zero() {
    let v = json(&turan(&["lemma32", "--deg", "1", "--zeros", "[[0,0]]", "--alpha", "4"]));
    assert!((v["measure"].as_f64().unwrap() - 0.5).abs() < 1e-9);
    assert!((v["bound"].as_f64().unwrap() - 2.828).abs() < 1e-3);
    assert_eq!(v["satisfied"], true);
}

#[test]
fn search_linear_pinned() {
    let args = ["search", "--n", "1", "--k", "0", "--pin", "--budget", "5000", "--restarts", "8", "--seed", "7"];
    let v = json(&turan(&args));
    assert!((v["ratio"].as_f64().unwrap() - 0.5).abs() < 1e-6);
    assert_eq!(v["within_bracket"], true);
}

#[test]
fn exit_statuses() {
    assert_eq!(turan(&["ratio", "--zeros", "[[1,0]]", "--bogus"]).status.code(), Some(2));
    assert_eq!(turan(&["ratio"]).status.code(), Some(2));
    assert_eq!(turan(&["sample", "--n", "2", "--k", "0", "--format", "csv"]).status.code(), Some(2));

    let out = turan(&["construct", "--n", "4", "--k", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("precondition"), "{err}");

    assert_eq!(turan(&["remark", "--epsilon", "1.5", "--n", "2"]).status.code(), Some(1));
}

#[test]
fn sweep_output_is_deterministic_and_ordered() {
    let args = ["sweep", "--n-values", "4,2", "--k-values", "1,0", "--pin", "--budget", "300", "--restarts", "3"];
    let a = stdout(&turan(&args));
    let b = stdout(&turan(&args));
    assert_eq!(a, b);
    let cells: Vec<(String, String)> = a
        .lines()
        .skip(1)
        .map(|l| {
            let mut f = l.split(',');
            (f.next().unwrap().to_string(), f.next().unwrap().to_string())
        })
        .collect();
    let expected = [("2", "0"), ("2", "1"), ("4", "0"), ("4", "1")];
    assert_eq!(cells, expected.map(|(n, k)| (n.to_string(), k.to_string())));
    assert!(a.starts_with("n,k,ratio,"));
}

#[test]
fn sample_round_trips_through_ratio() {
    let dir = scratch("sample");
    let path = dir.join("s.json");
    let out = turan(&["sample", "--n", "6", "--k", "2", "--pin", "--seed", "11", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed = Polynomial::from_json_str(&text).unwrap();
    let direct = sample(&ClassSpec::new(6, 2, true).unwrap(), 11).unwrap();
    assert_eq!(parsed, direct);

    let via_cli: f64 = stdout(&turan(&["ratio", "--poly", path.to_str().unwrap()])).trim().parse().unwrap();
    let in_process = turan_lab::bounds::turan_ratio(&direct, turan_lab::Interval::unit()).unwrap();
    assert_eq!(via_cli, in_process.value);
}

#[test]
fn construct_dumps_the_chain() {
    let dir = scratch("chain");
    let args = ["construct", "--n", "6", "--k", "2", "--budget", "400", "--restarts", "2", "--dump", dir.to_str().unwrap()];
    let report = json(&turan(&args));
    assert_eq!(report["class_check"]["member"], true);
    let read = |name: &str| Polynomial::from_json_str(&std::fs::read_to_string(dir.join(name)).unwrap()).unwrap();
    let (q, r, p) = (read("Q.json"), read("R.json"), read("P.json"));
    assert_eq!((q.degree(), r.degree(), p.degree()), (6, 6, 12));
    let reported: Polynomial = serde_json::from_value(report["polynomial"].clone()).unwrap();
    assert_eq!(p, reported);
}

#[test]
fn verdict_table() {
    let out = stdout(&turan(&["verdict", "--zeros", "[[1,0]]", "--n", "1", "--k", "0", "--pin"]));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,k,ratio,err,bound_source,bound_value,pass"));
    assert!(lines.all(|l| l.ends_with(",true")));
}
