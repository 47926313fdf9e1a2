use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::tempdir;

fn umoo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umoo"))
        .args(args)
        .env_remove("UMOO_SEED")
        .output()
        .expect("run umoo")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn read(dir: &Path, name: &str) -> String {
    fs::read_to_string(dir.join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn metrics(dir: &Path) -> serde_json::Value {
    serde_json::from_str(&read(dir, "metrics.json")).unwrap()
}

const FILES: [&str; 4] = ["control.csv", "operational.csv", "front.csv", "metrics.json"];

#[test]
fn example_prints_front_and_claims() {
    let o = umoo(&["example"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for line in [
        "front: p1 p2 p3 p4",
        "p2 ≺ q1: true",
        "q1 ≺ q3: true",
        "q1 ~ p1: true",
        "p3 ≺ q2: true",
    ] {
        assert!(s.contains(line), "missing {line:?} in\n{s}");
    }
}

#[test]
fn props_core_passes() {
    let o = umoo(&["props", "--suite", "core", "--n", "100"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("20/20 properties met their expected verdict"));
}

#[test]
fn props_m2_seq_reports_expected_falsification() {
    let o = umoo(&["props", "--suite", "m2-seq"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(
        s.contains("m2-seq/M2 length (expect falsify): +++ OK, falsified as expected"),
        "{s}"
    );
    assert!(
        s.contains("m2-seq/M2 worst (expect pass): +++ OK, passed 10000 tests"),
        "{s}"
    );
}

#[test]
fn props_unknown_suite_is_a_usage_error() {
    let o = umoo(&["props", "--suite", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown suite"));
}

#[test]
fn props_list_names_suites() {
    let o = umoo(&["props", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("minu-interval"));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    assert_eq!(umoo(&["sample", "--bogus"]).status.code(), Some(2));
}

#[test]
fn sample_is_byte_identical_across_runs() {
    let (a, b) = (tempdir().unwrap(), tempdir().unwrap());
    for d in [&a, &b] {
        let o = umoo(&[
            "sample",
            "--n",
            "3000",
            "--seed",
            "9",
            "--out",
            d.path().to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    for f in FILES {
        assert_eq!(
            fs::read(a.path().join(f)).unwrap(),
            fs::read(b.path().join(f)).unwrap(),
            "{f}"
        );
    }
    let control = read(a.path(), "control.csv");
    assert!(control.starts_with("x,y,safe,pareto\n"));
    assert_eq!(control.lines().count(), 3001);
    let m = metrics(a.path());
    assert_eq!(m["evaluations"], 3000);
    let fronts = read(a.path(), "front.csv").lines().count() - 1;
    assert_eq!(m["front_size"].as_u64().unwrap() as usize, fronts);
    // the sequential path writes the same bytes
    let c = tempdir().unwrap();
    umoo(&[
        "--sequential",
        "sample",
        "--n",
        "3000",
        "--seed",
        "9",
        "--out",
        c.path().to_str().unwrap(),
    ]);
    assert_eq!(read(a.path(), "control.csv"), read(c.path(), "control.csv"));
}

#[test]
fn sample_rows_are_consistent() {
    let d = tempdir().unwrap();
    umoo(&[
        "sample",
        "--n",
        "500",
        "--seed",
        "4",
        "--out",
        d.path().to_str().unwrap(),
    ]);
    let control: Vec<Vec<String>> = read(d.path(), "control.csv")
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    let operational: Vec<Vec<String>> = read(d.path(), "operational.csv")
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    assert_eq!(control.len(), 500);
    for (c, o) in control.iter().zip(&operational) {
        let (x, y): (f64, f64) = (c[0].parse().unwrap(), c[1].parse().unwrap());
        assert!((-5.0..=5.0).contains(&x) && (-5.0..=5.0).contains(&y));
        let f2: f64 = o[1].parse().unwrap();
        assert_eq!(c[2], if f2 <= 0.15 { "1" } else { "0" });
        assert_eq!(c[2..], o[2..]);
    }
}

#[test]
fn empty_sample_writes_headers_only() {
    let d = tempdir().unwrap();
    let o = umoo(&["sample", "--n", "0", "--out", d.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(read(d.path(), "control.csv"), "x,y,safe,pareto\n");
    assert_eq!(read(d.path(), "operational.csv"), "f1,f2,safe,pareto\n");
    assert_eq!(read(d.path(), "front.csv"), "f1,f2\n");
    assert_eq!(metrics(d.path())["f1min"], serde_json::Value::Null);
}

#[test]
fn malformed_rect_is_a_usage_error() {
    for bad in ["1,2", "a,b,c,d", "5,-5,-5,5", "-5,5,-5,5,1"] {
        let o = umoo(&["sample", "--n", "10", "--rect", bad, "--out", "/tmp/never-written"]);
        assert_eq!(o.status.code(), Some(2), "{bad}");
    }
}

#[test]
fn unwritable_output_is_a_runtime_error() {
    let d = tempdir().unwrap();
    let file = d.path().join("plain-file");
    fs::write(&file, "x").unwrap();
    let o = umoo(&["sample", "--n", "10", "--out", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn seed_comes_from_env_unless_given() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let d = tempdir().unwrap();
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_umoo"));
        cmd.args(["sample", "--n", "50", "--out", d.path().to_str().unwrap()]);
        if let Some(s) = flag {
            cmd.args(["--seed", s]);
        }
        match env {
            Some(e) => cmd.env("UMOO_SEED", e),
            None => cmd.env_remove("UMOO_SEED"),
        };
        assert!(cmd.output().unwrap().status.success());
        read(d.path(), "control.csv")
    };
    let default = run(None, None);
    assert_eq!(default, run(None, Some("137")));
    assert_ne!(default, run(Some("5"), None));
    assert_eq!(run(Some("5"), None), run(None, Some("5")));
    assert_eq!(run(Some("5"), Some("137")), default);
}

#[test]
fn evolve_counts_evaluations_and_repeats() {
    let (a, b) = (tempdir().unwrap(), tempdir().unwrap());
    for d in [&a, &b] {
        let o = umoo(&[
            "evolve",
            "--grid",
            "6",
            "--iters",
            "300",
            "--seed",
            "2",
            "--check-every",
            "50",
            "--out",
            d.path().to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("invariant: held in 6 checks"));
    }
    for f in FILES {
        assert_eq!(
            fs::read(a.path().join(f)).unwrap(),
            fs::read(b.path().join(f)).unwrap(),
            "{f}"
        );
    }
    assert_eq!(metrics(a.path())["evaluations"], 336);
    assert_eq!(read(a.path(), "control.csv").lines().count(), 337);
}

#[test]
fn evolve_defaults_use_25000_evaluations() {
    let d = tempdir().unwrap();
    let o = umoo(&["evolve", "--out", d.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(metrics(d.path())["evaluations"], 25_000);
}

#[test]
fn evolve_from_an_empty_seed() {
    let d = tempdir().unwrap();
    let o = umoo(&[
        "evolve",
        "--grid",
        "0",
        "--iters",
        "100",
        "--out",
        d.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let m = metrics(d.path());
    assert_eq!(m["evaluations"], 100);
    assert!(m["front_size"].as_u64().unwrap() >= 1);
}

#[test]
fn zero_iterations_is_the_seed_front() {
    let (e, s) = (tempdir().unwrap(), tempdir().unwrap());
    umoo(&[
        "evolve",
        "--grid",
        "20",
        "--iters",
        "0",
        "--seed",
        "8",
        "--out",
        e.path().to_str().unwrap(),
    ]);
    umoo(&[
        "sample",
        "--n",
        "400",
        "--seed",
        "8",
        "--out",
        s.path().to_str().unwrap(),
    ]);
    let sorted = |d: &Path| {
        let mut v: Vec<String> = read(d, "control.csv").lines().map(str::to_string).collect();
        v.sort();
        v
    };
    assert_eq!(sorted(e.path()), sorted(s.path()));
    assert_eq!(read(e.path(), "front.csv"), read(s.path(), "front.csv"));
}

#[test]
fn bad_evolution_parameters_are_rejected() {
    let o = umoo(&[
        "evolve",
        "--grid",
        "2",
        "--iters",
        "1",
        "--epsilon",
        "2",
        "--out",
        "/tmp/never-written",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
