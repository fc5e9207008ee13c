use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_supercong");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("run binary")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn compute_prints_exact_values() {
    for (args, expected) in [
        (&["compute", "delannoy", "4"][..], "321"),
        (&["compute", "schroder", "4"][..], "90"),
        (
            &["compute", "harmonic", "4", "--order", "1", "--alternating"][..],
            "-7/12",
        ),
        (&["compute", "harmonic", "3", "--order", "2"][..], "49/36"),
        (&["compute", "bernoulli", "2"][..], "1/6"),
        (&["compute", "bernoulli", "12"][..], "-691/2730"),
        (&["compute", "euler", "4"][..], "5"),
        (&["compute", "h2prefix", "2"][..], "9/4"),
        (&["compute", "delannoy", "2", "--x", "-1/2"][..], "-1/2"),
        (&["compute", "legendre-poly", "2", "--x", "1/3"][..], "-1/3"),
        (&["compute", "path-oracle", "3"][..], "63 22"),
    ] {
        let out = run(args);
        assert_eq!(code(&out), 0, "{args:?}");
        assert_eq!(stdout(&out).trim(), expected, "{args:?}");
    }
}

#[test]
fn compute_usage_errors() {
    assert_eq!(code(&run(&["compute", "fibonacci", "3"])), 2);
    assert_eq!(code(&run(&["compute", "path-oracle", "21"])), 2);
    assert_eq!(code(&run(&["compute", "legendre-poly", "3"])), 2);
    assert_eq!(code(&run(&["compute", "delannoy", "-1"])), 2);
}

#[test]
fn verify_thm2_json() {
    let out = run(&[
        "verify", "--checks", "thm2", "--primes", "5..5", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["version"], supercong::VERSION);
    assert_eq!(v["config"]["primes"], serde_json::json!([5, 5]));
    assert!(v["config"].get("workers").is_none());
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 1);
    assert_eq!(results[0]["lhs_residue"], "360");
    assert_eq!(results[0]["rhs_residue"], "360");
    assert_eq!(results[0]["pass"], true);
    for key in ["total", "passed", "failed", "errored", "elapsed_ms"] {
        assert!(v["summary"].get(key).is_some(), "{key}");
    }
}

#[test]
fn verify_exit_codes() {
    let pass = run(&["verify", "--checks", "thm1,thm2", "--primes", "5..13"]);
    assert_eq!(code(&pass), 0);
    let injected = run(&[
        "verify",
        "--checks",
        "thm1,thm2",
        "--primes",
        "5..13",
        "--inject-failure",
        "thm1",
    ]);
    assert_eq!(code(&injected), 1);
    assert!(stdout(&injected).contains("FAIL  thm1 p=5 x=1"));
    assert_eq!(
        code(&run(&[
            "verify",
            "--checks",
            "no_such_check",
            "--primes",
            "5..5"
        ])),
        1
    );
    for bad in [
        &["verify", "--primes", "10..4"][..],
        &["verify", "--primes", "2..7"][..],
        &["verify", "--primes", "5"][..],
        &["verify", "--workers", "0"][..],
        &["verify", "--format", "xml"][..],
        &["verify", "--x", "a,b"][..],
    ] {
        assert_eq!(code(&run(bad)), 2, "{bad:?}");
    }
}

#[test]
fn verify_csv_and_out_file() {
    let dir = std::env::temp_dir().join(format!("supercong-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let out = run(&[
        "verify",
        "--checks",
        "thm1",
        "--primes",
        "3..5",
        "--x",
        "-2..2,9",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("name,p,params,"));
    // x in {-2,-1,1,2,9}; p=3 drops 9, p=5 keeps all five.
    assert_eq!(lines.count(), 4 + 5);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn seeded_sampling_is_reproducible() {
    let args = |seed: &'static str| {
        vec![
            "verify",
            "--checks",
            "e2_factorization",
            "--primes",
            "67..67",
            "--format",
            "json",
            "--seed",
            seed,
        ]
    };
    let a = run(&args("1"));
    let b = run(&[args("1"), vec!["--workers", "3"]].concat());
    let c = run(&args("2"));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn identities_formats() {
    let out = run(&["identities", "--max-m", "40"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("0 failed"));

    let out = run(&["identities", "--max-m", "0"]);
    assert_eq!(code(&out), 0);

    let out = run(&["identities", "--max-m", "40", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "identity,cases,passed,failed");
    assert_eq!(text.lines().count(), 10);

    let out = run(&[
        "identities",
        "--max-m",
        "5",
        "--max-r",
        "5",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["config"]["max_m"], 5);
    assert_eq!(v["identities"].as_array().unwrap().len(), 9);
}
