use std::io::Write;
use std::process::{Command, Output};

use hardy_means::table::canonical_json;
use serde_json::Value;

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hardy-means"));
    cmd.args(args).env_remove("HARDY_MEANS_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_with_env(args, &[])
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn rows(doc: &Value) -> &Vec<Value> {
    doc["rows"].as_array().unwrap()
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

#[test]
fn mean_small_examples() {
    let out = run(&["mean", "-k", "2", "-s", "1", "-q", "0", "--data", "1,4,9"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let value: f64 = text.split_whitespace().nth(2).unwrap().parse().unwrap();
    assert!((value - 11.0 / 3.0).abs() < 1e-14, "{text}");
    assert!(text.contains("(FastSymmetric)"), "{text}");

    let out = run(&["mean", "-k", "9", "-s", "2", "-q", "0", "--data", "5,5,5"]);
    assert_eq!(stdout(&out), "M(9,2,0) = 5 (Degenerate)\n");

    let doc = json(&["mean", "-k", "2", "-s", "2", "-q", "1", "--data", "1,4,9"]);
    assert_eq!(rows(&doc)[0]["method"], "Exact");
    let exact = ((2.5f64.powi(2) + 5.0f64.powi(2) + 6.5f64.powi(2)) / 3.0).sqrt();
    assert!((num(&rows(&doc)[0]["value"]) - exact).abs() < 1e-14);
}

#[test]
fn mean_negative_and_infinite_exponents() {
    let doc = json(&[
        "mean", "-k", "2", "-s", "-inf", "-q", "-1", "--data", "1,2,3",
    ]);
    assert!((num(&rows(&doc)[0]["value"]) - 4.0 / 3.0).abs() < 1e-15);
    assert_eq!(rows(&doc)[0]["s"], "-inf");
    let doc = json(&[
        "mean", "-k", "2", "-s", "1/2", "-q", "-2", "--data", "1,2,3",
    ]);
    assert_eq!(rows(&doc)[0]["s"], "0.5");
}

#[test]
fn mean_monte_carlo_matches_enumeration_on_a_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# twelve entries").unwrap();
    for i in 1..=12 {
        writeln!(file, "{}  # entry {i}", (i as f64).sqrt()).unwrap();
    }
    let path = file.path().to_str().unwrap();
    let exact = json(&["mean", "-k", "4", "-s", "2", "-q", "1", "--file", path]);
    assert_eq!(rows(&exact)[0]["method"], "Exact");
    let exact = num(&rows(&exact)[0]["value"]);

    let args = [
        "mean",
        "-k",
        "4",
        "-s",
        "2",
        "-q",
        "1",
        "--file",
        path,
        "--samples",
        "100000",
        "--seed",
        "7",
    ];
    let sampled = json(&args);
    let row = &rows(&sampled)[0];
    assert_eq!(row["method"], "MonteCarlo");
    assert_eq!(row["samples"], 100000);
    assert_eq!(sampled["meta"]["seed"], 7);
    let (value, se) = (num(&row["value"]), num(&row["stderr"]));
    assert!(se > 0.0);
    assert!(
        (value - exact).abs() <= 3.0 * se,
        "{value} vs {exact} (stderr {se})"
    );

    let plain = stdout(&run(&args));
    assert!(
        plain.contains("+-") && plain.contains("MonteCarlo, 100000 samples, seed 7"),
        "{plain}"
    );
}

#[test]
fn mean_samples_ignored_when_degenerate() {
    let out = run(&[
        "mean",
        "-k",
        "3",
        "-s",
        "2",
        "-q",
        "1",
        "--data",
        "1,2,3",
        "--samples",
        "1000",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("(Degenerate)"));
}

#[test]
fn mean_domain_errors_exit_2() {
    for args in [
        vec!["mean", "-k", "2", "-s", "1", "-q", "0", "--data", "1,0,2"],
        vec!["mean", "-k", "2", "-s", "1", "-q", "0", "--data", "1,-3"],
        vec!["mean", "-k", "2", "-s", "1", "-q", "0", "--data", "1,x"],
        vec!["mean", "-k", "2", "-s", "one", "-q", "0", "--data", "1,2"],
        vec!["mean", "-k", "2", "-s", "1", "-q", "nan", "--data", "1,2"],
        vec!["mean", "-k", "0", "-s", "1", "-q", "0", "--data", "1,2"],
        vec!["mean", "-k", "2", "-s", "1", "-q", "0"],
        vec![
            "mean",
            "-k",
            "2",
            "-s",
            "1",
            "-q",
            "0",
            "--data",
            "1,2,3",
            "--samples",
            "10",
        ],
        vec![
            "mean",
            "-k",
            "2",
            "-s",
            "1",
            "-q",
            "0",
            "--file",
            "/nonexistent/input.txt",
        ],
        vec!["frobnicate"],
    ] {
        let out = run(&args);
        assert_eq!(code(&out), 2, "{args:?}: {}", stderr(&out));
        assert!(stdout(&out).is_empty());
    }
}

#[test]
fn mean_capacity_error_exits_3_with_hint() {
    let data: Vec<String> = (1..=40).map(|i| i.to_string()).collect();
    let data = data.join(",");
    let out = run(&["mean", "-k", "2", "-s", "2", "-q", "1", "--data", &data]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("--samples"), "{}", stderr(&out));
    let out = run(&[
        "mean",
        "-k",
        "2",
        "-s",
        "2",
        "-q",
        "1",
        "--data",
        &data,
        "--samples",
        "1000",
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn hardy_sum_examples() {
    let doc = json(&[
        "hardy-sum",
        "--mean",
        "cmn:2,1,0",
        "--family",
        "powertail:2",
        "-N",
        "100000",
    ]);
    let table = rows(&doc);
    assert_eq!(table.last().unwrap()["n"], 100000);
    assert!(table.iter().all(|r| num(&r["ratio"]) < 4.0));
    let ns: Vec<u64> = table.iter().map(|r| r["n"].as_u64().unwrap()).collect();
    assert_eq!(&ns[..6], &[1, 2, 5, 10, 20, 50]);
    assert_eq!(doc["meta"]["family"], "powertail:2");

    let doc = json(&[
        "hardy-sum",
        "--mean",
        "power:0.5",
        "--family",
        "geometric:0.5",
        "-N",
        "1000",
    ]);
    let last = rows(&doc).last().unwrap();
    assert!(num(&last["ratio"]) < 4.0);
    assert!((num(&last["partial_norm"]) - 1.0).abs() < 1e-15);
}

#[test]
fn hardy_sum_csv_header() {
    let out = run(&[
        "hardy-sum",
        "--mean",
        "power:1/2",
        "--family",
        "powertail:3",
        "-N",
        "10",
    ]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,partial_sum,partial_norm,ratio"));
    assert_eq!(
        lines.next(),
        Some("1,1.0000000000000000e0,1.0000000000000000e0,1.0000000000000000e0")
    );
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn nonsummable_family_needs_opt_in() {
    let args = [
        "hardy-sum",
        "--mean",
        "power:0.5",
        "--family",
        "harmonic",
        "-N",
        "1000",
    ];
    let out = run(&args);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not summable"));
    let mut opted = args.to_vec();
    opted.push("--allow-nonsummable");
    assert_eq!(code(&run(&opted)), 0);
}

#[test]
fn hardy_sum_bad_specs_exit_2() {
    for (mean, family) in [
        ("cmn:2,1", "powertail:2"),
        ("power:x", "powertail:2"),
        ("power:0.5", "powertail:1"),
    ] {
        let out = run(&["hardy-sum", "--mean", mean, "--family", family, "-N", "100"]);
        assert_eq!(code(&out), 2, "{mean} {family}");
    }
}

#[test]
fn estimate_constant_reports_the_largest_ratio() {
    let doc = json(&["estimate-constant", "--mean", "cmn:2,1,0", "-N", "1000000"]);
    let meta = &doc["meta"];
    let best = num(&meta["max_ratio"]);
    assert!(best < 4.0);
    assert!((best - 3.4392642549538).abs() < 1e-9, "{best}");
    assert_eq!(meta["max_n0"], 100000);
    assert_eq!(meta["max_n"], 1000000);
    let table = rows(&doc);
    let flagged: Vec<&Value> = table.iter().filter(|r| r["is_max"] == 1).collect();
    assert_eq!(flagged.len(), 1);
    assert_eq!(num(&flagged[0]["ratio"]), best);
    assert!(table.iter().all(|r| num(&r["ratio"]) <= best));
    assert!(table.iter().all(|r| r["n"].as_u64() >= r["n0"].as_u64()));
}

#[test]
fn estimate_constant_custom_prefixes() {
    let doc = json(&["estimate-constant", "-N", "1000", "--n0", "10,100"]);
    let n0s: Vec<u64> = rows(&doc)
        .iter()
        .map(|r| r["n0"].as_u64().unwrap())
        .collect();
    assert!(n0s.iter().all(|&n| n == 10 || n == 100));
    assert_eq!(
        code(&run(&["estimate-constant", "-N", "100", "--n0", "1000"])),
        2
    );
}

#[test]
fn classify_points() {
    let out = run(&["classify", "--point", "2,1,0"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("M(2,1,0): Hardy (Theorem1)\n"));

    let out = run(&["classify", "--point", "2,1.5,-2"]);
    let text = stdout(&out);
    assert!(
        text.starts_with("M(2,1.5,-2): Open (OpenProblem)"),
        "{text}"
    );
    assert!(text.contains("the possible answer may depend on k"));

    for (point, verdict, reason) in [
        ("3,1,0", "Hardy", "HamyCorollary"),
        ("4,0,1", "Hardy", "HayashiCorollary"),
        ("2,2,1/2", "NotHardy", "PropItem1"),
        ("2,2,-1", "Open", "OpenProblem"),
        ("2,-inf,inf", "Hardy", "PropItem3"),
        ("1,0.5,3", "Hardy", "DegeneratePowerMean"),
    ] {
        let doc = json(&["classify", "--point", point]);
        assert_eq!(rows(&doc)[0]["verdict"], verdict, "{point}");
        assert_eq!(rows(&doc)[0]["reason"], reason, "{point}");
    }
}

#[test]
fn classify_grid() {
    let args = [
        "classify", "--grid-k", "2..4", "--grid-s", "-1,0,1,2", "--grid-q", "-1,0,1",
    ];
    let doc = json(&args);
    let table = rows(&doc);
    assert_eq!(table.len(), 36);
    let has = |verdict: &str, reasons: &[&str]| {
        table
            .iter()
            .any(|r| r["verdict"] == verdict && reasons.iter().any(|x| r["reason"] == *x))
    };
    assert!(has("Hardy", &["Theorem1", "PropItem2"]));
    assert!(has("Hardy", &["PropItem3"]));
    assert!(has("NotHardy", &["PropItem1"]));
    assert!(has("Open", &["OpenProblem"]));
    assert_eq!(doc["meta"]["caveat"], "the possible answer may depend on k");

    let csv = stdout(&run(&args));
    assert!(csv.starts_with("k,s,q,verdict,reason,citation\n"));
    assert_eq!(csv.lines().count(), 37);
}

#[test]
fn classify_malformed_grid_exit_2() {
    for args in [
        vec!["classify", "--grid-k", "4..x"],
        vec!["classify", "--grid-s", "1,,2"],
        vec!["classify", "--grid-q", "nan"],
        vec!["classify", "--point", "2,1"],
        vec!["classify", "--point", "2,1,0", "--grid-k", "2..3"],
    ] {
        assert_eq!(code(&run(&args)), 2, "{args:?}");
    }
}

#[test]
fn verify_quick_passes() {
    let out = run(&["verify", "--quick"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    for name in [
        "oracle-equivalence",
        "qs-monotonicity",
        "k-monotonicity",
        "pairwise-identity",
        "internality-homogeneity",
        "sharpness-limit",
        "hardy-bound",
        "classifier-golden",
    ] {
        assert!(text.contains(name), "{name} missing:\n{text}");
    }
    assert!(!text.contains("fail"));
}

#[test]
fn bench_meets_the_speedup() {
    let doc = json(&["bench", "--samples", "1000"]);
    assert!(num(&doc["meta"]["speedup_n20_k5"]) >= 10.0);
    let table = rows(&doc);
    let refused = table
        .iter()
        .any(|r| r["method"] == "Exact" && r["n"] == 100000 && r["status"] == "capacity");
    assert!(refused);
    let fast_ok = table.iter().any(|r| {
        r["method"] == "FastSymmetric" && r["n"] == 100000 && r["k"] == 3 && r["status"] == "ok"
    });
    assert!(fast_ok);
}

const DETERMINISTIC: &[&[&str]] = &[
    &[
        "mean",
        "-k",
        "2",
        "-s",
        "1",
        "-q",
        "1",
        "--data",
        "1,4,9,2,7,3",
        "--samples",
        "5000",
        "--seed",
        "3",
        "--format",
        "json",
    ],
    &[
        "mean",
        "-k",
        "3",
        "-s",
        "2",
        "-q",
        "-1",
        "--data",
        "1,4,9,2,7,3",
        "--format",
        "csv",
    ],
    &[
        "hardy-sum",
        "--mean",
        "cmn:3,1,0",
        "--family",
        "geometric:0.9",
        "-N",
        "2000",
        "--format",
        "json",
    ],
    &["estimate-constant", "-N", "20000", "--format", "csv"],
    &["classify", "--format", "json"],
    &["verify", "--quick", "--format", "json"],
];

#[test]
fn identical_flags_give_identical_bytes() {
    for args in DETERMINISTIC {
        let a = run(args);
        let b = run_with_env(args, &[("HARDY_MEANS_THREADS", "1")]);
        let c = run_with_env(args, &[("HARDY_MEANS_THREADS", "3")]);
        assert_eq!(code(&a), 0, "{args:?}");
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stdout, c.stdout, "{args:?}");
    }
}

#[test]
fn json_output_round_trips() {
    for args in DETERMINISTIC.iter().filter(|a| a.contains(&"json")) {
        let text = stdout(&run(args));
        let parsed: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(format!("{}\n", canonical_json(&parsed)), text, "{args:?}");
        assert!(parsed["meta"].is_object() && parsed["rows"].is_array());
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.csv");
    let out = run(&["classify", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&run(&["classify"])));
}

#[test]
fn bad_thread_count_exit_2() {
    let out = run_with_env(&["classify"], &[("HARDY_MEANS_THREADS", "many")]);
    assert_eq!(code(&out), 2);
    let out = run_with_env(&["classify"], &[("HARDY_MEANS_THREADS", "0")]);
    assert_eq!(code(&out), 0);
}

#[test]
fn help_exits_0() {
    let out = run(&["--help"]);
    assert_eq!(code(&out), 0);
    for cmd in [
        "mean",
        "hardy-sum",
        "estimate-constant",
        "classify",
        "verify",
        "bench",
    ] {
        assert!(stdout(&out).contains(cmd));
    }
}
