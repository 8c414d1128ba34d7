use confluent_cli::render::{Document, CSV_HEADER};
use confluent_cli::{run, Outcome, EXIT_FAILURE, EXIT_PASS, EXIT_USAGE};
use proptest::prelude::*;
use std::process::Command;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("confluent").chain(args.iter().copied()))
}

fn value(out: &Outcome) -> f64 {
    let line = out
        .stdout
        .lines()
        .find(|l| l.starts_with("value "))
        .expect("value line");
    line["value ".len()..].parse().expect("real value")
}

#[test]
fn eval_examples() {
    let out = cli(&["eval", "besselj", "0", "0"]);
    assert_eq!(out.code, EXIT_PASS, "{out:?}");
    assert_eq!(value(&out), 1.0);

    let out = cli(&["eval", "kummerm", "1", "2", "1"]);
    let e1 = std::f64::consts::E - 1.0;
    assert!((value(&out) - e1).abs() <= 4e-16 * e1, "{out:?}");
    assert!(out.stdout.contains("terms_used "));
    assert!(out.stdout.contains("tail_estimate "));

    // M_{0,1/2}(z) = 2 sinh(z/2)
    let out = cli(&["eval", "whittakerm", "0", "0.5", "2"]);
    assert!((value(&out) - 2.350402387287603).abs() <= 1e-15 * 2.35, "{out:?}");
}

#[test]
fn eval_accepts_complex_and_negative_arguments_before_flags() {
    let out = cli(&["eval", "kummerm", "0.3+0.2i", "1.1-0.4i", "-2+0.5i", "--tol", "1e-12"]);
    assert_eq!(out.code, EXIT_PASS, "{out:?}");
    assert!(out.stdout.starts_with("value 0.69408801050590"), "{out:?}");
    let out = cli(&["eval", "mellinbarnes", "3", "2", "--contour-c", "-0.35"]);
    assert_eq!(out.code, EXIT_PASS, "{out:?}");
    let out = cli(&["eval", "besselj", "1", "-i"]);
    assert!(out.stdout.starts_with("value 0-0.565159103992485"), "{out:?}");
}

#[test]
fn eval_formats() {
    let out = cli(&["eval", "pochhammer", "0.5", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["function"], "pochhammer");
    assert_eq!(v["value"]["re"].as_f64(), Some(1.875));
    let out = cli(&["eval", "gamma", "5", "--format", "csv"]);
    let mut lines = out.stdout.lines();
    assert_eq!(
        lines.next(),
        Some("function,params,value_re,value_im,terms_used,tail_estimate")
    );
    assert!(lines.next().unwrap().starts_with("gamma,5,2.4000000000000000e1,"));
}

#[test]
fn eval_usage_and_domain_errors_exit_2() {
    for args in [
        &["eval", "kummerm", "1", "2"][..],
        &["eval", "kummerm", "1", "2", "3", "4"],
        &["eval", "gamma", "-2"],
        &["eval", "gamma", "abc"],
        &["eval", "gamma", "nan"],
        &["eval", "besselj", "0.5", "-1"],
        &["eval", "nosuchfn", "1"],
        &["eval", "kummerm", "1", "2", "1", "--tol", "0"],
        &["eval", "kummerm", "1", "2", "1", "--max-terms", "0"],
        &["eval", "mellinbarnes", "1", "2"],
        &["eval", "mellinbarnes", "3", "2", "--contour-c", "0.2"],
        &["eval", "sinexp", "1", "0"],
        &["eval", "--tol"],
        &[],
    ] {
        let out = cli(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}: {out:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_and_version_exit_0() {
    for args in [&["--help"][..], &["--version"], &["eval", "--help"]] {
        let out = cli(args);
        assert_eq!(out.code, EXIT_PASS, "{out:?}");
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn rule_examples() {
    let out = cli(&["rule", "0", "0", "2"]);
    assert_eq!(out.code, EXIT_PASS);
    let rows: Vec<Vec<f64>> = out
        .stdout
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("weight_sum"))
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect();
    // correctly rounded 1/sqrt(3) = 0.57735026918962576...
    let x = (1.0f64 / 3.0).sqrt();
    assert_eq!(rows.len(), 2);
    assert_eq!((rows[0][0], rows[1][0]), (-x, x));
    assert!((rows[0][1] - 1.0).abs() < 1e-15 && (rows[1][1] - 1.0).abs() < 1e-15);

    // 2^{α+β+1} Γ(α+1)Γ(β+1)/Γ(α+β+2) at (1/2, -1/4)
    let out = cli(&["rule", "0.5", "-0.25", "8", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let sum = v["weight_sum"].as_f64().unwrap();
    assert!((sum - 2.2797390270697545).abs() < 1e-14, "{sum}");
    assert_eq!(v["nodes"].as_array().unwrap().len(), 8);

    assert_eq!(cli(&["rule", "-1.5", "0", "4"]).code, EXIT_USAGE);
    assert_eq!(cli(&["rule", "0", "-1", "4"]).code, EXIT_USAGE);
    assert_eq!(cli(&["rule", "0", "0", "0"]).code, EXIT_USAGE);
}

#[test]
fn verify_examples() {
    let out = cli(&["verify", "SUM_FORMULA", "--tol", "1e-10", "--format", "json"]);
    assert_eq!(out.code, EXIT_PASS, "{}", out.stderr);
    let doc: Document = serde_json::from_str(&out.stdout).unwrap();
    let s = &doc.identities[0].summary;
    assert_eq!(s.passed, s.total);

    let out = cli(&["verify", "MELLIN_BARNES", "--grid", "nu=1"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("grid validation"), "{}", out.stderr);

    let out = cli(&[
        "verify",
        "POCHHAMMER_EXACT",
        "--seed",
        "42",
        "--samples",
        "200",
        "--format",
        "json",
    ]);
    assert_eq!(out.code, EXIT_PASS);
    let doc: Document = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc.identities[0].summary.max_rel_err, 0.0);
    assert_eq!(doc.identities[0].summary.total, 200 * 41);
}

#[test]
fn verify_grid_overrides() {
    let out = cli(&["verify", "sin_expansion", "--grid", "z=1,2.5", "--format", "json"]);
    assert_eq!(out.code, EXIT_PASS, "{}", out.stderr);
    let doc: Document = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc.identities[0].summary.total, 2);

    let out = cli(&[
        "verify",
        "BESSEL_SUM",
        "--grid",
        "nu=0:1:3",
        "--grid",
        "z=2",
        "--format",
        "json",
    ]);
    let doc: Document = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc.identities[0].summary.total, 3);

    for args in [
        &["verify", "BESSEL_SUM", "--grid", "kappa=1"][..],
        &["verify", "BESSEL_SUM", "--grid", "nu"],
        &["verify", "BESSEL_SUM", "--grid", "nu=1:0:3"],
        &["verify", "BESSEL_SUM", "--grid", "nu=x"],
        &["verify", "INTEGRAL_REPR", "--grid", "kappa=0.6", "--grid", "mu=0.01"],
        &["verify", "POCHHAMMER_EXACT", "--grid", "a=1"],
        &["verify", "NOT_AN_IDENTITY"],
    ] {
        assert_eq!(cli(args).code, EXIT_USAGE, "{args:?}");
    }
}

#[test]
fn verify_failure_exits_1() {
    let out = cli(&["verify", "SIN_EXPANSION", "--tol", "1e-18"]);
    assert_eq!(out.code, EXIT_FAILURE);
    assert!(out.stdout.contains("FAIL"));
    assert!(out.stderr.contains("SIN_EXPANSION"));
}

#[test]
fn suite_csv_to_file() {
    let dir = std::env::temp_dir().join(format!("confluent-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let out = cli(&[
        "suite",
        "--samples",
        "5",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, EXIT_PASS, "{}", out.stderr);
    assert!(out.stdout.is_empty());
    let mut reader = csv::Reader::from_path(&path).unwrap();
    assert_eq!(reader.headers().unwrap(), CSV_HEADER.as_slice());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let json = cli(&["suite", "--samples", "5", "--format", "json"]);
    let doc: Document = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(doc.identities.len(), 10);
    assert_eq!(
        rows.len(),
        doc.identities.iter().map(|r| r.entries.len()).sum::<usize>()
    );
    assert!(rows.iter().all(|r| &r[9] == "true"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_report_round_trips_bit_for_bit() {
    let out = cli(&["verify", "KUMMER_BESSEL", "--format", "json"]);
    let doc: Document = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc.version, env!("CARGO_PKG_VERSION"));
    let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
    assert_eq!(again, out.stdout);
    let reparsed: Document = serde_json::from_str(&again).unwrap();
    assert_eq!(reparsed, doc);
}

#[test]
fn unwritable_out_path_is_a_usage_error() {
    let out = cli(&["eval", "gamma", "3", "--out", "/nonexistent-dir/x/y.txt"]);
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_confluent");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["eval", "kummerm", "1", "2", "1"]), Some(0));
    assert_eq!(code(&["verify", "SIN_EXPANSION", "--tol", "1e-18"]), Some(1));
    assert_eq!(code(&["rule", "-1.5", "0", "4"]), Some(2));
    assert_eq!(code(&["--frobnicate"]), Some(2));
}

fn token() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("eval".to_string()),
        Just("rule".to_string()),
        Just("verify".to_string()),
        Just("--tol".to_string()),
        Just("--grid".to_string()),
        Just("--format".to_string()),
        Just("--quad-order".to_string()),
        Just("--max-terms".to_string()),
        Just("--".to_string()),
        "(besselj|kummerm|whittakerm|gamma|loggamma|beta|pochhammer|sumformula|besselsum|sinexp|integralrepr|kummerintegral|oderesidual)",
        "-?[0-9]{0,3}(\\.[0-9]{0,3})?([eE]-?[0-9]{1,3})?([+-][0-9]?\\.?[0-9]?i)?",
        "[a-z=,:+i.0-9-]{0,8}",
        any::<String>(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn malformed_input_never_panics(args in proptest::collection::vec(token(), 0..7)) {
        let out = run(std::iter::once("confluent".to_string()).chain(args.clone()));
        prop_assert!([EXIT_PASS, EXIT_FAILURE, EXIT_USAGE].contains(&out.code), "{:?}", args);
        if out.code == EXIT_USAGE {
            prop_assert!(!out.stderr.is_empty());
        }
    }
}
