//! Golden-file tests for the symplex binary. Every output under
//! tests/golden/*.out.json was produced once by the binary and then
//! frozen; the tests insist on byte equality, so any formatting or
//! numbering drift shows up as a diff.

use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(golden(name)).unwrap_or_else(|e| panic!("missing {name}: {e}"))
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_symplex"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("spawn symplex");
    if let Some(text) = stdin {
        use std::io::Write;
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().expect("wait for symplex")
}

fn stdout_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("stdout is utf-8")
}

fn assert_golden(args: &[&str], input_file: Option<&str>, golden_name: &str) {
    let stdin = input_file.map(read);
    let out = run(args, stdin.as_deref());
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(stdout_of(&out), read(golden_name), "{args:?} drifted");
}

#[test]
fn sp_check_accepts_the_identity() {
    let out = run(&["sp-check"], Some(&read("id4.json")));
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{\"symplectic\":true}\n");
}

#[test]
fn sp_check_rejects_a_broken_mirror_sign_with_exit_1() {
    let out = run(&["sp-check"], Some(&read("bad4.json")));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_of(&out), "{\"symplectic\":false}\n");
}

#[test]
fn file_argument_and_stdin_agree() {
    let via_file = run(&["sp-check", golden("id4.json").to_str().unwrap()], None);
    let via_stdin = run(&["sp-check"], Some(&read("id4.json")));
    assert_eq!(via_file.stdout, via_stdin.stdout);
}

#[test]
fn mult_matches_golden() {
    assert_golden(&["mult"], Some("mult_in.json"), "word_product.json");
}

#[test]
fn factor_recovers_the_generator_word() {
    assert_golden(
        &["factor"],
        Some("word_product.json"),
        "factor_word_product.out.json",
    );
}

#[test]
fn factor_refuses_a_non_symplectic_matrix() {
    let out = run(&["factor"], Some(&read("bad4.json")));
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not symplectic"));
}

#[test]
fn conj_delta_matches_golden() {
    assert_golden(
        &["conj-delta"],
        Some("conj_request.json"),
        "conj_delta.out.json",
    );
}

#[test]
fn verify_single_suite_matches_golden() {
    assert_golden(
        &["verify", "--lemma", "l2-table", "--seed", "7"],
        None,
        "verify_l2_seed7.out.json",
    );
}

#[test]
fn verify_all_suites_passes_and_reports_every_id() {
    let out = run(&["verify", "--seed", "3"], None);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(doc["all_passed"], serde_json::json!(true));
    let ids: Vec<&str> = doc["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["lemma_id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, symplex_core::lab::LEMMA_IDS);
}

#[test]
fn verify_unknown_lemma_exits_2() {
    let out = run(&["verify", "--lemma", "nope"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn monoid_info_matches_golden() {
    assert_golden(
        &["monoid-info"],
        Some("monoid_strip.json"),
        "monoid_strip.out.json",
    );
}

#[test]
fn polarized_check_matches_golden() {
    assert_golden(
        &["polarized-check"],
        Some("polarized_axis.json"),
        "polarized_axis.out.json",
    );
}

#[test]
fn pyramid_split_matches_golden() {
    assert_golden(&["pyramid-split"], Some("cone_fan.json"), "pyramid_fan.out.json");
}

#[test]
fn random_word_is_deterministic_and_frozen() {
    let args = [
        "random-word",
        "--seed",
        "1",
        "--n",
        "2",
        "--length",
        "6",
        "--ring",
        "Fp:7",
    ];
    let first = run(&args, None);
    let second = run(&args, None);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(stdout_of(&first), read("word_seed1.out.json"));
}

#[test]
fn random_word_length_zero_is_an_empty_token_list() {
    let out = run(&["random-word", "--length", "0"], None);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(doc["tokens"], serde_json::json!([]));
}

#[test]
fn random_word_rejects_a_composite_modulus_with_exit_2() {
    let out = run(&["random-word", "--ring", "Fp:4"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_json_exits_2() {
    let out = run(&["sp-check"], Some("{not json"));
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn out_flag_writes_the_file_and_leaves_stdout_empty() {
    let dir = std::env::temp_dir().join(format!("symplex-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(
        &[
            "verify",
            "--lemma",
            "l2-table",
            "--seed",
            "7",
            "--out",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        read("verify_l2_seed7.out.json")
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn diagnostics_go_to_stderr_only() {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_symplex"));
    cmd.args(["verify", "--lemma", "delta-identities"])
        .env("SYMPLEX_LOG", "info")
        .stdin(Stdio::null())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let out = cmd.output().unwrap();
    assert!(out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("delta-identities"), "no progress note: {err}");
    // stdout stays pure data
    serde_json::from_str::<serde_json::Value>(stdout_of(&out)).unwrap();
}

/// Each emitted document parses back into the library value it came
/// from and re-serializes to the same bytes.
#[test]
fn outputs_reparse_to_identical_bytes() {
    use symplex_core::jsonio;
    let cases: Vec<(String, fn(&serde_json::Value) -> serde_json::Value)> = vec![
        (read("word_product.json"), |v| {
            jsonio::matrix_to_value(&jsonio::matrix_from_value(v).unwrap())
        }),
        (read("factor_word_product.out.json"), |v| {
            jsonio::factorization_to_value(&jsonio::factorization_from_value(v).unwrap())
        }),
        (read("word_seed1.out.json"), |v| {
            let (w, ring) = jsonio::word_from_value(v).unwrap();
            jsonio::word_to_value(&w, &ring)
        }),
        (read("conj_delta.out.json"), |v| {
            jsonio::matrix_to_value(&jsonio::matrix_from_value(v).unwrap())
        }),
        (read("pyramid_fan.out.json"), |v| {
            jsonio::pyramid_split_to_value(&jsonio::pyramid_split_from_value(v).unwrap())
        }),
        (read("polarized_axis.out.json"), |v| {
            jsonio::polarized_report_to_value(&jsonio::polarized_report_from_value(v).unwrap())
        }),
        (read("verify_l2_seed7.out.json"), |v| {
            let (reports, seed) = jsonio::report_set_from_value(v).unwrap();
            jsonio::report_set_to_value(&reports, seed)
        }),
    ];
    for (text, reprint) in cases {
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(jsonio::to_canonical_string(&reprint(&doc)), text);
    }
}

/// The factored word really evaluates back to the input matrix.
#[test]
fn factor_output_evaluates_to_its_input() {
    use symplex_core::jsonio;
    use symplex_core::symplectic::{word_eval, WordContext};
    let input: serde_json::Value =
        serde_json::from_str(&read("word_product.json")).unwrap();
    let alpha = jsonio::matrix_from_value(&input).unwrap();
    let out = run(&["factor"], Some(&read("word_product.json")));
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    let res = jsonio::factorization_from_value(&doc).unwrap();
    assert!(res.residual.is_identity());
    let ctx = WordContext::plain(alpha.ring().clone());
    assert_eq!(word_eval(&res.word, &ctx).unwrap(), alpha);
}
