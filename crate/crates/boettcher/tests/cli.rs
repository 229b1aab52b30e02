//! End-to-end checks of the command-line surface: flag parsing, output
//! schemas, exit codes, and byte-stability.

use std::process::{Command, Output};

fn boettcher(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boettcher"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 diagnostics")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn coeffs_catalan_reversion() {
    let out = boettcher(&[
        "coeffs", "--p", "2", "--d", "2", "--c-num", "2", "--c-den", "1", "--series", "a-inv",
        "--terms", "5",
    ]);
    assert_eq!(code(&out), 0);
    let expect = "n,coeff,valuation\n\
                  1,-1,0\n\
                  2,-1,0\n\
                  3,-2,1\n\
                  4,-5,0\n\
                  5,-14,1\n";
    assert_eq!(stdout(&out), expect);
}

#[test]
fn coeffs_hand_solved_a_table() {
    let out = boettcher(&[
        "coeffs", "--p", "2", "--d", "2", "--c-num", "1", "--series", "a", "--terms", "3",
    ]);
    assert_eq!(code(&out), 0);
    let expect = "n,coeff,valuation\n\
                  1,1/2,-1\n\
                  2,1/8,-3\n\
                  3,-1/16,-4\n";
    assert_eq!(stdout(&out), expect);
}

#[test]
fn coeffs_vanishing_entries_serialize_infinite_valuation() {
    let out = boettcher(&[
        "coeffs", "--p", "2", "--d", "2", "--c-num", "2", "--series", "a", "--terms", "3",
    ]);
    assert_eq!(code(&out), 0);
    let expect = "n,coeff,valuation\n\
                  1,1,0\n\
                  2,0,inf\n\
                  3,0,inf\n";
    assert_eq!(stdout(&out), expect);
}

#[test]
fn coeffs_zero_terms_prints_header_only() {
    let out = boettcher(&[
        "coeffs", "--p", "2", "--d", "2", "--c-num", "1", "--series", "a", "--terms", "0",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "n,coeff,valuation\n");
}

#[test]
fn coeffs_json_schema() {
    let out = boettcher(&[
        "coeffs", "--p", "2", "--d", "4", "--c-num", "8", "--series", "a", "--terms", "3",
        "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["params"]["p"], 2);
    assert_eq!(doc["params"]["d"], 4);
    assert_eq!(doc["params"]["c"]["num"], "8");
    assert_eq!(doc["params"]["c"]["den"], "1");
    assert_eq!(doc["params"]["c"]["pi_exp"], 0);
    assert_eq!(doc["params"]["c"]["ram"], 1);
    assert_eq!(doc["params"]["series"], "a");
    assert_eq!(doc["params"]["terms"], 3);
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 3);
    assert_eq!(entries[0]["n"], 1);
    assert_eq!(entries[0]["coeff"], "2");
    assert_eq!(entries[0]["valuation"], "1");
}

#[test]
fn coeffs_output_is_byte_stable() {
    let args = [
        "coeffs", "--p", "3", "--d", "9", "--c-num", "81", "--series", "b", "--terms", "12",
        "--format", "json",
    ];
    let first = boettcher(&args);
    let second = boettcher(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(code(&first), 0);
}

#[test]
fn coeffs_eisenstein_cells_are_csv_quoted() {
    let out = boettcher(&[
        "coeffs", "--p", "2", "--d", "2", "--ram", "2", "--c-pi-exp", "3", "--series", "a",
        "--terms", "2",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    // pi-basis coefficients render as a quoted JSON object per cell
    assert!(text.contains("\"{\"\"coeffs\"\""), "{text}");
    assert!(text.lines().nth(1).unwrap().ends_with(",1/2"), "{text}");
}

#[test]
fn coeffs_terms_cap_exits_3() {
    let out = boettcher(&[
        "coeffs", "--p", "2", "--d", "2", "--c-num", "1", "--series", "a", "--terms", "100000",
    ]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).is_empty(), "no partial output on errors");
    assert!(stderr(&out).contains("resource"), "{}", stderr(&out));
}

#[test]
fn verify_grid_point_exits_0() {
    let out = boettcher(&[
        "verify", "--p", "2", "--d", "4", "--c-num", "8", "--series", "b", "--terms", "64",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("n,actual_v,predicted_v,match\n"));
    assert_eq!(text.lines().count(), 65);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")), "{text}");
}

#[test]
fn verify_unclassified_exits_2_naming_the_inequality() {
    let out = boettcher(&[
        "verify", "--p", "2", "--d", "2", "--c-num", "2", "--series", "a", "--terms", "8",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).is_empty());
    let diag = stderr(&out);
    assert!(diag.contains("v_p(c) = 1"), "{diag}");
    assert!(diag.contains("v_p(d) + v_p((d-1)!)/(d-1)"), "{diag}");
}

#[test]
fn verify_injected_fault_exits_1_listing_the_index() {
    let out = boettcher(&[
        "verify", "--p", "2", "--d", "4", "--c-num", "8", "--series", "a", "--terms", "12",
        "--inject-fault", "5",
    ]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    let bad: Vec<&str> = text.lines().filter(|l| l.ends_with(",false")).collect();
    assert_eq!(bad.len(), 1, "{text}");
    assert!(bad[0].starts_with("5,"), "{text}");
}

#[test]
fn verify_t_series_against_effective_constant() {
    let out = boettcher(&[
        "verify", "--p", "2", "--d", "4", "--c-num", "2", "--c1-num", "4", "--series", "t",
        "--terms", "16",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
}

#[test]
fn radius_conjecture_family() {
    let out = boettcher(&["radius", "--conjecture", "--p", "2", "--r", "1"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["N"], 1);
    assert_eq!(doc["inv_radius_log_p"], "-1/2");
    assert_eq!(doc["conjecture"]["consistent"], true);

    let out = boettcher(&["radius", "--conjecture", "--p", "3", "--r", "0"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["inv_radius_log_p"], "-1/2");
    assert_eq!(doc["N"], 0);
}

#[test]
fn radius_general_parameters() {
    let out = boettcher(&["radius", "--p", "2", "--d", "4", "--c-num", "8", "--c-den", "1"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["slope"], "-1/2");
    assert_eq!(doc["r_n_log_p"], "1/2");
    assert_eq!(doc["phi_disk_log_p"], "-1/2");
    assert_eq!(doc["varphi_disk_log_p"], "1/8");
    assert!(doc.get("approx").is_none(), "approx is opt-in");
}

#[test]
fn radius_approx_is_opt_in_and_labeled() {
    let out = boettcher(&[
        "radius", "--p", "2", "--d", "4", "--c-num", "8", "--approx",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["approx"]["slope"], -0.5);
    assert_eq!(doc["approx"]["varphi_disk_log_p"], 0.125);
}

#[test]
fn conjugacy_spec_instance_exits_0() {
    let out = boettcher(&[
        "conjugacy", "--p", "2", "--d", "4", "--c1-num", "4", "--c2-num", "2", "--terms", "48",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["verified"], true);
    assert_eq!(doc["separation"]["lhs_valuation"], "3");
    assert_eq!(doc["candidates"][0]["condition"], "A");
    assert_eq!(doc["candidates"][0]["profile"]["matches"], 48);
    // the candidate's disk comes from the effective constant -2 (condition A,
    // slope -2): log_p boundary = 2/d = 1/2, strictly inside the unit disk
    assert_eq!(doc["candidates"][0]["varphi_disk_log_p"], "1/2");
}

#[test]
fn conjugacy_broken_separation_exits_2() {
    let out = boettcher(&[
        "conjugacy", "--p", "2", "--d", "4", "--c1-num", "1", "--c2-num", "2", "--terms", "8",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("separation fails"), "{}", stderr(&out));
}

#[test]
fn conjugacy_zero_c1_reduces_to_radius_statement() {
    let out = boettcher(&[
        "conjugacy", "--p", "2", "--d", "4", "--c1-num", "0", "--c2-num", "8", "--terms", "12",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
}

#[test]
fn lemmas_default_suite_passes() {
    let out = boettcher(&["lemmas"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("oracle,cases,failures\n"));
    for line in text.lines().skip(1) {
        assert!(line.ends_with(",0"), "unexpected failures in {line}");
    }
    assert_eq!(text.lines().count(), 7); // six oracles plus header
}

#[test]
fn lemmas_tiny_bound_is_vacuous() {
    let out = boettcher(&["lemmas", "--max-n", "1"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn lemmas_single_oracle_selection() {
    let out = boettcher(&["lemmas", "--lemma", "2.3", "--d", "9", "--max-n", "100"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("digit-split-bound(2.3)"), "{text}");
}

#[test]
fn predict_matches_verify_predictions() {
    let out = boettcher(&["predict", "--p", "2", "--d", "4", "--c-num", "8", "--terms", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "n,predicted_v\n1,1\n2,1\n3,2\n4,-1\n");

    let out = boettcher(&["predict", "--p", "2", "--d", "2", "--c-num", "2", "--terms", "4"]);
    assert_eq!(code(&out), 2, "unclassified parameters are refused");
}

#[test]
fn scan_walks_the_windows() {
    let out = boettcher(&["scan", "--p", "2", "--d", "4", "--from", "0", "--to", "5"]);
    assert_eq!(code(&out), 0);
    let expect = "pi_exp,vpc,condition,N\n\
                  0,0,A,0\n\
                  1,1,A,0\n\
                  2,2,A,0\n\
                  3,3,B,1\n\
                  4,4,B,1\n\
                  5,5,B,2\n";
    assert_eq!(stdout(&out), expect);
}

#[test]
fn scan_fractional_steps_with_ramification() {
    let out = boettcher(&[
        "scan", "--p", "2", "--d", "2", "--ram", "2", "--from", "2", "--to", "4",
    ]);
    assert_eq!(code(&out), 0);
    // v = 1 boundary -> none, v = 3/2 -> B window, v = 2 boundary -> none
    let expect = "pi_exp,vpc,condition,N\n\
                  2,1,none,0\n\
                  3,3/2,B,1\n\
                  4,2,none,0\n";
    assert_eq!(stdout(&out), expect);
}

#[test]
fn unknown_flags_exit_2() {
    let out = boettcher(&["coeffs", "--nonsense", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn help_exits_0() {
    let out = boettcher(&["--help"]);
    assert_eq!(code(&out), 0);
}
