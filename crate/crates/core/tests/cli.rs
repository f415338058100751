use std::path::PathBuf;
use std::process::{Command, Output};

use latdual::{formats, hypotheses};
use serde_json::{json, Value};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn latdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latdual"))
        .args(args)
        .env_remove(latdual::guard::ENV_VAR)
        .output()
        .expect("binary runs")
}

fn json_out(args: &[&str]) -> Value {
    let o = latdual(args);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("stdout is one JSON document")
}

fn code(args: &[&str]) -> i32 {
    latdual(args).status.code().expect("exit code")
}

fn paper_minimal() -> Value {
    json!([
        ["m1", "m2", "m3"], ["m1", "m2", "m6"], ["m1", "m3", "m5"], ["m1", "m5", "m6"],
        ["m2", "m3", "m4"], ["m2", "m4", "m6"], ["m3", "m4", "m5"], ["m4", "m5", "m6"]
    ])
}

#[test]
fn ctx_close_empty_set() {
    let v = json_out(&["ctx", "close", "--context", &fixture("k_plus.cxt"), "--set", ""]);
    assert_eq!(v, json!([]));
}

#[test]
fn ctx_concepts_contranominal() {
    let v = json_out(&["ctx", "concepts", "--context", &fixture("contranominal3.cxt")]);
    assert_eq!(v.as_array().unwrap().len(), 8);
}

#[test]
fn ctx_malformed_header() {
    assert_eq!(code(&["ctx", "concepts", "--context", &fixture("bad_header.cxt")]), 2);
}

#[test]
fn ctx_reduce_writes_cxt() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.cxt");
    let v = json_out(&["ctx", "reduce", "--context", &fixture("contranominal3.cxt"), "--out", out.to_str().unwrap()]);
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(v["cxt"], Value::String(text.clone()));
    assert_eq!(text, std::fs::read_to_string(fixture("contranominal3.cxt")).unwrap());
}

#[test]
fn hypo_minimal_paper_fixture() {
    let from_cxt = json_out(&["hypo", "minimal", "--pos", &fixture("k_plus.cxt"), "--neg", &fixture("k_minus.cxt")]);
    assert_eq!(from_cxt, paper_minimal());
    let from_json = json_out(&["hypo", "minimal", "--training", &fixture("paper_training.json")]);
    assert_eq!(from_json, from_cxt);
    let iterative = json_out(&["hypo", "minimal", "--training", &fixture("paper_training.json"), "--iterative"]);
    assert_eq!(iterative, from_cxt);
}

#[test]
fn hypo_weak_includes_empty_set() {
    let v = json_out(&["hypo", "minimal", "--training", &fixture("paper_training.json"), "--k", "3"]);
    assert_eq!(v, json!([[]]));
    let all = json_out(&["hypo", "all", "--training", &fixture("paper_training.json"), "--k", "3"]);
    assert!(all.as_array().unwrap().contains(&json!([])));
}

#[test]
fn hypo_mismatched_attributes() {
    let args = ["hypo", "minimal", "--pos", &fixture("k_plus.cxt"), "--neg", &fixture("k_other_attrs.cxt")];
    assert_eq!(code(&args), 2);
}

#[test]
fn hypo_classify() {
    let v = json_out(&["hypo", "classify", "--training", &fixture("paper_training.json"), "--intent", "m1,m2,m3"]);
    assert_eq!(v["classification"], "positive");
}

#[test]
fn hypo_amh_matches_library() {
    let v = json_out(&["hypo", "amh", "--training", &fixture("paper_training.json")]);
    assert_eq!(v["additional"], true);
    let t = formats::parse_training_json(&std::fs::read_to_string(fixture("paper_training.json")).unwrap()).unwrap();
    let h = hypotheses::find_new_min_h(&t, &[]).unwrap();
    assert_eq!(v["hypothesis"], formats::set_json(&h, t.attributes()));
}

#[test]
fn dual_test_chain() {
    let args = ["dual", "test", "--poset", &fixture("chain3.json"), "--a", &fixture("a_p1.json"), "--b", &fixture("b_empty.json")];
    let v = json_out(&args);
    assert_eq!(v["dual"], true);
    assert_eq!(v["witness"], Value::Null);
    assert!(v["recursive_calls"].as_u64().unwrap() >= 1);
}

#[test]
fn dual_test_oracle_witness_and_strict_exit() {
    let args = ["dual", "test", "--poset", &fixture("antichain2.json"), "--a", &fixture("a_p1.json"), "--b", &fixture("b_empty.json"), "--oracle"];
    let v = json_out(&args);
    assert_eq!(v["dual"], false);
    assert_eq!(v["witness"], json!(["p2"]));
    let mut strict = args.to_vec();
    strict.push("--strict-exit");
    assert_eq!(code(&strict), 1);
}

#[test]
fn dual_parallel_output_identical() {
    let base = ["dual", "test", "--poset", &fixture("antichain2.json"), "--a", &fixture("a_full2.json"), "--b", &fixture("b_atoms2.json"), "--stats"];
    let seq = latdual(&base).stdout;
    let mut par = base.to_vec();
    par.push("--parallel");
    assert_eq!(latdual(&par).stdout, seq);
}

#[test]
fn dual_dualize_antichain() {
    let v = json_out(&["dual", "dualize", "--poset", &fixture("antichain2.json"), "--a", &fixture("a_full2.json")]);
    assert_eq!(v, json!([["p1"], ["p2"]]));
}

#[test]
fn dual_rejects_non_downset() {
    let args = ["dual", "test", "--poset", &fixture("chain3.json"), "--a", &fixture("not_downset.json"), "--b", &fixture("b_empty.json")];
    assert_eq!(code(&args), 2);
}

#[test]
fn dual_star_violation_is_input_error() {
    let args = ["dual", "brute", "--poset", &fixture("antichain2.json"), "--a", &fixture("a_p1.json"), "--b", &fixture("a_full2.json")];
    assert_eq!(code(&args), 2);
}

#[test]
fn guard_exit_code() {
    let o = Command::new(env!("CARGO_BIN_EXE_latdual"))
        .args(["ctx", "concepts", "--context", &fixture("contranominal3.cxt")])
        .env(latdual::guard::ENV_VAR, "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
}

#[test]
fn sat2amh_single_clause() {
    let v = json_out(&["reduce", "sat2amh", "--cnf", &fixture("one_clause.cnf")]);
    assert_eq!(v["training"]["attributes"], json!(["C1", "x1", "!x1"]));
    assert_eq!(v["training"]["positive"].as_object().unwrap().len(), 3);
    assert_eq!(v["training"]["negative"].as_object().unwrap().len(), 1);
    assert_eq!(v["training"]["positive"]["g_x1"], "..X");
    assert_eq!(v["known"], json!([["C1"]]));
}

#[test]
fn sat2amh_then_amh() {
    for (cnf, expected) in [("unsat.cnf", false), ("sat2.cnf", true)] {
        let dir = tempfile::tempdir().unwrap();
        let d = dir.path().to_str().unwrap();
        json_out(&["reduce", "sat2amh", "--cnf", &fixture(cnf), "--out", d]);
        let training = dir.path().join("training.json");
        let known = dir.path().join("known.json");
        let v = json_out(&["hypo", "amh", "--training", training.to_str().unwrap(), "--known", known.to_str().unwrap()]);
        assert_eq!(v["additional"], expected, "{cnf}");
        let via_cxt = json_out(&[
            "hypo",
            "amh",
            "--pos",
            dir.path().join("k_plus.cxt").to_str().unwrap(),
            "--neg",
            dir.path().join("k_minus.cxt").to_str().unwrap(),
            "--known",
            known.to_str().unwrap(),
        ]);
        assert_eq!(via_cxt, v);
    }
}

#[test]
fn sat2amh_missing_file() {
    assert_eq!(code(&["reduce", "sat2amh", "--cnf", "/nonexistent.cnf"]), 2);
}

#[test]
fn dci2mibr_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let p = |n: &str| dir.path().join(n).to_str().unwrap().to_string();
    let ctx = json_out(&["imp", "contraordinal", "--poset", &fixture("antichain2.json")]);
    std::fs::write(p("k.cxt"), ctx["cxt"].as_str().unwrap()).unwrap();
    let base = json_out(&["imp", "min-base", "--poset", &fixture("antichain2.json")]);
    std::fs::write(p("j.json"), base.to_string()).unwrap();
    let v = json_out(&[
        "reduce", "dci2mibr", "--context", &p("k.cxt"), "--a", &fixture("a_full2.json"), "--b", &fixture("b_atoms2.json"),
        "--base", &p("j.json"), "--out", &p("out"),
    ]);
    assert_eq!(v["context"]["objects"].as_array().unwrap().len(), 4);
    let check = json_out(&["imp", "is-base", "--context", &p("out/k_b.cxt"), "--base", &p("out/j_a.json")]);
    assert_eq!(check["base"], true);
}

#[test]
fn poset_and_lattice_verbs() {
    let downs = json_out(&["poset", "downsets", "--poset", &fixture("chain3.json")]);
    assert_eq!(downs.as_array().unwrap().len(), 4);
    let irr = json_out(&["lattice", "irreducibles", "--lattice", &fixture("chain3.json")]);
    assert_eq!(irr, json!({ "join_irreducible": ["p2", "p3"], "meet_irreducible": ["p1", "p2"] }));
    let prod = json_out(&["lattice", "product", "--lattice", &fixture("chain3.json"), "--lattice", &fixture("chain3.json")]);
    let k = formats::parse_cxt(prod["cxt"].as_str().unwrap()).unwrap();
    assert_eq!(k.concepts().unwrap().len(), 9);
    assert_eq!(code(&["lattice", "irreducibles", "--lattice", &fixture("antichain2.json")]), 2);
}

#[test]
fn imp_close() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("j.json");
    std::fs::write(&base, r#"[{"premise":["m1"],"conclusion":["m2"]},{"premise":["m2"],"conclusion":["m3"]}]"#).unwrap();
    let v = json_out(&["imp", "close", "--context", &fixture("contranominal3.cxt"), "--base", base.to_str().unwrap(), "--set", "m1"]);
    assert_eq!(v, json!(["m1", "m2", "m3"]));
}

#[test]
fn outputs_are_byte_identical() {
    let args = ["hypo", "all", "--training", &fixture("paper_training.json")];
    assert_eq!(latdual(&args).stdout, latdual(&args).stdout);
}
