//! Integration tests against the compiled binary: determinism, exit-code
//! contract, batch isolation, and the report round trip.

use std::io::Write;
use std::process::{Command, Output};

use vcyc_cli::doc::{self, ReportDocument};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_vcyc"))
}

fn corpus_path() -> String {
    format!("{}/tests/data/corpus.json", env!("CARGO_MANIFEST_DIR"))
}

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    bin().args(args).env_remove("VCYC_FAULT_INJECT").output().unwrap()
}

#[test]
fn compute_is_byte_deterministic() {
    let a = run(&["compute", "--input", &corpus_path()]);
    let b = run(&["compute", "--input", &corpus_path()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());

    let md1 = run(&["compute", "--input", &corpus_path(), "--format", "md"]);
    let md2 = run(&["compute", "--input", &corpus_path(), "--format", "md"]);
    assert_eq!(md1.stdout, md2.stdout);
}

#[test]
fn report_round_trips_byte_identically() {
    let out = run(&["compute", "--input", &corpus_path()]);
    let text = String::from_utf8(out.stdout).unwrap();
    let parsed: ReportDocument = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.to_json(), text);
    assert_eq!(parsed.tool_version, doc::TOOL_VERSION);
}

#[test]
fn cohomology_report_round_trips() {
    let out = run(&["cohomology", "--input", &corpus_path()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let parsed: ReportDocument = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.to_json(), text);
    // At least the mapping-torus entries carry tables.
    assert!(parsed.groups.iter().any(|g| g.cohomology.is_some()));
    assert!(parsed.groups.iter().any(|g| g.mv_certificate.is_some()));
}

#[test]
fn usage_errors_exit_1() {
    let out = run(&["compute"]); // missing --input
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["product", "--input", &corpus_path(), "--left", "z", "--right", "missing"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn validation_errors_exit_2() {
    let f = write_temp("{ not json");
    let out = run(&["compute", "--input", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("malformed JSON"));

    let f = write_temp(r#"{"version":"7","groups":[]}"#);
    let out = run(&["compute", "--input", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let f = write_temp(
        r#"{"version":"1","groups":[
            {"name":"a","group":{"tag":"free_abelian","n":1}},
            {"name":"a","group":{"tag":"free_abelian","n":2}}]}"#,
    );
    let out = run(&["compute", "--input", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_entries_do_not_poison_the_batch() {
    let f = write_temp(
        r#"{"version":"1","groups":[
            {"name":"good","group":{"tag":"free_abelian","n":2}},
            {"name":"bad_tag","group":{"tag":"mystery","n":2}},
            {"name":"bad_matrix","group":{"tag":"zn_by_z","n":2,"A":[[2,0],[0,1]]}},
            {"name":"also_good","group":{"tag":"z_one_over_p","p":3}}]}"#,
    );
    let out = run(&["compute", "--input", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "diagnostics present");
    let text = String::from_utf8(out.stdout).unwrap();
    let parsed: ReportDocument = serde_json::from_str(&text).unwrap();
    let names: Vec<&str> = parsed.groups.iter().map(|g| g.name.as_str()).collect();
    assert_eq!(names, vec!["also_good", "good"]);
    assert_eq!(parsed.diagnostics.len(), 2);
    assert!(parsed.diagnostics.iter().any(|d| d.name == "bad_tag" && d.rule == "schema"));
    assert!(parsed
        .diagnostics
        .iter()
        .any(|d| d.name == "bad_matrix" && d.rule == "zn_by_z.unimodular"));
}

#[test]
fn empty_document_gives_empty_report() {
    let f = write_temp(r#"{"version":"1","groups":[]}"#);
    let out = run(&["compute", "--input", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: ReportDocument =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert!(parsed.groups.is_empty());
    assert!(parsed.diagnostics.is_empty());
}

#[test]
fn verify_clean_corpus_exits_0() {
    let out = run(&["verify", "--input", &corpus_path()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 check(s) failed"));
}

#[test]
fn verify_detects_injected_faults() {
    let out = bin()
        .args(["verify", "--input", &corpus_path()])
        .env("VCYC_FAULT_INJECT", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("DISCREPANCY"));
}

#[test]
fn shallow_oracle_depth_warns_instead_of_failing() {
    let f = write_temp(
        r#"{"version":"1","groups":[
            {"name":"rot","group":{"tag":"zn_by_z","n":2,"A":[[0,-1],[1,0]]}}]}"#,
    );
    let out = run(&["verify", "--input", f.path().to_str().unwrap(), "--oracle-depth", "1"]);
    assert_eq!(out.status.code(), Some(0), "depth-insufficient is a warning, not a failure");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("WARNING"));
    assert!(text.contains("not conclusive"));
}

#[test]
fn oracle_depth_env_variable_is_honored() {
    let f = write_temp(
        r#"{"version":"1","groups":[
            {"name":"rot","group":{"tag":"zn_by_z","n":2,"A":[[0,-1],[1,0]]}}]}"#,
    );
    let out = bin()
        .args(["verify", "--input", f.path().to_str().unwrap()])
        .env("VCYC_ORACLE_DEPTH", "1")
        .env_remove("VCYC_FAULT_INJECT")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("WARNING"));
}

#[test]
fn product_command_reports() {
    let out = run(&[
        "product",
        "--input",
        &corpus_path(),
        "--left",
        "hei_by_z_hyperbolic",
        "--right",
        "hei_by_z_hyperbolic",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: ReportDocument =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(parsed.groups.len(), 1);
    let r = &parsed.groups[0].report;
    assert_eq!(r.hdim_fin, 8);
    assert_eq!(r.hdim_vcyc, vcyc_core::DimValue::Exact(9));

    // Mixing in a non-poly-Z factor is rejected.
    let out = run(&["product", "--input", &corpus_path(), "--left", "z", "--right", "z_half"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stdin_input_works() {
    use std::process::Stdio;
    let mut child = bin()
        .args(["compute", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(br#"{"version":"1","groups":[{"name":"t","group":{"tag":"free_abelian","n":2}}]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("\"hdim_vcyc\": 3"));
}

#[test]
fn golden_citations_identify_the_rule_that_fired() {
    let out = run(&["compute", "--input", &corpus_path()]);
    let parsed: ReportDocument =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let citations = |name: &str| -> Vec<String> {
        parsed.groups.iter().find(|g| g.name == name).unwrap().report.citations.clone()
    };
    assert!(citations("sol").contains(&"zn-by-z-dichotomy".to_string()));
    assert!(citations("sol").contains(&"poly-z-case-empty".to_string()));
    assert!(citations("hei3_central").contains(&"central-extension-rule".to_string()));
    assert!(citations("hei_by_z_identity").contains(&"poly-z-case-many".to_string()));
    assert!(citations("z_half").contains(&"z-one-over-p-rule".to_string()));
    assert!(citations("locally_vc_proper").contains(&"low-dimension-table".to_string()));
    assert!(citations("product_sol_sol").contains(&"product-bounds-rule".to_string()));
}
