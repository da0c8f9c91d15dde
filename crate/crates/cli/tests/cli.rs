use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn algebra(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "algebras", name].iter().collect();
    p.to_string_lossy().into_owned()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn dihedra(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_dihedra")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let r = dihedra(&all);
    (r.code, serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{e}: {}{}", r.stdout, r.stderr)))
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("dihedra-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

fn dims(table: &Value) -> Vec<u64> {
    table["rows"].as_array().unwrap().iter().map(|r| r["dim"].as_u64().unwrap()).collect()
}

#[test]
fn validate_passes_the_sample_algebras() {
    for f in ["ground_field.json", "ground_field_hat.json", "ground_field_zero.json", "dual_numbers.json", "interval.json", "interval_dual.json"] {
        let r = dihedra(&["validate", &algebra(f)]);
        assert_eq!(r.code, 0, "{f}: {}{}", r.stdout, r.stderr);
        assert!(r.stdout.contains("square-zero: pass"), "{f}");
    }
}

#[test]
fn broken_involution_is_reported_with_a_witness() {
    let r = dihedra(&["validate", &algebra("interval_broken_involution.json")]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("involutive: FAIL"), "{}", r.stdout);
    assert!(r.stdout.contains("generator dual to f"), "{}", r.stdout);
    let (code, v) = json(&["validate", &algebra("interval_broken_involution.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["ok"], false);
    let inv = v["checks"].as_array().unwrap().iter().find(|c| c["check"] == "involutive").unwrap();
    assert_eq!(inv["verdict"], "fail");
    assert_eq!(inv["witnesses"][0]["weight"], 2);
}

#[test]
fn empty_basis_is_trivially_valid() {
    let r = dihedra(&["validate", &algebra("empty.json")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("m = 0"));
    let (code, v) = json(&["cohomology", &algebra("empty.json"), "--degrees", "0..3"]);
    assert_eq!(code, 0);
    assert!(dims(&v["tables"][0]).iter().all(|&d| d == 0));
}

#[test]
fn input_modes_agree_on_the_dual_components() {
    let (_, dga) = json(&["validate", &algebra("interval.json")]);
    let (_, dual) = json(&["validate", &algebra("interval_dual.json")]);
    assert_eq!(dga["m"], dual["m"]);
    let (_, dga) = json(&["validate", &algebra("ground_field.json")]);
    let (_, hat) = json(&["validate", &algebra("ground_field_hat.json")]);
    assert_eq!(dga["m"], hat["m"]);
    assert_eq!(dga["m"][0]["value"], "[1,1]");
}

#[test]
fn ground_field_cyclic_cohomology() {
    let (code, v) = json(&["cohomology", &algebra("ground_field.json"), "--theory", "hc", "--degrees", "0..4", "--decompose"]);
    assert_eq!(code, 0);
    assert_eq!(v["truncation"], 5);
    assert_eq!(dims(&v["tables"][0]), [1, 0, 1, 0, 1]);
    assert_eq!(dims(&v["tables"][1]), [0, 0, 1, 0, 0]);
    assert_eq!(dims(&v["tables"][2]), [1, 0, 0, 0, 1]);
    assert!(v["tables"][0]["rows"].as_array().unwrap().iter().all(|r| r["stable"] == true));
    assert_eq!(v["additivity"], true);
}

#[test]
fn decomposition_prints_three_tables_and_additivity() {
    let r = dihedra(&["cohomology", &algebra("dual_numbers.json"), "--theory", "hh", "--decompose", "--degrees", "0..3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    for t in ["[hh]", "[hh+]", "[hh-]"] {
        assert!(r.stdout.contains(t), "{t}");
    }
    assert!(r.stdout.lines().any(|l| l.starts_with("additivity") && l.ends_with("OK")), "{}", r.stdout);
    let (_, v) = json(&["cohomology", &algebra("dual_numbers.json"), "--degrees", "0..1"]);
    assert_eq!(dims(&v["tables"][0]), [2, 1]);
}

#[test]
fn degree_window_and_filtration_flags() {
    let (_, v) = json(&["cohomology", &algebra("ground_field_zero.json"), "--theory", "hh+", "--degrees", "2..2"]);
    assert_eq!(v["tables"][0]["rows"].as_array().unwrap().len(), 1);
    let (_, v) = json(&["cohomology", &algebra("ground_field_zero.json"), "--theory", "hh+", "--max-weight", "5"]);
    assert_eq!(dims(&v["tables"][0]), [0, 1, 1, 0, 0, 1]);
    let (_, v) = json(&["cohomology", &algebra("ground_field_zero.json"), "--theory", "hh+", "--filtration", "1", "--degrees", "2..2"]);
    assert_eq!(v["filtration"], 1);
    assert_eq!(dims(&v["tables"][0]), [1]);
}

#[test]
fn theory_and_flavor_mismatches_are_explained() {
    let r = dihedra(&["cohomology", &algebra("interval_broken_involution.json"), "--theory", "hd+"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("involutive"), "{}", r.stderr);
    let r = dihedra(&["cohomology", &algebra("interval.json"), "--theory", "hh+", "--decompose"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("no ± decomposition"), "{}", r.stderr);
    let r = dihedra(&["cohomology", &algebra("interval.json"), "--theory", "hx"]);
    assert_ne!(r.code, 0);
    let r = dihedra(&["deform", &algebra("interval.json"), "moduli", "--flavor", "cyc"]);
    assert_eq!(r.code, 2);
    let r = dihedra(&["deform", &algebra("ground_field.json"), "mc-check", "--ring", "eps^x"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("exponent"), "{}", r.stderr);
}

#[test]
fn moduli_of_the_zero_product_match_cohomology() {
    let r = dihedra(&["deform", &algebra("ground_field_zero.json"), "moduli", "--flavor", "inv"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("dim = 1, HH²₊(≥1) = 1, MATCH"), "{}", r.stdout);
    for flavor in ["plain", "inv", "cyc", "cycinv"] {
        let (code, v) = json(&["deform", &algebra("dual_numbers.json"), "moduli", "--flavor", flavor, "--max-weight", "3"]);
        assert_eq!(code, 0, "{flavor}: {v}");
        assert_eq!(v["moduli"]["dim"], v["cohomology"]["dim"]);
    }
}

#[test]
fn mc_check_and_gauge() {
    let r = dihedra(&["deform", &algebra("ground_field.json"), "mc-check", "--ring", "eps^3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("eta = 0") && r.stdout.contains("eta: MC"));
    let (code, v) = json(&["deform", &algebra("ground_field_zero.json"), "gauge"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["eta_is_mc"], true);
    assert_eq!(v["gauged_is_mc"], true);
    assert_eq!(v["gauged"][1]["value"], "3/2·[1,1]");
    let r = dihedra(&["deform", &algebra("ground_field_zero.json"), "gauge"]);
    assert!(r.stdout.contains("MC preserved"));
}

#[test]
fn non_mc_element_fails_with_a_witness() {
    let src = std::fs::read_to_string(algebra("dual_numbers.json")).unwrap();
    let mut v: Value = serde_json::from_str(&src).unwrap();
    v["deformation"] = serde_json::json!({
        "ring": "eps^2",
        "flavor": "plain",
        "eta": [{ "monomial": "eps", "images": { "1": [{ "word": ["1", "x"], "coeff": "1" }] } }]
    });
    let path = temp_file("not_mc.json", &v.to_string());
    let r = dihedra(&["deform", &path, "mc-check"]);
    assert_eq!(r.code, 1, "{}{}", r.stdout, r.stderr);
    assert!(r.stdout.contains("eta: not MC"), "{}", r.stdout);
}

#[test]
fn iso_check_reports() {
    let r = dihedra(&["iso-check", &algebra("ground_field.json")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let weight_lines: Vec<&str> = r.stdout.lines().filter(|l| l.starts_with("weight") && l.contains("chain map")).collect();
    assert_eq!(weight_lines.len(), 6);
    assert!(weight_lines.iter().all(|l| l.ends_with("OK")));
    assert!(r.stdout.contains("+/- parts match"));
    let r = dihedra(&["iso-check", &algebra("dual_numbers.json"), "--max-weight", "3"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    let r = dihedra(&["iso-check", &algebra("degenerate_form.json")]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("radical vector (1=0, x=1)"), "{}", r.stderr);
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        vec!["cohomology", "dual_numbers.json", "--decompose", "--format", "json"],
        vec!["iso-check", "ground_field.json"],
        vec!["deform", "ground_field_zero.json", "gauge"],
    ] {
        let args: Vec<String> = args.iter().map(|a| if a.ends_with(".json") { algebra(a) } else { a.to_string() }).collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(dihedra(&args).stdout, dihedra(&args).stdout);
    }
}

#[test]
fn schema_errors_carry_line_numbers() {
    let path = temp_file("syntax.json", "{\n  \"basis\": [\n    {\"name\": \"a\", \"degree\": 0}\n  ],\n  \"structure\": {\"mode\": \"dga\", \"products\": [}\n}\n");
    let r = dihedra(&["validate", &path]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 5"), "{}", r.stderr);
    let path = temp_file(
        "undeclared.json",
        "{\n  \"basis\": [{\"name\": \"a\", \"degree\": 0}],\n  \"structure\": {\"mode\": \"dga\",\n    \"products\": [{\"left\": \"a\", \"right\": \"b\", \"out\": {\"a\": \"1\"}}]}\n}\n",
    );
    let r = dihedra(&["validate", &path]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 4") && r.stderr.contains("\"b\""), "{}", r.stderr);
    let path = temp_file("badscalar.json", "{\"basis\": [{\"name\": \"a\", \"degree\": 0}], \"form\": {\"degree\": 0, \"gram\": [[\"1/0\"]]}, \"structure\": {\"mode\": \"zero\"}}");
    let r = dihedra(&["validate", &path]);
    assert_eq!(r.code, 2);
    let path = temp_file("wrongdegree.json", "{\"basis\": [{\"name\": \"a\", \"degree\": 0}, {\"name\": \"b\", \"degree\": 1}], \"structure\": {\"mode\": \"dga\", \"products\": [{\"left\": \"a\", \"right\": \"a\", \"out\": {\"b\": \"1\"}}]}}");
    let r = dihedra(&["validate", &path]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("degree"), "{}", r.stderr);
}

#[test]
fn prime_field_mode_matches_the_rationals() {
    let src = std::fs::read_to_string(algebra("dual_numbers.json")).unwrap();
    let mut v: Value = serde_json::from_str(&src).unwrap();
    v["field"] = "F_5".into();
    let path = temp_file("dual_f5.json", &v.to_string());
    let (code, fp) = json(&["cohomology", &path, "--decompose", "--max-weight", "3"]);
    assert_eq!(code, 0);
    assert_eq!(fp["field"], "F_5");
    let (_, q) = json(&["cohomology", &algebra("dual_numbers.json"), "--decompose", "--max-weight", "3"]);
    for i in 0..3 {
        assert_eq!(dims(&fp["tables"][i]), dims(&q["tables"][i]));
    }
    v["field"] = "F_4".into();
    let path = temp_file("dual_f4.json", &v.to_string());
    assert_eq!(dihedra(&["validate", &path]).code, 2);
}
