use std::path::PathBuf;
use std::process::Command;

use hilbound_core::parse::{parse_ideal_file, parse_polynomial};
use hilbound_core::Ideal;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn hilbound(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_hilbound")).args(args).output().expect("spawn");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf8"),
        stderr: String::from_utf8(out.stderr).expect("utf8"),
    }
}

fn reports(run: &Run) -> Vec<Value> {
    run.stdout.lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

fn ideal_file(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn twisted_cubic_hilbert_data() {
    let run = hilbound(&["hilbert", "--fixture", "rnc:3"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let r = &reports(&run)[0];
    assert_eq!(r["dimension"], 1);
    assert_eq!(r["degree"], "3");
    let values = strings(&r["hilbert_values"]);
    assert_eq!(&values[..4], ["1", "4", "7", "10"]);
    // 3m + 1 throughout
    for (m, v) in values.iter().enumerate() {
        assert_eq!(*v, (3 * m + 1).to_string());
    }
    assert_eq!(r["o_sequence"], true);
}

#[test]
fn certify_univariate_pair() {
    let dir = tempfile::tempdir().unwrap();
    let path = ideal_file(&dir, "pair.ideal", "ring: x over Q\nx\n1 - x\n");
    let run = hilbound(&["certify", path.to_str().unwrap(), "--g", "1"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let r = &reports(&run)[0];
    // deg(1 * x) = 1 forces D >= 1, and D = 1 works
    assert_eq!(r["certificate"]["achieved_D"], 1);
    assert_eq!(r["certificate"]["verified"], true);
    assert_eq!(strings(&r["certificate"]["cofactors"]), ["1", "1"]);
    assert_eq!(r["within_bound"], true);
}

#[test]
fn certify_square_and_hyperbola() {
    let dir = tempfile::tempdir().unwrap();
    let path = ideal_file(&dir, "w.ideal", "ring: x,y over Q\nx^2\n1 - x*y\n");
    for search in ["incremental", "bisection"] {
        let run = hilbound(&["certify", path.to_str().unwrap(), "--search", search]);
        assert_eq!(run.code, 0, "{}", run.stderr);
        let r = &reports(&run)[0];
        assert_eq!(r["certificate"]["achieved_D"], 4, "{search}");
    }
}

#[test]
fn thm43_on_complete_intersection() {
    let dir = tempfile::tempdir().unwrap();
    let path = ideal_file(&dir, "ci.ideal", "ring: x,y over Q\nx^2 - y\n");
    let run = hilbound(&["certify", path.to_str().unwrap(), "--mode", "thm43", "--g", "x^3 - x*y"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let r = &reports(&run)[0];
    assert_eq!(strings(&r["certificate"]["cofactors"]), ["x"]);
    assert_eq!(r["certificate"]["verified"], true);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = ideal_file(&dir, "bad.ideal", "ring: x,y over Q\nx^2 +\n");
    let run = hilbound(&["hilbert", bad.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("line 2"), "{}", run.stderr);

    let ring_mismatch = ideal_file(&dir, "mm.ideal", "ring: x,y over Q\nx*z\n");
    assert_eq!(hilbound(&["gb", ring_mismatch.to_str().unwrap()]).code, 2);
    assert_eq!(hilbound(&["gb", "--fixture", "nosuch:3"]).code, 2);
    assert_eq!(hilbound(&["bounds", "--fixture", "rnc:3", "--thm", "9.9"]).code, 2);
    assert_eq!(hilbound(&["gb"]).code, 2);

    // a common zero: the system is not a unit-ideal system
    assert_eq!(hilbound(&["certify", "--fixture", "rnc:2"]).code, 3);

    let ci = ideal_file(&dir, "ci.ideal", "ring: x,y over Q\nx^2 - y\n");
    let run = hilbound(&["membership", ci.to_str().unwrap(), "--g", "x"]);
    assert_eq!(run.code, 1);
    assert_eq!(reports(&run)[0]["in_ideal"], false);
}

#[test]
fn emitted_polynomials_reparse() {
    let dir = tempfile::tempdir().unwrap();
    let text = "ring: x,y,z over Q\n3/2*x^2 - y*z\nx*y - 7*z^2 + 1/3*x*z\n";
    let path = ideal_file(&dir, "q.ideal", text);
    let input = parse_ideal_file(text).unwrap();
    for order in ["grevlex", "lex", "grlex"] {
        let ordered = input.ring.with_order(hilbound::config::parse_order(order).unwrap());
        let run = hilbound(&["gb", path.to_str().unwrap(), "--order", order]);
        assert_eq!(run.code, 0, "{}", run.stderr);
        let r = &reports(&run)[0];
        let basis: Vec<_> = strings(&r["basis"])
            .iter()
            .map(|s| {
                let p = parse_polynomial(&ordered, s).unwrap();
                assert_eq!(&p.to_string(), s);
                p
            })
            .collect();
        let original = Ideal::new(&ordered, input.polynomials.clone()).unwrap();
        assert!(original.equals(&Ideal::new(&ordered, basis).unwrap()).unwrap());
    }
}

#[test]
fn runs_are_reproducible() {
    let args = ["certify", "--fixture", "unit:2:7", "--seed", "11", "--trials", "3"];
    let a = hilbound(&args);
    let b = hilbound(&args);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);

    let other = hilbound(&["certify", "--fixture", "unit:2:7", "--seed", "12", "--trials", "3"]);
    let lambdas = |run: &Run| reports(run)[0]["geometric_degree"]["trials"][1]["lambda"].clone();
    assert_ne!(lambdas(&a), lambdas(&other));
}

#[test]
fn lower_bound_on_random_ideals() {
    for seed in 0..10 {
        let spec = format!("random:{seed}");
        let run = hilbound(&["bounds", "--fixture", &spec, "--thm", "2.3"]);
        assert_eq!(run.code, 0, "{spec}: {}", run.stderr);
        let status = &reports(&run)[0]["verdict"]["status"];
        assert!(status == "holds" || status == "not-applicable", "{spec}: {status}");
    }
}

#[test]
fn bounds_all_on_curve_fixture() {
    let run = hilbound(&["bounds", "--fixture", "cndelta:4:2,1", "--section-degree", "2", "--upto", "12"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let rs = reports(&run);
    let names: Vec<_> = rs.iter().map(|r| r["theorem"].as_str().unwrap().to_string()).collect();
    assert_eq!(names, ["lower_thm23", "upper_thm21", "upper_thm22", "chardin", "section_thm24"]);
    assert!(rs.iter().all(|r| r["verdict"]["status"] == "holds"));
    // two disjoint curves of degrees 2 and 1: h(m) = 3m + 2
    let thm21 = &rs[1];
    assert_eq!(thm21["extremal"], true);
    assert_eq!(thm21["rows"][0]["actual"], "5");
}

#[test]
fn unknown_component_count_is_skipped() {
    let run = hilbound(&["bounds", "--fixture", "random:1"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let rs = reports(&run);
    assert_eq!(rs[1]["theorem"], "upper_thm21");
    assert_eq!(rs[1]["verdict"]["status"], "not-applicable");
    assert_eq!(rs[0]["hypotheses"], "certified");
    assert_eq!(rs[2]["hypotheses"], "asserted-by-user");
    assert_eq!(hilbound(&["bounds", "--fixture", "random:1", "--thm", "2.1"]).code, 2);
}

#[test]
fn straightening_example_family() {
    let run = hilbound(&["regseq", "--fixture", "example31"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let r = &reports(&run)[0];
    assert_eq!(r["input_regular"], false);
    assert_eq!(r["output_regular"], true);
    assert_eq!(r["step_ideals_agree"], true);
}

#[test]
fn regular_sequence_avoiding_a_form() {
    let run = hilbound(&["regseq", "--fixture", "rnc:3", "--avoid", "--form", "x0 + x3"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let r = &reports(&run)[0];
    assert_eq!(r["certified"], true);
    assert_eq!(r["elements"].as_array().unwrap().len(), 2);
}

#[test]
fn delta_reports_degree_comparison() {
    let run = hilbound(&["delta", "--fixture", "example41:3"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let r = &reports(&run)[0];
    assert_eq!(r["degree_comparison"]["geometric_bound"], "684");
    assert_eq!(r["degree_comparison"]["degree_power_bound"], "1000");
    assert_eq!(r["degree_comparison"]["sharper"], true);
    assert_eq!(r["product_bound"]["holds"], true);
}

#[test]
fn membership_uses_sequence_bookkeeping() {
    let dir = tempfile::tempdir().unwrap();
    let path = ideal_file(&dir, "w.ideal", "ring: x,y over Q\nx^2\n1 - x*y\n");
    let run = hilbound(&["membership", path.to_str().unwrap(), "--g", "1"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let r = &reports(&run)[0];
    assert_eq!(r["power"], 4);
    assert_eq!(r["power_membership"], true);
    let below = hilbound(&["membership", path.to_str().unwrap(), "--g", "1", "--power", "3"]);
    assert_eq!(below.code, 1);
}

#[test]
fn fixture_listing_and_text_output() {
    let run = hilbound(&["--fixtures"]);
    assert_eq!(run.code, 0);
    for p in ["rnc:<n>", "cndelta:", "hyp:<n>:<d>:<e>", "example31", "example41:<seed>"] {
        assert!(run.stdout.contains(p), "{p}");
    }
    let text = hilbound(&["hilbert", "--fixture", "rnc:2", "--format", "text"]);
    assert_eq!(text.code, 0);
    assert!(text.stdout.lines().any(|l| l == "degree: 2"), "{}", text.stdout);
}

#[test]
fn field_flag_converts_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = ideal_file(&dir, "q.ideal", "ring: x,y over Q\nx^2 - 1/2*y^2\n");
    let run = hilbound(&["gb", path.to_str().unwrap(), "--field", "fp:7"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let r = &reports(&run)[0];
    assert_eq!(r["ring"], "ring: x,y over Fp:7");
    // -1/2 = 3 mod 7
    assert_eq!(strings(&r["basis"]), ["x^2 + 3*y^2"]);
}
