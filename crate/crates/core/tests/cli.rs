use std::process::Command;

use tropstrat::cli::run;
use tropstrat::curve::{curve_ideal, names};
use tropstrat::{ideal_equal, initial_ideal, parse_poly_list, PolyIdeal, ResiduePoly, WeightVector};

const FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/curve.id");

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tropstrat").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn initial_prints_the_quoted_ideal() {
    let (code, out, _) = call(&["initial", "--vars", "x,y,z", "--ideal", FIXTURE, "--w", "0,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "(x-1)^2, y-1");
}

#[test]
fn initial_output_round_trips() {
    let vars = names();
    for w in ["0,0,-1/2", "0,0,0", "0,0,1", "0,0,3", "-1/3,0,2"] {
        let (code, out, err) = call(&["initial", "--ideal", FIXTURE, "--w", w]);
        assert_eq!(code, 0, "{err}");
        let direct = initial_ideal(&curve_ideal(), &WeightVector::parse(w).unwrap()).unwrap();
        let printed: Vec<ResiduePoly> = parse_poly_list(out.trim(), &vars)
            .unwrap()
            .iter()
            .map(|g| g.map_coeffs(|c| c.as_rational().unwrap()))
            .collect();
        let reparsed = PolyIdeal::new(vars.len(), printed).unwrap();
        assert!(ideal_equal(&reparsed, &direct.ideal()).unwrap(), "at {w}: {out}");
    }
}

#[test]
fn json_and_text_demo_agree() {
    let (code_text, text, _) = call(&["curve-demo"]);
    let (code_json, json, _) = call(&["paper-demo", "--json"]);
    assert_eq!(code_text, code_json);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let checks = v["checks"].as_array().unwrap();
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).collect();
    assert_eq!(lines.len(), checks.len());
    for (line, c) in lines.iter().zip(checks) {
        let status = if c["pass"].as_bool().unwrap() { "PASS" } else { "FAIL" };
        let rendered = format!(
            "{status} {}: expected {}, computed {}",
            c["name"].as_str().unwrap(),
            c["expected"].as_str().unwrap(),
            c["computed"].as_str().unwrap()
        );
        assert_eq!(*line, rendered);
    }
    assert_eq!(v["pass"].as_bool().unwrap(), code_json == 0);
}

#[test]
fn stratify_ray_json() {
    let (code, out, _) = call(&[
        "stratify-ray", "--vars", "x,y,z", "--ideal", FIXTURE, "--base", "0,0,0", "--dir", "0,0,1", "--lo", "-1",
        "--hi", "10", "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["breakpoints"], serde_json::json!(["0"]));
    assert_eq!(v["capped"], serde_json::json!([false, false]));
    assert_eq!(v["segments"][1]["range"], serde_json::json!({"lo": "0", "hi": "0"}));
}

#[test]
fn matroid_commands() {
    let (code, out, _) = call(&["bergman", "--bases", "12,13,23", "--n", "3", "--w", "1,0,0"]);
    assert_eq!((code, out.trim()), (0, "outside (loop: 1)"));
    let (_, out, _) = call(&["bergman", "--bases", "12,13,23", "--n", "3", "--w", "0,0,0"]);
    assert_eq!(out.trim(), "inside");
    let (code, out, _) = call(&["matroid-min", "--bases", "12,13,23", "--n", "3", "--w", "-1,0,0", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rank"], 2);
}

#[test]
fn other_subcommands() {
    let (code, out, _) = call(&["tropmember", "--ideal", FIXTURE, "--w", "0,0,-2"]);
    assert_eq!((code, out.trim()), (0, "outside"));
    let (code, out, _) = call(&["homspace", "--ideal", FIXTURE, "--w", "0,0,1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 1);
    let (code, _, _) = call(&["compare", "--ideal", FIXTURE, "--w", "0,0,0", "--support-gens", "x-1, y-1"]);
    assert_eq!(code, 0);
    let (code, out, _) = call(&["series-branches", "--sign", "-", "--n", "8"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn input_errors_exit_2() {
    let (code, _, err) = call(&["initial", "--vars", "x,y", "--gens", "x + (y", "--w", "0,0"]);
    assert_eq!(code, 2);
    assert!(err.contains("column"), "{err}");
    let (code, _, _) = call(&["initial", "--vars", "x,t", "--gens", "x", "--w", "0,0"]);
    assert_eq!(code, 2);
    let (code, _, _) = call(&["initial", "--vars", "x,y,z", "--ideal", FIXTURE, "--w", "0,0"]);
    assert_eq!(code, 2);
    let (code, _, _) = call(&["no-such-command"]);
    assert_eq!(code, 2);
}

#[test]
fn step_limit_exits_3() {
    let status = Command::new(env!("CARGO_BIN_EXE_tropstrat"))
        .args(["initial", "--ideal", FIXTURE, "--w", "0,0,0"])
        .env("TROPSTRAT_MAX_GB_STEPS", "5")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(3));
    assert!(!status.stderr.is_empty());
}
