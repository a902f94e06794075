use std::process::Command as Process;

use proptest::prelude::*;
use serde_json::Value;
use tamecurve::poly::BiPoly;
use tamecurve::syntax::parse_bipoly;
use tamecurve_cli::{combined_code, run_batch, run_line, Flags};

const GOLDEN: &str = include_str!("golden/worked_examples.txt");

fn json_flags() -> Flags {
    Flags {
        json: true,
        ..Flags::default()
    }
}

/// `(command, exit code, json line)` records of the golden file.
fn golden() -> Vec<(&'static str, i32, &'static str)> {
    let lines: Vec<&str> = GOLDEN.lines().filter(|l| !l.starts_with('#')).collect();
    lines
        .chunks(2)
        .map(|pair| {
            let (code, json) = pair[1].split_once(' ').unwrap();
            (pair[0], code.parse().unwrap(), json)
        })
        .collect()
}

#[test]
fn worked_examples_are_bit_exact() {
    for (cmd, code, json) in golden() {
        let out = run_line(cmd, &json_flags());
        assert_eq!(out.output, json, "{cmd}");
        assert_eq!(out.code, code, "{cmd}");
    }
}

#[test]
fn golden_lines_follow_the_schemas() {
    for (cmd, _, json) in golden() {
        let v: Value = serde_json::from_str(json).unwrap();
        if let Some(trace) = v.get("trace").or_else(|| v.get("witness")).filter(|t| !t.is_null()) {
            let steps = trace["steps"].as_array().unwrap();
            assert_eq!(steps.len(), trace["degrees"].as_array().unwrap().len(), "{cmd}");
            for s in steps {
                let ty = s["type"].as_str().unwrap();
                assert!(["ET1", "ET2", "linear", "elem_x", "elem_y", "affine"].contains(&ty), "{cmd}");
                if let Some(mu) = s.get("mu") {
                    assert!(mu.is_string(), "{cmd}");
                }
            }
        }
        if cmd.starts_with("equiv") {
            let verdict = v["verdict"].as_str().unwrap();
            assert!(["equivalent", "inequivalent", "unknown"].contains(&verdict));
            assert!(v["reason"].is_string());
        }
        if let Some(e) = v.get("error") {
            assert!(e.is_string() && v["message"].is_string());
        }
    }
}

#[test]
fn human_output_for_the_spec_commands() {
    let flags = Flags::default();
    let out = run_line(r#"equiv "x^2 - y^3" "(x+y)^2 - y^3""#, &flags);
    assert_eq!(out.code, 0);
    assert!(out.output.starts_with("Equivalent\nwitness:\n  x -> x + y, y -> y"), "{}", out.output);

    let out = run_line(r#"coord "x^2 - y^3""#, &flags);
    assert_eq!(out.code, 0);
    assert!(out.output.starts_with("not coordinate"));

    let out = run_line("family --k 2 --primes 7,2,3", &flags);
    assert_eq!(out.code, 0);
    assert!(out.output.contains("f1 = -x^7 + y^6 + y"));
    assert!(out.output.contains("f1 vs f2: inequivalent"));
    assert!(out.output.contains("(verified)"));
}

#[test]
fn errors_carry_their_name() {
    let out = run_line(r#"canon "x +""#, &Flags::default());
    assert_eq!(out.code, 1);
    assert_eq!(out.output, "error: parse error at position 3: unexpected end of input (ParseError)");
    let out = run_line(r#"canon "t + x""#, &json_flags());
    assert_eq!(out.output, r#"{"error":"MixedVariables","message":"expression mixes t with x or y"}"#);
    assert_eq!(run_line("frobnicate x", &json_flags()).code, 1);
}

#[test]
fn groebner_budget_is_unknown() {
    let out = run_line("--budget 1 groebner --order lex xy-1 x^2-y x+y^3", &json_flags());
    assert_eq!(out.code, 2, "{}", out.output);
    let v: Value = serde_json::from_str(&out.output).unwrap();
    assert!(v["basis"].is_null());
}

#[test]
fn batch_keeps_order_and_worst_code() {
    let text = "# comment\ncoord x\n\ncanon \"x^2 - 2y^2\"\ncoord \"x^2 - y^3\"\n";
    let outs = run_batch(text, &json_flags());
    assert_eq!(outs.len(), 3);
    assert!(outs[0].output.contains("\"coordinate\""));
    assert!(outs[2].output.contains("not_coordinate"));
    assert_eq!(combined_code(&outs), 2);
    let outs = run_batch("coord x\ncanon \"(\"", &json_flags());
    assert_eq!(combined_code(&outs), 1);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tamecurve");
    let run = |args: &[&str]| Process::new(bin).args(args).output().unwrap();
    let out = run(&["coord", "x^2 - y^3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "not coordinate\nreason: canonical form has degree 3\n");
    assert_eq!(run(&["canon", "x^2 - 2y^2"]).status.code(), Some(2));
    assert_eq!(run(&["--json", "canon", "x^"]).status.code(), Some(1));
    assert_eq!(run(&["canon", "-x + y^2"]).status.code(), Some(0));

    let dir = std::env::temp_dir().join(format!("tamecurve-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("cmds.txt");
    std::fs::write(&file, "coord x\nzl \"x^4 - y^6\"\n").unwrap();
    let out = run(&["--json", "--batch", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 2);
    std::fs::remove_dir_all(dir).unwrap();
}

fn small_bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0u32..7, 0u32..7), -5i64..=5, 1i64..=4), 0..8).prop_map(|terms| {
        BiPoly::from_terms(terms.into_iter().map(|((i, j), n, d)| ((i, j), tamecurve::poly::rat::frac(n, d))))
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(p in small_bipoly()) {
        prop_assert_eq!(parse_bipoly(&p.to_string()).unwrap(), p);
    }
}
