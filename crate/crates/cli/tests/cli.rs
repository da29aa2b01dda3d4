use std::process::Command;

use clap::Parser;
use gtklr::cyclotomic::{BranchReport, ConjectureReport};
use gtklr::patterns::CompletePattern;
use gtklr_cli::{run, BranchOutput, KkwOutput, KlrDimOutput, ProjectionOutput, RunConfig, Status, TauOutput};
use proptest::prelude::*;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn bin(args: &str) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gtklr")).args(args.split_whitespace()).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn config(args: &str) -> RunConfig {
    RunConfig::try_parse_from(std::iter::once("gtklr").chain(args.split_whitespace())).unwrap()
}

/// Parses the output into `T` and checks that re-serializing gives it back.
fn round_trip<T: Serialize + DeserializeOwned>(args: &str) -> T {
    let out = run(&config(args));
    assert_ne!(out.status, Status::Usage, "{args}: {}", out.output);
    let v: T = serde_json::from_str(&out.output).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap(), out.output, "{args}");
    v
}

#[test]
fn patterns_example() {
    let (code, out, _) = bin("patterns B 2 --weight 2,0");
    assert_eq!(code, 0);
    let ps: Vec<CompletePattern> = serde_json::from_str(&out).unwrap();
    assert_eq!(ps.len(), 5);
    assert!(ps.iter().all(|p| p.rows[0] == vec![2, 0]));
}

#[test]
fn trivial_branch() {
    let (code, out, _) = bin("branch B 2 --weight 0,0");
    assert_eq!(code, 0);
    let b: BranchOutput = serde_json::from_str(&out).unwrap();
    assert_eq!(b.summands.len(), 1);
    assert_eq!((b.summands[0].dim.as_str(), b.dim.as_str()), ("1", "1"));
}

#[test]
fn kkw_example() {
    let (code, out, _) = bin("verify-kkw B 2 --weight 2,0 --max-strands 3");
    assert_eq!(code, 0);
    let k: KkwOutput = serde_json::from_str(&out).unwrap();
    assert!(k.ok && k.mismatches.is_empty() && k.cases > 0);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        "patterns X 2 --weight 2,0",
        "patterns B 0 --weight 2,0",
        "patterns A 2 --weight 1,0,0",
        "patterns B 2 --weight 0,2,0",
        "patterns B 2 --weight 0,2",
        "patterns B 2",
        "frobnicate B 2 --weight 2,0",
        "klr-dim B 2",
        "verify-kkw B 2 --weight 2,0 --max-strands 0",
        "verify-projection B 2 --labels 1,1 --index 4",
    ] {
        let (code, _, err) = bin(args);
        assert_eq!(code, 2, "{args}");
        assert!(err.contains("Usage"), "{args}: {err}");
    }
}

#[test]
fn falsified_checks_exit_1() {
    // the D table puts −(n−1), j = n in its "else" row
    let (code, out, _) = bin("verify-projection D 3 --labels 0,1,1");
    assert_eq!(code, 1);
    let p: ProjectionOutput = serde_json::from_str(&out).unwrap();
    assert!(p.failures > 0);
    assert!(p.cases.iter().filter(|c| !c.ok).all(|c| c.i == 2 && c.j == 3 && c.ok_rule));
    let (code, _, _) = bin("verify-branch B 2 --labels 1,0");
    assert_eq!(code, 1);
}

#[test]
fn passing_checks_exit_0() {
    for args in [
        "verify-projection C 3 --labels 1,0,2",
        "verify-branch D 3 --labels 1,0,0",
        "verify-conjecture C 2 --labels 1,0",
        "tau D 4 --weight 3,1,1,-1",
    ] {
        assert_eq!(bin(args).0, 0, "{args}");
    }
}

#[test]
fn weight_and_labels_agree() {
    let a = run(&config("patterns D 3 --weight 1,1,-1"));
    let b = run(&config("patterns D 3 --labels 0,1,0"));
    assert_eq!(a.output, b.output);
    let (code, _, _) = bin("patterns D 3 --weight 1,1,-1 --labels 0,1,0");
    assert_eq!(code, 2);
}

#[test]
fn reports_round_trip() {
    round_trip::<Vec<CompletePattern>>("patterns C 2 --weight 2,2");
    round_trip::<BranchOutput>("branch B 3 --labels 0,1,1");
    round_trip::<TauOutput>("tau C 3 --weight 4,2,0");
    let k: KlrDimOutput = round_trip("klr-dim B 2 --beta 1,1 --labels 1,1");
    assert!(matches!(k, KlrDimOutput::Cyclotomic(ref b) if b.dim == 7));
    let k: KlrDimOutput = round_trip("klr-dim B 2 --beta 0,1 --max-degree 4");
    assert!(matches!(k, KlrDimOutput::Free(ref f) if f.gdim == vec![(0, 1), (2, 1), (4, 1)]));
    round_trip::<KkwOutput>("verify-kkw C 2 --labels 1,1 --samples 6 --seed 4");
    round_trip::<ProjectionOutput>("verify-projection B 3 --labels 1,0,1 --index -3");
    round_trip::<BranchReport>("verify-branch C 2 --labels 1,0");
    round_trip::<ConjectureReport>("verify-conjecture B 2 --labels 0,1 --max-strands 3");
}

#[test]
fn output_is_deterministic() {
    for args in ["verify-kkw C 2 --labels 1,1 --samples 10 --seed 7", "tau B 3 --weight 3,1,1 --format table"] {
        assert_eq!(bin(args), bin(args), "{args}");
    }
    let a = run(&config("verify-kkw C 2 --labels 1,1 --samples 10 --seed 7")).output;
    let b = run(&config("verify-kkw C 2 --labels 1,1 --samples 10 --seed 8")).output;
    assert_ne!(a, b);
}

#[test]
fn table_format() {
    let (code, out, _) = bin("patterns B 2 --weight 1,1 --format table");
    assert_eq!(code, 0);
    assert!(out.contains("(1/2, 1/2) > (1/2, -1/2) > (1/2) > (-1/2)"));
    assert!(out.trim_end().ends_with("4 patterns"));
    let (code, out, _) = bin("branch B 2 --weight 2,0 --format table");
    assert_eq!(code, 0);
    assert!(out.contains("total 5  PASS"));
}

fn required_keys(schema: &serde_json::Value) -> Vec<String> {
    let obj = match schema.get("items") {
        Some(items) => items,
        None => schema,
    };
    obj["required"].as_array().map(|v| v.iter().map(|k| k.as_str().unwrap().to_owned()).collect()).unwrap_or_default()
}

#[test]
fn schema_files_describe_the_output() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schemas");
    for (name, args) in [
        ("patterns", "patterns B 2 --weight 2,0"),
        ("branch", "branch B 2 --weight 2,0"),
        ("tau", "tau B 2 --weight 2,0"),
        ("verify-kkw", "verify-kkw B 2 --weight 2,0 --max-strands 2"),
        ("verify-projection", "verify-projection C 2 --labels 1,1"),
        ("verify-branch", "verify-branch C 2 --labels 1,0"),
        ("verify-conjecture", "verify-conjecture C 2 --labels 1,0 --max-strands 2"),
    ] {
        let text = std::fs::read_to_string(format!("{dir}/{name}.schema.json")).unwrap();
        let schema: serde_json::Value = serde_json::from_str(&text).unwrap();
        let out: serde_json::Value = serde_json::from_str(&run(&config(args)).output).unwrap();
        let sample = out.as_array().map_or(&out, |a| &a[0]);
        let mut keys: Vec<String> = sample.as_object().unwrap().keys().cloned().collect();
        let mut want = required_keys(&schema);
        keys.sort();
        want.sort();
        assert_eq!(keys, want, "{name}");
    }
    let klr: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(format!("{dir}/klr-dim.schema.json")).unwrap()).unwrap();
    assert_eq!(klr["oneOf"].as_array().unwrap().len(), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pattern_count_matches_branch_total(ty in 0usize..3, a in 0i64..3, b in 0i64..3) {
        let t = ["B", "C", "D"][ty];
        let args = format!("{t} 3 --labels {a},{b},{}", (a + b) % 2);
        let ps: Vec<CompletePattern> = serde_json::from_str(&run(&config(&format!("patterns {args}"))).output).unwrap();
        let br = run(&config(&format!("branch {args}")));
        prop_assert_eq!(br.status, Status::Pass);
        let br: BranchOutput = serde_json::from_str(&br.output).unwrap();
        prop_assert_eq!(ps.len().to_string(), br.dim);
    }

    #[test]
    fn runs_are_reproducible(ty in 0usize..3, a in 0i64..3, b in 0i64..3, seed in any::<u64>()) {
        let t = ["B", "C", "D"][ty];
        let n = if t == "D" { 3 } else { 2 };
        let labels = if n == 3 { format!("{a},{b},{a}") } else { format!("{a},{b}") };
        let args = format!("verify-kkw {t} {n} --labels {labels} --max-strands 2 --samples 5 --seed {seed}");
        let x = run(&config(&args));
        let y = run(&config(&args));
        prop_assert_eq!(&x.output, &y.output);
        prop_assert_eq!(x.status, Status::Pass);
        let k: KkwOutput = serde_json::from_str(&x.output).unwrap();
        prop_assert_eq!(k.seed, Some(seed));
    }
}
