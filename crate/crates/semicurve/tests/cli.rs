use proptest::prelude::*;
use semicurve::cli::run;
use semicurve::commands;
use semicurve::fixtures::{EX_ORDER, SM_EXAMPLES};
use semicurve::dto::{CommandResult, Payload, ScanSummaryDto};
use semicurve::render;
use semicurve::scan::SCAN_DIR_VAR;
use semicurve::spec::parse_semigroup;
use semicurve_core::NumericalSemigroup;

fn sgp(args: &[&str]) -> (String, i32) {
    run(std::iter::once("sgp").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (CommandResult, i32) {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let (out, code) = sgp(&a);
    (serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")), code)
}

#[test]
fn profile_text_and_json() {
    let (out, code) = sgp(&["profile", "gen:4,9,11"]);
    assert_eq!(code, 0);
    assert!(out.contains("c=15"), "{out}");
    let (r, _) = json(&["profile", EX_ORDER]);
    let Payload::Profile(p) = r.payload else { panic!() };
    assert_eq!((p.e, p.c, p.d), (8, 20, Some(16)));
}

#[test]
fn sm_examples() {
    for (_, spec, want) in SM_EXAMPLES {
        let (r, code) = json(&["sm", spec]);
        assert_eq!(code, 0);
        let Payload::Sm(m) = r.payload else { panic!() };
        assert_eq!(m.s_m, Some(want), "{spec}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(sgp(&["profile", "gen:4,6"]).1, 2);
    assert_eq!(sgp(&["profile", "elem:0,3;c=7"]).1, 2);
    assert_eq!(sgp(&["nosuchverb"]).1, 2);
    assert_eq!(sgp(&["--help"]).1, 0);
    let (out, code) = sgp(&["buchweitz", "gen:13,14,15,16,17,18,20,22,23"]);
    assert_eq!(code, 0);
    assert!(out.contains("non-Weierstrass"), "{out}");
    let (_, code) = sgp(&["curve", "deform", "gen:4,6,9"]);
    assert_eq!(code, 1);
}

#[test]
fn output_matches_library() {
    let sg = parse_semigroup("gen:4,9,11").unwrap();
    let direct = CommandResult {
        command: "curve t1".into(),
        ok: true,
        payload: Payload::T1(commands::t1(&sg).unwrap()),
    };
    let (text, _) = sgp(&["curve", "t1", "gen:4,9,11"]);
    assert_eq!(text, render::text(&direct));
    let (js, _) = sgp(&["--json", "curve", "t1", "gen:4,9,11"]);
    assert_eq!(js, serde_json::to_string_pretty(&direct).unwrap() + "\n");
}

#[test]
fn json_round_trip() {
    for args in [
        &["ideal", "gen:4,9,11"][..],
        &["nu", "gen:5,7", "--s", "24"],
        &["ordbound", "gen:3,5"],
        &["torres", "gen:3,5", "--genus", "30"],
        &["reduce", "gen:4,6,9", "--gamma", "2"],
        &["enumerate", "--genus-max", "4", "--list"],
        &["curve", "deform", "gen:5,8,11,14", "--verify", "--ff-scan", "p=7,u=1"],
    ] {
        let args: Vec<&str> = if args[0] == "ideal" { vec!["curve", "ideal", args[1]] } else { args.to_vec() };
        let (out, _) = sgp(&[&["--json"][..], &args].concat());
        let r: CommandResult = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", out, "{args:?}");
    }
}

#[test]
fn deform_verify_and_scan() {
    let (r, code) = json(&["--jobs", "2", "curve", "deform", "gen:6,7,8,9", "--verify", "--ff-scan", "p=31,u=1"]);
    assert_eq!(code, 0);
    let Payload::Family(f) = r.payload else { panic!() };
    assert_eq!(f.flat, Some(true));
    assert_eq!(f.scans[0].min_rank, Some(3));
    assert!(f.scans[0].singular_points.is_empty());
    assert_eq!(sgp(&["curve", "deform", "gen:5,8,11,14", "--ff-scan", "p=33"]).1, 1);
    assert_eq!(sgp(&["curve", "deform", "gen:5,8,11,14", "--ff-scan", "q=3"]).1, 2);
}

#[test]
fn conjecture_scan_resume() {
    let dir = tempfile::tempdir().unwrap();
    std::env::set_var(SCAN_DIR_VAR, dir.path());
    let (r, code) = json(&["--jobs", "2", "conjecture-scan", "--genus-max", "6", "--jsonl", "scan.jsonl"]);
    assert_eq!(code, 0);
    let Payload::ConjectureScan(first) = r.payload else { panic!() };
    let path = dir.path().join("scan.jsonl");
    let lines = std::fs::read_to_string(&path).unwrap().lines().count();
    assert_eq!(lines, first.non_ordinary);
    let (r, _) = json(&["conjecture-scan", "--genus-max", "8", "--jsonl", "scan.jsonl", "--resume"]);
    let Payload::ConjectureScan(second): Payload = r.payload else { panic!() };
    let ScanSummaryDto { skipped, non_ordinary, .. } = second;
    assert_eq!(skipped, first.non_ordinary);
    let total = std::fs::read_to_string(&path).unwrap().lines().count();
    assert_eq!(total, non_ordinary);
    std::env::remove_var(SCAN_DIR_VAR);
}

fn small_semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(3u32..25, 2..5).prop_filter_map("gcd 1", |g| NumericalSemigroup::from_generators(&g).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn spec_forms_agree(sg in small_semigroup()) {
        let a = parse_semigroup(&semicurve::spec::format_semigroup(&sg)).unwrap();
        let b = parse_semigroup(&semicurve::spec::format_generators(&sg)).unwrap();
        prop_assert_eq!(&a, &sg);
        prop_assert_eq!(&b, &sg);
    }

    #[test]
    fn dto_round_trip(sg in small_semigroup()) {
        for payload in [
            Payload::Profile(commands::profile(&sg)),
            Payload::Sm(commands::sm(&sg)),
            Payload::Obstruction(commands::buchweitz(&sg, 3).unwrap()),
        ] {
            let r = CommandResult { command: "x".into(), ok: true, payload };
            let back: CommandResult = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
            prop_assert_eq!(back, r);
        }
    }
}
