use std::process::Command;

use proptest::prelude::*;

use secantcat::Verdict;
use secantcat_cli::certificate::{exit_code_for, EXIT_FALSE, EXIT_INCONCLUSIVE, EXIT_INVALID, EXIT_OK};
use secantcat_cli::{run_suite, run_task, BudgetSpec, Certificate, ModeSpec, ModelSpec, RunOptions, SuiteLine, TaskKind, TaskSpec};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_secantcat"))
}

fn cert(kind: TaskKind) -> Certificate {
    run_task(&TaskSpec::new(kind), RunOptions::default()).unwrap().certificate
}

#[test]
fn diagonal_vandermonde_case() {
    let c = cert(TaskKind::CheckDiagonal { n: 1, d: 3, dmax: Some(4) });
    assert!(c.verdicts["equal"].is_true());
    assert!(c.witnesses["equal"].starts_with("D=3;"));
}

#[test]
fn hankel_secant_four_true() {
    let c = cert(TaskKind::SecantVerify { model: ModelSpec::P1 { dega: 2, degb: 2 }, k: 1 });
    assert_eq!(c.verdicts.len(), 4);
    assert!(c.verdicts.values().all(Verdict::is_true));
    assert_eq!(c.exit_code(), EXIT_OK);
}

#[test]
fn conic_rank3_span() {
    let c = cert(TaskKind::Rank3Veronese { n: 1 });
    assert!(c.verdicts["spans2"].is_true());
    assert_eq!(c.details["degree2_dim"], 1);
}

#[test]
fn certificates_are_deterministic() {
    let spec = TaskSpec { seed: 7, ..TaskSpec::new(TaskKind::Rank3Ideal { model: ModelSpec::P1 { dega: 2, degb: 3 } }) };
    let a = run_task(&spec, RunOptions::default()).unwrap().certificate.to_json();
    let b = run_task(&spec, RunOptions::default()).unwrap().certificate.to_json();
    assert_eq!(a, b);
}

#[test]
fn budget_exhaustion_is_inconclusive() {
    let mut spec = TaskSpec::new(TaskKind::SecantVerify { model: ModelSpec::P1 { dega: 2, degb: 2 }, k: 1 });
    spec.budget = BudgetSpec { max_pairs: Some(1), wall_clock_seconds: None };
    let c = run_task(&spec, RunOptions::default()).unwrap().certificate;
    assert_eq!(c.exit_code(), EXIT_INCONCLUSIVE);
    assert!(c.is_well_formed());
}

#[test]
fn invalid_tasks_are_errors() {
    assert!(run_task(&TaskSpec::new(TaskKind::SecantVerify { model: ModelSpec::P1 { dega: 1, degb: 1 }, k: 3 }), RunOptions::default()).is_err());
    let mut spec = TaskSpec::new(TaskKind::Rank3Veronese { n: 1 });
    spec.mode = ModeSpec { screen: Some(32003), confirm: false };
    assert!(run_task(&spec, RunOptions::default()).is_err());
}

#[test]
fn suites() {
    assert!(run_suite("", RunOptions::default(), 1).lines.is_empty());
    let text = [
        r#"{"kind":"check_diagonal","n":1,"d":2}"#,
        r#"{"kind":"check_diagonal","n":1}"#,
        r#"{"kind":"rank3_veronese","n":1}"#,
    ]
    .join("\n");
    let r = run_suite(&text, RunOptions::default(), 3);
    assert_eq!(r.lines.len(), 3);
    assert!(matches!(&r.lines[0], SuiteLine::Done(c) if c.task.kind_name() == "check_diagonal"));
    assert!(matches!(r.lines[1], SuiteLine::Failed { line: 2, .. }));
    assert!(matches!(&r.lines[2], SuiteLine::Done(c) if c.task.kind_name() == "rank3_veronese"));
    assert_eq!(r.exit_code(), EXIT_INVALID);
}

#[test]
fn shipped_suite_parses() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../suites/paper-desk.suite")).unwrap();
    let specs: Vec<TaskSpec> = text
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| TaskSpec::from_json(l).unwrap())
        .collect();
    assert!(specs.len() >= 20);
}

#[test]
fn binary_exit_codes() {
    let ok = bin().args(["multisym", "check-diagonal", "--n", "1", "--d", "2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let v: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["verdicts"]["equal"], "true");

    let screen = bin().args(["--mode", "fp:32003", "multisym", "check-diagonal", "--n", "1", "--d", "2"]).output().unwrap();
    assert_eq!(screen.status.code(), Some(EXIT_INCONCLUSIVE));

    let starved = bin()
        .args(["--max-pairs", "1", "secant", "verify", "--model", "p1", "--dega", "2", "--degb", "2", "--k", "1"])
        .output()
        .unwrap();
    assert_eq!(starved.status.code(), Some(EXIT_INCONCLUSIVE));

    let bad = bin().args(["secant", "verify", "--model", "p1", "--k", "1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_INVALID));
    let unknown = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(unknown.status.code(), Some(EXIT_INVALID));
    assert_eq!(bin().arg("--help").output().unwrap().status.code(), Some(EXIT_OK));
}

#[test]
fn binary_out_export_and_suite() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cert.json");
    let fam = dir.path().join("family.txt");
    let st = bin()
        .args(["rank3", "ideal", "--model", "p1", "--dega", "2", "--degb", "2", "--export"])
        .arg(&fam)
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(EXIT_OK));
    let c: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(c["verdicts"]["generates"], "true");
    assert!(std::fs::read_to_string(&fam).unwrap().starts_with("ring:"));

    let suite = dir.path().join("s.suite");
    let lines = [
        r#"{"kind":"rank3_veronese","n":2}"#,
        r#"{"kind":"check_diagonal","n":1,"d":2}"#,
        r#"{"kind":"map_poly","n":1,"d":2,"ell":2,"emax":3}"#,
    ];
    std::fs::write(&suite, lines.join("\n")).unwrap();
    let o = bin().args(["--jobs", "2", "suite", "run"]).arg(&suite).output().unwrap();
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let kinds: Vec<String> = String::from_utf8(o.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["task"]["kind"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(kinds, ["rank3_veronese", "check_diagonal", "map_poly"]);
    assert!(String::from_utf8(o.stderr).unwrap().contains("3 tasks"));

    let empty = dir.path().join("empty.suite");
    std::fs::write(&empty, "").unwrap();
    let o = bin().args(["suite", "run"]).arg(&empty).output().unwrap();
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert!(o.stdout.is_empty());
}

fn arb_model() -> impl Strategy<Value = ModelSpec> {
    prop_oneof![
        (0u32..8, 0u32..8).prop_map(|(dega, degb)| ModelSpec::P1 { dega, degb }),
        (1u32..4, 1u32..3, 1u32..3).prop_map(|(n, d1, d2)| ModelSpec::Veronese { n, d1, d2 }),
    ]
}

fn arb_kind() -> impl Strategy<Value = TaskKind> {
    prop_oneof![
        (1usize..4, 1usize..5, prop::option::of(1u32..10)).prop_map(|(n, d, dmax)| TaskKind::CheckDiagonal { n, d, dmax }),
        (1usize..4, 1usize..5, 1u32..4, 0u32..8).prop_map(|(n, d, ell, emax)| TaskKind::MapPoly { n, d, ell, emax }),
        (1usize..4, prop::option::of(1u32..10)).prop_map(|(n, dmax)| TaskKind::ProductTriple { n, dmax }),
        (arb_model(), 0u32..4).prop_map(|(model, k)| TaskKind::SecantVerify { model, k }),
        (1u32..4).prop_map(|n| TaskKind::Rank3Veronese { n }),
        arb_model().prop_map(|model| TaskKind::Rank3Ideal { model }),
    ]
}

fn arb_spec() -> impl Strategy<Value = TaskSpec> {
    (
        arb_kind(),
        prop::option::of(1u64..100_000),
        prop::option::of(1u64..3600),
        prop::option::of(prop::sample::select(vec![3u32, 7, 101, 32003])),
        any::<bool>(),
        any::<u64>(),
    )
        .prop_map(|(kind, max_pairs, wall, screen, confirm, seed)| TaskSpec {
            kind,
            budget: BudgetSpec { max_pairs, wall_clock_seconds: wall },
            mode: ModeSpec { screen, confirm: confirm || screen.is_none() },
            seed,
        })
}

fn arb_verdict() -> impl Strategy<Value = Verdict> {
    prop_oneof![Just(Verdict::True), Just(Verdict::False), "[a-z ]{0,12}".prop_map(Verdict::Inconclusive)]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn spec_round_trip(spec in arb_spec()) {
        let back = TaskSpec::from_json(&spec.to_json()).unwrap();
        prop_assert_eq!(back, spec);
    }

    #[test]
    fn exit_code_contract(verdicts in prop::collection::vec(arb_verdict(), 0..8)) {
        let expect = if verdicts.is_empty() {
            EXIT_INCONCLUSIVE
        } else if verdicts.iter().any(Verdict::is_false) {
            EXIT_FALSE
        } else if verdicts.iter().all(Verdict::is_true) {
            EXIT_OK
        } else {
            EXIT_INCONCLUSIVE
        };
        prop_assert_eq!(exit_code_for(verdicts.iter()), expect);
    }

    #[test]
    fn recorded_certificates_stay_well_formed(
        entries in prop::collection::vec((arb_verdict(), prop::option::of("[0-9a-f]{8}")), 1..8)
    ) {
        let mut c = Certificate::new(&TaskSpec::new(TaskKind::Rank3Veronese { n: 1 }));
        for (i, (v, w)) in entries.iter().enumerate() {
            c.record(&format!("v{i}"), v.clone(), w.clone());
        }
        prop_assert!(c.is_well_formed());
        let trues_without_witness = entries.iter().any(|(v, w)| v.is_true() && w.is_none());
        if trues_without_witness && !entries.iter().any(|(v, _)| v.is_false()) {
            prop_assert_eq!(c.exit_code(), EXIT_INCONCLUSIVE);
        }
    }
}
