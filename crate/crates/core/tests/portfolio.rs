mod common;

use committee_core::format::write_instance;
use committee_core::oracle::DEFAULT_CANDIDATE_LIMIT;
use committee_core::portfolio::{
    bench, dispatch, generate, verify, DispatchPolicy, GeneratorConfig, Outcome, SolverId,
};
use committee_core::{compute_params, Instance, Rational, Rule};
use rand::Rng;

#[test]
fn dispatch_matches_oracle() {
    let mut rng = common::rng(51);
    let policy = DispatchPolicy::default();
    let mut count = 0;
    while count < 1000 {
        let e = common::election(&mut rng, 7, 6, None, None);
        let rule = Rule::ALL[rng.gen_range(0..3)];
        for (inst, truth) in common::sweep(&e, rule) {
            let got = dispatch(&inst, &policy).unwrap();
            common::agree(&inst, &truth, &got).unwrap();
            count += 1;
        }
    }
}

#[test]
fn every_listed_solver_is_dispatchable() {
    let mut rng = common::rng(52);
    for _ in 0..100 {
        let e = common::election(&mut rng, 6, 5, None, None);
        for rule in Rule::ALL {
            for (inst, truth) in common::sweep(&e, rule).into_iter().step_by(3) {
                let p = compute_params(&inst);
                for id in SolverId::ALL.into_iter().filter(|id| id.applies(&inst, &p)) {
                    let policy = DispatchPolicy { rows: vec![id], ..DispatchPolicy::default() };
                    let got = dispatch(&inst, &policy).unwrap();
                    common::agree(&inst, &truth, &got).unwrap();
                }
            }
        }
    }
}

#[test]
fn plan_orders_poly_then_cost_then_brute() {
    let mut rng = common::rng(53);
    let policy = DispatchPolicy::default();
    for _ in 0..100 {
        let e = common::election(&mut rng, 8, 6, None, None);
        let k = rng.gen_range(0..=e.m());
        let rule = Rule::ALL[rng.gen_range(0..3)];
        let inst = Instance::new(e, rule, k, Rational::ONE).unwrap();
        let p = compute_params(&inst);
        let plan = policy.plan(&inst, &p);
        assert_eq!(plan.last(), Some(&SolverId::Brute));
        let costs: Vec<f64> = plan
            .iter()
            .filter(|id| id.kind() == committee_core::portfolio::SolverKind::Fpt)
            .map(|id| id.cost(&inst, &p))
            .collect();
        assert!(costs.windows(2).all(|w| w[0] <= w[1]));
    }
}

fn write_corpus(dir: &std::path::Path, count: usize) {
    for seed in 0..count as u64 {
        let cfg = GeneratorConfig::new(3 + seed as usize % 5, 2 + seed as usize % 5);
        let e = generate(&cfg, seed).unwrap();
        let rule = Rule::ALL[seed as usize % 3];
        let k = seed as usize % (e.m() + 1);
        let inst = Instance::new(e, rule, k, Rational::new(seed as i128 % 7, 2)).unwrap();
        std::fs::write(dir.join(format!("inst{seed:03}.appr")), write_instance(&inst)).unwrap();
    }
}

#[test]
fn corpus_verifies_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    write_corpus(dir.path(), 100);
    std::fs::write(dir.path().join("zz-broken.appr"), "pav 1 1 1\n3 2\n0 7\n").unwrap();
    std::fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    let report = verify(dir.path(), DEFAULT_CANDIDATE_LIMIT).unwrap();
    assert_eq!(report.entries.len(), 101);
    assert!(report.is_clean(), "{report}");
    assert!(report.entries.windows(2).all(|w| w[0].id < w[1].id));
    assert!(matches!(report.entries[100].outcome, Outcome::ParseError(_)));
    assert!(report.entries[..100].iter().all(|e| matches!(e.outcome, Outcome::Agreed { .. })));
}

#[test]
fn empty_corpus_is_clean() {
    let dir = tempfile::tempdir().unwrap();
    let report = verify(dir.path(), DEFAULT_CANDIDATE_LIMIT).unwrap();
    assert!(report.entries.is_empty() && report.is_clean());
}

#[test]
fn oversized_instances_are_skipped() {
    let dir = tempfile::tempdir().unwrap();
    write_corpus(dir.path(), 3);
    let report = verify(dir.path(), 2).unwrap();
    assert!(report.entries.iter().all(|e| matches!(e.outcome, Outcome::Skipped(_))));
}

#[test]
fn bench_rows_cover_dispatch() {
    let dir = tempfile::tempdir().unwrap();
    write_corpus(dir.path(), 6);
    let rows = bench(dir.path(), &DispatchPolicy::default()).unwrap();
    for i in 0..6 {
        let id = format!("inst{i:03}.appr");
        assert!(rows.iter().any(|r| r.id == id && r.solver == "dispatch"));
        assert!(rows.iter().any(|r| r.id == id && r.solver == "brute"));
    }
    assert!(rows.iter().all(|r| r.record().len() == committee_core::portfolio::BenchRow::HEADER.len()));
}
