use higgs_core::verify::{run_suites, Suite, DEFAULT_SEED};

#[test]
fn every_suite_passes_with_default_seed() {
    let reports = run_suites(&Suite::ALL, DEFAULT_SEED).unwrap();
    assert_eq!(reports.len(), Suite::ALL.len());
    for (report, suite) in reports.iter().zip(Suite::ALL) {
        assert_eq!(report.suite, suite);
        assert!(report.checks > 0, "{suite} ran no checks");
        assert!(report.passed(), "{suite}: {:?}", report.failures);
    }
}

#[test]
fn suites_are_deterministic_in_the_seed() {
    let a = run_suites(&[Suite::Chi, Suite::Hodge], 7).unwrap();
    let b = run_suites(&[Suite::Chi, Suite::Hodge], 7).unwrap();
    assert_eq!(a, b);
}
