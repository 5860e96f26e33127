//! End-to-end runs of the predicate sweep engine.

use pqtrig::propcheck::{
    all_passed, list_predicates, run_all, sweep, GridSpec, PredicateClass, Status,
};

#[test]
fn coarse_suite_all_non_conjecture_pass() {
    let reports = run_all(&GridSpec::coarse(), 1e-9).unwrap();
    assert_eq!(reports.len(), list_predicates().len());
    for r in &reports {
        if r.class != PredicateClass::Conjecture {
            assert!(
                r.passed,
                "{}: worst slack {} at {:?}",
                r.id, r.worst_slack, r.worst_location
            );
        }
    }
    assert!(all_passed(&reports));
}

#[test]
fn identity_predicates_hit_tight_residuals() {
    let grid = GridSpec::default_grid();
    for id in ["egl-identity", "pfaff-identity", "lem3.1-euler-identity"] {
        let r = sweep(id, &grid, 1e-9).unwrap();
        assert!(
            r.worst_slack >= -1e-9,
            "{id}: worst residual {} at {:?}",
            -r.worst_slack,
            r.worst_location
        );
        assert_eq!(r.status, Status::Passed);
    }
}

#[test]
fn conjecture_counterexamples_are_findings_not_failures() {
    // the geometric-mean conjecture for sin fails near p = 1.1 with one
    // argument near 1; the sweep must record it without failing the suite
    let r = sweep("conj-sin-gg", &GridSpec::default_grid(), 1e-9).unwrap();
    assert_eq!(r.status, Status::CounterexampleFound);
    assert!(r.passed, "conjecture findings must not fail the suite");
    assert!(r.worst_slack < -1e-3, "counterexample slack {}", r.worst_slack);
    let loc = r.worst_location.unwrap();
    assert!((loc.get("p").unwrap() - 1.1).abs() < 1e-12);
}

#[test]
fn repeated_runs_identical() {
    let grid = GridSpec::coarse();
    let a = run_all(&grid, 1e-9).unwrap();
    let b = run_all(&grid, 1e-9).unwrap();
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.id, y.id);
        assert_eq!(x.worst_slack.to_bits(), y.worst_slack.to_bits());
        assert_eq!(x.worst_location, y.worst_location);
        assert_eq!(x.status, y.status);
    }
}

#[test]
fn fine_grid_spot_predicates() {
    let grid = GridSpec::fine();
    for id in ["thm1.2-dual", "thm1.2-conj", "thm1.2-pi"] {
        let r = sweep(id, &grid, 1e-9).unwrap();
        assert!(r.passed, "{id}: {}", r.worst_slack);
    }
}
