//! One line per acceptance criterion; the test fails if any criterion fails.

use so21_core::verify::{run_criterion, CRITERIA, DEFAULT_SEED};

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for (id, _) in CRITERIA {
        let r = run_criterion(id, DEFAULT_SEED);
        println!("[{}] criterion {:>2} {:<15} {}", if r.passed { "PASS" } else { "FAIL" }, r.id, r.name, r.detail);
        if !r.passed {
            failed.push(r.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
