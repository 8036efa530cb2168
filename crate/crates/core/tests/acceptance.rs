//! One line per numbered check of the full suite.
//!
//! Some sub-checks disagree with the published statements; the engines agree
//! with each other on them and explicit witnesses confirm the computed side.
//! Those failures are listed below and must be the only ones.

use std::thread;

use podles::verify::{run_criterion, CheckResult, Suite, CRITERIA};

/// `(check key, substring of the failure message)`.
const KNOWN: &[(&str, &str)] = &[
    // τ_λ with λ ≠ 1 kills 1 through the B*B relation
    ("hh0", "hh0 (1,1) tau[q^2]"),
    ("hh0", "hh0 (1,1) tau[q^-2]"),
    ("hh0", "hh0 (1,1) tau[q^-4]"),
    ("hh0", "hh0 (1,1) tau[q^-6]"),
    ("hh0", "hh0 (1,1) tau[q^-8]"),
    ("hh0", "hh0 (1,1) tau[q^3]"),
    // (1, A) is a boundary away from λ = q^-2
    ("hh1", "\"(1, A)\""),
    // τ_1 has a weight-0 class in HH_1
    ("hh1", "hh1 (1,1) tau[q^0] [w=0 p=0]: dim 1 but predicted 0"),
    ("hc", "hc (1,1) sigma[q^-4]:"),
    ("hc", "hc (1,1) sigma[q^-8]:"),
    ("hc", "hc (2,1) sigma[q^-6]:"),
    ("hc", "hc (2,1) sigma[q^-8]:"),
    ("hc", "hc (1,1) tau[q^"),
    // b(η) = (q^4 - q^-2)(A, A)
    ("tau", "b(eta) = ((q^6-1)/q^2)*(A, A)"),
];

fn known(key: &str, failure: &str) -> bool {
    KNOWN.iter().any(|(k, s)| *k == key && failure.contains(s))
}

fn main() {
    let results: Vec<CheckResult> = thread::scope(|sc| {
        let handles: Vec<_> = CRITERIA.iter().map(|c| sc.spawn(move || run_criterion(c.id, Suite::Paper).unwrap())).collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut unexpected = Vec::new();
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let expected = r.failures.iter().filter(|f| known(&r.key, f)).count();
        println!("criterion {:>2} {:<10} {status}  {} checks, {} failed ({} known), {} ms", r.id, r.key, r.checks, r.failures.len(), expected, r.millis);
        for f in &r.failures {
            let mark = if known(&r.key, f) { "known" } else { "NEW" };
            println!("    [{mark}] {f}");
            if !known(&r.key, f) {
                unexpected.push(format!("{}: {f}", r.key));
            }
        }
        if r.checks == 0 {
            unexpected.push(format!("{}: ran no checks", r.key));
        }
    }
    if results.len() != 12 {
        unexpected.push(format!("{} criteria ran", results.len()));
    }
    // every listed deviation still occurs
    for (k, s) in KNOWN {
        if !results.iter().any(|r| r.key == *k && r.failures.iter().any(|f| f.contains(s))) {
            unexpected.push(format!("listed deviation no longer occurs: {k} {s}"));
        }
    }
    let passed = results.iter().filter(|r| r.passed).count();
    println!("{passed} of {} criteria pass; every failure is a listed deviation: {}", results.len(), unexpected.is_empty());
    if !unexpected.is_empty() {
        eprintln!("unexpected:\n{}", unexpected.join("\n"));
        std::process::exit(1);
    }
}
