//! Runs every suite once and reports each acceptance criterion on its own
//! line. Built without the libtest harness so the report is always printed.

use verlinde::suites::{run_suite, thread_pool, Suite, SuiteResult};

const SEED: u64 = 0;

fn describe(results: &[SuiteResult], criterion: u8) -> (bool, String) {
    let mut cases = 0;
    let mut failures = 0;
    let mut checks = Vec::new();
    for r in results {
        for c in r.checks.iter().filter(|c| c.criterion == Some(criterion)) {
            cases += c.cases;
            failures += c.failures;
            checks.push(format!("{}/{} {}", c.cases - c.failures, c.cases, c.name));
        }
    }
    (cases > 0 && failures == 0, checks.join(", "))
}

fn main() {
    let pool = thread_pool();
    let results: Vec<SuiteResult> = Suite::ALL.iter().map(|&s| pool.install(|| run_suite(s, SEED))).collect();
    let by_name = |name: &str| results.iter().find(|r| r.suite == name).unwrap();

    // minimum case counts
    assert!(by_name("criteria").check("zero-count").unwrap().cases >= 500);
    assert_eq!(by_name("criteria").check("never-generic-beyond-2d").unwrap().cases, 50);
    assert_eq!(by_name("pencil").check("kronecker-round-trip").unwrap().cases, 200);
    assert_eq!(by_name("pencil").check("equivalence-invariance").unwrap().cases, 100);
    assert_eq!(by_name("schubert").check("associativity-gr-2-8").unwrap().cases, 100);

    let mut all = true;
    for criterion in 1..=9u8 {
        let (pass, detail) = describe(&results, criterion);
        println!("criterion {criterion}: {} ({detail})", if pass { "PASS" } else { "FAIL" });
        all &= pass;
    }
    for r in &results {
        for f in &r.findings {
            println!("finding: {f}");
        }
        for f in &r.failures {
            println!("failure in {}: {} expected {} got {}", f.check, f.inputs, f.expected, f.actual);
        }
    }
    if !all || !results.iter().all(|r| r.passed) {
        eprintln!("some acceptance criteria failed");
        std::process::exit(1);
    }
}
