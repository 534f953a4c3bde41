//! The twelve acceptance criteria, run at full truncation.
//!
//! Runs without the libtest harness so the PASS/FAIL lines always reach
//! stdout. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use schwinger::verify::{Harness, Suite, VerifyConfig, COMPOSED_TOLERANCE, SINGLE_TOLERANCE};

const CRITERIA: [(u32, &str, Suite); 12] = [
    (1, "su(3) closure on degree <= 6", Suite::Su3Closure),
    (
        2,
        "sp(2,R) relations and mutual commutant on degree <= 8",
        Suite::Sp2rRelations,
    ),
    (
        3,
        "basis orthonormality for p+q <= 5, m in {k,k+1,k+2}",
        Suite::Orthonormality,
    ),
    (
        4,
        "K- annihilation and (z.w)^rho structure",
        Suite::KminusStructure,
    ),
    (5, "Sp(2,R) Casimir and ladder products", Suite::Sp2rCasimir),
    (
        6,
        "trace projector on 200 samples per bidegree <= (4,4)",
        Suite::Projector,
    ),
    (
        7,
        "K- kernel dimension for p,q <= 4",
        Suite::KernelDimension,
    ),
    (8, "CG series and spectrum counting", Suite::CgCounting),
    (
        9,
        "induced inner product oracle and normalising factor",
        Suite::InducedOracle,
    ),
    (
        10,
        "equivalence map isometry on bidegree <= (4,4)",
        Suite::Isometry,
    ),
    (
        11,
        "numeric equivariance over 100 Haar samples",
        Suite::NumericEquivariance,
    ),
    (
        12,
        "C_n recursion against closed form for p,q <= 8",
        Suite::CnDualRoute,
    ),
];

fn main() -> ExitCode {
    let cfg = VerifyConfig::full();
    assert!(cfg.numeric);
    assert_eq!(cfg.numeric_samples, 100);
    assert_eq!(SINGLE_TOLERANCE, 1e-10);
    assert_eq!(COMPOSED_TOLERANCE, 1e-9);

    let harness = Harness::new(cfg);
    let mut failed = Vec::new();
    for (n, what, suite) in CRITERIA {
        let start = Instant::now();
        let report = harness.run(suite);
        let status = if report.passed() { "PASS" } else { "FAIL" };
        let defect = report
            .max_defect
            .map(|d| format!(", max defect {d:.3e}"))
            .unwrap_or_default();
        println!(
            "criterion {n:>2} [{}] {what}: {status} ({} checks{defect}, {:.1}s)",
            suite.name(),
            report.checks,
            start.elapsed().as_secs_f64()
        );
        if !report.passed() {
            if let Some(d) = &report.detail {
                println!("    {} failures, first: {d}", report.failures);
            }
            failed.push(n);
        }
    }
    if failed.is_empty() {
        println!("all 12 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
