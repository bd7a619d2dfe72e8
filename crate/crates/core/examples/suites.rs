//! Run the bundled verification suites from library code.

use hopfcoh::cli::{run_suite, SuiteName, DEFAULT_SEED};

fn main() {
    for name in [SuiteName::Axioms, SuiteName::CohomologyOracles, SuiteName::Frobenius] {
        let report = run_suite(name, DEFAULT_SEED);
        let failed = report.failures().count();
        println!("{:<20} {} checks, {failed} failed", name.as_str(), report.checks.len());
    }
}
