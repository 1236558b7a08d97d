//! Prints one PASS/FAIL line per reproduction check over orders up to 21 and
//! exits nonzero if any check fails.

use indpoly::classify::default_jobs;
use indpoly::verify::{run_all, Status, VerifyConfig};

fn main() {
    let cfg = VerifyConfig {
        max_n: 21,
        jobs: default_jobs(),
    };
    let outcomes = run_all(&cfg, |o| println!("{}", o.line()));
    let failed = outcomes.iter().filter(|o| o.status != Status::Pass).count();
    println!(
        "acceptance: {} passed, {failed} not passed",
        outcomes.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
