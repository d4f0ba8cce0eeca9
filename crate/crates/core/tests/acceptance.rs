//! Runs the twelve acceptance criteria and prints one line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use sutured::selftest::run_all;

fn main() -> ExitCode {
    let seed = std::env::var("SUTURED_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let start = Instant::now();
    let reports = run_all(seed);
    for r in &reports {
        println!("{}", r.line());
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    let total = start.elapsed().as_secs_f64();
    println!(
        "acceptance: {} passed, {} failed, seed {seed}, {total:.2}s",
        reports.len() - failed,
        failed
    );
    if failed == 0 && total < 120.0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
