//! One line per acceptance criterion; exits nonzero if any fails.
//!
//! Criteria 1 to 11 run in-process and in order, so the integrality suite
//! builds its structure polynomials from a cold cache. Criterion 12 also runs
//! `plethora check --all` as a subprocess and times it.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use plethora_cli::suites::{run_one, SUITES};

const CHECK_ALL_BUDGET: Duration = Duration::from_secs(60);

fn main() -> ExitCode {
    let mut failures = 0;
    for suite in SUITES.iter().filter(|s| s.id != 12) {
        let report = run_one(suite);
        if !report.passed() {
            failures += 1;
        }
        println!("{}", report.line());
    }
    let corpus = run_one(SUITES.iter().find(|s| s.id == 12).expect("corpus suite"));

    let start = Instant::now();
    let run = Command::new(env!("CARGO_BIN_EXE_plethora"))
        .args(["check", "--all"])
        .output();
    let elapsed = start.elapsed();
    let (ok, detail) = match (&corpus.outcome, run) {
        (Err(e), _) => (false, format!("corpus: {e}")),
        (Ok(_), Ok(out)) if out.status.success() && elapsed < CHECK_ALL_BUDGET => (
            true,
            "50 corpus round trips; check --all exit 0".to_string(),
        ),
        (Ok(_), Ok(out)) => (
            false,
            format!(
                "exit {:?}, budget {} s\n{}",
                out.status.code(),
                CHECK_ALL_BUDGET.as_secs(),
                String::from_utf8_lossy(&out.stdout)
            ),
        ),
        (Ok(_), Err(e)) => (false, format!("could not start: {e}")),
    };
    if !ok {
        failures += 1;
    }
    println!(
        "{} 12 expression corpus and check --all under {} s ({} ms): {detail}",
        if ok { "PASS" } else { "FAIL" },
        CHECK_ALL_BUDGET.as_secs(),
        elapsed.as_millis()
    );

    println!("acceptance: {failures} failing");
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
