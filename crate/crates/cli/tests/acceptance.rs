//! Runs every acceptance criterion on the full-size suite and prints one
//! line per criterion. Exits non-zero if any criterion fails.

use std::io::Write;
use std::process::ExitCode;

use lunefree::verify::{criterion_count, run_criterion, Suite};

fn main() -> ExitCode {
    let mut stdout = std::io::stdout();
    let mut failed = Vec::new();
    println!("\nrunning {} acceptance criteria", criterion_count());
    for id in 1..=criterion_count() {
        let report = run_criterion(id, Suite::Paper);
        println!("{report}");
        let _ = stdout.flush();
        if !report.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("\nacceptance: all {} criteria passed\n", criterion_count());
        ExitCode::SUCCESS
    } else {
        println!("\nacceptance: failed criteria {failed:?}\n");
        ExitCode::FAILURE
    }
}
