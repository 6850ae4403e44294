//! Runs every acceptance criterion exactly and prints one line per criterion.

use std::process::ExitCode;

use domgame::suite::{run_criterion, CRITERIA};

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let r = run_criterion(c);
        println!("{r}");
        if !r.passed {
            failed.push(r.id);
        }
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.len() - failed.len(), CRITERIA.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failing: {failed:?}");
        ExitCode::FAILURE
    }
}
