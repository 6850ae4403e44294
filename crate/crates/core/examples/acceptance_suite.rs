//! Run selected acceptance criteria: `cargo run --release --example acceptance_suite -- cycles,union`.

use domgame::suite::{run_criterion, select};

fn main() {
    let only = std::env::args().nth(1);
    for c in select(only.as_deref()).unwrap() {
        println!("{}", run_criterion(c));
    }
}
