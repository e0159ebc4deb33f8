//! Run the independent oracle suite and print the JSON-lines report: every
//! derived quantity checked against double-double series summation, ODE
//! continuation, or AGM-anchored gamma values.
//!
//! Run: cargo run --example oracle_suite

use rootmetric::run_oracle_suite;

fn main() {
    let reports = run_oracle_suite(&[2, 3, 5, 10]);
    let mut passed = 0usize;
    for r in &reports {
        println!("{}", r.json_line());
        if r.pass {
            passed += 1;
        }
    }
    eprintln!("{passed}/{} oracle comparisons passed", reports.len());
    if passed != reports.len() {
        std::process::exit(1);
    }
}
