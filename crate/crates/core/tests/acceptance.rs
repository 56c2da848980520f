//! Acceptance run: one PASS/FAIL line per criterion, in order. Runs without
//! the libtest harness so the lines always reach the output; exits non-zero
//! if any criterion fails.

use std::process::ExitCode;

use pursuit_core::claims::{run_claim, ClaimOptions, CLAIMS};

fn main() -> ExitCode {
    let opts = ClaimOptions::default();
    let mut failed = Vec::new();
    for (i, (id, _)) in CLAIMS.iter().enumerate() {
        match run_claim(id, &opts) {
            Ok(r) => {
                println!("criterion {:>2}: {}", i + 1, r.line());
                for n in &r.notes {
                    println!("    note: {n}");
                }
                for f in r.failures.iter().take(5) {
                    println!("    failure: {f}");
                }
                if !r.passed {
                    failed.push(*id);
                }
            }
            Err(e) => {
                println!("criterion {:>2}: FAIL {id}: {e}", i + 1);
                failed.push(*id);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", CLAIMS.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed {failed:?}");
        ExitCode::FAILURE
    }
}
