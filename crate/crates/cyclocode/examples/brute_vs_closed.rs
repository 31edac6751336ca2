//! The central consistency check: exhaustive enumeration against the
//! closed form, over every parameter set that fits the default budget.
//!
//! This example demonstrates:
//! - Budget-guarded brute-force enumeration with worker threads
//! - The comparison report with its first-mismatch diagnostics
//!
//! Run with: cargo run --release --example brute_vs_closed

use std::time::Instant;

use cyclocode::code::{derive_params, BruteOptions};
use cyclocode::gf::FieldTower;
use cyclocode::tables::compare;

fn main() {
    let sets = [
        (2u64, 2u32, 3u32, 1u64),
        (2, 2, 3, 3),
        (7, 1, 3, 1),
        (7, 1, 3, 2),
        (7, 1, 3, 3),
        (7, 1, 3, 6),
    ];
    for (p, s, m, h) in sets {
        let tower = FieldTower::build(p, s, m).unwrap();
        let params = derive_params(p, s, m, h, &tower).unwrap();
        let start = Instant::now();
        let report = compare(&params, &tower, &BruteOptions::default()).unwrap();
        let verdict = if report.equal { "EQUAL" } else { "MISMATCH" };
        println!(
            "(p,s,m,h) = ({},{},{},{}): n = {:3}, {} distinct weights, {}  [{:?}]",
            p,
            s,
            m,
            h,
            params.n,
            report.closed.len(),
            verdict,
            start.elapsed()
        );
        if let Some((w, brute_f, closed_f)) = report.first_mismatch {
            println!(
                "  first difference at weight {}: brute {}, closed {}",
                w, brute_f, closed_f
            );
        }
    }
}
