//! Closed-form weight distributions for the four parameter regimes.
//!
//! This example demonstrates:
//! - Table row generation (modified weight lambda, frequency, provenance)
//! - Conversion to Hamming weights and merging of colliding rows
//! - The weight enumerator polynomial for four worked parameter sets
//!
//! Run with: cargo run --example weight_tables

use cyclocode::charsums::periods_for;
use cyclocode::code::derive_params;
use cyclocode::gf::{FieldTower, TowerOptions};
use cyclocode::tables::{closed_form_distribution, degenerate_weights, table_rows};

fn main() {
    let gf64 = FieldTower::build_with(
        2,
        2,
        3,
        TowerOptions {
            modulus: Some(vec![1, 1, 0, 1, 1, 0, 1]),
            ..TowerOptions::default()
        },
    )
    .unwrap();
    let gf343 = FieldTower::build_with(
        7,
        1,
        3,
        TowerOptions {
            modulus: Some(vec![4, 0, 6, 1]),
            ..TowerOptions::default()
        },
    )
    .unwrap();

    for (tower, p, s, m, h) in [
        (&gf64, 2u64, 2u32, 3u32, 1u64),
        (&gf64, 2, 2, 3, 3),
        (&gf343, 7, 1, 3, 1),
        (&gf343, 7, 1, 3, 3),
    ] {
        let params = derive_params(p, s, m, h, tower).unwrap();
        let (periods, _) = periods_for(&params, tower).unwrap();

        println!(
            "[{}_{}_{}] h = {}: case {} ({} rows), n = {}",
            p,
            s,
            m,
            h,
            params.table_case(),
            table_rows(&params, &periods).unwrap().len(),
            params.n
        );
        for row in table_rows(&params, &periods).unwrap() {
            println!(
                "  lambda = {:8}  w = {:3}  freq = {:6}   ({})",
                row.lambda.to_string(),
                row.hamming,
                row.frequency,
                row.provenance
            );
        }
        let degenerate = degenerate_weights(&params, &periods).unwrap();
        println!("  degenerate rows (a = -beta^t b):");
        for row in &degenerate {
            println!(
                "  lambda = {:8}  w = {:3}  freq = {:6}",
                row.lambda.to_string(),
                row.hamming,
                row.frequency
            );
        }
        let dist = closed_form_distribution(&params, &periods).unwrap();
        println!("  enumerator: {}", dist.enumerator());
        println!("  total words: {} = r^2", dist.total());
        println!();
    }
}
