//! Building field towers and working with elements.
//!
//! This example demonstrates:
//! - Constructing GF(p) < GF(q) < GF(r) with a default or explicit modulus
//! - Discrete-log element representation and basic arithmetic
//! - Traces down to GF(q) and GF(p), norms, and cubic classes
//!
//! Run with: cargo run --example field_tower

use cyclocode::gf::{FieldTower, TowerOptions};

fn main() {
    // GF(64) over GF(4) with an explicit modulus (the one Magma uses)
    let tower = FieldTower::build_with(
        2,
        2,
        3,
        TowerOptions {
            modulus: Some(vec![1, 1, 0, 1, 1, 0, 1]),
            ..TowerOptions::default()
        },
    )
    .unwrap();
    println!(
        "GF({}) over GF({}), modulus {}",
        tower.r(),
        tower.q(),
        tower.modulus_string()
    );

    // the default tower picks the smallest primitive polynomial instead
    let default = FieldTower::build(2, 2, 3).unwrap();
    println!("default modulus for GF(64): {}", default.modulus_string());
    println!();

    // elements are zero or powers of the generator alpha
    let a = tower.alpha();
    let x = tower.from_exp(5);
    let y = tower.add(a, x);
    println!("alpha + alpha^5 = alpha^{:?}", tower.exp_of(y).unwrap());
    println!("coeffs of alpha^5: {:?}", tower.coeffs_of(x));
    println!();

    // traces land in the embedded subfields
    let tr1 = tower.trace_to_q(tower.one());
    println!(
        "tr_q(1) = alpha^{} (= 1, since m = 3 is odd)",
        tower.exp_of(tr1).unwrap()
    );
    println!("tr_p(1) = {} (= sm mod 2)", tower.trace_to_p(tower.one()));
    println!();

    // norms and cubic classes in GF(343)
    let t343 = FieldTower::build_with(
        7,
        1,
        3,
        TowerOptions {
            modulus: Some(vec![4, 0, 6, 1]),
            ..TowerOptions::default()
        },
    )
    .unwrap();
    println!(
        "GF(343) with modulus {}: N(alpha) = {}",
        t343.modulus_string(),
        t343.norm_to_p(t343.alpha())
    );
    for k in [0u64, 1, 2, 57, 100] {
        let x = t343.from_exp(k);
        println!(
            "cubic class of alpha^{} = {}",
            k,
            t343.cubic_class(x).unwrap()
        );
    }
}
