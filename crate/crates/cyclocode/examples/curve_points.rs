//! Point counts on the curves behind the frequency formulas.
//!
//! This example demonstrates:
//! - Counting (y, b) with y^3 = c b (b + gamma1 - gamma2) by enumeration
//! - The closed form of that count per cubic class of c
//! - The elliptic model y^2 = x^3 - 3c^4 as an independent oracle (odd p)
//!
//! Run with: cargo run --example curve_points

use cyclocode::charsums::{
    count_curve_affine, count_curve_closed, count_elliptic_affine, periods_for,
};
use cyclocode::code::derive_params;
use cyclocode::gf::{FieldTower, TowerOptions};

fn main() {
    for (p, s, m, h, modulus) in [
        (2u64, 2u32, 3u32, 1u64, Some(vec![1, 1, 0, 1, 1, 0, 1])),
        (7, 1, 3, 1, Some(vec![4, 0, 6, 1])),
    ] {
        let tower = FieldTower::build_with(
            p,
            s,
            m,
            TowerOptions {
                modulus,
                ..TowerOptions::default()
            },
        )
        .unwrap();
        let params = derive_params(p, s, m, h, &tower).unwrap();
        let (periods, _) = periods_for(&params, &tower).unwrap();
        let d = tower.sub(params.gamma1, params.gamma2);

        println!("r = {}: y^3 = c b (b + gamma1 - gamma2)", tower.r());
        for class in 0..3u8 {
            let c = tower.from_exp(class as u64);
            let brute = count_curve_affine(&tower, c, d);
            let closed = count_curve_closed(&params, &periods, class);
            print!(
                "  class(c) = {}: {} affine points (closed form {})",
                class, brute, closed
            );
            assert_eq!(brute, closed);
            if p != 2 {
                let elliptic = count_elliptic_affine(&tower, c).unwrap();
                print!(", elliptic model y^2 = x^3 - 3c^4 has {}", elliptic);
            }
            println!();
        }
        println!();
    }
}
