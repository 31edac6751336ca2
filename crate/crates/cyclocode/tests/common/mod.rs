//! Shared oracles for the integration suites: independent brute-force
//! counts that the closed forms are checked against.

use cyclocode::code::CodeParams;
use cyclocode::gf::{FieldTower, TowerOptions};

pub fn magma_gf64() -> FieldTower {
    FieldTower::build_with(
        2,
        2,
        3,
        TowerOptions {
            modulus: Some(vec![1, 1, 0, 1, 1, 0, 1]),
            ..TowerOptions::default()
        },
    )
    .unwrap()
}

pub fn magma_gf343() -> FieldTower {
    FieldTower::build_with(
        7,
        1,
        3,
        TowerOptions {
            modulus: Some(vec![4, 0, 6, 1]),
            ..TowerOptions::default()
        },
    )
    .unwrap()
}

/// Count, for every class triple (k1, k2, k3), the pairs (a, b) whose three
/// products (a + beta^i b) g^i alpha^(k_i) are all cubes. Enumerates all
/// r^2 pairs directly; the bucket at (k1, k2, k3) is #F(c) for
/// c = (alpha^(k1), alpha^(k2), alpha^(k3)).
pub fn brute_f_counts(params: &CodeParams, tower: &FieldTower) -> [[[u64; 3]; 3]; 3] {
    let mut counts = [[[0u64; 3]; 3]; 3];
    let beta = params.beta;
    let g = params.g;
    for a in tower.elements() {
        'pairs: for b in tower.elements() {
            let mut need = [0usize; 3];
            for i in 1..=3u64 {
                let v = tower.mul(
                    tower.add(a, tower.mul(tower.pow(beta, i), b)),
                    tower.pow(g, i),
                );
                if v.is_zero() {
                    continue 'pairs;
                }
                let class = tower.cubic_class(v).unwrap();
                need[(i - 1) as usize] = ((3 - class) % 3) as usize;
            }
            counts[need[0]][need[1]][need[2]] += 1;
        }
    }
    counts
}
