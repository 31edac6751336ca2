//! Eisenstein integers, normalized primes, and the cubic residue symbol.
//!
//! This example demonstrates:
//! - Exact arithmetic in Z[omega] with omega^2 = -1 - omega
//! - The normalized prime pi above p = 1 (mod 3)
//! - Evaluating the cubic residue symbol (x/pi)_3
//!
//! Run with: cargo run --example eisenstein_primes

use cyclocode::eisenstein::{cubic_residue_symbol, find_pi, EisensteinInt};

fn main() {
    let x = EisensteinInt::new(2, 3);
    println!("pi = {}", x);
    println!("pi^2 = {}", x.pow(2));
    println!("pi^3 = {}", x.pow(3));
    println!("conj(pi^3) = {}", x.pow(3).conj());
    println!("norm(pi^3) = {} (= 7^3)", x.pow(3).norm());
    println!();

    for p in [7u64, 13, 31, 61, 97] {
        let np = find_pi(p).unwrap();
        println!(
            "p = {:3}: pi = {:7}  (norm {}, a = 2 mod 3, b = 0 mod 3, b > 0)",
            p,
            np.pi.to_string(),
            np.pi.norm()
        );
    }
    println!();

    // the symbol partitions GF(p)* into the three cubic classes
    let np = find_pi(7).unwrap();
    for x in 1..7i128 {
        let s = cubic_residue_symbol(x, &np).unwrap();
        let value = ["1 (cube)", "omega", "omega^2"][s as usize];
        println!("({} / pi)_3 = {}", x, value);
    }
}
