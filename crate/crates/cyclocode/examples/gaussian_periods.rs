//! Gaussian periods of order 3: direct summation against closed forms.
//!
//! This example demonstrates:
//! - Direct evaluation of eta_u = sum of psi(z u) over the cube subgroup
//! - The closed forms from pi^(sm/3) (p = 1 mod 3) and sqrt(r) (p = 2 mod 3)
//! - Determining rho(alpha) and cross-checking with the Jacobi sum
//!
//! Run with: cargo run --example gaussian_periods

use cyclocode::charsums::{gaussian_period_direct, jacobi_closed, jacobi_direct, periods_for};
use cyclocode::code::derive_params;
use cyclocode::gf::{FieldTower, TowerOptions};

fn main() {
    for (p, s, m, h, modulus) in [
        (7u64, 1u32, 3u32, 1u64, Some(vec![4, 0, 6, 1])),
        (2, 2, 3, 1, Some(vec![1, 1, 0, 1, 1, 0, 1])),
        (13, 1, 3, 1, None),
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
        let (periods, np) = periods_for(&params, &tower).unwrap();

        println!("r = {} (modulus {}):", tower.r(), tower.modulus_string());
        for (label, class, closed) in [
            ("eta_1     ", 0u64, periods.eta_1),
            ("eta_alpha ", 1, periods.eta_alpha),
            ("eta_alpha2", 2, periods.eta_alpha2),
        ] {
            let direct = gaussian_period_direct(&tower, tower.from_exp(class)).unwrap();
            println!("  {} = {:6}  (direct sum {:6})", label, closed, direct);
            assert_eq!(direct, closed);
        }
        match &np {
            Some(np) => println!("  pi = {}, rho(alpha) = omega^{}", np.pi, periods.rho_alpha),
            None => println!("  pi = sqrt(-{})", p),
        }
        let jd = jacobi_direct(&tower, periods.rho_alpha).unwrap();
        let jc = jacobi_closed(&params, np.as_ref()).unwrap();
        println!(
            "  J(rho, rho) = {} (closed form {}), norm {}",
            jd,
            jc,
            jd.norm()
        );
        assert_eq!(jd, jc);
        println!();
    }
}
