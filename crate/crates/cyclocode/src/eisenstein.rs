//! Exact arithmetic in Z[omega], omega = (-1 + sqrt(-3))/2, together with
//! the normalized prime above p = 1 (mod 3) and the cubic residue symbol.
//!
//! A prime p = 1 (mod 3) splits in Z[omega]. Among its generators there is
//! exactly one pi = a + b*omega with a = 2 (mod 3), b = 0 (mod 3), b > 0;
//! equivalently pi = -1 (mod 3). The cubic residue symbol (x/pi)_3 is the
//! cube root of unity congruent to x^((p-1)/3) modulo pi, read off through
//! the identification of Z[omega]/pi with GF(p).

use std::fmt;

use crate::gf::FieldTower;

/// Errors from Eisenstein-integer routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EisensteinError {
    /// `find_pi` needs p prime with p = 1 (mod 3).
    NoNormalizedPrime { p: u64 },
    /// Cubic residue symbol of a multiple of p.
    NotCoprime { x: i128, p: u64 },
    /// x^((p-1)/3) matched none of the three cube-root classes.
    SymbolInconsistent { x: i128, p: u64 },
    /// The tower generator's norm was a cube mod p, so it cannot generate GF(p)*.
    GeneratorNormIsCube,
}

impl fmt::Display for EisensteinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EisensteinError::NoNormalizedPrime { p } => {
                write!(
                    f,
                    "no normalized prime: {} is not a prime congruent to 1 mod 3",
                    p
                )
            }
            EisensteinError::NotCoprime { x, p } => {
                write!(
                    f,
                    "cubic residue symbol undefined: {} is divisible by {}",
                    x, p
                )
            }
            EisensteinError::SymbolInconsistent { x, p } => {
                write!(
                    f,
                    "internal inconsistency evaluating cubic symbol of {} mod {}",
                    x, p
                )
            }
            EisensteinError::GeneratorNormIsCube => {
                write!(
                    f,
                    "generator norm is a cubic residue, so the generator is not primitive"
                )
            }
        }
    }
}

impl std::error::Error for EisensteinError {}

/// An element a + b*omega of Z[omega], with omega^2 = -1 - omega.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EisensteinInt {
    pub a: i128,
    pub b: i128,
}

impl EisensteinInt {
    pub const fn new(a: i128, b: i128) -> Self {
        EisensteinInt { a, b }
    }

    pub const fn from_int(n: i128) -> Self {
        EisensteinInt { a: n, b: 0 }
    }

    pub const fn zero() -> Self {
        EisensteinInt { a: 0, b: 0 }
    }

    pub const fn one() -> Self {
        EisensteinInt { a: 1, b: 0 }
    }

    pub const fn omega() -> Self {
        EisensteinInt { a: 0, b: 1 }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// True if the imaginary part vanishes, i.e. the value is a rational integer.
    pub fn is_rational(&self) -> bool {
        self.b == 0
    }

    pub fn add(&self, other: &EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(self.a + other.a, self.b + other.b)
    }

    pub fn sub(&self, other: &EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(self.a - other.a, self.b - other.b)
    }

    pub fn neg(&self) -> EisensteinInt {
        EisensteinInt::new(-self.a, -self.b)
    }

    /// Product, reducing omega^2 = -1 - omega.
    pub fn mul(&self, other: &EisensteinInt) -> EisensteinInt {
        let (a1, b1, a2, b2) = (self.a, self.b, other.a, other.b);
        EisensteinInt::new(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1 - b1 * b2)
    }

    pub fn scale(&self, k: i128) -> EisensteinInt {
        EisensteinInt::new(self.a * k, self.b * k)
    }

    /// Complex conjugate: a + b*omega -> (a - b) - b*omega.
    pub fn conj(&self) -> EisensteinInt {
        EisensteinInt::new(self.a - self.b, -self.b)
    }

    /// Field norm a^2 - ab + b^2; zero only at zero.
    pub fn norm(&self) -> i128 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    /// z + conj(z) = 2a - b, always a rational integer.
    pub fn trace(&self) -> i128 {
        2 * self.a - self.b
    }

    pub fn pow(&self, mut k: u32) -> EisensteinInt {
        let mut base = *self;
        let mut acc = EisensteinInt::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiply by omega^k, k in {0, 1, 2}.
    pub fn mul_omega_pow(&self, k: u8) -> EisensteinInt {
        match k % 3 {
            0 => *self,
            1 => self.mul(&EisensteinInt::omega()),
            _ => self.mul(&EisensteinInt::new(-1, -1)), // omega^2
        }
    }

    /// Value as a complex number (re, im), for numeric cross-checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let a = self.a as f64;
        let b = self.b as f64;
        (a - b / 2.0, b * 3f64.sqrt() / 2.0)
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{}", a),
            (0, 1) => write!(f, "w"),
            (0, -1) => write!(f, "-w"),
            (0, b) => write!(f, "{}w", b),
            (a, 1) => write!(f, "{}+w", a),
            (a, -1) => write!(f, "{}-w", a),
            (a, b) if b > 0 => write!(f, "{}+{}w", a, b),
            (a, b) => write!(f, "{}{}w", a, b),
        }
    }
}

/// The normalized prime pi = a + b*omega above p = 1 (mod 3), with the
/// cached inverse of b mod p used by the cubic symbol's decision rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedPrime {
    pub p: u64,
    pub pi: EisensteinInt,
    /// b' with b*b' = 1 (mod p), chosen with least absolute value.
    pub b_inv: i128,
}

impl NormalizedPrime {
    pub fn a(&self) -> i128 {
        self.pi.a
    }

    pub fn b(&self) -> i128 {
        self.pi.b
    }

    /// Residue of omega mod pi, as an integer mod p: omega = -a*b' (mod pi).
    pub fn omega_residue(&self) -> u64 {
        let p = self.p as i128;
        (((-self.b_inv * self.pi.a) % p + p) % p) as u64
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc: u128 = 1;
    let m = modulus as u128;
    let mut b = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Find the unique pi = a + b*omega with a^2 - ab + b^2 = p,
/// a = 2 (mod 3), b = 0 (mod 3), b > 0.
///
/// Exhaustive scan over |a|, |b| <= ceil(2*sqrt(p/3)) + 1; the scan doubles
/// as a uniqueness check.
pub fn find_pi(p: u64) -> Result<NormalizedPrime, EisensteinError> {
    if !is_prime(p) || p % 3 != 1 {
        return Err(EisensteinError::NoNormalizedPrime { p });
    }
    let bound = (2.0 * (p as f64 / 3.0).sqrt()).ceil() as i128 + 1;
    let mut found: Option<EisensteinInt> = None;
    for a in -bound..=bound {
        if a.rem_euclid(3) != 2 {
            continue;
        }
        for b in (3..=bound).step_by(3) {
            if a * a - a * b + b * b == p as i128 {
                assert!(found.is_none(), "normalized prime for {} is not unique", p);
                found = Some(EisensteinInt::new(a, b));
            }
        }
    }
    let pi = found.ok_or(EisensteinError::NoNormalizedPrime { p })?;

    // least-absolute-value inverse of b mod p
    let b_mod = pi.b.rem_euclid(p as i128) as u64;
    let inv = mod_pow(b_mod, p - 2, p) as i128;
    let b_inv = if inv > p as i128 / 2 {
        inv - p as i128
    } else {
        inv
    };
    debug_assert_eq!((pi.b * b_inv).rem_euclid(p as i128), 1);

    Ok(NormalizedPrime { p, pi, b_inv })
}

/// Cubic residue symbol (x/pi)_3 as an exponent of omega in {0, 1, 2}.
///
/// Evaluates t = x^((p-1)/3) mod p and matches it against the residues of
/// 1, omega, omega^2 modulo pi, which are 1, -b'a, -1 + b'a mod p.
pub fn cubic_residue_symbol(x: i128, np: &NormalizedPrime) -> Result<u8, EisensteinError> {
    let p = np.p;
    let xr = x.rem_euclid(p as i128) as u64;
    if xr == 0 {
        return Err(EisensteinError::NotCoprime { x, p });
    }
    let t = mod_pow(xr, (p - 1) / 3, p);
    let pi128 = p as i128;
    let omega_res = np.omega_residue();
    let omega2_res = ((pi128 - 1 + np.b_inv * np.a()).rem_euclid(pi128)) as u64;
    if t == 1 {
        Ok(0)
    } else if t == omega_res {
        Ok(1)
    } else if t == omega2_res {
        Ok(2)
    } else {
        Err(EisensteinError::SymbolInconsistent { x, p })
    }
}

/// Exponent j in {1, 2} with rho(alpha) = omega^j, for the cubic character
/// rho of GF(r) induced by (./pi)_3 through the norm down to GF(p).
///
/// Since alpha generates GF(r)*, its norm generates GF(p)*, so the symbol
/// cannot vanish; a zero result means the supplied tower is corrupt.
pub fn rho_of_alpha(tower: &FieldTower, np: &NormalizedPrime) -> Result<u8, EisensteinError> {
    let n = tower.norm_to_p(tower.alpha());
    let j = cubic_residue_symbol(n as i128, np)?;
    if j == 0 {
        return Err(EisensteinError::GeneratorNormIsCube);
    }
    Ok(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldTower;

    #[test]
    fn ring_arithmetic() {
        // (2+3w)(-1-3w) = -2 -6w -3w -9w^2 = -2 -9w +9 +9w = 7
        let x = EisensteinInt::new(2, 3);
        let y = EisensteinInt::new(-1, -3);
        assert_eq!(x.mul(&y), EisensteinInt::from_int(7));

        assert_eq!(EisensteinInt::omega().norm(), 1);
        assert_eq!(x.pow(0), EisensteinInt::one());

        let cube = x.pow(3);
        assert_eq!(cube, EisensteinInt::new(-19, -18));
        assert_eq!(cube.conj(), EisensteinInt::new(-1, 18));
        assert_eq!(cube.norm(), 343);
    }

    #[test]
    fn norm_is_multiplicative() {
        let xs = [
            EisensteinInt::new(2, 3),
            EisensteinInt::new(-1, 3),
            EisensteinInt::new(5, -6),
            EisensteinInt::new(0, 1),
            EisensteinInt::new(-4, -7),
        ];
        for x in &xs {
            for y in &xs {
                assert_eq!(x.mul(y).norm(), x.norm() * y.norm());
                // conj is a ring involution
                assert_eq!(x.mul(y).conj(), x.conj().mul(&y.conj()));
            }
            assert_eq!(x.conj().conj(), *x);
        }
    }

    #[test]
    fn omega_satisfies_its_equation() {
        let w = EisensteinInt::omega();
        let w2 = w.mul(&w);
        assert_eq!(w2, EisensteinInt::new(-1, -1));
        assert_eq!(w2.add(&w).add(&EisensteinInt::one()), EisensteinInt::zero());
        assert_eq!(w.pow(3), EisensteinInt::one());
    }

    #[test]
    fn find_pi_small_primes() {
        assert_eq!(find_pi(7).unwrap().pi, EisensteinInt::new(2, 3));
        assert_eq!(find_pi(13).unwrap().pi, EisensteinInt::new(-1, 3));
        assert_eq!(find_pi(31).unwrap().pi, EisensteinInt::new(5, 6));
        for p in [7u64, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97, 103, 109, 127] {
            let np = find_pi(p).unwrap();
            assert_eq!(np.pi.norm(), p as i128);
            assert_eq!(np.a().rem_euclid(3), 2);
            assert_eq!(np.b().rem_euclid(3), 0);
            assert!(np.b() > 0);
            // pi = -1 (mod 3) in Z[omega]
            assert_eq!((np.a() + 1) % 3, 0);
        }
    }

    #[test]
    fn find_pi_rejects_inert_and_ramified() {
        for p in [2u64, 3, 5, 11, 17, 23, 29] {
            assert!(matches!(
                find_pi(p),
                Err(EisensteinError::NoNormalizedPrime { .. })
            ));
        }
        assert!(find_pi(15).is_err());
    }

    #[test]
    fn symbol_worked_example_p7() {
        let np = find_pi(7).unwrap();
        // b' = -2 is the least-absolute-value inverse of 3 mod 7
        assert_eq!(np.b_inv, -2);
        // 3^2 = 2 = -1 + b'a (mod 7), so (3/pi) = omega^2
        assert_eq!(cubic_residue_symbol(3, &np).unwrap(), 2);
        assert_eq!(cubic_residue_symbol(1, &np).unwrap(), 0);
        // 6 = 3^3 = 27 (mod 7) is a cube
        assert_eq!(cubic_residue_symbol(6, &np).unwrap(), 0);
        assert!(matches!(
            cubic_residue_symbol(14, &np),
            Err(EisensteinError::NotCoprime { .. })
        ));
    }

    #[test]
    fn omega_residue_is_a_primitive_cube_root() {
        for p in [7u64, 13, 31, 61, 97] {
            let np = find_pi(p).unwrap();
            let w = np.omega_residue() as u128;
            let pp = p as u128;
            // w^2 + w + 1 = 0 (mod p)
            assert_eq!((w * w + w + 1) % pp, 0, "p = {}", p);
        }
    }

    #[test]
    fn symbol_is_multiplicative() {
        for p in [7u64, 13, 31, 61] {
            let np = find_pi(p).unwrap();
            for x in 1..p as i128 {
                for y in 1..p as i128 {
                    let sx = cubic_residue_symbol(x, &np).unwrap();
                    let sy = cubic_residue_symbol(y, &np).unwrap();
                    let sxy = cubic_residue_symbol(x * y, &np).unwrap();
                    assert_eq!((sx + sy) % 3, sxy);
                }
            }
        }
    }

    #[test]
    fn symbol_vanishes_exactly_on_cubes() {
        // independent oracle: enumerate all cubes mod p
        for p in [7u64, 13, 31, 61, 97, 151, 307, 601, 997] {
            let np = find_pi(p).unwrap();
            let mut cubes = vec![false; p as usize];
            for y in 1..p {
                cubes[(y as u128 * y as u128 % p as u128 * y as u128 % p as u128) as usize] = true;
            }
            for x in 1..p {
                let s = cubic_residue_symbol(x as i128, &np).unwrap();
                assert_eq!(s == 0, cubes[x as usize], "x = {}, p = {}", x, p);
            }
        }
    }

    #[test]
    fn symbol_agrees_with_cubic_classes_in_prime_field() {
        // in the trivial tower r = p, the class of u under the tower generator
        // matches the symbol through alpha -> omega^rho
        for p in [7u64, 13, 31, 61] {
            let tower = FieldTower::build(p, 1, 1).unwrap();
            let np = find_pi(p).unwrap();
            let rho = rho_of_alpha(&tower, &np).unwrap();
            assert!(rho == 1 || rho == 2);
            for k in 0..p - 1 {
                let u = tower.from_exp(k);
                let class = tower.cubic_class(u).unwrap();
                let value = tower.coeffs_of(u)[0];
                let symbol = cubic_residue_symbol(value as i128, &np).unwrap();
                assert_eq!(symbol, (rho * class) % 3, "u = alpha^{} in GF({})", k, p);
            }
        }
    }
}
