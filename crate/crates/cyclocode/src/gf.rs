//! The finite-field tower GF(p) < GF(q) < GF(r) with a distinguished
//! generator alpha of GF(r)*.
//!
//! Elements are held in discrete-log form (zero, or an exponent of alpha).
//! Multiplication is exponent arithmetic; addition goes through a Zech
//! logarithm table built once at construction, so the hot enumeration
//! loops pay one table lookup per field operation. Traces down to GF(q)
//! and GF(p) are precomputed for every element.
//!
//! GF(q) is not a separate field object: it is realized inside GF(r) as
//! {0} together with the powers of alpha^((r-1)/(q-1)), and trace outputs
//! are canonicalized to that set.

use std::fmt;

/// Default bound on r = p^(s*m); guards table memory and enumeration cost.
pub const DEFAULT_SIZE_CAP: u64 = 1 << 22;

const INVALID: u32 = u32::MAX;
const ZECH_ZERO: u32 = u32::MAX;

/// Errors from tower construction and element queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfError {
    NotPrime { p: u64 },
    ZeroDegree,
    SizeCapExceeded { r: u128, cap: u64 },
    WrongModulusDegree { expected: u32, got: u32 },
    NotMonic,
    ReducibleModulus,
    GeneratorNotPrimitive,
    ZeroGenerator,
    ZeroArgument,
    NoCubicClasses { r: u64 },
}

impl fmt::Display for GfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfError::NotPrime { p } => write!(f, "{} is not prime", p),
            GfError::ZeroDegree => write!(f, "s and m must be positive"),
            GfError::SizeCapExceeded { r, cap } => {
                write!(f, "field size {} exceeds the cap {}", r, cap)
            }
            GfError::WrongModulusDegree { expected, got } => {
                write!(f, "modulus has degree {}, expected {}", got, expected)
            }
            GfError::NotMonic => write!(f, "modulus is not monic"),
            GfError::ReducibleModulus => write!(f, "modulus is reducible"),
            GfError::GeneratorNotPrimitive => {
                write!(f, "generator does not have multiplicative order r-1")
            }
            GfError::ZeroGenerator => write!(f, "generator reduces to zero"),
            GfError::ZeroArgument => write!(f, "operation undefined at zero"),
            GfError::NoCubicClasses { r } => {
                write!(f, "3 does not divide r-1 = {}, no cubic classes", r - 1)
            }
        }
    }
}

impl std::error::Error for GfError {}

/// An element of GF(r): zero, or alpha^k with 0 <= k <= r-2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Zero,
    Pow(u32),
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        matches!(self, FieldElement::Zero)
    }
}

/// Optional construction knobs for [`FieldTower::build_with`].
#[derive(Debug, Clone)]
pub struct TowerOptions {
    /// Modulus coefficients over GF(p), constant term first, length s*m + 1.
    pub modulus: Option<Vec<u64>>,
    /// Generator as polynomial coefficients in the modulus root, constant first.
    pub generator: Option<Vec<u64>>,
    /// Bound on r; defaults to [`DEFAULT_SIZE_CAP`].
    pub cap: u64,
}

impl Default for TowerOptions {
    fn default() -> Self {
        TowerOptions {
            modulus: None,
            generator: None,
            cap: DEFAULT_SIZE_CAP,
        }
    }
}

/// The tower GF(p) < GF(q = p^s) < GF(r = q^m), fully tabulated.
///
/// Immutable after construction; every operation is pure, so one tower can
/// be shared freely across threads.
pub struct FieldTower {
    p: u64,
    s: u32,
    m: u32,
    q: u64,
    r: u64,
    rm1: u32,
    modulus: Vec<u64>,
    generator_coeffs: Vec<u64>,
    antilog_poly: Vec<u32>,   // k -> polynomial code of alpha^k
    log_from_poly: Vec<u32>,  // polynomial code -> k (0 -> INVALID)
    zech: Vec<u32>,           // k -> log(1 + alpha^k), ZECH_ZERO if it vanishes
    trace_q_id: Vec<u32>,     // k -> subfield id of tr_{r/q}(alpha^k)
    neg_trace_q_id: Vec<u32>, // k -> subfield id of -tr_{r/q}(alpha^k)
    trace_p_val: Vec<u32>,    // k -> tr_{r/p}(alpha^k) as an integer in 0..p
    q_stride: u32,            // (r-1)/(q-1)
    p_stride: u32,            // (r-1)/(p-1)
    half: u32,                // (r-1)/2 for odd p, unused for p = 2
}

impl FieldTower {
    /// Build the tower with the default (lexicographically smallest
    /// primitive) modulus and its root as generator.
    pub fn build(p: u64, s: u32, m: u32) -> Result<Self, GfError> {
        Self::build_with(p, s, m, TowerOptions::default())
    }

    pub fn build_with(p: u64, s: u32, m: u32, opts: TowerOptions) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime { p });
        }
        if s == 0 || m == 0 {
            return Err(GfError::ZeroDegree);
        }
        let d = s
            .checked_mul(m)
            .filter(|d| *d <= 63)
            .ok_or(GfError::SizeCapExceeded {
                r: u128::MAX,
                cap: opts.cap,
            })?;
        let r_big = (0..d).try_fold(1u128, |acc, _| {
            let next = acc * p as u128;
            (next <= opts.cap as u128).then_some(next)
        });
        let r = match r_big {
            Some(r) => r as u64,
            None => {
                return Err(GfError::SizeCapExceeded {
                    r: (p as u128).pow(d),
                    cap: opts.cap,
                })
            }
        };
        let q = p.pow(s);
        let rm1 = (r - 1) as u32;

        let modulus = match opts.modulus {
            Some(coeffs) => {
                let f = reduce_coeffs(&coeffs, p);
                if f.len() != d as usize + 1 {
                    return Err(GfError::WrongModulusDegree {
                        expected: d,
                        got: f.len().saturating_sub(1) as u32,
                    });
                }
                if f[d as usize] != 1 {
                    return Err(GfError::NotMonic);
                }
                if !is_irreducible(&f, p) {
                    return Err(GfError::ReducibleModulus);
                }
                f
            }
            None => default_modulus(p, d, r),
        };

        let generator_coeffs = match opts.generator {
            Some(coeffs) => {
                let g = poly_rem(&reduce_coeffs(&coeffs, p), &modulus, p);
                if g.is_empty() {
                    return Err(GfError::ZeroGenerator);
                }
                g
            }
            None => {
                if d == 1 {
                    // root of x + c0 is -c0
                    vec![(p - modulus[0]) % p]
                } else {
                    vec![0, 1]
                }
            }
        };

        // power table; a repeated code means the generator order is < r-1
        let mut antilog_poly = Vec::with_capacity(rm1 as usize);
        let mut log_from_poly = vec![INVALID; r as usize];
        let gen_is_x = generator_coeffs == [0, 1];
        let mut cur = vec![1u64];
        for k in 0..rm1 {
            let code = encode(&cur, p);
            debug_assert!(code < r);
            if log_from_poly[code as usize] != INVALID {
                return Err(GfError::GeneratorNotPrimitive);
            }
            log_from_poly[code as usize] = k;
            antilog_poly.push(code as u32);
            cur = if gen_is_x {
                mul_by_x_mod(&cur, &modulus, p)
            } else {
                poly_mulmod(&cur, &generator_coeffs, &modulus, p)
            };
        }
        debug_assert_eq!(encode(&cur, p), 1, "generator power cycle must close at 1");

        let mut zech = vec![ZECH_ZERO; rm1 as usize];
        for (k, z) in zech.iter_mut().enumerate() {
            let sum = add_codes(1, antilog_poly[k] as u64, p, d);
            if sum != 0 {
                *z = log_from_poly[sum as usize];
            }
        }

        let q_stride = (rm1 as u64 / (q - 1)) as u32;
        let p_stride = (rm1 as u64 / (p - 1)) as u32;
        let half = if p == 2 { 0 } else { rm1 / 2 };

        let mut tower = FieldTower {
            p,
            s,
            m,
            q,
            r,
            rm1,
            modulus,
            generator_coeffs,
            antilog_poly,
            log_from_poly,
            zech,
            trace_q_id: Vec::new(),
            neg_trace_q_id: Vec::new(),
            trace_p_val: Vec::new(),
            q_stride,
            p_stride,
            half,
        };
        tower.build_trace_tables();
        Ok(tower)
    }

    fn build_trace_tables(&mut self) {
        let rm1 = self.rm1 as u64;
        let d = self.s * self.m;

        // Frobenius exponent multipliers q^i and p^i modulo r-1
        let q_pows: Vec<u64> = (0..self.m)
            .scan(1u64, |acc, _| {
                let v = *acc;
                *acc = *acc * (self.q % rm1.max(1)) % rm1.max(1);
                Some(v % rm1.max(1))
            })
            .collect();
        let p_pows: Vec<u64> = (0..d)
            .scan(1u64, |acc, _| {
                let v = *acc;
                *acc = *acc * (self.p % rm1.max(1)) % rm1.max(1);
                Some(v % rm1.max(1))
            })
            .collect();

        let mut trace_q_id = vec![0u32; self.rm1 as usize];
        let mut neg_trace_q_id = vec![0u32; self.rm1 as usize];
        let mut trace_p_val = vec![0u32; self.rm1 as usize];

        for k in 0..self.rm1 as u64 {
            let mut acc = FieldElement::Zero;
            for f in &q_pows {
                acc = self.add(acc, FieldElement::Pow((k * f % rm1) as u32));
            }
            let id = self.qid_of(acc);
            trace_q_id[k as usize] = id;
            neg_trace_q_id[k as usize] = self.qid_of(self.neg(acc));

            let mut abs = FieldElement::Zero;
            for f in &p_pows {
                abs = self.add(abs, FieldElement::Pow((k * f % rm1) as u32));
            }
            trace_p_val[k as usize] = match abs {
                FieldElement::Zero => 0,
                FieldElement::Pow(e) => {
                    let code = self.antilog_poly[e as usize] as u64;
                    debug_assert!(code < self.p, "absolute trace must land in GF(p)");
                    code as u32
                }
            };
        }

        self.trace_q_id = trace_q_id;
        self.neg_trace_q_id = neg_trace_q_id;
        self.trace_p_val = trace_p_val;
    }

    fn qid_of(&self, x: FieldElement) -> u32 {
        match x {
            FieldElement::Zero => 0,
            FieldElement::Pow(e) => {
                debug_assert!(
                    e % self.q_stride == 0,
                    "trace must land in the embedded GF(q)"
                );
                1 + e / self.q_stride
            }
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Generator coefficients in the modulus root, constant term first.
    pub fn generator_coeffs(&self) -> &[u64] {
        &self.generator_coeffs
    }

    /// The modulus as a human-readable polynomial in x.
    pub fn modulus_string(&self) -> String {
        poly_string(&self.modulus)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::Zero
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::Pow(0)
    }

    /// The distinguished generator of GF(r)*.
    pub fn alpha(&self) -> FieldElement {
        if self.rm1 == 1 {
            FieldElement::Pow(0)
        } else {
            FieldElement::Pow(1)
        }
    }

    /// alpha^k (k reduced mod r-1).
    pub fn from_exp(&self, k: u64) -> FieldElement {
        FieldElement::Pow((k % self.rm1 as u64) as u32)
    }

    pub fn exp_of(&self, x: FieldElement) -> Option<u64> {
        match x {
            FieldElement::Zero => None,
            FieldElement::Pow(k) => Some(k as u64),
        }
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        match (x, y) {
            (FieldElement::Zero, y) => y,
            (x, FieldElement::Zero) => x,
            (FieldElement::Pow(k1), FieldElement::Pow(k2)) => {
                let d = if k2 >= k1 {
                    k2 - k1
                } else {
                    k2 + self.rm1 - k1
                };
                match self.zech[d as usize] {
                    ZECH_ZERO => FieldElement::Zero,
                    z => {
                        let mut e = k1 + z;
                        if e >= self.rm1 {
                            e -= self.rm1;
                        }
                        FieldElement::Pow(e)
                    }
                }
            }
        }
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        if self.p == 2 {
            return x;
        }
        match x {
            FieldElement::Zero => FieldElement::Zero,
            FieldElement::Pow(k) => {
                let mut e = k + self.half;
                if e >= self.rm1 {
                    e -= self.rm1;
                }
                FieldElement::Pow(e)
            }
        }
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        match (x, y) {
            (FieldElement::Zero, _) | (_, FieldElement::Zero) => FieldElement::Zero,
            (FieldElement::Pow(k1), FieldElement::Pow(k2)) => {
                let mut e = k1 + k2;
                if e >= self.rm1 {
                    e -= self.rm1;
                }
                FieldElement::Pow(e)
            }
        }
    }

    /// Multiplicative inverse; panics at zero.
    pub fn inv(&self, x: FieldElement) -> FieldElement {
        match x {
            FieldElement::Zero => panic!("inverse of zero"),
            FieldElement::Pow(0) => FieldElement::Pow(0),
            FieldElement::Pow(k) => FieldElement::Pow(self.rm1 - k),
        }
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.mul(x, self.inv(y))
    }

    /// x^k, with 0^0 = 1.
    pub fn pow(&self, x: FieldElement, k: u64) -> FieldElement {
        match x {
            FieldElement::Zero => {
                if k == 0 {
                    self.one()
                } else {
                    FieldElement::Zero
                }
            }
            FieldElement::Pow(e) => {
                FieldElement::Pow(((e as u128 * k as u128) % self.rm1 as u128) as u32)
            }
        }
    }

    /// Trace from GF(r) onto the embedded GF(q): x + x^q + ... + x^(q^(m-1)).
    pub fn trace_to_q(&self, x: FieldElement) -> FieldElement {
        match x {
            FieldElement::Zero => FieldElement::Zero,
            FieldElement::Pow(k) => self.qid_to_elem(self.trace_q_id[k as usize]),
        }
    }

    /// Absolute trace GF(r) -> GF(p), as an integer in 0..p.
    pub fn trace_to_p(&self, x: FieldElement) -> u64 {
        match x {
            FieldElement::Zero => 0,
            FieldElement::Pow(k) => self.trace_p_val[k as usize] as u64,
        }
    }

    /// Norm GF(r) -> GF(p): alpha^k -> alpha^(k (r-1)/(p-1)), as an integer mod p.
    pub fn norm_to_p(&self, x: FieldElement) -> u64 {
        match x {
            FieldElement::Zero => 0,
            FieldElement::Pow(k) => {
                let e = (k as u64 * self.p_stride as u64) % self.rm1 as u64;
                let code = self.antilog_poly[e as usize] as u64;
                debug_assert!(code < self.p, "norm must land in GF(p)");
                code
            }
        }
    }

    /// Coset of x modulo cubes: x = alpha^class * (cube). Errors at zero and
    /// when GF(r)* has no subgroup of index 3.
    pub fn cubic_class(&self, x: FieldElement) -> Result<u8, GfError> {
        if !self.rm1.is_multiple_of(3) {
            return Err(GfError::NoCubicClasses { r: self.r });
        }
        match x {
            FieldElement::Zero => Err(GfError::ZeroArgument),
            FieldElement::Pow(k) => Ok((k % 3) as u8),
        }
    }

    /// Element from polynomial coefficients in the modulus root (constant
    /// term first; reduced mod p and mod the modulus).
    pub fn element_from_coeffs(&self, coeffs: &[u64]) -> FieldElement {
        let g = poly_rem(&reduce_coeffs(coeffs, self.p), &self.modulus, self.p);
        let code = encode(&g, self.p);
        if code == 0 {
            FieldElement::Zero
        } else {
            FieldElement::Pow(self.log_from_poly[code as usize])
        }
    }

    /// Polynomial coefficients of x in the modulus root, constant first,
    /// padded to length s*m.
    pub fn coeffs_of(&self, x: FieldElement) -> Vec<u64> {
        let d = (self.s * self.m) as usize;
        let code = match x {
            FieldElement::Zero => 0,
            FieldElement::Pow(k) => self.antilog_poly[k as usize] as u64,
        };
        let mut out = decode(code, self.p);
        out.resize(d, 0);
        out
    }

    /// All r elements, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        std::iter::once(FieldElement::Zero).chain((0..self.rm1).map(FieldElement::Pow))
    }

    pub(crate) fn qid_to_elem(&self, id: u32) -> FieldElement {
        if id == 0 {
            FieldElement::Zero
        } else {
            FieldElement::Pow((id - 1) * self.q_stride)
        }
    }

    pub(crate) fn trace_q_ids(&self) -> &[u32] {
        &self.trace_q_id
    }

    pub(crate) fn neg_trace_q_ids(&self) -> &[u32] {
        &self.neg_trace_q_id
    }

    pub(crate) fn trace_p_values(&self) -> &[u32] {
        &self.trace_p_val
    }
}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldTower")
            .field("p", &self.p)
            .field("s", &self.s)
            .field("m", &self.m)
            .field("r", &self.r)
            .field("modulus", &self.modulus_string())
            .finish()
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
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

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// ---- dense polynomial arithmetic over GF(p) ----
// Coefficient vectors are little-endian (index = degree) with no trailing zeros.

fn reduce_coeffs(coeffs: &[u64], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = coeffs.iter().map(|c| c % p).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn encode(poly: &[u64], p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn decode(mut code: u64, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while code > 0 {
        out.push(code % p);
        code /= p;
    }
    out
}

fn add_codes(c1: u64, c2: u64, p: u64, d: u32) -> u64 {
    if p == 2 {
        return c1 ^ c2;
    }
    let mut out = 0u64;
    let mut scale = 1u64;
    let (mut a, mut b) = (c1, c2);
    for _ in 0..d {
        out += (a % p + b % p) % p * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    out
}

fn poly_sub_scaled(a: &mut Vec<u64>, b: &[u64], shift: usize, factor: u64, p: u64) {
    // a -= factor * x^shift * b
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &bc) in b.iter().enumerate() {
        let idx = i + shift;
        a[idx] = (a[idx] + p - factor * bc % p) % p;
    }
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut rem = a.to_vec();
    while rem.last() == Some(&0) {
        rem.pop();
    }
    let df = f.len() - 1;
    let lead_inv = mod_inv(f[df], p);
    while rem.len() > df {
        let shift = rem.len() - 1 - df;
        let factor = rem[rem.len() - 1] * lead_inv % p;
        poly_sub_scaled(&mut rem, f, shift, factor, p);
    }
    rem
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ac) in a.iter().enumerate() {
        if ac == 0 {
            continue;
        }
        for (j, &bc) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ac * bc) % p;
        }
    }
    poly_rem(&prod, f, p)
}

fn mul_by_x_mod(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut shifted = vec![0u64];
    shifted.extend_from_slice(a);
    poly_rem(&shifted, f, p)
}

fn poly_powmod(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mulmod(&acc, &b, f, p);
        }
        exp >>= 1;
        if exp > 0 {
            b = poly_mulmod(&b, &b, f, p);
        }
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime
    let mut acc = 1u128;
    let mut b = (a % p) as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        e >>= 1;
    }
    acc as u64
}

/// Rabin irreducibility test for a monic polynomial of degree d over GF(p).
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = (f.len() - 1) as u32;
    if d == 0 {
        return false;
    }
    let x = vec![0u64, 1];
    for ell in prime_factors(d as u64) {
        let e = p.pow(d / ell as u32);
        let h = poly_powmod(&x, e, f, p);
        // gcd(x^(p^(d/ell)) - x, f) must be 1
        let mut diff = h;
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        while diff.last() == Some(&0) {
            diff.pop();
        }
        let g = poly_gcd(f, &diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    let h = poly_powmod(&x, p.pow(d), f, p);
    h == poly_rem(&x, f, p)
}

/// True if the class of x generates the multiplicative group mod f.
fn root_is_primitive(f: &[u64], p: u64, r: u64) -> bool {
    let x = if f.len() == 2 {
        // degree 1: the root is the constant -c0
        vec![(p - f[0] % p) % p]
    } else {
        vec![0u64, 1]
    };
    if x.is_empty() || (x.len() == 1 && x[0] == 0) {
        return false;
    }
    for ell in prime_factors(r - 1) {
        if poly_powmod(&x, (r - 1) / ell, f, p) == vec![1] {
            return false;
        }
    }
    true
}

/// The lexicographically smallest monic irreducible of degree d over GF(p)
/// whose root generates GF(p^d)*. Candidates are ordered by comparing the
/// coefficient of x^(d-1) first, down to the constant term.
fn default_modulus(p: u64, d: u32, r: u64) -> Vec<u64> {
    for k in 0..r {
        let mut f = decode(k, p);
        f.resize(d as usize, 0);
        f.push(1);
        if d >= 1 && f[0] == 0 && d > 1 {
            continue; // divisible by x
        }
        if is_irreducible(&f, p) && root_is_primitive(&f, p, r) {
            return f;
        }
    }
    unreachable!(
        "a primitive polynomial of degree {} over GF({}) exists",
        d, p
    )
}

fn poly_string(f: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in f.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let t = match (i, c) {
            (0, c) => format!("{}", c),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{}x", c),
            (i, 1) => format!("x^{}", i),
            (i, c) => format!("{}x^{}", c, i),
        };
        terms.push(t);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}
