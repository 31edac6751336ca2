//! Code parameters, codeword generation, and exhaustive weight enumeration.
//!
//! The code over GF(q) is the set of words
//! `c(a,b) = (tr(a g^i + b (beta g)^i))_{i=0..n-1}` over all pairs
//! `(a, b) in GF(r)^2`, with `g = alpha^((q-1)/h)`, `beta = alpha^((r-1)/3)`,
//! and `n = h(r-1)/(q-1)`. This module validates the parameter system for
//! the cubic case (e = N = 3) and computes the full weight distribution by
//! brute force over the tower's trace tables.

use std::collections::BTreeMap;
use std::fmt;

use crate::gf::{FieldElement, FieldTower};
use crate::rational::Rational;

/// Errors from parameter validation and enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    TowerMismatch,
    HNotDivisor { h: u64, q: u64 },
    ENotDividesGcd { q: u64, h: u64, m: u32 },
    WrongN { found: u64 },
    ExcludedTuple,
    BudgetExceeded { estimate: u128, budget: u128 },
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::TowerMismatch => write!(f, "tower does not match (p, s, m)"),
            CodeError::HNotDivisor { h, q } => {
                write!(f, "h = {} does not divide q-1 = {}", h, q - 1)
            }
            CodeError::ENotDividesGcd { q, h, m } => write!(
                f,
                "e does not divide gcd(q-1, hm) = gcd({}, {})",
                q - 1,
                h * *m as u64
            ),
            CodeError::WrongN { found } => {
                write!(f, "N = {} but this construction requires N = 3", found)
            }
            CodeError::ExcludedTuple => {
                write!(
                    f,
                    "(q, h, e, m) = (3, 1, 2, 2) is excluded: minimal polynomials coincide"
                )
            }
            CodeError::BudgetExceeded { estimate, budget } => write!(
                f,
                "estimated cost {} symbol operations exceeds budget {} (use force to override)",
                estimate, budget
            ),
        }
    }
}

impl std::error::Error for CodeError {}

/// Validated parameters of one code in the family (e = N = 3).
#[derive(Debug, Clone)]
pub struct CodeParams {
    pub p: u64,
    pub s: u32,
    pub m: u32,
    pub q: u64,
    pub r: u64,
    pub h: u64,
    /// Fixed to 3 in this construction.
    pub e: u64,
    /// gcd((r-1)/(q-1), e(q-1)/h); validated to equal 3.
    pub big_n: u64,
    /// Code length h(r-1)/(q-1).
    pub n: u64,
    pub g: FieldElement,
    pub beta: FieldElement,
    /// gamma_i = beta^i / (1 - beta^i), i = 1, 2.
    pub gamma1: FieldElement,
    pub gamma2: FieldElement,
    /// Cubic class of g; zero exactly when 3 | (q-1)/h.
    pub class_g: u8,
    /// Cubic class of beta - 1 (used by the degenerate-weight rows).
    pub class_beta_minus_1: u8,
}

impl CodeParams {
    pub fn ms(&self) -> u32 {
        self.m * self.s
    }

    /// Whether g is a cube in GF(r), i.e. 3 | (q-1)/h.
    pub fn g_is_cube(&self) -> bool {
        self.class_g == 0
    }

    /// Which closed-form weight table applies:
    /// 1: p = 2 (mod 3), g cube; 2: p = 2 (mod 3), g non-cube;
    /// 3: p = 1 (mod 3), g cube; 4: p = 1 (mod 3), g non-cube.
    pub fn table_case(&self) -> u8 {
        match (self.p % 3 == 1, self.g_is_cube()) {
            (false, true) => 1,
            (false, false) => 2,
            (true, true) => 3,
            (true, false) => 4,
        }
    }

    /// h(r-1)/q, the weight of the all-nonzero extreme; lambda = this minus
    /// the Hamming weight.
    pub fn weight_offset(&self) -> Rational {
        Rational::new((self.h * (self.r - 1)) as i128, self.q as i128)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Validate (p, s, m, h) against the e = N = 3 parameter system and derive
/// the code constants from the supplied tower.
pub fn derive_params(
    p: u64,
    s: u32,
    m: u32,
    h: u64,
    tower: &FieldTower,
) -> Result<CodeParams, CodeError> {
    if tower.p() != p || tower.s() != s || tower.m() != m {
        return Err(CodeError::TowerMismatch);
    }
    let q = tower.q();
    let r = tower.r();
    let e = 3u64;
    if h == 0 || !(q - 1).is_multiple_of(h) {
        return Err(CodeError::HNotDivisor { h, q });
    }
    if !gcd(q - 1, h * m as u64).is_multiple_of(e) {
        return Err(CodeError::ENotDividesGcd { q, h, m });
    }
    if (q, h, e, m as u64) == (3, 1, 2, 2) {
        return Err(CodeError::ExcludedTuple);
    }
    let big_n = gcd((r - 1) / (q - 1), e * (q - 1) / h);
    if big_n != 3 {
        return Err(CodeError::WrongN { found: big_n });
    }
    let n = h * (r - 1) / (q - 1);

    let g = tower.from_exp((q - 1) / h);
    let beta = tower.from_exp((r - 1) / 3);

    // order(g) = n and (g beta)^n = 1
    debug_assert_eq!(tower.pow(g, n), tower.one());
    debug_assert!((1..n).all(|k| tower.pow(g, k) != tower.one()));
    assert_eq!(tower.pow(tower.mul(g, beta), n), tower.one());

    let gamma = |i: u64| {
        let bi = tower.pow(beta, i);
        tower.div(bi, tower.sub(tower.one(), bi))
    };
    let gamma1 = gamma(1);
    let gamma2 = gamma(2);
    assert_ne!(gamma1, gamma2, "gamma_1 and gamma_2 must differ");

    let class_g = tower
        .cubic_class(g)
        .map_err(|_| CodeError::WrongN { found: big_n })?;
    let class_beta_minus_1 = tower
        .cubic_class(tower.sub(beta, tower.one()))
        .expect("beta - 1 is nonzero");

    Ok(CodeParams {
        p,
        s,
        m,
        q,
        r,
        h,
        e,
        big_n,
        n,
        g,
        beta,
        gamma1,
        gamma2,
        class_g,
        class_beta_minus_1,
    })
}

/// Result of the minimal-polynomial distinctness check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinPolyReport {
    pub distinct: bool,
    pub degree_g: u32,
    pub degree_beta_g: u32,
}

fn frobenius_orbit(start: u128, q: u128, modulus: u128) -> Vec<u128> {
    let mut orbit = vec![start];
    let mut cur = start * q % modulus;
    while cur != start {
        orbit.push(cur);
        cur = cur * q % modulus;
    }
    orbit
}

/// Whether the minimal polynomials of g^(-1) and (beta g)^(-1) over GF(q)
/// are distinct, via Frobenius conjugate orbits of their discrete logs.
/// Their degrees are the orbit sizes (m each for code dimension 2m).
pub fn minimal_polys_distinct(params: &CodeParams) -> MinPolyReport {
    minimal_polys_distinct_general(params.q, params.m, params.h, params.e)
}

/// The same check for arbitrary e with e | gcd(q-1, hm) and h | q-1; used
/// to scan the parameter space (only (q,h,e,m) = (3,1,2,2) fails).
pub fn minimal_polys_distinct_general(q: u64, m: u32, h: u64, e: u64) -> MinPolyReport {
    assert!(h >= 1 && (q - 1).is_multiple_of(h), "h must divide q-1");
    assert!(
        e >= 2 && gcd(q - 1, h * m as u64).is_multiple_of(e),
        "e must divide gcd(q-1, hm)"
    );
    let rm1 = (q as u128).pow(m) - 1;
    let q = q as u128;
    let dg = (q - 1) / h as u128;
    let g_inv = (rm1 - dg % rm1) % rm1;
    let bg_inv = (rm1 - (rm1 / e as u128 + dg) % rm1) % rm1;
    let orbit_g = frobenius_orbit(g_inv, q, rm1);
    let orbit_bg = frobenius_orbit(bg_inv, q, rm1);
    MinPolyReport {
        distinct: !orbit_g.contains(&bg_inv),
        degree_g: orbit_g.len() as u32,
        degree_beta_g: orbit_bg.len() as u32,
    }
}

/// The codeword c(a,b) as a length-n vector of GF(q) elements (embedded in
/// the tower), generated with two running powers.
pub fn codeword(
    params: &CodeParams,
    tower: &FieldTower,
    a: FieldElement,
    b: FieldElement,
) -> Vec<FieldElement> {
    let bg = tower.mul(params.beta, params.g);
    let mut u = a;
    let mut v = b;
    let mut out = Vec::with_capacity(params.n as usize);
    for _ in 0..params.n {
        out.push(tower.trace_to_q(tower.add(u, v)));
        u = tower.mul(u, params.g);
        v = tower.mul(v, bg);
    }
    out
}

/// The modified weight lambda = h(r-1)/q - w for a Hamming weight w.
pub fn modified_weight(params: &CodeParams, w: u64) -> Rational {
    params.weight_offset().sub(&Rational::from_int(w as i128))
}

/// A weight distribution: Hamming weight -> exact frequency.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightDistribution {
    entries: BTreeMap<u64, u64>,
}

impl WeightDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, weight: u64, frequency: u64) {
        if frequency > 0 {
            *self.entries.entry(weight).or_insert(0) += frequency;
        }
    }

    pub fn frequency(&self, weight: u64) -> u64 {
        self.entries.get(&weight).copied().unwrap_or(0)
    }

    /// (weight, frequency) pairs in increasing weight order.
    pub fn entries(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries.iter().map(|(&w, &f)| (w, f))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// The weight enumerator as text: "1 + 63x^8 + 294x^12 + ...".
    pub fn enumerator(&self) -> String {
        let mut terms = Vec::new();
        for (w, f) in self.entries() {
            if w == 0 {
                terms.push(format!("{}", f));
            } else {
                terms.push(format!("{}x^{}", f, w));
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// First weight at which two distributions disagree, with both
    /// frequencies; None when equal.
    pub fn first_difference(&self, other: &WeightDistribution) -> Option<(u64, u64, u64)> {
        let weights: std::collections::BTreeSet<u64> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .copied()
            .collect();
        weights.into_iter().find_map(|w| {
            let (a, b) = (self.frequency(w), other.frequency(w));
            (a != b).then_some((w, a, b))
        })
    }
}

/// Knobs for the exhaustive enumeration.
#[derive(Debug, Clone)]
pub struct BruteOptions {
    /// Worker threads; the result is identical for any count.
    pub workers: usize,
    /// Maximum admissible cost in symbol operations (r^2 * n).
    pub budget: u128,
    /// Run even when the estimate exceeds the budget.
    pub force: bool,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions {
            workers: std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1),
            budget: 1_000_000_000,
            force: false,
        }
    }
}

/// Exact weight distribution over all r^2 pairs (a, b) by direct
/// enumeration. The a-range is partitioned across workers with one private
/// histogram each; the merged result does not depend on the worker count.
pub fn brute_distribution(
    params: &CodeParams,
    tower: &FieldTower,
    opts: &BruteOptions,
) -> Result<WeightDistribution, CodeError> {
    if tower.p() != params.p || tower.s() != params.s || tower.m() != params.m {
        return Err(CodeError::TowerMismatch);
    }
    let r = params.r as u128;
    let estimate = r * r * params.n as u128;
    if estimate > opts.budget && !opts.force {
        return Err(CodeError::BudgetExceeded {
            estimate,
            budget: opts.budget,
        });
    }

    let rm1 = (params.r - 1) as u32;
    let n = params.n as u32;
    let dg = tower.exp_of(params.g).unwrap() as u32;
    let dbg = tower.exp_of(tower.mul(params.beta, params.g)).unwrap() as u32;
    let trq = tower.trace_q_ids();
    let ntrq = tower.neg_trace_q_ids();

    let scan = |ka_lo: u32, ka_hi: u32| -> Vec<u64> {
        let mut hist = vec![0u64; n as usize + 1];
        for ka in ka_lo..ka_hi {
            // b = 0: weight counts positions with tr(a g^i) != 0
            let mut wt = 0u32;
            let mut ia = ka;
            for _ in 0..n {
                wt += (trq[ia as usize] != 0) as u32;
                ia += dg;
                if ia >= rm1 {
                    ia -= rm1;
                }
            }
            hist[wt as usize] += 1;

            // b = alpha^kb: symbol is zero iff tr(b (beta g)^i) = -tr(a g^i)
            for kb in 0..rm1 {
                let mut wt = 0u32;
                let mut ia = ka;
                let mut ib = kb;
                for _ in 0..n {
                    wt += (trq[ib as usize] != ntrq[ia as usize]) as u32;
                    ia += dg;
                    if ia >= rm1 {
                        ia -= rm1;
                    }
                    ib += dbg;
                    if ib >= rm1 {
                        ib -= rm1;
                    }
                }
                hist[wt as usize] += 1;
            }
        }
        hist
    };

    let workers = opts.workers.max(1).min(rm1.max(1) as usize);
    let mut hist = vec![0u64; n as usize + 1];
    if workers <= 1 {
        hist = scan(0, rm1);
    } else {
        let chunk = rm1.div_ceil(workers as u32);
        let partials = std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for w in 0..workers as u32 {
                let lo = w * chunk;
                let hi = ((w + 1) * chunk).min(rm1);
                let scan = &scan;
                handles.push(scope.spawn(move || scan(lo, hi.max(lo))));
            }
            handles
                .into_iter()
                .map(|h| h.join().unwrap())
                .collect::<Vec<_>>()
        });
        for partial in partials {
            for (acc, v) in hist.iter_mut().zip(partial) {
                *acc += v;
            }
        }
    }

    // a = 0 row
    {
        // (0, 0) is the zero codeword
        hist[0] += 1;
        for kb in 0..rm1 {
            let mut wt = 0u32;
            let mut ib = kb;
            for _ in 0..n {
                wt += (trq[ib as usize] != 0) as u32;
                ib += dbg;
                if ib >= rm1 {
                    ib -= rm1;
                }
            }
            hist[wt as usize] += 1;
        }
    }

    let mut dist = WeightDistribution::new();
    for (w, &f) in hist.iter().enumerate() {
        dist.record(w as u64, f);
    }
    debug_assert_eq!(dist.total() as u128, r * r);
    Ok(dist)
}
