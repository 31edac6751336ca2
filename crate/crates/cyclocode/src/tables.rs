//! Closed-form weight distributions for the four parameter regimes, the
//! exact frequency counts f(c) behind them, and the brute-vs-closed
//! comparison.
//!
//! The regime is selected by p mod 3 and by whether g is a cube in GF(r)
//! (equivalently 3 | (q-1)/h):
//!
//! * case 1: p = 2 (mod 3), g cube       (7 rows)
//! * case 2: p = 2 (mod 3), g non-cube   (7 rows)
//! * case 3: p = 1 (mod 3), g cube       (14 rows)
//! * case 4: p = 1 (mod 3), g non-cube   (14 rows)
//!
//! Rows list the modified weight lambda and its exact frequency; Hamming
//! weights are recovered through w = h(r-1)/q - lambda and rows that land
//! on the same Hamming weight are merged.

use std::fmt;

use crate::charsums::{self, CharsumsError, PeriodSet};
use crate::code::{self, BruteOptions, CodeError, CodeParams, WeightDistribution};
use crate::gf::FieldTower;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TablesError {
    /// A row's Hamming weight h(r-1)/q - lambda is not an integer in [0, n].
    BadWeight {
        lambda: Rational,
    },
    /// A frequency formula failed its exact-divisibility or sign check.
    BadFrequency {
        detail: String,
    },
    /// Frequencies do not sum to r^2.
    WrongTotal {
        total: u64,
        expected: u64,
    },
    Charsums(CharsumsError),
    Code(CodeError),
}

impl fmt::Display for TablesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TablesError::BadWeight { lambda } => {
                write!(
                    f,
                    "modified weight {} does not give an integral Hamming weight",
                    lambda
                )
            }
            TablesError::BadFrequency { detail } => write!(f, "bad frequency: {}", detail),
            TablesError::WrongTotal { total, expected } => {
                write!(
                    f,
                    "table frequencies total {} instead of {}",
                    total, expected
                )
            }
            TablesError::Charsums(e) => write!(f, "{}", e),
            TablesError::Code(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for TablesError {}

impl From<CharsumsError> for TablesError {
    fn from(e: CharsumsError) -> Self {
        TablesError::Charsums(e)
    }
}

impl From<CodeError> for TablesError {
    fn from(e: CodeError) -> Self {
        TablesError::Code(e)
    }
}

/// One row of a closed-form weight table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub lambda: Rational,
    pub hamming: u64,
    pub frequency: u64,
    pub provenance: String,
}

fn div_exact(num: i128, den: i128, what: &str) -> Result<i128, TablesError> {
    if num % den != 0 {
        return Err(TablesError::BadFrequency {
            detail: format!("{} = {}/{} is not an integer", what, num, den),
        });
    }
    Ok(num / den)
}

fn make_row(
    params: &CodeParams,
    lambda: Rational,
    frequency: i128,
    provenance: String,
) -> Result<TableRow, TablesError> {
    if frequency < 0 {
        return Err(TablesError::BadFrequency {
            detail: format!("{} has negative frequency {}", provenance, frequency),
        });
    }
    let w = params.weight_offset().sub(&lambda);
    let hamming = match w.to_integer() {
        Some(v) if v >= 0 && v <= params.n as i128 => v as u64,
        _ => return Err(TablesError::BadWeight { lambda }),
    };
    Ok(TableRow {
        lambda,
        hamming,
        frequency: frequency as u64,
        provenance,
    })
}

/// All rows of the applicable table, unmerged, in the table's own order.
pub fn table_rows(params: &CodeParams, periods: &PeriodSet) -> Result<Vec<TableRow>, TablesError> {
    let case = params.table_case();
    let rows = match case {
        1 | 2 => rows_p2(params, periods, case)?,
        _ => rows_p1(params, periods, case)?,
    };
    Ok(rows)
}

/// The seven rows for p = 2 (mod 3). S = (-1)^(ms/2) sqrt(r) is read off
/// pi^(ms) = (-p)^(ms/2), which is rational in this regime.
fn rows_p2(
    params: &CodeParams,
    periods: &PeriodSet,
    case: u8,
) -> Result<Vec<TableRow>, TablesError> {
    assert!(
        periods.pi_ms.is_rational(),
        "pi^(ms) must be rational for p = 2 (mod 3)"
    );
    let s_val = periods.pi_ms.a;
    let r = params.r as i128;
    let rm1 = r - 1;
    let h = params.h as i128;
    let q = params.q as i128;
    let hq = Rational::new(h, q);
    let h3q = Rational::new(h, 3 * q);

    let freq_pairs: Vec<(Rational, i128)> = if case == 1 {
        vec![
            (
                hq.mul(&Rational::from_int(-(2 * s_val + 1))),
                div_exact(rm1 * (r - 8 - 2 * s_val), 27, "row 1")?,
            ),
            (
                hq.mul(&Rational::from_int(s_val - 1)),
                div_exact(2 * rm1 * (4 * r - 14 + s_val), 27, "row 2")?,
            ),
            (
                hq.mul(&Rational::from_int(-(s_val + 1))),
                div_exact(2 * rm1 * (r - 2 + s_val), 9, "row 3")?,
            ),
            (
                hq.mul(&Rational::from_int(-1)),
                div_exact(2 * rm1 * (2 * r - 1 - s_val), 9, "row 4")?,
            ),
            (h3q.mul(&Rational::from_int(r - 4 * s_val - 3)), rm1),
            (h3q.mul(&Rational::from_int(r + 2 * s_val - 3)), 2 * rm1),
            (hq.mul(&Rational::from_int(rm1)), 1),
        ]
    } else {
        vec![
            (
                hq.mul(&Rational::from_int(-(2 * s_val + 1))),
                div_exact(rm1 * (r + 1 - 2 * s_val), 27, "row 1")?,
            ),
            (
                hq.mul(&Rational::from_int(s_val - 1)),
                div_exact(2 * rm1 * (4 * r - 5 + s_val), 27, "row 2")?,
            ),
            (
                hq.mul(&Rational::from_int(-(s_val + 1))),
                div_exact(2 * rm1 * (r - 2 + s_val), 9, "row 3")?,
            ),
            (
                hq.mul(&Rational::from_int(-1)),
                div_exact(rm1 * (4 * r - 11 - 2 * s_val), 9, "row 4")?,
            ),
            (h3q.mul(&Rational::from_int(r + 2 * s_val - 3)), rm1),
            (h3q.mul(&Rational::from_int(r - s_val - 3)), 2 * rm1),
            (hq.mul(&Rational::from_int(rm1)), 1),
        ]
    };

    freq_pairs
        .into_iter()
        .enumerate()
        .map(|(i, (lambda, freq))| {
            make_row(params, lambda, freq, format!("case{} row {}", case, i + 1))
        })
        .collect()
}

/// The fourteen rows for p = 1 (mod 3), in terms of the three periods and
/// the paired values P = pi_pair(0), A = pi_pair(rho), B = pi_pair(2 rho).
fn rows_p1(
    params: &CodeParams,
    periods: &PeriodSet,
    case: u8,
) -> Result<Vec<TableRow>, TablesError> {
    let r = params.r as i128;
    let rm1 = r - 1;
    let h = params.h as i128;
    let q = params.q as i128;
    let hq = Rational::new(h, q);
    let h3q = Rational::new(h, 3 * q);
    let (e1, ea, ea2) = (
        periods.eta_1 as i128,
        periods.eta_alpha as i128,
        periods.eta_alpha2 as i128,
    );
    let rho = periods.rho_alpha;
    let p_term = periods.pi_pair(0);
    let a_term = periods.pi_pair(rho);
    let b_term = periods.pi_pair(2 * rho % 3);

    let pure_freq = if case == 3 {
        div_exact(rm1 * (r - 8 - p_term), 27, "rows 1-3")?
    } else {
        div_exact(rm1 * (r + 1 - p_term), 27, "rows 1-3")?
    };
    let freq_a = div_exact(rm1 * (r - 2 - a_term), 9, "mixed rows")?;
    let freq_b = div_exact(rm1 * (r - 2 - b_term), 9, "mixed rows")?;
    let all_distinct_freq = if case == 3 {
        div_exact(2 * rm1 * (r + 1 - p_term), 9, "row 10")?
    } else {
        div_exact(rm1 * (2 * r - 7 - 2 * p_term), 9, "row 10")?
    };

    let mut rows: Vec<(Rational, i128)> = vec![
        (hq.mul(&Rational::from_int(3 * e1)), pure_freq),
        (hq.mul(&Rational::from_int(3 * ea)), pure_freq),
        (hq.mul(&Rational::from_int(3 * ea2)), pure_freq),
        (hq.mul(&Rational::from_int(2 * e1 + ea)), freq_b),
        (hq.mul(&Rational::from_int(2 * e1 + ea2)), freq_a),
        (hq.mul(&Rational::from_int(2 * ea + e1)), freq_a),
        (hq.mul(&Rational::from_int(2 * ea + ea2)), freq_b),
        (hq.mul(&Rational::from_int(2 * ea2 + e1)), freq_b),
        (hq.mul(&Rational::from_int(2 * ea2 + ea)), freq_a),
        (hq.mul(&Rational::from_int(-1)), all_distinct_freq),
    ];
    if case == 3 {
        rows.push((h3q.mul(&Rational::from_int(rm1 + 6 * e1)), rm1));
        rows.push((h3q.mul(&Rational::from_int(rm1 + 6 * ea)), rm1));
        rows.push((h3q.mul(&Rational::from_int(rm1 + 6 * ea2)), rm1));
    } else {
        let third = rm1 / 3;
        rows.push((hq.mul(&Rational::from_int(third + e1 + ea)), rm1));
        rows.push((hq.mul(&Rational::from_int(third + e1 + ea2)), rm1));
        rows.push((hq.mul(&Rational::from_int(third + ea + ea2)), rm1));
    }
    rows.push((hq.mul(&Rational::from_int(rm1)), 1));

    rows.into_iter()
        .enumerate()
        .map(|(i, (lambda, freq))| {
            make_row(params, lambda, freq, format!("case{} row {}", case, i + 1))
        })
        .collect()
}

/// The full closed-form weight distribution: table rows converted to
/// Hamming weights, merged, and checked to cover all r^2 pairs.
pub fn closed_form_distribution(
    params: &CodeParams,
    periods: &PeriodSet,
) -> Result<WeightDistribution, TablesError> {
    let rows = table_rows(params, periods)?;
    let mut dist = WeightDistribution::new();
    for row in &rows {
        dist.record(row.hamming, row.frequency);
    }
    let expected = params.r * params.r;
    if dist.total() != expected {
        return Err(TablesError::WrongTotal {
            total: dist.total(),
            expected,
        });
    }
    Ok(dist)
}

/// Exact size of F(c) = {(a,b) : (a + beta^i b) g^i c_i is a cube for all
/// i}, for representatives c_i = alpha^(k_i); `classes` holds the k_i mod 3.
///
/// For odd p this is the Jacobi-sum expression
/// (r-1)/27 * (r + 1 - 3 delta - pair(rho(c1 c2 c3))); for p = 2 the
/// pi-term is replaced by 1 + 3 eta at the class of (c1 c2 c3)^2.
pub fn f_vec(params: &CodeParams, periods: &PeriodSet, classes: [u8; 3]) -> u64 {
    let [k1, k2, k3] = classes.map(|k| k % 3);
    let cg = params.class_g;
    let delta = |e: u8| u64::from(e.is_multiple_of(3));
    let deltas = delta(2 * cg + k2 + 2 * k3) // g^2 c2 / c3
        + delta(cg + k1 + 2 * k3) // g c1 / c3
        + delta(2 * cg + k1 + 2 * k2); // g^2 c1 / c2
    let r = params.r as i128;
    let csum = (k1 + k2 + k3) % 3;
    let x = if params.p == 2 {
        r + 2 + 3 * periods.eta_of_class(2 * csum % 3) as i128 - 3 * deltas as i128
    } else {
        charsums::assert_chi_minus3_is_one(params);
        r + 1 - 3 * deltas as i128 - periods.pi_pair(csum * periods.rho_alpha % 3)
    };
    let num = (r - 1) * x;
    assert!(
        num >= 0 && num % 27 == 0,
        "f(c) = {}/27 must be a nonnegative integer",
        num
    );
    (num / 27) as u64
}

/// Modified weights for the pairs with a + beta^t b = 0 (b != 0): for each
/// t in 1..=3 and each cubic class of b, lambda = (h/q)((r-1)/3 + eta_i +
/// eta_j) with frequency (r-1)/3, collapsed over equal lambda values.
pub fn degenerate_weights(
    params: &CodeParams,
    periods: &PeriodSet,
) -> Result<Vec<TableRow>, TablesError> {
    let cg = params.class_g;
    let cb1 = params.class_beta_minus_1;
    let hq = Rational::new(params.h as i128, params.q as i128);
    let third = ((params.r - 1) / 3) as i128;

    let mut collected: Vec<(Rational, i128)> = Vec::new();
    for t in 1..=3u8 {
        // classes of the two period arguments before the b-contribution
        let (base_i, base_j) = match t {
            1 => (2 * cg + cb1, cb1), // b g^2 (beta - 1), b (beta - 1)
            2 => (cg + cb1, cb1),     // b g (beta - 1), b (beta - 1)
            _ => (cg + cb1, 2 * cg + cb1),
        };
        for cb in 0..3u8 {
            let eta_i = periods.eta_of_class((base_i + cb) % 3) as i128;
            let eta_j = periods.eta_of_class((base_j + cb) % 3) as i128;
            let lambda = hq.mul(&Rational::from_int(third + eta_i + eta_j));
            match collected.iter_mut().find(|(l, _)| *l == lambda) {
                Some((_, f)) => *f += third,
                None => collected.push((lambda, third)),
            }
        }
    }
    collected
        .into_iter()
        .map(|(lambda, freq)| make_row(params, lambda, freq, "degenerate".to_string()))
        .collect()
}

/// Outcome of checking the closed form against brute enumeration.
#[derive(Debug, Clone)]
pub struct CompareReport {
    pub equal: bool,
    pub brute: WeightDistribution,
    pub closed: WeightDistribution,
    /// (weight, brute frequency, closed frequency) at the first difference.
    pub first_mismatch: Option<(u64, u64, u64)>,
}

/// Run both routes and report the first differing weight, if any.
pub fn compare(
    params: &CodeParams,
    tower: &FieldTower,
    opts: &BruteOptions,
) -> Result<CompareReport, TablesError> {
    let (periods, _) = charsums::periods_for(params, tower)?;
    compare_with_periods(params, tower, &periods, opts)
}

/// As [`compare`], with a caller-supplied period set (useful for fault
/// injection and label-invariance checks).
pub fn compare_with_periods(
    params: &CodeParams,
    tower: &FieldTower,
    periods: &PeriodSet,
    opts: &BruteOptions,
) -> Result<CompareReport, TablesError> {
    let brute = code::brute_distribution(params, tower, opts)?;
    let closed = closed_form_distribution(params, periods)?;
    let first_mismatch = brute.first_difference(&closed);
    Ok(CompareReport {
        equal: first_mismatch.is_none(),
        brute,
        closed,
        first_mismatch,
    })
}
