//! Exact weight distributions for a family of two-zero cyclic codes.
//!
//! The code `C(q, m, h)` over GF(q) has length `n = h(r-1)/(q-1)` with
//! `r = q^m`, and consists of the words
//!
//! ```text
//! c(a, b) = ( tr(a g^i + b (beta g)^i) )  for i = 0 .. n-1,
//! ```
//!
//! where `g = alpha^((q-1)/h)`, `beta = alpha^((r-1)/3)`, `alpha` generates
//! GF(r)*, and `tr` is the trace down to GF(q). This crate handles the
//! cubic case (`e = N = 3`), where the full weight distribution has a
//! closed form in terms of the three Gaussian periods of order 3, the
//! Eisenstein prime above p, and the cubic residue symbol.
//!
//! Two independent routes to the distribution are provided and checked
//! against each other:
//!
//! * [`tables::closed_form_distribution`] — the closed form, exact integer
//!   arithmetic throughout (Gaussian periods, Jacobi sums in Z\[omega\]);
//! * [`code::brute_distribution`] — exhaustive enumeration of all r^2
//!   codewords over discrete-log tables.
//!
//! See the `examples/` directory for runnable tours of each layer, and the
//! `cyclocode` binary for a scriptable command-line front end.

pub mod charsums;
pub mod cli;
pub mod code;
pub mod eisenstein;
pub mod gf;
pub mod rational;
pub mod tables;

pub use charsums::{gaussian_periods_closed, CyclotomicCounter, PeriodSet};
pub use code::{brute_distribution, derive_params, BruteOptions, CodeParams, WeightDistribution};
pub use eisenstein::{cubic_residue_symbol, find_pi, rho_of_alpha, EisensteinInt, NormalizedPrime};
pub use gf::{FieldElement, FieldTower, TowerOptions, DEFAULT_SIZE_CAP};
pub use rational::Rational;
pub use tables::{closed_form_distribution, compare, CompareReport, TableRow};
