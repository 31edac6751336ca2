//! Command-line surface: parameter dumps, period and Jacobi-sum
//! diagnostics, closed-form tables, brute-force enumeration, and the
//! consistency check between the two.
//!
//! Exit codes: 0 success (and agreement for `check`), 1 validation
//! failure, 2 consistency mismatch, 3 budget refusal.

use std::fmt;
use std::path::PathBuf;

use crate::charsums::{self, PeriodSet};
use crate::code::{self, BruteOptions, CodeError, CodeParams, WeightDistribution};
use crate::gf::{FieldTower, TowerOptions, DEFAULT_SIZE_CAP};
use crate::tables::{self, TablesError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Poly,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "poly" => Ok(OutputFormat::Poly),
            other => Err(format!(
                "unknown format '{}', expected json|csv|poly",
                other
            )),
        }
    }
}

/// Everything one invocation needs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub p: u64,
    pub s: u32,
    pub m: u32,
    pub h: u64,
    pub modulus: Option<Vec<u64>>,
    pub generator: Option<Vec<u64>>,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub workers: usize,
    pub budget: u128,
    pub force: bool,
}

impl RunConfig {
    pub fn new(p: u64, s: u32, m: u32, h: u64) -> Self {
        RunConfig {
            p,
            s,
            m,
            h,
            modulus: None,
            generator: None,
            format: OutputFormat::Poly,
            out: None,
            workers: std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1),
            budget: 1_000_000_000,
            force: false,
        }
    }

    fn brute_options(&self) -> BruteOptions {
        BruteOptions {
            workers: self.workers.max(1),
            budget: self.budget,
            force: self.force,
        }
    }
}

/// CLI failure, carrying the exit code policy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Invalid parameters or inputs (exit 1).
    Validation(String),
    /// The two computation routes disagree (exit 2).
    Mismatch(String),
    /// The enumeration budget would be exceeded (exit 3).
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Mismatch(_) => 2,
            CliError::Budget(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Mismatch(m) | CliError::Budget(m) => m,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message())
    }
}

impl std::error::Error for CliError {}

fn classify_code_error(e: CodeError) -> CliError {
    match e {
        CodeError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
        other => CliError::Validation(other.to_string()),
    }
}

fn classify_tables_error(e: TablesError) -> CliError {
    match e {
        TablesError::Code(c) => classify_code_error(c),
        other => CliError::Validation(other.to_string()),
    }
}

fn setup(cfg: &RunConfig) -> Result<(FieldTower, CodeParams), CliError> {
    let tower = FieldTower::build_with(
        cfg.p,
        cfg.s,
        cfg.m,
        TowerOptions {
            modulus: cfg.modulus.clone(),
            generator: cfg.generator.clone(),
            cap: DEFAULT_SIZE_CAP,
        },
    )
    .map_err(|e| CliError::Validation(e.to_string()))?;
    let params =
        code::derive_params(cfg.p, cfg.s, cfg.m, cfg.h, &tower).map_err(classify_code_error)?;
    Ok((tower, params))
}

fn params_json(tower: &FieldTower, params: &CodeParams) -> String {
    format!(
        "{{\"p\":{},\"s\":{},\"m\":{},\"h\":{},\"q\":{},\"r\":{},\"n\":{},\"N\":{},\"e\":{},\
         \"g_exp\":{},\"beta_exp\":{},\"table\":\"{}\",\"modulus\":\"{}\"}}",
        params.p,
        params.s,
        params.m,
        params.h,
        params.q,
        params.r,
        params.n,
        params.big_n,
        params.e,
        tower.exp_of(params.g).unwrap(),
        tower.exp_of(params.beta).unwrap(),
        params.table_case(),
        tower.modulus_string(),
    )
}

/// `params`: machine-readable dump of the validated parameter system.
pub fn cmd_params(cfg: &RunConfig) -> Result<String, CliError> {
    let (tower, params) = setup(cfg)?;
    Ok(params_json(&tower, &params))
}

/// `periods`: exact periods, pi, rho(alpha), and both Jacobi-sum routes,
/// with every direct-vs-closed disagreement flagged as a mismatch.
pub fn cmd_periods(cfg: &RunConfig) -> Result<String, CliError> {
    let (tower, params) = setup(cfg)?;
    let (periods, np) =
        charsums::periods_for(&params, &tower).map_err(|e| CliError::Validation(e.to_string()))?;

    let mut lines = Vec::new();
    for (label, class, closed) in [
        ("eta_1", 0u64, periods.eta_1),
        ("eta_alpha", 1, periods.eta_alpha),
        ("eta_alpha2", 2, periods.eta_alpha2),
    ] {
        let direct = charsums::gaussian_period_direct(&tower, tower.from_exp(class))
            .map_err(|e| CliError::Validation(e.to_string()))?;
        if direct != closed {
            return Err(CliError::Mismatch(format!(
                "{}: direct value {} but closed form {}",
                label, direct, closed
            )));
        }
        lines.push(format!("{} = {}", label, closed));
    }

    match &np {
        Some(np) => {
            lines.push(format!("pi = {}", np.pi));
            lines.push(format!(
                "rho_alpha = {}",
                if periods.rho_alpha == 1 { "w" } else { "w^2" }
            ));
        }
        None => lines.push(format!("pi = sqrt(-{})", params.p)),
    }
    lines.push(format!("pi_ms = {}", periods.pi_ms));

    let direct = charsums::jacobi_direct(&tower, periods.rho_alpha)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    let closed = charsums::jacobi_closed(&params, np.as_ref())
        .map_err(|e| CliError::Validation(e.to_string()))?;
    if direct != closed {
        return Err(CliError::Mismatch(format!(
            "jacobi sum: direct value {} but closed form {}",
            direct, closed
        )));
    }
    if direct.norm() != params.r as i128 {
        return Err(CliError::Mismatch(format!(
            "jacobi sum norm {} differs from r = {}",
            direct.norm(),
            params.r
        )));
    }
    lines.push(format!("jacobi_direct = {}", direct));
    lines.push(format!("jacobi_closed = {}", closed));
    Ok(lines.join("\n"))
}

fn render_distribution(
    cfg: &RunConfig,
    tower: &FieldTower,
    params: &CodeParams,
    dist: &WeightDistribution,
) -> String {
    match cfg.format {
        OutputFormat::Poly => dist.enumerator(),
        OutputFormat::Csv => {
            let mut out = String::from("weight,frequency");
            for (w, f) in dist.entries() {
                out.push_str(&format!("\n{},{}", w, f));
            }
            out
        }
        OutputFormat::Json => {
            let rows: Vec<String> = dist
                .entries()
                .map(|(w, f)| format!("{{\"weight\":{},\"frequency\":{}}}", w, f))
                .collect();
            format!(
                "{{\"params\":{},\"distribution\":[{}]}}",
                params_json(tower, params),
                rows.join(",")
            )
        }
    }
}

fn closed_distribution(
    tower: &FieldTower,
    params: &CodeParams,
) -> Result<(PeriodSet, WeightDistribution), CliError> {
    let (periods, _) =
        charsums::periods_for(params, tower).map_err(|e| CliError::Validation(e.to_string()))?;
    let dist = tables::closed_form_distribution(params, &periods).map_err(classify_tables_error)?;
    Ok((periods, dist))
}

/// `table`: the closed-form weight distribution.
pub fn cmd_table(cfg: &RunConfig) -> Result<String, CliError> {
    let (tower, params) = setup(cfg)?;
    let (_, dist) = closed_distribution(&tower, &params)?;
    Ok(render_distribution(cfg, &tower, &params, &dist))
}

/// `brute`: the exhaustively enumerated weight distribution.
pub fn cmd_brute(cfg: &RunConfig) -> Result<String, CliError> {
    let (tower, params) = setup(cfg)?;
    let dist = code::brute_distribution(&params, &tower, &cfg.brute_options())
        .map_err(classify_code_error)?;
    Ok(render_distribution(cfg, &tower, &params, &dist))
}

/// `check`: run both routes and fail (exit 2) on the first differing weight.
pub fn cmd_check(cfg: &RunConfig) -> Result<String, CliError> {
    let (tower, params) = setup(cfg)?;
    let report =
        tables::compare(&params, &tower, &cfg.brute_options()).map_err(classify_tables_error)?;
    if let Some((w, brute_f, closed_f)) = report.first_mismatch {
        return Err(CliError::Mismatch(format!(
            "distributions differ at weight {}: brute {}, closed {}",
            w, brute_f, closed_f
        )));
    }
    Ok(format!(
        "closed form and brute force agree on all {} weights\n{}",
        report.closed.len(),
        report.closed.enumerator()
    ))
}

/// Parse a comma-separated coefficient list (constant term first).
pub fn parse_coeff_list(s: &str) -> Result<Vec<u64>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Validation(format!("bad coefficient '{}'", t)))
        })
        .collect()
}

pub const USAGE: &str = "\
usage: cyclocode <command> --p P --s S --m M --h H [options]

commands:
  params    validate the parameter set and dump q, r, n, N, g, beta
  periods   Gaussian periods, pi, rho(alpha), Jacobi sums (direct + closed)
  table     closed-form weight distribution
  brute     exhaustive weight distribution over all r^2 codewords
  check     run both routes and compare (exit 0 iff equal)

options:
  --p P              characteristic (prime)
  --s S              q = p^s
  --m M              r = q^m
  --h H              length divisor: n = h(r-1)/(q-1)
  --modulus LIST     modulus coefficients, constant first (default:
                     smallest primitive polynomial)
  --generator LIST   generator coefficients in the modulus root
  --format FMT       json | csv | poly (default poly)
  --out PATH         write the result to PATH instead of stdout
  --workers N        enumeration threads (default: available parallelism)
  --budget N         symbol-operation budget for brute force (default 1e9)
  --force            enumerate even when the budget would be exceeded

exit codes: 0 ok/equal, 1 validation failure, 2 mismatch, 3 budget refusal";

/// Parse argv (without the program name) into a command and its config.
pub fn parse_args(args: &[String]) -> Result<(String, RunConfig), CliError> {
    if args.is_empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help" {
        return Err(CliError::Validation(USAGE.to_string()));
    }
    let command = args[0].clone();
    if !["params", "periods", "table", "brute", "check"].contains(&command.as_str()) {
        return Err(CliError::Validation(format!(
            "unknown command '{}'\n{}",
            command, USAGE
        )));
    }

    let mut p = None;
    let mut s = None;
    let mut m = None;
    let mut h = None;
    let mut cfg_mod = None;
    let mut cfg_gen = None;
    let mut format = OutputFormat::Poly;
    let mut out = None;
    let mut workers = None;
    let mut budget = None;
    let mut force = false;

    let mut iter = args[1..].iter().peekable();
    while let Some(arg) = iter.next() {
        let (flag, inline) = match arg.split_once('=') {
            Some((f, v)) => (f.to_string(), Some(v.to_string())),
            None => (arg.clone(), None),
        };
        let mut value = |flag: &str| -> Result<String, CliError> {
            match &inline {
                Some(v) => Ok(v.clone()),
                None => iter
                    .next()
                    .cloned()
                    .ok_or_else(|| CliError::Validation(format!("{} needs a value", flag))),
            }
        };
        match flag.as_str() {
            "--p" => p = Some(parse_num(&value("--p")?, "--p")?),
            "--s" => s = Some(parse_num(&value("--s")?, "--s")? as u32),
            "--m" => m = Some(parse_num(&value("--m")?, "--m")? as u32),
            "--h" => h = Some(parse_num(&value("--h")?, "--h")?),
            "--modulus" => cfg_mod = Some(parse_coeff_list(&value("--modulus")?)?),
            "--generator" => cfg_gen = Some(parse_coeff_list(&value("--generator")?)?),
            "--format" => format = value("--format")?.parse().map_err(CliError::Validation)?,
            "--out" => out = Some(PathBuf::from(value("--out")?)),
            "--workers" => workers = Some(parse_num(&value("--workers")?, "--workers")? as usize),
            "--budget" => {
                budget = Some(value("--budget")?.parse::<u128>().map_err(|_| {
                    CliError::Validation("--budget needs a nonnegative integer".to_string())
                })?)
            }
            "--force" => force = true,
            other => {
                return Err(CliError::Validation(format!("unknown flag '{}'", other)));
            }
        }
    }

    let require = |name: &str, v: Option<u64>| {
        v.ok_or_else(|| CliError::Validation(format!("missing required flag {}", name)))
    };
    let mut cfg = RunConfig::new(
        require("--p", p)?,
        require("--s", s.map(u64::from))? as u32,
        require("--m", m.map(u64::from))? as u32,
        require("--h", h)?,
    );
    cfg.modulus = cfg_mod;
    cfg.generator = cfg_gen;
    cfg.format = format;
    cfg.out = out;
    if let Some(w) = workers {
        if w == 0 {
            return Err(CliError::Validation(
                "--workers must be at least 1".to_string(),
            ));
        }
        cfg.workers = w;
    }
    if let Some(b) = budget {
        cfg.budget = b;
    }
    cfg.force = force;
    Ok((command, cfg))
}

fn parse_num(text: &str, flag: &str) -> Result<u64, CliError> {
    text.parse::<u64>().map_err(|_| {
        CliError::Validation(format!("{} needs a positive integer, got '{}'", flag, text))
    })
}

/// Dispatch a parsed command.
pub fn run_command(command: &str, cfg: &RunConfig) -> Result<String, CliError> {
    match command {
        "params" => cmd_params(cfg),
        "periods" => cmd_periods(cfg),
        "table" => cmd_table(cfg),
        "brute" => cmd_brute(cfg),
        "check" => cmd_check(cfg),
        other => Err(CliError::Validation(format!("unknown command '{}'", other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1_cfg() -> RunConfig {
        let mut cfg = RunConfig::new(2, 2, 3, 1);
        cfg.modulus = Some(vec![1, 1, 0, 1, 1, 0, 1]);
        cfg
    }

    fn example3_cfg() -> RunConfig {
        let mut cfg = RunConfig::new(7, 1, 3, 1);
        cfg.modulus = Some(vec![4, 0, 6, 1]);
        cfg
    }

    #[test]
    fn params_dump() {
        let got = cmd_params(&example1_cfg()).unwrap();
        assert!(got.contains("\"q\":4"));
        assert!(got.contains("\"r\":64"));
        assert!(got.contains("\"n\":21"));
        assert!(got.contains("\"N\":3"));
        assert!(got.contains("\"table\":\"1\""));

        let mut cfg = example3_cfg();
        cfg.h = 3;
        let got = cmd_params(&cfg).unwrap();
        assert!(got.contains("\"n\":171"));
        assert!(got.contains("\"table\":\"4\""));
    }

    #[test]
    fn params_rejects_bad_tuples() {
        let cfg = RunConfig::new(5, 1, 3, 1);
        let err = cmd_params(&cfg).unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert!(err.message().contains("e does not divide gcd(q-1, hm)"));
    }

    #[test]
    fn periods_report() {
        let got = cmd_periods(&example3_cfg()).unwrap();
        assert!(got.contains("eta_1 = 2"));
        assert!(got.contains("eta_alpha = -12"));
        assert!(got.contains("eta_alpha2 = 9"));
        assert!(got.contains("pi = 2+3w"));
        assert!(got.contains("rho_alpha = w^2"));
        assert!(got.contains("jacobi_direct = -19-18w"));
        assert!(got.contains("jacobi_closed = -19-18w"));

        let got = cmd_periods(&example1_cfg()).unwrap();
        assert!(got.contains("eta_1 = 5"));
        assert!(got.contains("eta_alpha = -3"));
        assert!(got.contains("jacobi_direct = 8"));

        let mut cfg = RunConfig::new(13, 1, 3, 1);
        let got = cmd_periods(&cfg).unwrap();
        assert!(got.contains("pi = -1+3w"));
        cfg.h = 13;
        assert_eq!(cmd_periods(&cfg).unwrap_err().exit_code(), 1);
    }

    #[test]
    fn table_and_brute_agree_on_example1() {
        let cfg = example1_cfg();
        let table = cmd_table(&cfg).unwrap();
        let brute = cmd_brute(&cfg).unwrap();
        assert_eq!(table, "1 + 63x^8 + 294x^12 + 756x^14 + 1890x^16 + 1092x^18");
        assert_eq!(table, brute);
        let report = cmd_check(&cfg).unwrap();
        assert!(report.contains("agree"));
    }

    #[test]
    fn renderings_are_mutually_consistent() {
        let mut cfg = example1_cfg();
        cfg.format = OutputFormat::Csv;
        let csv = cmd_table(&cfg).unwrap();
        cfg.format = OutputFormat::Json;
        let json = cmd_table(&cfg).unwrap();
        cfg.format = OutputFormat::Poly;
        let poly = cmd_table(&cfg).unwrap();

        // parse the CSV back
        let csv_pairs: Vec<(u64, u64)> = csv
            .lines()
            .skip(1)
            .map(|line| {
                let (w, f) = line.split_once(',').unwrap();
                (w.parse().unwrap(), f.parse().unwrap())
            })
            .collect();
        // parse the JSON distribution array back
        let json_pairs: Vec<(u64, u64)> = json
            .split("\"distribution\":[")
            .nth(1)
            .unwrap()
            .trim_end_matches("]}")
            .split("},")
            .map(|chunk| {
                let get = |key: &str| {
                    chunk
                        .split(&format!("\"{}\":", key))
                        .nth(1)
                        .unwrap()
                        .chars()
                        .take_while(|c| c.is_ascii_digit())
                        .collect::<String>()
                        .parse::<u64>()
                        .unwrap()
                };
                (get("weight"), get("frequency"))
            })
            .collect();
        assert_eq!(csv_pairs, json_pairs);
        // rebuild the polynomial from CSV
        let rebuilt = csv_pairs
            .iter()
            .map(|(w, f)| {
                if *w == 0 {
                    f.to_string()
                } else {
                    format!("{}x^{}", f, w)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ");
        assert_eq!(rebuilt, poly);
    }

    #[test]
    fn deterministic_across_worker_counts() {
        let mut cfg = example1_cfg();
        cfg.workers = 1;
        let one = cmd_brute(&cfg).unwrap();
        cfg.workers = 5;
        let five = cmd_brute(&cfg).unwrap();
        assert_eq!(one, five);
    }

    #[test]
    fn budget_refusal_names_the_cost() {
        let mut cfg = example1_cfg();
        cfg.budget = 100;
        let err = cmd_brute(&cfg).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.message().contains("86016")); // 64^2 * 21
        cfg.force = true;
        assert!(cmd_brute(&cfg).is_ok());
    }

    #[test]
    fn arg_parsing() {
        let args: Vec<String> = [
            "table",
            "--p",
            "2",
            "--s",
            "2",
            "--m",
            "3",
            "--h",
            "1",
            "--modulus",
            "1,1,0,1,1,0,1",
            "--format=json",
            "--workers",
            "2",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        let (cmd, cfg) = parse_args(&args).unwrap();
        assert_eq!(cmd, "table");
        assert_eq!((cfg.p, cfg.s, cfg.m, cfg.h), (2, 2, 3, 1));
        assert_eq!(cfg.modulus, Some(vec![1, 1, 0, 1, 1, 0, 1]));
        assert_eq!(cfg.format, OutputFormat::Json);
        assert_eq!(cfg.workers, 2);

        let bad: Vec<String> = ["table", "--p", "2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert!(parse_args(&bad).is_err());
        let unknown: Vec<String> = ["fly", "--p", "2"].iter().map(|s| s.to_string()).collect();
        assert!(parse_args(&unknown).is_err());
    }
}
