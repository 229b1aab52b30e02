//! Batch command-line surface over the solvers and analyses.
//!
//! Commands: coeffs, predict, verify, radius, conjugacy, lemmas, scan.
//! Tabular data defaults to CSV, structured reports to JSON; both are
//! selectable with --format. Output is deterministic byte-for-byte for
//! identical flags: canonical rational strings, fixed row order, and no
//! partial output on errors (everything is computed before printing).
//!
//! Exit codes: 0 success/verified, 1 verification mismatch, 2 parameter or
//! hypothesis or domain error, 3 resource cap exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analysis::{
    classify_condition, conjugacy_report, explain_unclassified, limit_slope, predicted_valuation,
    radius_report, verify_profile, Condition, ConditionReport, RadiusMode,
};
use crate::eisenstein::Eisenstein;
use crate::error::{Error, Result};
use crate::lemmas::{
    block_divisibility_holds, digit_factorial_valuation_holds, digit_split_bound_holds,
};
use crate::rational::Rational;
use crate::solver::{
    invert_table, solve_a, solve_b, solve_t, BoettcherParams, CoefficientTable, SeriesKind,
};
use crate::valuation::{factorial_valuation, vp_int, Prime, Valuation};

/// Hard cap on truncation orders accepted from the command line.
pub const MAX_TERMS: usize = 1024;

#[derive(Parser)]
#[command(
    name = "boettcher",
    version,
    about = "Exact p-adic Böttcher coordinate tables, valuation profiles, and convergence radii"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a coefficient table (a, b, t, a-inv, b-inv) and print it
    Coeffs(CoeffsArgs),
    /// Print closed-form valuation predictions without solving
    Predict(PredictArgs),
    /// Solve a table and verify it against the closed-form valuations
    Verify(VerifyArgs),
    /// Exact convergence radii; --conjecture derives d = p^2, c = p^(r+2)
    Radius(RadiusArgs),
    /// Non-conjugacy evidence for the basins of z^d - c1 and z^d - c2
    Conjugacy(ConjugacyArgs),
    /// Run the bounded factorial/digit oracles and coefficient bounds
    Lemmas(LemmasArgs),
    /// Classify a sweep of c-valuations for fixed p, d
    Scan(ScanArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct MapArgs {
    /// Prime p
    #[arg(long)]
    p: u64,
    /// Degree d >= 2
    #[arg(long)]
    d: u64,
    /// Numerator of the rational factor of c
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    c_num: i64,
    /// Denominator of the rational factor of c
    #[arg(long, default_value_t = 1)]
    c_den: i64,
    /// Ramification index m: scalars live in Q[pi]/(pi^m = p)
    #[arg(long, default_value_t = 1)]
    ram: usize,
    /// c = (c_num/c_den) * pi^(c_pi_exp)
    #[arg(long, default_value_t = 0)]
    c_pi_exp: u64,
}

impl MapArgs {
    fn prime(&self) -> Result<Prime> {
        Prime::new(self.p)
    }

    fn c(&self) -> Result<Eisenstein> {
        build_scalar(self.prime()?, self.ram, self.c_num, self.c_den, self.c_pi_exp)
    }

    fn params(&self) -> Result<BoettcherParams> {
        BoettcherParams::new(self.prime()?, self.d, self.c()?)
    }

    fn c_json(&self) -> Value {
        json!({
            "num": self.c_num.to_string(),
            "den": self.c_den.to_string(),
            "pi_exp": self.c_pi_exp,
            "ram": self.ram,
        })
    }
}

#[derive(Args)]
struct ConjugacyPartnerArgs {
    /// Numerator of the rational factor of c1 (series t only)
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    c1_num: i64,
    /// Denominator of the rational factor of c1
    #[arg(long, default_value_t = 1)]
    c1_den: i64,
    /// c1 = (c1_num/c1_den) * pi^(c1_pi_exp)
    #[arg(long, default_value_t = 0)]
    c1_pi_exp: u64,
    /// Root of unity omega in {1, -1}; -1 needs odd d
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    omega: i8,
}

#[derive(Args)]
struct CoeffsArgs {
    #[command(flatten)]
    map: MapArgs,
    /// Which table to solve: a, b, t, a-inv, b-inv
    #[arg(long)]
    series: String,
    /// Number of coefficients (truncation order)
    #[arg(long, default_value_t = 64)]
    terms: usize,
    #[command(flatten)]
    partner: ConjugacyPartnerArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct PredictArgs {
    #[command(flatten)]
    map: MapArgs,
    #[arg(long, default_value_t = 64)]
    terms: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    map: MapArgs,
    /// Which table to verify: a, b, t
    #[arg(long)]
    series: String,
    #[arg(long, default_value_t = 64)]
    terms: usize,
    /// Self-test hook: multiply coefficient n by p before verifying, which
    /// must surface as exactly one mismatch and exit code 1
    #[arg(long)]
    inject_fault: Option<usize>,
    #[command(flatten)]
    partner: ConjugacyPartnerArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct RadiusArgs {
    /// Prime p
    #[arg(long)]
    p: u64,
    /// Degree d >= 2 (ignored with --conjecture)
    #[arg(long, default_value_t = 0)]
    d: u64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    c_num: i64,
    #[arg(long, default_value_t = 1)]
    c_den: i64,
    #[arg(long, default_value_t = 1)]
    ram: usize,
    #[arg(long, default_value_t = 0)]
    c_pi_exp: u64,
    /// Use the family d = p^2, c = p^(r+2) and check the closed-form radius
    #[arg(long)]
    conjecture: bool,
    /// r >= 0 for --conjecture
    #[arg(long, default_value_t = 0)]
    r: u32,
    /// Additionally print clearly-labeled decimal approximations
    #[arg(long)]
    approx: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct ConjugacyArgs {
    /// Prime p
    #[arg(long)]
    p: u64,
    /// Degree d >= 2
    #[arg(long)]
    d: u64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    c1_num: i64,
    #[arg(long, default_value_t = 1)]
    c1_den: i64,
    #[arg(long, default_value_t = 0)]
    c1_pi_exp: u64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    c2_num: i64,
    #[arg(long, default_value_t = 1)]
    c2_den: i64,
    #[arg(long, default_value_t = 0)]
    c2_pi_exp: u64,
    #[arg(long, default_value_t = 1)]
    ram: usize,
    #[arg(long, default_value_t = 48)]
    terms: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct LemmasArgs {
    /// Which oracle to run: 2.1, 2.3, 2.4, legendre, 3.5, 4.1 or all
    #[arg(long, default_value = "all")]
    lemma: String,
    /// Override the main bound of the selected oracle(s)
    #[arg(long)]
    max_n: Option<u64>,
    /// Restrict the digit-split oracle (2.3) to a single d
    #[arg(long)]
    d: Option<u64>,
    /// Map parameters for the coefficient-bound oracles (3.5, 4.1)
    #[arg(long, default_value_t = 2)]
    p: u64,
    #[arg(long, default_value_t = 4)]
    map_d: u64,
    #[arg(long, default_value_t = 8, allow_hyphen_values = true)]
    c_num: i64,
    #[arg(long, default_value_t = 1)]
    c_den: i64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct ScanArgs {
    /// Prime p
    #[arg(long)]
    p: u64,
    /// Degree d >= 2
    #[arg(long)]
    d: u64,
    /// Ramification index m; the sweep steps v_p(c) by 1/m
    #[arg(long, default_value_t = 1)]
    ram: usize,
    /// First pi-exponent j (c = pi^j, v_p(c) = j/m)
    #[arg(long, allow_hyphen_values = true)]
    from: i64,
    /// Last pi-exponent j, inclusive
    #[arg(long, allow_hyphen_values = true)]
    to: i64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

/// Entry point for the binary: parses argv, runs, prints, returns exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Coeffs(args) => cmd_coeffs(args),
        Command::Predict(args) => cmd_predict(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Radius(args) => cmd_radius(args),
        Command::Conjugacy(args) => cmd_conjugacy(args),
        Command::Lemmas(args) => cmd_lemmas(args),
        Command::Scan(args) => cmd_scan(args),
    };
    match outcome {
        Ok((output, code)) => {
            print!("{output}");
            code
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

fn build_scalar(prime: Prime, ram: usize, num: i64, den: i64, pi_exp: u64) -> Result<Eisenstein> {
    if ram == 0 {
        return Err(Error::Parameter("ramification index must be >= 1".into()));
    }
    let q = Rational::new(num, den)?;
    Ok(Eisenstein::pi_power(prime, ram, pi_exp).scale(&q))
}

fn check_terms(terms: usize) -> Result<usize> {
    if terms > MAX_TERMS {
        return Err(Error::Resource(format!(
            "terms = {terms} exceeds the supported maximum {MAX_TERMS}"
        )));
    }
    Ok(terms)
}

fn csv_cell(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') || s.contains('\r') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn scalar_string(x: &Eisenstein) -> String {
    if x.ram() == 1 {
        x.coeffs()[0].to_string()
    } else {
        scalar_json(x).to_string()
    }
}

fn scalar_json(x: &Eisenstein) -> Value {
    if x.ram() == 1 {
        json!(x.coeffs()[0].to_string())
    } else {
        json!({
            "coeffs": x.coeffs().iter().map(|q| q.to_string()).collect::<Vec<_>>(),
            "p": x.prime().get(),
            "m": x.ram(),
        })
    }
}

fn condition_json(report: &ConditionReport) -> Value {
    json!({
        "tag": report.tag.to_string(),
        "N": report.cutoff,
        "vpc": report.vpc.to_string(),
        "lower": report.lower.as_ref().map(|q| q.to_string()),
        "upper": report.upper.as_ref().map(|q| q.to_string()),
    })
}

fn classified_or_domain_error(params: &BoettcherParams) -> Result<()> {
    if params.condition.tag == Condition::Neither {
        return Err(Error::Domain(format!(
            "condition is none: {}",
            explain_unclassified(params.prime, params.degree, &params.condition)
        )));
    }
    Ok(())
}

fn solve_series(
    kind: SeriesKind,
    map: &MapArgs,
    partner: &ConjugacyPartnerArgs,
    terms: usize,
) -> Result<CoefficientTable> {
    match kind {
        SeriesKind::A => Ok(solve_a(&map.params()?, terms)),
        SeriesKind::B => Ok(solve_b(&map.params()?, terms)),
        SeriesKind::AInv => invert_table(&solve_a(&map.params()?, terms)),
        SeriesKind::BInv => invert_table(&solve_b(&map.params()?, terms)),
        SeriesKind::T => {
            let prime = map.prime()?;
            let c1 = build_scalar(prime, map.ram, partner.c1_num, partner.c1_den, partner.c1_pi_exp)?;
            let c2 = map.c()?;
            solve_t(prime, map.d, &c1, &c2, partner.omega, terms)
        }
    }
}

fn cmd_coeffs(args: CoeffsArgs) -> Result<(String, i32)> {
    let terms = check_terms(args.terms)?;
    let kind = SeriesKind::parse(&args.series)?;
    let table = solve_series(kind, &args.map, &args.partner, terms)?;
    match args.format {
        Format::Csv => {
            let mut out = String::from("n,coeff,valuation\n");
            for n in 1..=table.trunc() {
                let coeff = scalar_string(table.entry(n));
                let val = table.valuation(n).to_string();
                out.push_str(&format!("{n},{},{}\n", csv_cell(&coeff), csv_cell(&val)));
            }
            Ok((out, 0))
        }
        Format::Json => {
            let entries: Vec<Value> = (1..=table.trunc())
                .map(|n| {
                    json!({
                        "n": n,
                        "coeff": scalar_json(table.entry(n)),
                        "valuation": table.valuation(n).to_string(),
                    })
                })
                .collect();
            let mut params = json!({
                "p": args.map.p,
                "d": args.map.d,
                "c": args.map.c_json(),
                "series": kind.as_str(),
                "terms": terms,
            });
            if kind == SeriesKind::T {
                params["c1"] = json!({
                    "num": args.partner.c1_num.to_string(),
                    "den": args.partner.c1_den.to_string(),
                    "pi_exp": args.partner.c1_pi_exp,
                    "ram": args.map.ram,
                });
                params["omega"] = json!(args.partner.omega);
            }
            let doc = json!({ "params": params, "entries": entries });
            Ok((format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()), 0))
        }
    }
}

fn cmd_predict(args: PredictArgs) -> Result<(String, i32)> {
    let terms = check_terms(args.terms)?;
    let params = args.map.params()?;
    classified_or_domain_error(&params)?;
    let slope = limit_slope(&params)?;
    let predictions: Vec<(usize, Rational)> = (1..=terms)
        .map(|n| Ok((n, predicted_valuation(&params, n as u64)?)))
        .collect::<Result<_>>()?;
    match args.format {
        Format::Csv => {
            let mut out = String::from("n,predicted_v\n");
            for (n, v) in &predictions {
                out.push_str(&format!("{n},{v}\n"));
            }
            Ok((out, 0))
        }
        Format::Json => {
            let doc = json!({
                "params": { "p": args.map.p, "d": args.map.d, "c": args.map.c_json(), "terms": terms },
                "condition": condition_json(&params.condition),
                "limit_slope": slope.to_string(),
                "entries": predictions
                    .iter()
                    .map(|(n, v)| json!({ "n": n, "predicted": v.to_string() }))
                    .collect::<Vec<_>>(),
            });
            Ok((format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()), 0))
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<(String, i32)> {
    let terms = check_terms(args.terms)?;
    let kind = SeriesKind::parse(&args.series)?;
    if matches!(kind, SeriesKind::AInv | SeriesKind::BInv) {
        return Err(Error::Parameter(
            "verify compares solver output with the closed form; use series a, b, or t".into(),
        ));
    }
    let mut table = solve_series(kind, &args.map, &args.partner, terms)?;
    if let Some(n) = args.inject_fault {
        if n == 0 || n > table.trunc() {
            return Err(Error::Parameter(format!(
                "--inject-fault {n} outside 1..={}",
                table.trunc()
            )));
        }
        let mut entries = table.entries().to_vec();
        entries[n - 1] = entries[n - 1].scale(&Rational::from(args.map.p));
        table = table.with_entries(entries);
    }
    let profile = verify_profile(&table)?;
    let all_match = profile.all_match();
    let code = if all_match { 0 } else { 1 };
    match args.format {
        Format::Csv => {
            let mut out = String::from("n,actual_v,predicted_v,match\n");
            for e in &profile.entries {
                out.push_str(&format!("{},{},{},{}\n", e.n, e.actual, e.predicted, e.matches));
            }
            Ok((out, code))
        }
        Format::Json => {
            let doc = json!({
                "params": { "p": args.map.p, "d": args.map.d, "c": args.map.c_json(),
                             "series": kind.as_str(), "terms": terms },
                "condition": condition_json(&table.params.condition),
                "entries": profile
                    .entries
                    .iter()
                    .map(|e| json!({
                        "n": e.n,
                        "actual": e.actual.to_string(),
                        "predicted": e.predicted.to_string(),
                        "match": e.matches,
                    }))
                    .collect::<Vec<_>>(),
                "all_match": all_match,
                "mismatched_n": profile.mismatched_indices(),
            });
            Ok((format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()), code))
        }
    }
}

fn approx(q: &Rational) -> f64 {
    let num: f64 = q.numer().to_string().parse().unwrap_or(f64::NAN);
    let den: f64 = q.denom().to_string().parse().unwrap_or(f64::NAN);
    num / den
}

fn cmd_radius(args: RadiusArgs) -> Result<(String, i32)> {
    let prime = Prime::new(args.p)?;
    let (params, mode) = if args.conjecture {
        let d = args.p * args.p;
        let c_value = Rational::from(args.p).pow(args.r as i64 + 2)?;
        let c = Eisenstein::from_rational(prime, 1, c_value);
        (BoettcherParams::new(prime, d, c)?, RadiusMode::Conjecture { r: args.r })
    } else {
        if args.d < 2 {
            return Err(Error::Parameter("--d is required (>= 2) without --conjecture".into()));
        }
        let c = build_scalar(prime, args.ram, args.c_num, args.c_den, args.c_pi_exp)?;
        (BoettcherParams::new(prime, args.d, c)?, RadiusMode::General)
    };
    classified_or_domain_error(&params)?;
    let report = radius_report(&params, mode)?;
    let inv_radius_log = -&report.r_log;
    let mut doc = json!({
        "p": params.prime.get(),
        "d": params.degree,
        "c": scalar_json(&params.c),
        "condition": report.condition.tag.to_string(),
        "N": report.condition.cutoff,
        "vpc": report.condition.vpc.to_string(),
        "slope": report.slope.to_string(),
        "r_n_log_p": report.r_log.to_string(),
        "inv_radius_log_p": inv_radius_log.to_string(),
        "phi_disk_log_p": report.phi_disk_log.to_string(),
        "varphi_disk_log_p": report.varphi_disk_log.to_string(),
    });
    if let Some(check) = &report.conjecture {
        doc["conjecture"] = json!({
            "r": check.r,
            "expected_N": check.expected_cutoff,
            "expected_inv_radius_log_p": check.expected_inv_radius_log.to_string(),
            "consistent": check.consistent,
        });
    }
    if args.approx {
        doc["approx"] = json!({
            "slope": approx(&report.slope),
            "r_n_log_p": approx(&report.r_log),
            "inv_radius_log_p": approx(&inv_radius_log),
            "varphi_disk_log_p": approx(&report.varphi_disk_log),
        });
    }
    match args.format {
        Format::Json => Ok((format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()), 0)),
        Format::Csv => {
            let mut out = String::from("key,value\n");
            let obj = doc.as_object().unwrap();
            for (k, v) in obj {
                let rendered = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!("{},{}\n", csv_cell(k), csv_cell(&rendered)));
            }
            Ok((out, 0))
        }
    }
}

fn cmd_conjugacy(args: ConjugacyArgs) -> Result<(String, i32)> {
    let terms = check_terms(args.terms)?;
    let prime = Prime::new(args.p)?;
    let c1 = build_scalar(prime, args.ram, args.c1_num, args.c1_den, args.c1_pi_exp)?;
    let c2 = build_scalar(prime, args.ram, args.c2_num, args.c2_den, args.c2_pi_exp)?;
    let report = conjugacy_report(prime, args.d, &c1, &c2, terms)?;
    let verified = report.verified();
    let code = if verified { 0 } else { 1 };
    let doc = json!({
        "p": args.p,
        "d": args.d,
        "c1": scalar_json(&report.c1),
        "c2": scalar_json(&report.c2),
        "terms": terms,
        "separation": {
            "lhs_valuation": report.separation_lhs.to_string(),
            "rhs_valuation": report.separation_rhs.to_string(),
            "holds": true,
        },
        "candidates": report
            .candidates
            .iter()
            .map(|c| json!({
                "omega": c.omega,
                "effective_c": scalar_json(&c.effective_c),
                "condition": c.condition.tag.to_string(),
                "N": c.condition.cutoff,
                "profile": {
                    "total": c.profile.entries.len(),
                    "matches": c.profile.entries.iter().filter(|e| e.matches).count(),
                    "mismatched_n": c.profile.mismatched_indices(),
                },
                "varphi_disk_log_p": c.varphi_disk_log.to_string(),
            }))
            .collect::<Vec<_>>(),
        "verified": verified,
        "conclusion": report.conclusion(),
    });
    match args.format {
        Format::Json => Ok((format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()), code)),
        Format::Csv => {
            let mut out = String::from("key,value\n");
            out.push_str(&format!("p,{}\n", args.p));
            out.push_str(&format!("d,{}\n", args.d));
            out.push_str(&format!("separation_lhs,{}\n", report.separation_lhs));
            out.push_str(&format!("separation_rhs,{}\n", report.separation_rhs));
            for c in &report.candidates {
                let matches = c.profile.entries.iter().filter(|e| e.matches).count();
                out.push_str(&format!(
                    "omega_{}_matches,{}/{}\n",
                    c.omega,
                    matches,
                    c.profile.entries.len()
                ));
                out.push_str(&format!("omega_{}_disk_log_p,{}\n", c.omega, c.varphi_disk_log));
            }
            out.push_str(&format!("verified,{verified}\n"));
            Ok((out, code))
        }
    }
}

struct OracleOutcome {
    name: &'static str,
    cases: u64,
    failures: u64,
}

fn cmd_lemmas(args: LemmasArgs) -> Result<(String, i32)> {
    let which = args.lemma.as_str();
    let known = ["all", "2.1", "2.3", "2.4", "legendre", "3.5", "4.1"];
    if !known.contains(&which) {
        return Err(Error::Parameter(format!(
            "unknown oracle {which:?}; expected one of {known:?}"
        )));
    }
    let run = |name: &str| which == "all" || which == name;
    let mut outcomes: Vec<OracleOutcome> = Vec::new();

    if run("2.1") {
        let cap = args.max_n.unwrap_or(4);
        let (mut cases, mut failures) = (0, 0);
        for d in 1..=6u64 {
            for k in 1..=6u64 {
                for reps in 0..=cap {
                    cases += 1;
                    if !block_divisibility_holds(d, k, reps) {
                        failures += 1;
                    }
                }
            }
        }
        outcomes.push(OracleOutcome { name: "block-divisibility(2.1)", cases, failures });
    }
    if run("2.3") {
        let cap = args.max_n.unwrap_or(100);
        let ds: Vec<(u64, u64)> = match args.d {
            Some(d) => {
                let p = if crate::lemmas::is_power_of(d, 2) { 2 } else if crate::lemmas::is_power_of(d, 3) { 3 } else {
                    return Err(Error::Parameter(format!("d = {d} is not a power of 2 or 3")));
                };
                vec![(p, d)]
            }
            None => vec![(2, 2), (2, 4), (2, 8), (3, 9)],
        };
        let (mut cases, mut failures) = (0, 0);
        for (p, d) in ds {
            let p = Prime::new(p)?;
            for n in 1..=cap {
                let n0 = n % d;
                let n1 = n / d;
                for m1 in 0..=n / d {
                    let m0 = n - m1 * d;
                    cases += 1;
                    if !digit_split_bound_holds(p, d, n0, n1, m0, m1)? {
                        failures += 1;
                    }
                }
            }
        }
        outcomes.push(OracleOutcome { name: "digit-split-bound(2.3)", cases, failures });
    }
    if run("2.4") {
        let cap = args.max_n.unwrap_or(2000);
        let (mut cases, mut failures) = (0, 0);
        for (p, d, cutoff) in [(2u64, 2u64, 3usize), (2, 4, 2), (3, 9, 2)] {
            let p = Prime::new(p)?;
            for n in 1..=cap {
                cases += 1;
                if !digit_factorial_valuation_holds(p, d, cutoff, n) {
                    failures += 1;
                }
            }
        }
        outcomes.push(OracleOutcome { name: "digit-factorial-valuation(2.4)", cases, failures });
    }
    if run("legendre") {
        let cap = args.max_n.unwrap_or(500);
        let (mut cases, mut failures) = (0, 0);
        for p in [2u64, 3, 5, 7] {
            let p = Prime::new(p)?;
            let mut fact = num_bigint::BigInt::from(1);
            for n in 1..=cap {
                fact *= n;
                cases += 1;
                if Valuation::Finite(factorial_valuation(p, n)) != vp_int(p, &fact) {
                    failures += 1;
                }
            }
        }
        outcomes.push(OracleOutcome { name: "factorial-valuation(legendre)", cases, failures });
    }
    if run("3.5") || run("4.1") {
        let prime = Prime::new(args.p)?;
        let c = Eisenstein::from_rational(prime, 1, Rational::new(args.c_num, args.c_den)?);
        let params = BoettcherParams::new(prime, args.map_d, c)?;
        classified_or_domain_error(&params)?;
        if run("3.5") {
            let cap = args.max_n.unwrap_or(20).min(20) as usize;
            let (mut cases, mut failures) = (0, 0);
            for n in 1..=cap {
                cases += 1;
                if !crate::analysis::partition_bound_holds(&params, n)? {
                    failures += 1;
                }
            }
            outcomes.push(OracleOutcome { name: "partition-bound(3.5)", cases, failures });
        }
        if run("4.1") {
            let cap = args.max_n.unwrap_or(64) as usize;
            let table = solve_a(&params, cap);
            let (mut cases, mut failures) = (0, 0);
            for n in 1..=cap {
                cases += 1;
                if !crate::analysis::perturbation_bounds_hold(&table, n) {
                    failures += 1;
                }
            }
            outcomes.push(OracleOutcome { name: "perturbation-bounds(4.1)", cases, failures });
        }
    }

    let total_failures: u64 = outcomes.iter().map(|o| o.failures).sum();
    let code = if total_failures == 0 { 0 } else { 1 };
    match args.format {
        Format::Csv => {
            let mut out = String::from("oracle,cases,failures\n");
            for o in &outcomes {
                out.push_str(&format!("{},{},{}\n", o.name, o.cases, o.failures));
            }
            Ok((out, code))
        }
        Format::Json => {
            let doc = json!({
                "oracles": outcomes
                    .iter()
                    .map(|o| json!({ "oracle": o.name, "cases": o.cases, "failures": o.failures }))
                    .collect::<Vec<_>>(),
                "all_pass": total_failures == 0,
            });
            Ok((format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()), code))
        }
    }
}

fn cmd_scan(args: ScanArgs) -> Result<(String, i32)> {
    if args.from > args.to {
        return Err(Error::Parameter("--from must be <= --to".into()));
    }
    if args.ram == 0 {
        return Err(Error::Parameter("ramification index must be >= 1".into()));
    }
    let prime = Prime::new(args.p)?;
    let mut rows = Vec::new();
    for j in args.from..=args.to {
        // c with v_p(c) = j/m: pull negative exponents into a rational factor
        let m = args.ram as i64;
        let rem = j.rem_euclid(m);
        let quot = (j - rem) / m;
        let scale = Rational::from(prime.get()).pow(quot)?;
        let c = Eisenstein::pi_power(prime, args.ram, rem as u64).scale(&scale);
        let report = classify_condition(prime, args.d, &c)?;
        rows.push((j, report));
    }
    match args.format {
        Format::Csv => {
            let mut out = String::from("pi_exp,vpc,condition,N\n");
            for (j, rep) in &rows {
                out.push_str(&format!("{j},{},{},{}\n", rep.vpc, rep.tag, rep.cutoff));
            }
            Ok((out, 0))
        }
        Format::Json => {
            let doc = json!({
                "params": { "p": args.p, "d": args.d, "ram": args.ram },
                "entries": rows
                    .iter()
                    .map(|(j, rep)| json!({
                        "pi_exp": j,
                        "vpc": rep.vpc.to_string(),
                        "condition": rep.tag.to_string(),
                        "N": rep.cutoff,
                    }))
                    .collect::<Vec<_>>(),
            });
            Ok((format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()), 0))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_strings_round_trip_formats() {
        let p = Prime::new(2).unwrap();
        let q = Eisenstein::from_rational(p, 1, Rational::new(-7, 16).unwrap());
        assert_eq!(scalar_string(&q), "-7/16");
        let e = Eisenstein::pi_power(p, 2, 3); // 2*pi
        let rendered = scalar_string(&e);
        assert!(rendered.contains("\"p\":2"), "{rendered}");
        assert!(rendered.contains("\"m\":2"), "{rendered}");
    }

    #[test]
    fn csv_cells_quote_json_payloads() {
        assert_eq!(csv_cell("3/2"), "3/2");
        assert_eq!(csv_cell("a,b"), "\"a,b\"");
        assert_eq!(csv_cell("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn terms_cap_is_resource_error() {
        assert!(matches!(check_terms(MAX_TERMS + 1), Err(Error::Resource(_))));
        assert_eq!(check_terms(64).unwrap(), 64);
    }
}
