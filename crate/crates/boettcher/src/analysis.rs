//! Parameter classification, closed-form valuation predictions, convergence
//! radii, and the proposition-level verification oracles.
//!
//! Two strict inequalities classify (p, d, c):
//!
//! - condition A: N = 0, p | d, and v_p(c) < v_p(d) + v_p((d-1)!)/(d-1);
//! - condition B: N >= 1, d a power of p, and
//!   N v_p(d) + v_p((d-1)!)/(d-1) < v_p(c) < (N+1) v_p(d) + v_p((d-1)!)/(d-1).
//!
//! Everything here refuses to predict outside A/B: boundary equalities and
//! gap values classify as "none" and the predictions are simply not asserted
//! there (the Chebyshev map shows they can genuinely fail).
//!
//! All reported radii are exact rationals on the log_p scale; decimals are a
//! display concern only.

use std::fmt;

use num_bigint::BigInt;

use crate::eisenstein::Eisenstein;
use crate::error::{Error, Result};
use crate::lemmas::is_power_of;
use crate::rational::{factorial, Rational};
use crate::solver::{solve_t, CoefficientTable, SeriesKind};
use crate::valuation::{factorial_valuation, vp_u64, Prime, Valuation};

/// Enumeration budget for the partition inequality check.
pub const PARTITION_BOUND_MAX_INDEX: usize = 20;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    A,
    B,
    Neither,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::A => write!(f, "A"),
            Condition::B => write!(f, "B"),
            Condition::Neither => write!(f, "none"),
        }
    }
}

/// Outcome of classifying (p, d, c), with the exact thresholds that were
/// compared against v_p(c).
#[derive(Clone, Debug)]
pub struct ConditionReport {
    pub tag: Condition,
    /// N: 0 under condition A, >= 1 under condition B.
    pub cutoff: u32,
    pub vpc: Rational,
    /// Strict lower bound on v_p(c) for the classified window (condition B).
    pub lower: Option<Rational>,
    /// Strict upper bound on v_p(c) for the classified window (A and B).
    pub upper: Option<Rational>,
}

/// Classifies parameters against the two conditions. At most one (tag, N)
/// can hold: the B-windows for consecutive N are disjoint open intervals and
/// the A-window sits strictly below all of them.
pub fn classify_condition(prime: Prime, degree: u64, c: &Eisenstein) -> Result<ConditionReport> {
    if c.is_zero() {
        return Err(Error::Parameter("cannot classify c = 0".into()));
    }
    if degree < 2 {
        return Err(Error::Parameter(format!("degree d = {degree} must be >= 2")));
    }
    let vpc = match c.valuation() {
        Valuation::Finite(v) => v,
        Valuation::Infinite => unreachable!("c is nonzero"),
    };
    let vd = match vp_u64(prime, degree) {
        Valuation::Finite(v) => v,
        Valuation::Infinite => unreachable!("degree >= 2"),
    };
    if vd.is_zero() {
        // p does not divide d: neither condition can mention these parameters
        return Ok(ConditionReport {
            tag: Condition::Neither,
            cutoff: 0,
            vpc,
            lower: None,
            upper: None,
        });
    }
    let base = factorial_valuation(prime, degree - 1)
        / Rational::from(degree - 1);
    let a_bound = &vd + &base;
    if vpc < a_bound {
        return Ok(ConditionReport {
            tag: Condition::A,
            cutoff: 0,
            vpc,
            lower: None,
            upper: Some(a_bound),
        });
    }
    if is_power_of(degree, prime.get()) {
        // solve N v_p(d) + base < vpc < (N+1) v_p(d) + base for an integer N >= 1
        let x = (&vpc - &base) / vd.clone();
        let floor = x.floor();
        if !x.is_integer() && floor >= BigInt::from(1) {
            let n = u32::try_from(floor.clone()).map_err(|_| {
                Error::Parameter(format!("window index {floor} out of supported range"))
            })?;
            let lower = Rational::from(BigInt::from(n)) * vd.clone() + base.clone();
            let upper = Rational::from(BigInt::from(n + 1)) * vd + base;
            return Ok(ConditionReport {
                tag: Condition::B,
                cutoff: n,
                vpc,
                lower: Some(lower),
                upper: Some(upper),
            });
        }
    }
    Ok(ConditionReport {
        tag: Condition::Neither,
        cutoff: 0,
        vpc,
        lower: None,
        upper: Some(a_bound),
    })
}

/// Human-readable account of why (p, d, c) fell outside both conditions,
/// naming the violated inequality.
pub fn explain_unclassified(prime: Prime, degree: u64, report: &ConditionReport) -> String {
    let p = prime.get();
    if !degree.is_multiple_of(p) {
        return format!("p = {p} does not divide d = {degree}; both conditions require p | d");
    }
    let base = factorial_valuation(prime, degree - 1) / Rational::from(degree - 1);
    let vd = vp_u64(prime, degree).as_finite().cloned().expect("p | d here");
    let a_bound = &vd + &base;
    let vpc = &report.vpc;
    let mut msg = format!(
        "v_p(c) = {vpc} violates v_p(c) < v_p(d) + v_p((d-1)!)/(d-1) = {a_bound}"
    );
    if is_power_of(degree, p) {
        msg.push_str(&format!(
            ", and no integer N >= 1 satisfies N*{vd} + {base} < {vpc} < (N+1)*{vd} + {base} \
             (the bound is hit exactly or falls between windows)"
        ));
    } else {
        msg.push_str(&format!(
            "; d = {degree} is a multiple but not a power of p, so no N >= 1 window applies"
        ));
    }
    msg
}

fn require_classified(params: &crate::solver::BoettcherParams) -> Result<()> {
    if params.condition.tag == Condition::Neither {
        return Err(Error::Domain(format!(
            "parameters are not classified: {}",
            explain_unclassified(params.prime, params.degree, &params.condition)
        )));
    }
    Ok(())
}

/// The window correction e(n) = sum_{k=1..N} ((d-1) v_p(c/d^k) - v_p((d-1)!)) floor(n/d^k).
/// Zero when N = 0.
pub fn correction_term(params: &crate::solver::BoettcherParams, n: u64) -> Result<Rational> {
    require_classified(params)?;
    let p = params.prime;
    let d = params.degree;
    let vd = vp_u64(p, d).as_finite().cloned().expect("p | d");
    let vfact = factorial_valuation(p, d - 1);
    let d_minus_1 = Rational::from(d - 1);
    let mut acc = Rational::zero();
    let mut d_pow = 1u64;
    for k in 1..=params.condition.cutoff as u64 {
        d_pow = match d_pow.checked_mul(d) {
            Some(v) if v <= n => v,
            _ => break, // floor(n / d^k) = 0 from here on
        };
        let vc_over_dk = &params.condition.vpc - &(Rational::from(k) * vd.clone());
        let weight = &d_minus_1 * &vc_over_dk - vfact.clone();
        acc = acc + weight * Rational::from(n / d_pow);
    }
    Ok(acc)
}

/// Closed-form prediction v_p(c^n / (d^n n!)) - e(n) for the n-th coefficient
/// valuation, valid under conditions A and B. Always finite.
pub fn predicted_valuation(params: &crate::solver::BoettcherParams, n: u64) -> Result<Rational> {
    require_classified(params)?;
    if n == 0 {
        return Err(Error::Parameter("prediction needs n >= 1".into()));
    }
    let p = params.prime;
    let vd = vp_u64(p, params.degree).as_finite().cloned().expect("p | d");
    let n_rat = Rational::from(n);
    Ok(&n_rat * &params.condition.vpc - n_rat * vd - factorial_valuation(p, n)
        - correction_term(params, n)?)
}

/// The limit (= infimum) of v_p(a_n)/n: v_p(c/d^(N+1))/d^N - 1/((p-1) d^N).
/// Strictly negative for every classified parameter set.
pub fn limit_slope(params: &crate::solver::BoettcherParams) -> Result<Rational> {
    require_classified(params)?;
    let p = params.prime;
    let cutoff = params.condition.cutoff;
    let vd = vp_u64(p, params.degree).as_finite().cloned().expect("p | d");
    let d_pow: Rational = Rational::from(BigInt::from(params.degree).pow(cutoff));
    let head = (&params.condition.vpc - &(Rational::from(cutoff as u64 + 1) * vd)) / d_pow.clone();
    let tail = Rational::one() / (Rational::from(p.get() - 1) * d_pow);
    Ok(head - tail)
}

/// Exact log_p radii for the maps and their inverses, all derived from the
/// limit slope. `r_log` is log_p of r_N = (|c/d^(N+1)|_p p^(1/(p-1)))^(1/d^N).
#[derive(Clone, Debug)]
pub struct RadiusReport {
    pub condition: ConditionReport,
    pub slope: Rational,
    pub r_log: Rational,
    /// log_p radius of the open disk about 0 on which phi and phi^(-1)
    /// converge: -r_log for both.
    pub phi_disk_log: Rational,
    /// log_p of r_N^(1/d), the boundary of the disk about infinity for
    /// varphi and varphi^(-1).
    pub varphi_disk_log: Rational,
    pub conjecture: Option<ConjectureCheck>,
}

/// Cross-check data for the d = p^2, c = p^(r+2) family.
#[derive(Clone, Debug)]
pub struct ConjectureCheck {
    pub r: u32,
    pub expected_cutoff: u32,
    /// -p^(-r)/(p-1), the claimed log_p radius of phi^(-1)'s disk.
    pub expected_inv_radius_log: Rational,
    pub consistent: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RadiusMode {
    General,
    Conjecture { r: u32 },
}

pub fn radius_report(
    params: &crate::solver::BoettcherParams,
    mode: RadiusMode,
) -> Result<RadiusReport> {
    let slope = limit_slope(params)?;
    let r_log = -&slope;
    let conjecture = match mode {
        RadiusMode::General => None,
        RadiusMode::Conjecture { r } => {
            let p = params.prime.get();
            if params.degree != p * p {
                return Err(Error::Parameter(format!(
                    "radius conjecture mode needs d = p^2 = {}, got {}",
                    p * p,
                    params.degree
                )));
            }
            let expected_c = Rational::from(BigInt::from(p).pow(r + 2));
            if params.c.as_rational() != Some(&expected_c) {
                return Err(Error::Parameter(format!(
                    "radius conjecture mode needs c = p^(r+2) = {expected_c}"
                )));
            }
            let expected_cutoff = r.div_ceil(2);
            let expected_inv_radius_log = -(Rational::one()
                / (Rational::from(BigInt::from(p).pow(r)) * Rational::from(p - 1)));
            let consistent = -&r_log == expected_inv_radius_log
                && params.condition.cutoff == expected_cutoff;
            Some(ConjectureCheck { r, expected_cutoff, expected_inv_radius_log, consistent })
        }
    };
    Ok(RadiusReport {
        condition: params.condition.clone(),
        slope,
        phi_disk_log: -&r_log,
        varphi_disk_log: &r_log / &Rational::from(params.degree),
        r_log,
        conjecture,
    })
}

/// One row of a valuation profile: computed vs predicted, exact match flag.
#[derive(Clone, Debug)]
pub struct ProfileEntry {
    pub n: usize,
    pub actual: Valuation,
    pub predicted: Valuation,
    pub matches: bool,
}

/// Per-coefficient comparison of a solved table against the closed form.
#[derive(Clone, Debug)]
pub struct ValuationProfile {
    pub kind: SeriesKind,
    pub entries: Vec<ProfileEntry>,
}

impl ValuationProfile {
    pub fn all_match(&self) -> bool {
        self.entries.iter().all(|e| e.matches)
    }

    pub fn mismatched_indices(&self) -> Vec<usize> {
        self.entries.iter().filter(|e| !e.matches).map(|e| e.n).collect()
    }

    pub fn actual(&self, n: usize) -> &Valuation {
        &self.entries[n - 1].actual
    }
}

/// The comparison for a single index; pure, so callers may fan out across
/// threads over one shared table.
pub fn profile_entry(table: &CoefficientTable, n: usize) -> Result<ProfileEntry> {
    let actual = table.valuation(n);
    let predicted = Valuation::Finite(predicted_valuation(&table.params, n as u64)?);
    let matches = actual == predicted;
    Ok(ProfileEntry { n, actual, predicted, matches })
}

/// Verifies every coefficient of a solved a-, b-, or t-table against the
/// closed-form prediction (t-tables are predicted against their effective
/// constant omega^(-1) c2 - c1, which the solver stored in `params.c`).
pub fn verify_profile(table: &CoefficientTable) -> Result<ValuationProfile> {
    match table.kind {
        SeriesKind::A | SeriesKind::B | SeriesKind::T => {}
        other => {
            return Err(Error::Parameter(format!(
                "profiles compare solver output with the closed form; kind {other} has only \
                 a one-sided bound"
            )))
        }
    }
    require_classified(&table.params)?;
    let entries = (1..=table.trunc())
        .map(|n| profile_entry(table, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(ValuationProfile { kind: table.kind, entries })
}

/// Subadditivity of the actual valuations: v(m+n) <= v(m) + v(n) whenever
/// both indices and their sum lie in the profile.
pub fn is_subadditive(profile: &ValuationProfile) -> bool {
    let t = profile.entries.len();
    for m in 1..=t {
        for n in m..=t {
            if m + n > t {
                break;
            }
            let lhs = profile.actual(m + n);
            let rhs = profile.actual(m) + profile.actual(n);
            if *lhs > rhs {
                return false;
            }
        }
    }
    true
}

/// For every partition n = sum k m_k, the predicted valuations satisfy
/// v(a_n) <= sum_k v(a_k^(m_k) / m_k!). Exhaustive over partitions; refused
/// beyond `PARTITION_BOUND_MAX_INDEX`.
pub fn partition_bound_holds(params: &crate::solver::BoettcherParams, n: usize) -> Result<bool> {
    require_classified(params)?;
    if n == 0 {
        return Err(Error::Parameter("partition bound needs n >= 1".into()));
    }
    if n > PARTITION_BOUND_MAX_INDEX {
        return Err(Error::Resource(format!(
            "partition enumeration capped at n <= {PARTITION_BOUND_MAX_INDEX}, got {n}"
        )));
    }
    let predicted: Vec<Rational> = (1..=n)
        .map(|k| predicted_valuation(params, k as u64))
        .collect::<Result<_>>()?;
    let target = &predicted[n - 1];
    Ok(partition_bound_dfs(
        params.prime,
        &predicted,
        target,
        n,
        n,
        &Rational::zero(),
    ))
}

fn partition_bound_dfs(
    p: Prime,
    predicted: &[Rational],
    target: &Rational,
    remaining: usize,
    max_part: usize,
    acc: &Rational,
) -> bool {
    if remaining == 0 {
        return target <= acc;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        let mut used = 0usize;
        let mut mult = 0u64;
        let mut sum = acc.clone();
        while used + part <= remaining {
            used += part;
            mult += 1;
            // adding the mult-th copy of `part`: v(a_part) - v_p(mult)
            sum = sum + &predicted[part - 1]
                - vp_u64(p, mult).as_finite().cloned().expect("mult >= 1");
            if !partition_bound_dfs(p, predicted, target, remaining - used, part - 1, &sum) {
                return false;
            }
        }
    }
    true
}

/// The two bounds that keep the b-equation a small perturbation of the
/// a-equation, checked on actual table valuations:
/// - if d | n then v(d a_n) <= v(a_(n/d));
/// - for 1 <= i < n/d, v(d a_n) < v(a_i c^(n-id)).
pub fn perturbation_bounds_hold(table: &CoefficientTable, n: usize) -> bool {
    let params = &table.params;
    let d = params.degree as usize;
    let vd = Valuation::Finite(vp_u64(params.prime, params.degree)
            .as_finite()
            .cloned()
            .expect("d >= 2"));
    let vdan = &vd + &table.valuation(n);
    if n.is_multiple_of(d)
        && vdan > table.valuation(n / d) {
            return false;
        }
    let vpc = Valuation::Finite(params.condition.vpc.clone());
    for i in 1..n.div_ceil(d) {
        let scale = Rational::from((n - i * d) as u64);
        let rhs = &table.valuation(i)
            + &match &vpc {
                Valuation::Finite(v) => Valuation::Finite(&scale * v),
                Valuation::Infinite => Valuation::Infinite,
            };
        if vdan >= rhs {
            return false;
        }
    }
    true
}

/// Evidence report for the non-conjugacy of two basins of infinity.
#[derive(Clone, Debug)]
pub struct ConjugacyReport {
    pub prime: Prime,
    pub degree: u64,
    pub c1: Eisenstein,
    pub c2: Eisenstein,
    /// v_p(c1^(d-1) - c2^(d-1)) and v_p(c2^(d-1)): equal by hypothesis.
    pub separation_lhs: Valuation,
    pub separation_rhs: Valuation,
    pub candidates: Vec<OmegaEvidence>,
}

/// What was verified for one root of unity omega.
#[derive(Clone, Debug)]
pub struct OmegaEvidence {
    pub omega: i8,
    pub effective_c: Eisenstein,
    pub condition: ConditionReport,
    pub profile: ValuationProfile,
    /// log_p of the boundary of the candidate's convergence disk about
    /// infinity; strictly positive, so the disk is strictly inside the
    /// basin D(infinity, 1).
    pub varphi_disk_log: Rational,
}

impl ConjugacyReport {
    /// True when every candidate's valuations matched the closed form.
    pub fn verified(&self) -> bool {
        self.candidates.iter().all(|c| c.profile.all_match())
    }

    pub fn conclusion(&self) -> String {
        if self.verified() {
            format!(
                "no analytic conjugacy between the basins of z^{d} - ({c1}) and z^{d} - ({c2}): \
                 every admissible candidate converges only on a disk strictly inside the basin \
                 of infinity of the first map",
                d = self.degree,
                c1 = self.c1,
                c2 = self.c2
            )
        } else {
            "valuation profile mismatch: the computed tables contradict the predicted \
             valuations, no conclusion drawn"
                .to_string()
        }
    }
}

/// Runs the full non-conjugacy pipeline: hypothesis checks, candidate solves
/// for each admissible omega, profile verification, and disk bounds.
pub fn conjugacy_report(
    prime: Prime,
    degree: u64,
    c1: &Eisenstein,
    c2: &Eisenstein,
    trunc: usize,
) -> Result<ConjugacyReport> {
    if (c1.prime(), c1.ram()) != (c2.prime(), c2.ram()) {
        return Err(Error::Parameter("c1 and c2 must share field parameters".into()));
    }
    if c2.is_zero() {
        return Err(Error::Parameter("c2 must be nonzero".into()));
    }
    if c1.valuation() < Valuation::finite(0i64) {
        return Err(Error::Hypothesis(format!(
            "v_p(c1) = {} must be >= 0",
            c1.valuation()
        )));
    }
    // classification of c2 must hold; the effective constants share its
    // valuation once the separation hypothesis is confirmed
    let c2_report = classify_condition(prime, degree, c2)?;
    if c2_report.tag == Condition::Neither {
        return Err(Error::Domain(format!(
            "c2 is not classified: {}",
            explain_unclassified(prime, degree, &c2_report)
        )));
    }
    let lhs = (&c1.pow(degree - 1) - &c2.pow(degree - 1)).valuation();
    let rhs = c2.pow(degree - 1).valuation();
    if lhs != rhs {
        return Err(Error::Hypothesis(format!(
            "separation fails: v_p(c1^(d-1) - c2^(d-1)) = {lhs} but v_p(c2^(d-1)) = {rhs}"
        )));
    }
    let mut candidates = Vec::new();
    let mut omegas = vec![1i8];
    if degree % 2 == 1 {
        omegas.push(-1);
    }
    for omega in omegas {
        let table = solve_t(prime, degree, c1, c2, omega, trunc)?;
        let profile = verify_profile(&table)?;
        let radius = radius_report(&table.params, RadiusMode::General)?;
        candidates.push(OmegaEvidence {
            omega,
            effective_c: table.params.c.clone(),
            condition: table.params.condition.clone(),
            profile,
            varphi_disk_log: radius.varphi_disk_log,
        });
    }
    Ok(ConjugacyReport {
        prime,
        degree,
        c1: c1.clone(),
        c2: c2.clone(),
        separation_lhs: lhs,
        separation_rhs: rhs,
        candidates,
    })
}

/// Catalan number (2n-2)!/((n-1)! n!), the magnitude of the Chebyshev
/// reversion coefficients.
pub fn catalan_number(n: u64) -> Rational {
    assert!(n >= 1);
    Rational::new(factorial(2 * n - 2), factorial(n - 1) * factorial(n)).expect("positive")
}
