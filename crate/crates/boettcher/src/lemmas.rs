//! Exact integer oracles for the factorial divisibility and digit-regrouping
//! bounds that drive the valuation analysis. Each returns a boolean computed
//! by exact arithmetic; a `false` signals a genuine violation and is expected
//! never to occur.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};
use crate::valuation::{canonical_decompose, factorial_valuation, Prime};

/// True iff d = p^s for some s >= 0 (so 1 counts as a power).
pub fn is_power_of(mut d: u64, p: u64) -> bool {
    if d == 0 {
        return false;
    }
    while d.is_multiple_of(p) {
        d /= p;
    }
    d == 1
}

/// Does (d-1)!^(k*reps) * (d*k!)^reps * reps! divide (d*k*reps)!?
///
/// Checked by exact big-integer division; d, k >= 1 and reps >= 0.
pub fn block_divisibility_holds(d: u64, k: u64, reps: u64) -> bool {
    assert!(d >= 1 && k >= 1, "block_divisibility_holds requires d, k >= 1");
    let mut divisor = factorial(d - 1).pow((k * reps) as u32);
    let dk_fact: BigInt = BigInt::from(d) * factorial(k);
    divisor *= dk_fact.pow(reps as u32);
    divisor *= factorial(reps);
    factorial(d * k * reps).mod_floor(&divisor).is_zero()
}

/// For d a power of p and n0 + n1*d = m0 + m1*d with 0 <= n0 < d:
/// is v_p(m0! m1! / (n0! n1!)) <= (n1 - m1) * v_p(d!) ?
pub fn digit_split_bound_holds(
    p: Prime,
    d: u64,
    n0: u64,
    n1: u64,
    m0: u64,
    m1: u64,
) -> Result<bool> {
    if !is_power_of(d, p.get()) || d < 2 {
        return Err(Error::Parameter(format!(
            "d = {d} must be a power of p = {p} with d >= 2"
        )));
    }
    if n0 >= d {
        return Err(Error::Parameter(format!("n0 = {n0} must satisfy 0 <= n0 < d = {d}")));
    }
    if n0 + n1 * d != m0 + m1 * d {
        return Err(Error::Parameter(
            "decompositions disagree: n0 + n1*d != m0 + m1*d".into(),
        ));
    }
    let lhs = factorial_valuation(p, m0) + factorial_valuation(p, m1)
        - factorial_valuation(p, n0)
        - factorial_valuation(p, n1);
    let rhs = (Rational::from(n1 as i64) - Rational::from(m1 as i64)) * factorial_valuation(p, d);
    Ok(lhs <= rhs)
}

/// For d a power of p: does v_p(n!) split along the canonical digit partition,
/// v_p(n!) = sum_k v_p((d^k)!^(digit_k) * digit_k!) ?
pub fn digit_factorial_valuation_holds(p: Prime, d: u64, cutoff: usize, n: u64) -> bool {
    assert!(
        is_power_of(d, p.get()) && d >= 2,
        "digit split requires d a power of p with d >= 2"
    );
    assert!(n >= 1);
    let part = canonical_decompose(n, d, cutoff);
    let mut rhs = Rational::zero();
    let mut d_pow = 1u64;
    for &dig in &part.digits {
        rhs = rhs
            + Rational::from(dig) * factorial_valuation(p, d_pow)
            + factorial_valuation(p, dig);
        d_pow = d_pow.saturating_mul(d);
    }
    factorial_valuation(p, n) == rhs
}
