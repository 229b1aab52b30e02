//! p-adic valuations on integers and rationals, digit sums, the factorial
//! valuation formula, and canonical base-d digit partitions.
//!
//! Valuations are exact rationals extended with a distinguished +infinity for
//! the input 0, so tables can represent vanishing coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A prime validated by trial division (up to 10^6, enough at desk scale).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Prime> {
        if p < 2 {
            return Err(Error::Parameter(format!("{p} is not prime")));
        }
        let mut f = 2u64;
        while f <= 1_000_000 && f * f <= p {
            if p.is_multiple_of(f) {
                return Err(Error::Parameter(format!("{p} is not prime ({f} divides it)")));
            }
            f += 1;
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Value of a p-adic valuation: an exact rational, or +infinity for input 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Valuation {
    Finite(Rational),
    Infinite,
}

impl Valuation {
    pub fn finite(q: impl Into<Rational>) -> Self {
        Valuation::Finite(q.into())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    /// The finite value, or None for +infinity.
    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            Valuation::Finite(q) => Some(q),
            Valuation::Infinite => None,
        }
    }

    pub fn min(self, other: Valuation) -> Valuation {
        if self <= other {
            self
        } else {
            other
        }
    }
}

impl Add for &Valuation {
    type Output = Valuation;
    fn add(self, rhs: &Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        &self + &rhs
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order with +infinity greatest.
impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(q) => write!(f, "{q}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Largest e with p^e | n; +infinity for n = 0.
pub fn vp_int(p: Prime, n: &BigInt) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinite;
    }
    let p_big = BigInt::from(p.get());
    let mut m = n.abs();
    let mut v = 0i64;
    loop {
        let (q, r) = m.div_rem(&p_big);
        if !r.is_zero() {
            break;
        }
        v += 1;
        m = q;
    }
    Valuation::finite(Rational::from(v))
}

/// Valuation of a u64, convenience wrapper over `vp_int`.
pub fn vp_u64(p: Prime, n: u64) -> Valuation {
    vp_int(p, &BigInt::from(n))
}

/// v_p(num) - v_p(den); +infinity for the zero rational.
pub fn vp_rational(p: Prime, q: &Rational) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinite;
    }
    match (vp_int(p, q.numer()), vp_int(p, q.denom())) {
        (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a - b),
        _ => unreachable!("nonzero parts"),
    }
}

/// Sum of the base-`base` digits of n.
pub fn digit_sum(base: u64, n: u64) -> u64 {
    assert!(base >= 2, "digit_sum requires base >= 2");
    let mut m = n;
    let mut s = 0;
    while m > 0 {
        s += m % base;
        m /= base;
    }
    s
}

/// v_p(n!) = (n - s_p(n)) / (p - 1), exact. Always finite and an integer.
pub fn factorial_valuation(p: Prime, n: u64) -> Rational {
    let s = digit_sum(p.get(), n);
    let num = BigInt::from(n) - BigInt::from(s);
    Rational::new(num, BigInt::from(p.get() - 1)).expect("p >= 2")
}

/// Base-d digits of n truncated at level `cutoff`, with an unbounded top digit.
///
/// digits[k] < d for k < cutoff, digits[cutoff] >= 0, and
/// n = sum_k digits[k] * d^k. The decomposition is unique given (n, d, cutoff).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalPartition {
    pub n: u64,
    pub base: u64,
    pub digits: Vec<u64>,
}

impl CanonicalPartition {
    /// Reassembles sum_k digits[k] * d^k.
    pub fn value(&self) -> u64 {
        let mut acc = 0u64;
        let mut pow = 1u64;
        for &dig in &self.digits {
            acc += dig * pow;
            pow = pow.saturating_mul(self.base);
        }
        acc
    }
}

/// The unique digit decomposition of n >= 1 in base d >= 2 with cutoff N.
pub fn canonical_decompose(n: u64, base: u64, cutoff: usize) -> CanonicalPartition {
    assert!(n >= 1, "canonical_decompose requires n >= 1");
    assert!(base >= 2, "canonical_decompose requires base >= 2");
    let mut digits = Vec::with_capacity(cutoff + 1);
    let mut m = n;
    for _ in 0..cutoff {
        digits.push(m % base);
        m /= base;
    }
    digits.push(m);
    CanonicalPartition { n, base, digits }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::factorial;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn primality_trial_division() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(97).is_ok());
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(0).is_err());
        assert!(Prime::new(91).is_err()); // 7 * 13
    }

    #[test]
    fn vp_int_examples() {
        assert_eq!(vp_u64(p(2), 12), Valuation::finite(2i64));
        assert_eq!(vp_u64(p(3), 1), Valuation::finite(0i64));
        assert_eq!(vp_u64(p(2), 0), Valuation::Infinite);
    }

    #[test]
    fn vp_rational_examples() {
        assert_eq!(
            vp_rational(p(2), &Rational::new(7, 16).unwrap()),
            Valuation::finite(-4i64)
        );
        assert_eq!(
            vp_rational(p(5), &Rational::new(10, 3).unwrap()),
            Valuation::finite(1i64)
        );
        assert_eq!(vp_rational(p(2), &Rational::one()), Valuation::finite(0i64));
        assert_eq!(vp_rational(p(2), &Rational::zero()), Valuation::Infinite);
    }

    #[test]
    fn digit_sum_examples() {
        assert_eq!(digit_sum(2, 10), 2); // 1010
        assert_eq!(digit_sum(3, 10), 2); // 101
        assert_eq!(digit_sum(2, 1), 1);
        assert_eq!(digit_sum(7, 0), 0);
    }

    #[test]
    fn factorial_valuation_examples() {
        assert_eq!(factorial_valuation(p(2), 10), Rational::from(8i64));
        assert_eq!(factorial_valuation(p(3), 10), Rational::from(4i64));
        assert_eq!(factorial_valuation(p(5), 0), Rational::zero());
    }

    #[test]
    fn factorial_valuation_matches_direct_factorization() {
        for pr in [2u64, 3, 5, 7] {
            let pr = p(pr);
            let mut fact = BigInt::from(1);
            for n in 0..=200u64 {
                if n > 0 {
                    fact *= n;
                }
                assert_eq!(
                    Valuation::Finite(factorial_valuation(pr, n)),
                    vp_int(pr, &fact),
                    "n = {n}"
                );
            }
        }
        // spot-check against the explicit product formula
        assert_eq!(vp_int(p(2), &factorial(10)), Valuation::finite(8i64));
    }

    #[test]
    fn canonical_decompose_examples() {
        assert_eq!(canonical_decompose(11, 2, 2).digits, vec![1, 1, 2]);
        assert_eq!(canonical_decompose(16, 4, 1).digits, vec![0, 4]);
        assert_eq!(canonical_decompose(5, 4, 1).digits, vec![1, 1]);
    }

    #[test]
    fn canonical_decompose_round_trips() {
        for n in 1..500u64 {
            for base in [2u64, 3, 4, 9] {
                for cutoff in 0..4usize {
                    let part = canonical_decompose(n, base, cutoff);
                    assert_eq!(part.value(), n);
                    for k in 0..cutoff {
                        assert!(part.digits[k] < base);
                    }
                }
            }
        }
    }

    #[test]
    fn ultrametric_ordering() {
        let a = Valuation::finite(1i64);
        let b = Valuation::Infinite;
        assert!(a < b);
        assert_eq!(&a + &b, Valuation::Infinite);
        assert_eq!(a.clone().min(b), a);
    }
}
