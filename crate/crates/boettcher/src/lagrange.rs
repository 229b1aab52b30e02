//! Series reversion for normalized tails z * (1 + sum_n t_n z^(-nd)), and
//! composition of two such tails.
//!
//! `lagrange_invert` evaluates the reversion coefficients as an explicit sum
//! over partitions,
//!
//! ```text
//! beta_n = - sum_{sum k*m_k = n} prod_{j=2}^{M} (nd - j)
//!          * prod_k alpha_k^(m_k) / m_k!,        M = sum_k m_k
//! ```
//!
//! which is exponential in n but exact, and deliberately shares no code with
//! the composition path that checks it. Budgeted for truncation orders up to
//! around 64.
//!
//! To keep the enumeration affordable the inputs are rescaled once:
//! with u_k = k! s^k alpha_k integral (s a geometric denominator scale), each
//! partition term becomes
//!
//! ```text
//! prod_j (nd - j) * [n! / prod_k (k!^(m_k) m_k!)] * prod_k u_k^(m_k)
//!                                                       / (n! s^n)
//! ```
//!
//! where the bracket is a whole number of set partitions, so the walk runs
//! entirely over integers and divides by n! s^n once per coefficient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::eisenstein::Eisenstein;
use crate::rational::{factorial, Rational};
use crate::series::TruncatedSeries;
use crate::valuation::Prime;

/// Reverts the tail table alpha_1..alpha_T of z*(1 + sum alpha_n z^(-nd)).
/// d may be any nonzero integer.
pub fn lagrange_invert(alpha: &[Eisenstein], d: i64, prime: Prime, ram: usize) -> Vec<Eisenstein> {
    assert!(d != 0, "reversion needs d != 0");
    for a in alpha {
        assert_eq!((a.prime(), a.ram()), (prime, ram), "mixed field parameters");
    }
    let trunc = alpha.len();
    let factorials: Vec<BigInt> = (0..=trunc as u64).map(factorial).collect();
    let scale = geometric_scale(alpha, &factorials);

    // u_k = k! s^k alpha_k, integral pi-basis coordinates
    let scaled: Vec<Vec<BigInt>> = alpha
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let k = i + 1;
            let factor = Rational::from(&factorials[k] * scale.pow(k as u32));
            a.coeffs()
                .iter()
                .map(|q| {
                    let v = q * &factor;
                    debug_assert!(v.is_integer(), "scale cleared every denominator");
                    v.numer().clone()
                })
                .collect()
        })
        .collect();

    let mut out = Vec::with_capacity(trunc);
    for n in 1..=trunc {
        let mut acc = vec![BigInt::zero(); ram];
        let walk = PartitionWalk {
            scaled: &scaled,
            factorials: &factorials,
            nd: BigInt::from(n as i64 * d),
            prime: prime.get(),
            ram,
        };
        let unit = {
            let mut v = vec![BigInt::zero(); ram];
            v[0] = BigInt::one();
            v
        };
        walk.sum(n, n, &unit, &factorials[n], 0, &mut acc);
        // beta_n = -acc / (n! s^n)
        let denom = &factorials[n] * scale.pow(n as u32);
        let coeffs = acc
            .into_iter()
            .map(|num| Rational::new(-num, denom.clone()).expect("positive denominator"))
            .collect();
        out.push(Eisenstein::from_coeffs(prime, ram, coeffs));
    }
    out
}

/// Smallest-found s with den(k! alpha_k) dividing s^k for every k, grown by
/// the still-missing denominator parts until stable.
fn geometric_scale(alpha: &[Eisenstein], factorials: &[BigInt]) -> BigInt {
    let mut s = BigInt::one();
    loop {
        let mut grew = false;
        for (i, a) in alpha.iter().enumerate() {
            let k = i + 1;
            let s_pow = s.pow(k as u32);
            for q in a.coeffs() {
                if q.is_zero() {
                    continue;
                }
                let den = (q * &Rational::from(factorials[k].clone())).denom().clone();
                let missing = &den / den.gcd(&s_pow);
                if !missing.is_one() {
                    s *= missing;
                    grew = true;
                }
            }
        }
        if !grew {
            return s;
        }
    }
}

struct PartitionWalk<'a> {
    scaled: &'a [Vec<BigInt>],
    factorials: &'a [BigInt],
    nd: BigInt,
    prime: u64,
    ram: usize,
}

impl PartitionWalk<'_> {
    /// DFS over partitions of `remaining` into parts <= `max_part`. The
    /// running integer scalar holds n!/(partial k!^(m_k) m_k!) times the
    /// degree-count factors (nd - j); `prod` holds prod u_k^(m_k).
    fn sum(
        &self,
        remaining: usize,
        max_part: usize,
        prod: &[BigInt],
        scalar: &BigInt,
        count: u64,
        acc: &mut [BigInt],
    ) {
        if remaining == 0 {
            for (a, p) in acc.iter_mut().zip(prod) {
                *a += p * scalar;
            }
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            let u_k = &self.scaled[part - 1];
            if u_k.iter().all(Zero::is_zero) {
                continue;
            }
            let mut running = prod.to_vec();
            let mut scal = scalar.clone();
            let mut mult = 0u64;
            let mut used = 0usize;
            while used + part <= remaining {
                used += part;
                mult += 1;
                running = self.mul(&running, u_k);
                scal = exact_div(&scal, &self.factorials[part]);
                scal = exact_div(&scal, &BigInt::from(mult));
                let total = count + mult;
                if total >= 2 {
                    scal *= &self.nd - BigInt::from(total);
                }
                if scal.is_zero() || running.iter().all(Zero::is_zero) {
                    break;
                }
                self.sum(remaining - used, part - 1, &running, &scal, total, acc);
            }
        }
    }

    /// pi-basis product with the reduction pi^m = p.
    fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let m = self.ram;
        let p = BigInt::from(self.prime);
        let mut out = vec![BigInt::zero(); m];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let term = x * y;
                if i + j >= m {
                    out[i + j - m] += term * &p;
                } else {
                    out[i + j] += term;
                }
            }
        }
        out
    }
}

fn exact_div(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(!b.is_zero());
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "set-partition counts stay integral");
    q
}

/// Tail table of F(G(z)) for normalized tails F, G in the same variable
/// x = z^(-d). The identity map is the empty (all-zero) tail.
pub fn compose_normalized(
    f: &[Eisenstein],
    g: &[Eisenstein],
    d: u64,
    prime: Prime,
    ram: usize,
) -> Vec<Eisenstein> {
    let t = f.len().min(g.len());
    let mut u = TruncatedSeries::one(prime, ram, t);
    for (n, c) in g.iter().enumerate().take(t) {
        u.set_coeff(n + 1, c.clone());
    }
    // G(z)^(-d) = x * r(x) with r = (u^d)^(-1)
    let r = u
        .int_pow(d)
        .unit_reciprocal()
        .expect("unit series has unit power");
    let mut inner = TruncatedSeries::one(prime, ram, t);
    let mut r_pow = TruncatedSeries::one(prime, ram, t);
    for (n, c) in f.iter().enumerate().take(t) {
        let n = n + 1;
        r_pow = &r_pow * &r;
        if c.is_zero() {
            continue;
        }
        // inner += f_n * x^n * r^n
        let shifted = TruncatedSeries::monomial(c.clone(), n, t);
        inner = &inner + &(&shifted * &r_pow);
    }
    let h = &u * &inner;
    (1..=t).map(|n| h.coeff(n).clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> (Prime, usize) {
        (Prime::new(2).unwrap(), 1)
    }

    fn rat(n: i64) -> Eisenstein {
        let (p, m) = field();
        Eisenstein::from_rational(p, m, Rational::from(n))
    }

    fn catalan(n: u64) -> Rational {
        // (2n-2)! / ((n-1)! n!)
        Rational::new(factorial(2 * n - 2), factorial(n - 1) * factorial(n)).unwrap()
    }

    #[test]
    fn chebyshev_tail_reverts_to_catalan_numbers() {
        let (p, m) = field();
        let mut alpha = vec![Eisenstein::zero(p, m); 8];
        alpha[0] = rat(1);
        let beta = lagrange_invert(&alpha, 2, p, m);
        for n in 1..=8u64 {
            let expect = Eisenstein::from_rational(p, m, -catalan(n));
            assert_eq!(beta[n as usize - 1], expect, "n = {n}");
        }
        // leading values -1, -1, -2, -5, -14
        assert_eq!(beta[0], rat(-1));
        assert_eq!(beta[1], rat(-1));
        assert_eq!(beta[2], rat(-2));
        assert_eq!(beta[3], rat(-5));
        assert_eq!(beta[4], rat(-14));
    }

    #[test]
    fn zero_tail_reverts_to_zero() {
        let (p, m) = field();
        let alpha = vec![Eisenstein::zero(p, m); 6];
        let beta = lagrange_invert(&alpha, 3, p, m);
        assert!(beta.iter().all(Eisenstein::is_zero));
    }

    #[test]
    fn first_coefficient_negates() {
        let (p, m) = field();
        for d in [-3i64, -1, 1, 2, 5] {
            let alpha = vec![rat(7), rat(-2), rat(9)];
            let beta = lagrange_invert(&alpha, d, p, m);
            assert_eq!(beta[0], rat(-7), "d = {d}");
        }
    }

    #[test]
    fn second_coefficient_closed_form() {
        // beta_2 = -(alpha_2 + (d-1) alpha_1^2)
        let (p, m) = field();
        for d in [2i64, 3, 5] {
            let alpha = vec![rat(3), rat(-4)];
            let beta = lagrange_invert(&alpha, d, p, m);
            assert_eq!(beta[1], rat(-(-4 + (d - 1) * 9)), "d = {d}");
        }
    }

    #[test]
    fn fractional_tails_are_handled_exactly() {
        let (p, m) = field();
        let q = |n: i64, d: i64| Eisenstein::from_rational(p, m, Rational::new(n, d).unwrap());
        let alpha = vec![q(1, 2), q(-3, 8), q(5, 6), q(7, 16)];
        let beta = lagrange_invert(&alpha, 2, p, m);
        assert_eq!(beta[0], q(-1, 2));
        // beta_2 = -(alpha_2 + alpha_1^2) = 3/8 - 1/4 = 1/8
        assert_eq!(beta[1], q(1, 8));
        // round trip seals the rest
        let fwd = compose_normalized(&alpha, &beta, 2, p, m);
        assert!(fwd.iter().all(Eisenstein::is_zero));
    }

    #[test]
    fn ramified_tails_revert() {
        let p = Prime::new(2).unwrap();
        let pi = Eisenstein::pi_power(p, 2, 1);
        let alpha = vec![pi.clone(), &pi * &pi, Eisenstein::one(p, 2)];
        let beta = lagrange_invert(&alpha, 2, p, 2);
        assert_eq!(beta[0], -&pi);
        let fwd = compose_normalized(&alpha, &beta, 2, p, 2);
        assert!(fwd.iter().all(Eisenstein::is_zero));
        let back = compose_normalized(&beta, &alpha, 2, p, 2);
        assert!(back.iter().all(Eisenstein::is_zero));
    }

    #[test]
    fn composition_adds_first_coefficients() {
        let (p, m) = field();
        let f = vec![rat(5), Eisenstein::zero(p, m)];
        let g = vec![rat(11), Eisenstein::zero(p, m)];
        let h = compose_normalized(&f, &g, 2, p, m);
        assert_eq!(h[0], rat(16));
    }

    #[test]
    fn composing_identity_tails_gives_identity() {
        let (p, m) = field();
        let id = vec![Eisenstein::zero(p, m); 5];
        let h = compose_normalized(&id, &id, 4, p, m);
        assert!(h.iter().all(Eisenstein::is_zero));
    }

    #[test]
    fn reversion_round_trips_through_composition() {
        let (p, m) = field();
        for d in [2u64, 3] {
            let alpha = vec![rat(1), rat(-3), rat(2), rat(7), rat(-1), rat(4)];
            let beta = lagrange_invert(&alpha, d as i64, p, m);
            let fwd = compose_normalized(&alpha, &beta, d, p, m);
            assert!(fwd.iter().all(Eisenstein::is_zero), "F o G, d = {d}");
            let back = compose_normalized(&beta, &alpha, d, p, m);
            assert!(back.iter().all(Eisenstein::is_zero), "G o F, d = {d}");
        }
    }
}
