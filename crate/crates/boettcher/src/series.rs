//! Dense truncated formal power series over Q[pi]/(pi^m = p).
//!
//! Invariants:
//! - `coeffs[n]` is the coefficient of x^n; the truncation order is
//!   `coeffs.len() - 1` and is carried explicitly.
//! - Binary operations require identical field parameters and combine
//!   truncation orders with min; precision is never silently extended.
//!
//! Coefficient recursions (reciprocal, d-th root) divide only by the constant
//! term or by d, never by the running index.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::eisenstein::Eisenstein;
use crate::error::{Error, Result};
use crate::rational::{binomial, Rational};
use crate::valuation::{Prime, Valuation};

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Eisenstein>,
    prime: Prime,
    ram: usize,
}

impl TruncatedSeries {
    pub fn zero(prime: Prime, ram: usize, trunc: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Eisenstein::zero(prime, ram); trunc + 1],
            prime,
            ram,
        }
    }

    pub fn one(prime: Prime, ram: usize, trunc: usize) -> Self {
        let mut s = Self::zero(prime, ram, trunc);
        s.coeffs[0] = Eisenstein::one(prime, ram);
        s
    }

    /// c * x^deg + O(x^(trunc+1)); the monomial is dropped if deg > trunc.
    pub fn monomial(coeff: Eisenstein, deg: usize, trunc: usize) -> Self {
        let mut s = Self::zero(coeff.prime(), coeff.ram(), trunc);
        if deg <= trunc {
            s.coeffs[deg] = coeff;
        }
        s
    }

    pub fn from_coeffs(prime: Prime, ram: usize, coeffs: Vec<Eisenstein>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        for c in &coeffs {
            assert_eq!((c.prime(), c.ram()), (prime, ram), "mixed field parameters");
        }
        TruncatedSeries { coeffs, prime, ram }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn ram(&self) -> usize {
        self.ram
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Eisenstein {
        assert!(
            n <= self.trunc(),
            "coefficient of x^{n} requested but series is only known to O(x^{})",
            self.trunc() + 1
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Eisenstein] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, value: Eisenstein) {
        assert!(n <= self.trunc());
        assert_eq!((value.prime(), value.ram()), (self.prime, self.ram));
        self.coeffs[n] = value;
    }

    pub fn truncated(&self, trunc: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(trunc + 1);
        while coeffs.len() < trunc + 1 {
            coeffs.push(Eisenstein::zero(self.prime, self.ram));
        }
        TruncatedSeries { coeffs, prime: self.prime, ram: self.ram }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == Eisenstein::one(self.prime, self.ram)
            && self.coeffs[1..].iter().all(Eisenstein::is_zero)
    }

    /// Degree of the first nonzero coefficient, if any.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, s: &Eisenstein) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            prime: self.prime,
            ram: self.ram,
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(q)).collect(),
            prime: self.prime,
            ram: self.ram,
        }
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            (self.prime, self.ram),
            (other.prime, other.ram),
            "mixed field parameters in series arithmetic"
        );
    }

    /// a^k by repeated squaring, truncated at this series' order.
    pub fn int_pow(&self, k: u64) -> Self {
        let mut acc = Self::one(self.prime, self.ram, self.trunc());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse of a series with constant term exactly 1.
    /// The coefficient recursion b_n = -sum_{k=1..n} a_k b_{n-k} divides by
    /// nothing at all.
    pub fn unit_reciprocal(&self) -> Result<Self> {
        let one = Eisenstein::one(self.prime, self.ram);
        if self.coeffs[0] != one {
            return Err(Error::Domain(
                "reciprocal requires constant term exactly 1".into(),
            ));
        }
        let t = self.trunc();
        let mut out = Self::one(self.prime, self.ram, t);
        for n in 1..=t {
            let mut acc = Eisenstein::zero(self.prime, self.ram);
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[k] * &out.coeffs[n - k]);
            }
            out.coeffs[n] = -&acc;
        }
        Ok(out)
    }

    /// The unique u with u(0) = 1 and u^d = self up to the truncation order.
    /// Degree n is solved from d * u_n = s_n - [x^n](prefix^d), one division
    /// by d per degree.
    pub fn dth_root(&self, d: u64) -> Result<Self> {
        let one = Eisenstein::one(self.prime, self.ram);
        if self.coeffs[0] != one {
            return Err(Error::Domain("d-th root requires constant term exactly 1".into()));
        }
        assert!(d >= 1, "d-th root needs d >= 1");
        let t = self.trunc();
        let inv_d = Rational::from(d).recip().expect("d >= 1");
        let mut root = Self::one(self.prime, self.ram, t);
        let mut pows = PrefixPowers::identity(self.prime, self.ram, d, t);
        for n in 1..=t {
            let cross = pows.top_coeff(n);
            let u_n = (&self.coeffs[n] - cross).scale(&inv_d);
            if !u_n.is_zero() {
                pows.add_term(n, &u_n);
            }
            root.coeffs[n] = u_n;
        }
        Ok(root)
    }

    /// Substitution x -> x^d on the coefficient table: sum_n s_n x^(n*d),
    /// truncated at this series' order.
    pub fn reindex_power(&self, d: u64) -> Self {
        let t = self.trunc();
        let mut out = Self::zero(self.prime, self.ram, t);
        let d = d as usize;
        for (n, c) in self.coeffs.iter().enumerate() {
            match n.checked_mul(d) {
                Some(nd) if nd <= t => out.coeffs[nd] = c.clone(),
                _ => break,
            }
        }
        out
    }

    /// Evaluates sum_{n<=T} s_n x^n together with a certified valuation floor
    /// for everything that was cut off.
    ///
    /// `slope_bound` must be a lower bound on inf_n v(s_n)/n, supplied by the
    /// caller; every omitted term then has valuation at least
    /// (T+1) * (v(x) + slope_bound), which is the returned bound. Comparisons
    /// of evaluated values are trustworthy strictly below it.
    pub fn evaluate(
        &self,
        x: &Eisenstein,
        slope_bound: &Rational,
    ) -> Result<(Eisenstein, Valuation)> {
        assert_eq!((x.prime(), x.ram()), (self.prime, self.ram), "mixed field parameters");
        let vx = match x.valuation() {
            Valuation::Finite(v) => v,
            // x = 0: the sum collapses to the constant term and nothing is lost
            Valuation::Infinite => return Ok((self.coeffs[0].clone(), Valuation::Infinite)),
        };
        let margin = &vx + slope_bound;
        if margin <= Rational::zero() {
            return Err(Error::Divergence(format!(
                "point with valuation {vx} lies outside the certified disk (needs v(x) > {})",
                -slope_bound
            )));
        }
        // Horner from the top coefficient down
        let mut acc = Eisenstein::zero(self.prime, self.ram);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        let bound = Rational::from(self.trunc() as u64 + 1) * margin;
        Ok((acc, Valuation::Finite(bound)))
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_field(rhs);
        let t = self.trunc().min(rhs.trunc());
        let coeffs = (0..=t).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect();
        TruncatedSeries { coeffs, prime: self.prime, ram: self.ram }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_field(rhs);
        let t = self.trunc().min(rhs.trunc());
        let coeffs = (0..=t).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect();
        TruncatedSeries { coeffs, prime: self.prime, ram: self.ram }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            prime: self.prime,
            ram: self.ram,
        }
    }
}

/// Cauchy product truncated at min of the operand orders.
impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_field(rhs);
        let t = self.trunc().min(rhs.trunc());
        let mut out = TruncatedSeries::zero(self.prime, self.ram, t);
        for (i, a) in self.coeffs.iter().enumerate().take(t + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(t + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
            }
        }
        out
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{n}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.trunc() + 1)
    }
}

/// Maintains v, v^2, ..., v^d for a unit series v that grows one term at a
/// time, so that degree-by-degree solvers can read [x^n] v^d and then extend
/// v without recomputing powers from scratch.
pub(crate) struct PrefixPowers {
    pows: Vec<TruncatedSeries>,
}

impl PrefixPowers {
    /// Powers of the constant series 1.
    pub fn identity(prime: Prime, ram: usize, d: u64, trunc: usize) -> Self {
        let one = TruncatedSeries::one(prime, ram, trunc);
        PrefixPowers { pows: vec![one; d as usize + 1] }
    }

    /// [x^n] v^d for the current prefix v.
    pub fn top_coeff(&self, n: usize) -> &Eisenstein {
        let d = self.pows.len() - 1;
        self.pows[d].coeff(n)
    }

    /// Replace v by v + c * x^n, updating every stored power. Uses
    /// (v + c x^n)^i = sum_j C(i, j) c^j x^(nj) v^(i-j), reading only old
    /// powers when iterating i from the top down.
    pub fn add_term(&mut self, n: usize, c: &Eisenstein) {
        let d = self.pows.len() - 1;
        let trunc = self.pows[0].trunc();
        let mut c_pows = vec![Eisenstein::one(c.prime(), c.ram())];
        while c_pows.len() * n <= trunc && c_pows.len() <= d {
            let next = &c_pows[c_pows.len() - 1] * c;
            c_pows.push(next);
        }
        for i in (1..=d).rev() {
            let mut updated = self.pows[i].clone();
            for (j, c_pow) in c_pows.iter().enumerate().take(i + 1).skip(1) {
                let nj = n * j;
                if nj > trunc {
                    break;
                }
                let coef = Rational::from(binomial(i as u64, j as u64));
                let scalar = c_pow.scale(&coef);
                // shifted add: updated += scalar * x^(nj) * pows[i-j]
                let lower = &self.pows[i - j];
                for k in 0..=trunc - nj {
                    let term = lower.coeff(k) * &scalar;
                    if !term.is_zero() {
                        updated.coeffs[nj + k] = &updated.coeffs[nj + k] + &term;
                    }
                }
            }
            self.pows[i] = updated;
        }
    }
}
