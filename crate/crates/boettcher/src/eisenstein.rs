//! Scalars of the totally ramified extension Q[pi]/(pi^m = p).
//!
//! An element is a length-m vector of rationals, the coefficient of pi^j at
//! index j. Multiplication reduces via pi^m = p. Since pi^m - p is Eisenstein
//! at p, the quotient is a field and v_p extends uniquely by
//!
//! ```text
//! v(x) = min_j ( v_p(coeffs[j]) + j/m )  over nonzero coeffs[j]
//! ```
//!
//! Proof obligation carried by this representation: the m candidate values
//! have pairwise distinct fractional parts j/m (the rational coefficients
//! contribute integers), so the minimum is attained exactly once and no
//! cancellation analysis is ever needed. With m = 1 the type degenerates to a
//! plain rational.
//!
//! There is no general multiplicative inverse here; the solvers only ever
//! divide by rational scalars.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;
use crate::valuation::{vp_rational, Prime, Valuation};

#[derive(Clone, PartialEq, Eq)]
pub struct Eisenstein {
    coeffs: Vec<Rational>,
    prime: Prime,
    ram: usize,
}

impl Eisenstein {
    /// Builds an element from pi-coefficients, reducing indices >= m via
    /// pi^m = p. Accepts any coefficient count.
    pub fn from_coeffs(prime: Prime, ram: usize, coeffs: Vec<Rational>) -> Self {
        assert!(ram >= 1, "ramification index must be >= 1");
        let mut reduced = vec![Rational::zero(); ram];
        let p = Rational::from(prime.get());
        for (j, q) in coeffs.into_iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let carry = p.pow((j / ram) as i64).expect("small exponent");
            let slot = j % ram;
            reduced[slot] = &reduced[slot] + &(q * carry);
        }
        Eisenstein { coeffs: reduced, prime, ram }
    }

    pub fn zero(prime: Prime, ram: usize) -> Self {
        Self::from_coeffs(prime, ram, vec![])
    }

    pub fn one(prime: Prime, ram: usize) -> Self {
        Self::from_rational(prime, ram, Rational::one())
    }

    pub fn from_rational(prime: Prime, ram: usize, q: Rational) -> Self {
        Self::from_coeffs(prime, ram, vec![q])
    }

    /// pi^exp as an element; exponents >= m reduce through powers of p.
    pub fn pi_power(prime: Prime, ram: usize, exp: u64) -> Self {
        let mut coeffs = vec![Rational::zero(); exp as usize + 1];
        coeffs[exp as usize] = Rational::one();
        Self::from_coeffs(prime, ram, coeffs)
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn ram(&self) -> usize {
        self.ram
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// When m = 1 (or all higher coefficients vanish), the underlying rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            (self.prime, self.ram),
            (other.prime, other.ram),
            "mixed field parameters: ({}, m={}) vs ({}, m={})",
            self.prime,
            self.ram,
            other.prime,
            other.ram
        );
    }

    /// The extended valuation; +infinity for zero. Exact: the minimum below is
    /// attained by exactly one index because the fractional parts j/m differ.
    pub fn valuation(&self) -> Valuation {
        let mut best: Option<Rational> = None;
        for (j, q) in self.coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let vq = match vp_rational(self.prime, q) {
                Valuation::Finite(v) => v,
                Valuation::Infinite => unreachable!("nonzero coefficient"),
            };
            let cand = vq + Rational::new(j as i64, self.ram as i64).expect("m >= 1");
            best = Some(match best {
                Some(b) if b <= cand => b,
                _ => cand,
            });
        }
        match best {
            Some(v) => Valuation::Finite(v),
            None => Valuation::Infinite,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Eisenstein {
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
            prime: self.prime,
            ram: self.ram,
        }
    }

    /// Division by a rational scalar; the only division the solvers need.
    pub fn div_rational(&self, q: &Rational) -> Self {
        assert!(!q.is_zero(), "division by zero scalar");
        self.scale(&q.recip().expect("nonzero"))
    }

    pub fn pow(&self, exp: u64) -> Self {
        let mut acc = Eisenstein::one(self.prime, self.ram);
        let mut base = self.clone();
        let mut e = exp;
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
}

impl Add for &Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: &Eisenstein) -> Eisenstein {
        self.assert_same_field(rhs);
        Eisenstein {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
            prime: self.prime,
            ram: self.ram,
        }
    }
}

impl Sub for &Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: &Eisenstein) -> Eisenstein {
        self.assert_same_field(rhs);
        Eisenstein {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
            prime: self.prime,
            ram: self.ram,
        }
    }
}

impl Neg for &Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            prime: self.prime,
            ram: self.ram,
        }
    }
}

impl Mul for &Eisenstein {
    type Output = Eisenstein;
    fn mul(self, rhs: &Eisenstein) -> Eisenstein {
        self.assert_same_field(rhs);
        let m = self.ram;
        let p = Rational::from(self.prime.get());
        let mut out = vec![Rational::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let term = a * b;
                // pi^i * pi^j = p * pi^(i+j-m) once i+j >= m
                if i + j >= m {
                    out[i + j - m] = &out[i + j - m] + &(term * &p);
                } else {
                    out[i + j] = &out[i + j] + &term;
                }
            }
        }
        Eisenstein { coeffs: out, prime: self.prime, ram: m }
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, q) in self.coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{q}")?,
                1 => write!(f, "({q})*pi")?,
                _ => write!(f, "({q})*pi^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2m2() -> (Prime, usize) {
        (Prime::new(2).unwrap(), 2)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn defining_relation_pi_squared_is_p() {
        let (p, m) = p2m2();
        let pi = Eisenstein::pi_power(p, m, 1);
        let prod = &pi * &pi;
        assert_eq!(prod, Eisenstein::from_rational(p, m, Rational::from(2i64)));
    }

    #[test]
    fn pi_cubed_has_valuation_three_halves() {
        let (p, m) = p2m2();
        let pi3 = Eisenstein::pi_power(p, m, 3);
        // pi^3 = 2*pi
        assert_eq!(pi3.coeffs(), &[Rational::zero(), Rational::from(2i64)]);
        assert_eq!(pi3.valuation(), Valuation::Finite(q(3, 2)));
    }

    #[test]
    fn unit_plus_pi_has_valuation_zero() {
        let (p, m) = p2m2();
        let x = Eisenstein::from_coeffs(p, m, vec![Rational::one(), Rational::one()]);
        assert_eq!(x.valuation(), Valuation::finite(0i64));
    }

    #[test]
    fn zero_has_infinite_valuation() {
        let (p, m) = p2m2();
        assert_eq!(Eisenstein::zero(p, m).valuation(), Valuation::Infinite);
    }

    #[test]
    fn ram_one_degenerates_to_rational() {
        let p = Prime::new(3).unwrap();
        let x = Eisenstein::from_rational(p, 1, q(10, 3));
        let y = Eisenstein::from_rational(p, 1, q(9, 5));
        assert_eq!((&x * &y).as_rational(), Some(&q(6, 1)));
        assert_eq!(x.valuation(), Valuation::finite(-1i64));
        assert_eq!(y.valuation(), Valuation::finite(2i64));
    }

    #[test]
    fn valuation_is_multiplicative_spot() {
        let (p, m) = p2m2();
        let x = Eisenstein::from_coeffs(p, m, vec![q(3, 4), q(1, 2)]);
        let y = Eisenstein::from_coeffs(p, m, vec![q(0, 1), q(5, 8)]);
        let expect = match (x.valuation(), y.valuation()) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => unreachable!(),
        };
        assert_eq!((&x * &y).valuation(), expect);
    }

    #[test]
    #[should_panic(expected = "mixed field parameters")]
    fn mixed_fields_panic() {
        let a = Eisenstein::one(Prime::new(2).unwrap(), 2);
        let b = Eisenstein::one(Prime::new(2).unwrap(), 3);
        let _ = &a * &b;
    }

    #[test]
    fn powers_reduce() {
        let (p, m) = p2m2();
        let pi = Eisenstein::pi_power(p, m, 1);
        assert_eq!(pi.pow(4), Eisenstein::from_rational(p, m, Rational::from(4i64)));
        assert_eq!(pi.pow(0), Eisenstein::one(p, m));
    }
}
