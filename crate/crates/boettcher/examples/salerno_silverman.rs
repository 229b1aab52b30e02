//! The Salerno–Silverman radius: for g(x) = x^(p^2) + p^(r+2) x^(p^2+1), the
//! inverse coordinate converges exactly on the open disk of radius
//! p^(-p^(-r)/(p-1)). The exact closed form is checked here as a rational
//! identity for several (p, r).
//!
//! Run with: cargo run --example salerno_silverman

use boettcher::{radius_report, BoettcherParams, Eisenstein, Prime, RadiusMode, Rational};

fn main() {
    println!(
        "{:>3} {:>3} {:>5} {:>8} {:>4} {:>16} {:>16} {:>10}",
        "p", "r", "d", "c", "N", "inv radius log_p", "claimed exponent", "consistent"
    );
    for (p, r) in [(2u64, 0u32), (2, 1), (2, 2), (2, 3), (3, 0), (3, 1), (5, 0), (5, 2)] {
        let prime = Prime::new(p).unwrap();
        let d = p * p;
        let c_value = Rational::from(p).pow(r as i64 + 2).unwrap();
        let c = Eisenstein::from_rational(prime, 1, c_value.clone());
        let params = BoettcherParams::new(prime, d, c).unwrap();
        let report = radius_report(&params, RadiusMode::Conjecture { r }).unwrap();
        let check = report.conjecture.as_ref().unwrap();
        println!(
            "{:>3} {:>3} {:>5} {:>8} {:>4} {:>16} {:>16} {:>10}",
            p,
            r,
            d,
            c_value.to_string(),
            report.condition.cutoff,
            (-&report.r_log).to_string(),
            check.expected_inv_radius_log.to_string(),
            check.consistent
        );
    }
    println!();
    println!("N = floor((r+1)/2) selects the classified window, and the exact");
    println!("radius identity -log_p r_N = -p^(-r)/(p-1) holds on every row.");
}
