//! Fractional valuations through the ramified extension Q[pi]/(pi^2 = 2).
//!
//! With d = p the classified windows are the open unit intervals between
//! consecutive integers, so no rational c can land in them; c = pi^3 with
//! v(c) = 3/2 can. This example does scalar arithmetic in the extension,
//! classifies the parameters, and verifies the resulting profile.
//!
//! Run with: cargo run --example eisenstein_parameters

use boettcher::{solve_a, verify_profile, BoettcherParams, Eisenstein, Prime};

fn main() {
    let p = Prime::new(2).unwrap();
    let m = 2usize;
    let pi = Eisenstein::pi_power(p, m, 1);

    println!("arithmetic in Q[pi]/(pi^2 = 2):");
    println!("  pi * pi        = {}", &pi * &pi);
    println!("  pi^3           = {}", pi.pow(3));
    println!("  v(pi)          = {}", pi.valuation());
    println!("  v(pi^3)        = {}", pi.pow(3).valuation());
    println!("  v(1 + pi)      = {}", (&Eisenstein::one(p, m) + &pi).valuation());
    println!();

    let c = pi.pow(3); // v(c) = 3/2
    let params = BoettcherParams::new(p, 2, c).unwrap();
    let rep = &params.condition;
    println!(
        "classification of (p, d, c) = (2, 2, pi^3): {} with N = {}",
        rep.tag, rep.cutoff
    );
    println!(
        "  window: {} < v(c) = {} < {}",
        rep.lower.as_ref().unwrap(),
        rep.vpc,
        rep.upper.as_ref().unwrap()
    );
    println!();

    let trunc = 16;
    let table = solve_a(&params, trunc);
    let profile = verify_profile(&table).unwrap();
    println!("{:>4} {:>8} {:>10} {:>7}", "n", "v(a_n)", "predicted", "match");
    for e in &profile.entries {
        println!(
            "{:>4} {:>8} {:>10} {:>7}",
            e.n,
            e.actual.to_string(),
            e.predicted.to_string(),
            e.matches
        );
    }
    println!("\nall match: {}", profile.all_match());
    println!("note the half-integer valuations: they live in (1/2)Z, not Z.");
}
