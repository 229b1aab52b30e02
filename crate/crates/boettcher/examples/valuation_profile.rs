//! Solving the two conjugacy equations at (p, d, c) = (2, 4, 8) and checking
//! every coefficient valuation against the closed-form prediction
//! v(a_n) = v(c^n / (d^n n!)) - e(n).
//!
//! Run with: cargo run --example valuation_profile

use boettcher::{
    limit_slope, solve_a, solve_b, verify_profile, BoettcherParams, Eisenstein, Prime, Rational,
};

fn main() {
    let p = Prime::new(2).unwrap();
    let c = Eisenstein::from_rational(p, 1, Rational::from(8i64));
    let params = BoettcherParams::new(p, 4, c).unwrap();
    println!(
        "parameters p=2, d=4, c=8: condition {}, N = {}, v_p(c) = {}",
        params.condition.tag, params.condition.cutoff, params.condition.vpc
    );
    println!("limit of v(a_n)/n: {}\n", limit_slope(&params).unwrap());

    let trunc = 24;
    let a = solve_a(&params, trunc);
    let b = solve_b(&params, trunc);
    let profile_a = verify_profile(&a).unwrap();
    let profile_b = verify_profile(&b).unwrap();

    println!(
        "{:>4} {:>10} {:>10} {:>10} {:>7}",
        "n", "v(a_n)", "v(b_n)", "predicted", "match"
    );
    for n in 1..=trunc {
        let ea = &profile_a.entries[n - 1];
        let eb = &profile_b.entries[n - 1];
        println!(
            "{n:>4} {:>10} {:>10} {:>10} {:>7}",
            ea.actual.to_string(),
            eb.actual.to_string(),
            ea.predicted.to_string(),
            ea.matches && eb.matches
        );
    }
    println!();
    println!("all a-valuations match: {}", profile_a.all_match());
    println!("all b-valuations match: {}", profile_b.all_match());
    println!(
        "perturbation is invisible at the valuation level: v(a_n - b_n) > v(a_n), e.g. n=8: {} > {}",
        (a.entry(8) - b.entry(8)).valuation(),
        a.valuation(8)
    );
}
