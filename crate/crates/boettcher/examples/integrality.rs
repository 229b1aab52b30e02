//! Good reduction keeps coefficients integral: for d = p and p | c the
//! coordinate phi(x) = x(1 + sum b_n x^n) has v_p(b_n) >= 0 everywhere, so it
//! converges on the whole open unit disk. The classified radius picture does
//! not apply here (the parameters sit on a window boundary) and the larger
//! disk is real.
//!
//! Run with: cargo run --example integrality

use boettcher::{solve_b, BoettcherParams, Condition, Eisenstein, Prime, Rational, Valuation};

fn main() {
    let p = Prime::new(3).unwrap();
    let params =
        BoettcherParams::new(p, 3, Eisenstein::from_rational(p, 1, Rational::from(3i64))).unwrap();
    println!(
        "(p, d, c) = (3, 3, 3): classification {} (v(c) = 1 hits a window boundary)",
        params.condition.tag
    );
    assert_eq!(params.condition.tag, Condition::Neither);

    let trunc = 40;
    let table = solve_b(&params, trunc);
    let mut min_v = table.valuation(1);
    for n in 2..=trunc {
        min_v = min_v.min(table.valuation(n));
    }
    println!("first coefficients of the conjugating tail:");
    for n in 1..=8 {
        println!("  b_{n} = {}", table.entry(n));
    }
    println!("minimum of v_3(b_n) over n <= {trunc}: {min_v}");
    assert!(min_v >= Valuation::finite(0i64));
    println!("all coefficients are 3-adically integral; phi converges on |x| < 1.");
}
