//! phi is an isometry on its convergence disk: |phi(x) - phi(y)| = |x - y|.
//! Checked at sample points of Q[pi]/(pi^2 = 2) with certified truncation
//! tail bounds, so the comparisons are exact below the certified floor.
//!
//! Run with: cargo run --example isometry

use boettcher::{limit_slope, solve_b, BoettcherParams, Eisenstein, Prime, Rational};

fn main() {
    let p = Prime::new(2).unwrap();
    let m = 2usize;
    let params =
        BoettcherParams::new(p, 4, Eisenstein::from_rational(p, m, Rational::from(8i64))).unwrap();
    let slope = limit_slope(&params).unwrap();
    println!("parameters (2, 4, 8): slope {slope}, so phi converges for v(x) > {}", -&slope);

    let trunc = 20;
    let unit = solve_b(&params, trunc).unit_series();

    let pi = Eisenstein::pi_power(p, m, 1);
    let one = Eisenstein::one(p, m);
    let points = [
        Eisenstein::from_rational(p, m, Rational::from(2i64)),
        pi.pow(3),
        &Eisenstein::from_rational(p, m, Rational::from(2i64)) * &(&one + &pi),
        Eisenstein::from_rational(p, m, Rational::from(6i64)),
        &pi.pow(3) * &(&one - &pi),
    ];

    println!(
        "\n{:<16} {:<16} {:>9} {:>14} {:>14}",
        "x", "y", "v(x-y)", "v(phi x-phi y)", "cert. floor"
    );
    for (i, x) in points.iter().enumerate() {
        for y in points.iter().skip(i + 1) {
            if (x - y).is_zero() {
                continue;
            }
            let (sx, bx) = unit.evaluate(x, &slope).unwrap();
            let (sy, by) = unit.evaluate(y, &slope).unwrap();
            let diff = (&(x * &sx) - &(y * &sy)).valuation();
            let floor = (&x.valuation() + &bx).min(&y.valuation() + &by);
            assert!(diff < floor, "comparison must sit below the certified floor");
            assert_eq!(diff, (x - y).valuation());
            println!(
                "{:<16} {:<16} {:>9} {:>14} {:>14}",
                x.to_string(),
                y.to_string(),
                (x - y).valuation().to_string(),
                diff.to_string(),
                floor.to_string()
            );
        }
    }
    println!("\nvaluations of differences are preserved exactly at every sampled pair.");
}
