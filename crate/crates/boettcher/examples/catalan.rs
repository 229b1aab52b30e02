//! The Chebyshev map z^2 - 2: its conjugacy tail collapses to z + 1/z, and
//! the reverted tail is (minus) the Catalan numbers.
//!
//! Run with: cargo run --example catalan

use boettcher::{invert_table, solve_a, BoettcherParams, Eisenstein, Prime, Rational};

fn main() {
    let p = Prime::new(2).unwrap();
    let c = Eisenstein::from_rational(p, 1, Rational::from(2i64));
    let params = BoettcherParams::new(p, 2, c).unwrap();

    let table = solve_a(&params, 12);
    println!("tail of varphi(z) = z(1 + sum a_n z^(-2n)) for z^2 - 2:");
    println!("  a_1 = {}", table.entry(1));
    println!(
        "  a_2..a_12 all zero: {}",
        (2..=12).all(|n| table.entry(n).is_zero())
    );
    println!("  so varphi(z) = z + 1/z exactly\n");

    let inv = invert_table(&table).unwrap();
    println!("reverted tail (coefficients of varphi^(-1)):");
    println!("{:>4}  {:>12}  note", "n", "a'_n");
    for n in 1..=12 {
        let note = if n <= 1 { "" } else { "= -(2n-2)!/((n-1)! n!)" };
        println!("{n:>4}  {:>12}  {note}", inv.entry(n).to_string());
    }
    println!();
    println!("the two series converge on different disks (|z| > 0 vs |z| > 1),");
    println!("which is why this map sits outside the classified parameter region:");
    println!("  classification tag: {}", params.condition.tag);
}
