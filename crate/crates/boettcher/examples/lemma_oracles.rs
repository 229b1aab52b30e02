//! Exhaustive bounded runs of the integer oracles behind the valuation
//! analysis: block factorial divisibility, the digit-split valuation bound,
//! the digit-wise factorial valuation identity, and the factorial valuation
//! formula against direct factorization.
//!
//! Run with: cargo run --example lemma_oracles

use boettcher::lemmas::{
    block_divisibility_holds, digit_factorial_valuation_holds, digit_split_bound_holds,
};
use boettcher::valuation::{factorial_valuation, vp_int, Prime, Valuation};

fn main() {
    let mut cases = 0u64;
    for d in 1..=6u64 {
        for k in 1..=6u64 {
            for reps in 0..=4u64 {
                assert!(block_divisibility_holds(d, k, reps));
                cases += 1;
            }
        }
    }
    println!("block divisibility       {cases:>6} cases, 0 failures");

    cases = 0;
    for (p, d) in [(2u64, 2u64), (2, 4), (2, 8), (3, 9)] {
        let p = Prime::new(p).unwrap();
        for n in 1..=100u64 {
            for m1 in 0..=n / d {
                let m0 = n - m1 * d;
                assert!(digit_split_bound_holds(p, d, n % d, n / d, m0, m1).unwrap());
                cases += 1;
            }
        }
    }
    println!("digit-split bound        {cases:>6} cases, 0 failures");

    cases = 0;
    for (p, d, cutoff) in [(2u64, 2u64, 3usize), (2, 4, 2), (3, 9, 2)] {
        let p = Prime::new(p).unwrap();
        for n in 1..=2000u64 {
            assert!(digit_factorial_valuation_holds(p, d, cutoff, n));
            cases += 1;
        }
    }
    println!("digit factorial split    {cases:>6} cases, 0 failures");

    cases = 0;
    for p in [2u64, 3, 5, 7] {
        let p = Prime::new(p).unwrap();
        let mut fact = num_bigint::BigInt::from(1);
        for n in 1..=500u64 {
            fact *= n;
            assert_eq!(Valuation::Finite(factorial_valuation(p, n)), vp_int(p, &fact));
            cases += 1;
        }
    }
    println!("factorial valuation      {cases:>6} cases, 0 failures");
    println!("\nevery oracle agrees with direct exact arithmetic on its range.");
}
