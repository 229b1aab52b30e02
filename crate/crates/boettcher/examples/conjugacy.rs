//! Evidence that the basins of infinity of z^4 - 4 and z^4 - 2 over Q_2 are
//! not analytically conjugate: every admissible candidate conjugacy converges
//! only on a disk strictly inside the basin.
//!
//! Run with: cargo run --example conjugacy

use boettcher::{conjugacy_report, Eisenstein, Prime, Rational};

fn main() {
    let p = Prime::new(2).unwrap();
    let c1 = Eisenstein::from_rational(p, 1, Rational::from(4i64));
    let c2 = Eisenstein::from_rational(p, 1, Rational::from(2i64));

    let report = conjugacy_report(p, 4, &c1, &c2, 32).unwrap();
    println!("maps: z^4 - {} and z^4 - {}", report.c1, report.c2);
    println!(
        "separation hypothesis: v(c1^3 - c2^3) = {} equals v(c2^3) = {}",
        report.separation_lhs, report.separation_rhs
    );
    println!();
    for cand in &report.candidates {
        println!("candidate omega = {}:", cand.omega);
        println!("  effective constant  {}", cand.effective_c);
        println!(
            "  classification      {} (N = {})",
            cand.condition.tag, cand.condition.cutoff
        );
        println!(
            "  profile matches     {}/{}",
            cand.profile.entries.iter().filter(|e| e.matches).count(),
            cand.profile.entries.len()
        );
        println!(
            "  convergence disk    |z| > p^({}) (strictly inside |z| > 1)",
            cand.varphi_disk_log
        );
    }
    println!();
    println!("verified: {}", report.verified());
    println!("{}", report.conclusion());
}
