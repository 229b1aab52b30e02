//! Exact p-adic Böttcher coordinates for the families z^d - c and
//! x^d + c x^(d+1).
//!
//! The crate solves the normalized conjugacy equations for these maps over Q
//! and over the totally ramified extensions Q[pi]/(pi^m = p), entirely in
//! exact arithmetic, and verifies the closed-form picture of the coefficient
//! valuations: per-coefficient predictions, limit slopes, convergence radii
//! (including the Salerno–Silverman radius p^(-p^(-r)/(p-1)) for
//! d = p^2, c = p^(r+2)), perturbation equivalence between the two families,
//! and non-conjugacy evidence for pairs of basins of infinity.
//!
//! Layout:
//! - [`rational`], [`valuation`], [`eisenstein`], [`lemmas`]: exact scalars,
//!   p-adic valuations, digit partitions, and the factorial oracles.
//! - [`series`], [`lagrange`]: truncated power series and tail reversion.
//! - [`solver`]: the a/b/t coefficient tables and their residual checks.
//! - [`analysis`]: classification, predictions, radii, profiles, and the
//!   non-conjugacy pipeline.
//! - [`cli`]: the `boettcher` binary surface (CSV/JSON output, exit codes).
//!
//! The `examples/` directory walks through each capability end to end.

pub mod analysis;
pub mod cli;
pub mod eisenstein;
pub mod error;
pub mod lagrange;
pub mod lemmas;
pub mod rational;
pub mod series;
pub mod solver;
pub mod valuation;

pub use analysis::{
    classify_condition, conjugacy_report, correction_term, is_subadditive, limit_slope,
    partition_bound_holds, perturbation_bounds_hold, predicted_valuation, radius_report,
    verify_profile, Condition, ConditionReport, ConjugacyReport, RadiusMode, RadiusReport,
    ValuationProfile,
};
pub use eisenstein::Eisenstein;
pub use error::{Error, Result};
pub use lagrange::{compose_normalized, lagrange_invert};
pub use rational::Rational;
pub use series::TruncatedSeries;
pub use solver::{
    invert_table, residual_check, solve_a, solve_a_partition_sum, solve_b, solve_t,
    BoettcherParams, CoefficientTable, SeriesKind,
};
pub use valuation::{
    canonical_decompose, digit_sum, factorial_valuation, vp_int, vp_rational, vp_u64,
    CanonicalPartition, Prime, Valuation,
};
