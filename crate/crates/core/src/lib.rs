//! Cutset profiles in the Boolean lattice `2^[n]`.
//!
//! A *cutset* is a collection of subsets of `[n] = {1, ..., n}` meeting
//! every maximal chain of the subset order; its *profile* records how many
//! members it has on each level. This crate decides, by exact big-integer
//! arithmetic, which profiles are achievable:
//!
//! * [`binom`] — binomial coefficients, the greedy cascade representation of
//!   an integer at a level, and the boundary operator that counts shadows of
//!   initial segments in the squashed (colex) order;
//! * [`colex`] — subsets, squashed-order ranking, level families, shadows,
//!   shades, and rank segments;
//! * [`canonical`] — profiles, the two sweep vectors `u`/`v` measuring how
//!   much of a chain bundle survives past each level, the feasibility
//!   verdict, and the canonical collection realizing a feasible profile;
//! * [`profiles`] — the extremal function `g(n, m, l)`: the least size of a
//!   cutset confined to levels `m..=l` with its largest level minimized,
//!   together with closed forms, bounds, and tabulation;
//! * [`constructions`] — explicit small-profile cutsets (two-level,
//!   three-level, doubling) and brute-force oracles used to validate the
//!   arithmetic on small ground sets.
//!
//! Everything is exact: sizes are [`num_bigint::BigUint`] throughout, and
//! the few exponential-time oracles refuse ground sets beyond their budget
//! with [`Error::BudgetExceeded`] instead of running forever.

pub mod binom;
pub mod canonical;
pub mod colex;
pub mod constructions;
mod error;
pub mod profiles;

pub use binom::{boundary, cascade, CascadeRep, CascadeTerm};
pub use canonical::{
    canonical, feasibility, is_cutset_profile, simulate_sets, uv, CanonicalCollection,
    Feasibility, Profile, SimulatedSets, UvVectors, DEFAULT_MATERIALIZE_BUDGET,
};
pub use colex::{rank, unrank, Family, Segment, Subset};
pub use constructions::{
    double_by_complements, exhaustive_feasible, is_cutset, three_level, two_level,
    DoubledFamily, MultiFamily, ThreeLevelCutset,
};
pub use error::{Error, Result};
pub use profiles::{
    conjectured_g, g, g_bounds, g_closed_form, g_level1, g_table,
    infeasible_symmetric_profile, GBounds, GRow, GTable,
};
