//! Profiles of cutsets and the canonical collection.
//!
//! A *cutset* in the Boolean lattice of subsets of `[n]` is a collection of
//! sets meeting every maximal chain; its *profile* `(f_0, ..., f_n)` counts
//! members per level. Whether a profile is achievable by some cutset is
//! decided exactly by two vectors computed with the boundary operator:
//!
//! ```text
//! u_0 = 1,   u_{m+1} = boundary(u_m - f_m, n - m)
//! v_n = 1,   v_{m-1} = boundary(v_m - f_m, m)
//! ```
//!
//! `u_m` is the least possible number of "still uncovered" sets at level `m`
//! for chains climbing from the bottom, `v_m` the same climbing down from the
//! top. The profile is a cutset profile if and only if
//! `u_m + v_m - f_m <= C(n, m)` — and this inequality holds at one level
//! exactly when it holds at every level.
//!
//! When a profile is feasible there is a *canonical* cutset witnessing it,
//! assembled from contiguous squashed-order rank segments: below a chosen
//! pivot level the segment at level `i` sits just past the last `u_i` sets,
//! above the pivot just inside the first `v_i` sets. The segments can be
//! materialized into explicit families, or rebuilt independently by walking
//! the lattice with explicit shadows and shades ([`simulate_sets`]) — the two
//! routes must agree, which the tests exercise heavily.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::binom::{binomial, boundary};
use crate::colex::{initial, last, rank, shade, shadow, Family, Segment, Subset};
use crate::error::{Error, Result};

/// Refuse to materialize any nonempty level wider than this many sets unless
/// the caller raises the budget explicitly.
pub const DEFAULT_MATERIALIZE_BUDGET: u64 = 1_000_000;

/// A level-size profile `(f_0, ..., f_n)` with `0 <= f_i <= C(n, i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    n: u32,
    counts: Vec<BigUint>,
}

impl Profile {
    pub fn new(n: u32, counts: Vec<BigUint>) -> Result<Self> {
        if counts.len() != n as usize + 1 {
            return Err(Error::invalid(format!(
                "profile for n = {n} needs {} entries, got {}",
                n + 1,
                counts.len()
            )));
        }
        for (i, f) in counts.iter().enumerate() {
            let width = binomial(n as u64, i as i64);
            if *f > width {
                return Err(Error::invalid(format!(
                    "profile entry f_{i} = {f} exceeds level size C({n},{i}) = {width}"
                )));
            }
        }
        Ok(Profile { n, counts })
    }

    pub fn from_counts(n: u32, counts: &[u64]) -> Result<Self> {
        Profile::new(n, counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// The all-zero profile (never a cutset profile).
    pub fn zero(n: u32) -> Self {
        Profile {
            n,
            counts: vec![BigUint::zero(); n as usize + 1],
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, level: u32) -> &BigUint {
        &self.counts[level as usize]
    }

    /// A copy with one entry replaced (revalidated).
    pub fn with_count(&self, level: u32, value: BigUint) -> Result<Self> {
        let mut counts = self.counts.clone();
        counts[level as usize] = value;
        Profile::new(self.n, counts)
    }

    /// Entrywise `self >= other`.
    pub fn dominates(&self, other: &Profile) -> bool {
        self.n == other.n
            && self
                .counts
                .iter()
                .zip(&other.counts)
                .all(|(a, b)| a >= b)
    }

    /// Levels carrying at least one set: `(lowest, highest)`.
    pub fn support(&self) -> Option<(u32, u32)> {
        let lo = self.counts.iter().position(|c| !c.is_zero())?;
        let hi = self.counts.iter().rposition(|c| !c.is_zero())?;
        Some((lo as u32, hi as u32))
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

/// The pair of uncovered-count vectors attached to a profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UvVectors {
    pub u: Vec<BigUint>,
    pub v: Vec<BigUint>,
}

/// Computes `u` (bottom-up) and `v` (top-down) for a profile.
pub fn uv(p: &Profile) -> UvVectors {
    let n = p.n as usize;
    let mut u = vec![BigUint::zero(); n + 1];
    u[0] = BigUint::one();
    for m in 0..n {
        let diff = BigInt::from(u[m].clone()) - BigInt::from(p.counts[m].clone());
        u[m + 1] = boundary(&diff, (n - m) as u32).expect("index n - m >= 1");
    }
    let mut v = vec![BigUint::zero(); n + 1];
    v[n] = BigUint::one();
    for m in (1..=n).rev() {
        let diff = BigInt::from(v[m].clone()) - BigInt::from(p.counts[m].clone());
        v[m - 1] = boundary(&diff, m as u32).expect("index m >= 1");
    }
    debug_assert!((0..=n).all(|m| u[m] <= binomial(p.n as u64, m as i64)));
    debug_assert!((0..=n).all(|m| v[m] <= binomial(p.n as u64, m as i64)));
    UvVectors { u, v }
}

/// The feasibility verdict for a profile, with the per-level slack
/// `C(n, m) + f_m - u_m - v_m` that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feasibility {
    pub uv: UvVectors,
    /// `C(n, m) + f_m - u_m - v_m` for each level `m`.
    pub slack: Vec<BigInt>,
    /// Level at which `feasible` was read off (the widest level).
    pub check_level: u32,
    pub feasible: bool,
}

impl Feasibility {
    /// Whether every level yields the same verdict as `check_level`.
    /// The theory says this always holds; it is re-checked in tests and on
    /// demand rather than on every call.
    pub fn verdicts_agree(&self) -> bool {
        self.slack
            .iter()
            .all(|s| (!s.is_negative()) == self.feasible)
    }
}

/// Full feasibility analysis of a profile.
pub fn feasibility(p: &Profile) -> Feasibility {
    let uv = uv(p);
    let n = p.n;
    let slack: Vec<BigInt> = (0..=n as usize)
        .map(|m| {
            BigInt::from(binomial(n as u64, m as i64)) + BigInt::from(p.counts[m].clone())
                - BigInt::from(uv.u[m].clone())
                - BigInt::from(uv.v[m].clone())
        })
        .collect();
    let check_level = n / 2;
    let feasible = !slack[check_level as usize].is_negative();
    Feasibility {
        uv,
        slack,
        check_level,
        feasible,
    }
}

/// Whether `p` is the profile of some cutset.
pub fn is_cutset_profile(p: &Profile) -> bool {
    feasibility(p).feasible
}

fn up_segment(n: u32, level: u32, u: &BigUint, f: &BigUint) -> Segment {
    let width = binomial(n as u64, level as i64);
    debug_assert!(*u <= width);
    let start = &width - u + 1u32;
    let end = (&width - u + f).min(width);
    Segment::new(n, level, start, end).expect("up segment is within its level")
}

fn down_segment(n: u32, level: u32, v: &BigUint, f: &BigUint) -> Segment {
    let start = if v > f {
        v - f + 1u32
    } else {
        BigUint::one()
    };
    Segment::new(n, level, start, v.clone()).expect("down segment is within its level")
}

/// The canonical collection of a profile: one rank segment per level,
/// up-anchored at and below the pivot, down-anchored above it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalCollection {
    profile: Profile,
    pivot: u32,
    uv: UvVectors,
    segments: Vec<Segment>,
}

/// Builds the canonical collection of `p` with the given pivot level.
///
/// The collection is defined for every profile; when the profile is feasible
/// it is a cutset whose level `i` carries `min(f_i, u_i)` (below the pivot)
/// or `min(f_i, v_i)` (above) sets, and when it is infeasible the collection
/// is not a cutset.
pub fn canonical(p: &Profile, pivot: u32) -> Result<CanonicalCollection> {
    if pivot > p.n {
        return Err(Error::invalid("pivot level exceeds n"));
    }
    let uv = uv(p);
    let segments = (0..=p.n)
        .map(|i| {
            if i <= pivot {
                up_segment(p.n, i, &uv.u[i as usize], &p.counts[i as usize])
            } else {
                down_segment(p.n, i, &uv.v[i as usize], &p.counts[i as usize])
            }
        })
        .collect();
    Ok(CanonicalCollection {
        profile: p.clone(),
        pivot,
        uv,
        segments,
    })
}

impl CanonicalCollection {
    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn pivot(&self) -> u32 {
        self.pivot
    }

    pub fn uv(&self) -> &UvVectors {
        &self.uv
    }

    /// One segment per level, `0..=n`.
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Number of sets the collection actually places at a level.
    pub fn level_count(&self, level: u32) -> BigUint {
        self.segments[level as usize].len()
    }

    pub fn total_size(&self) -> BigUint {
        self.segments.iter().map(Segment::len).sum()
    }

    /// Materializes every level into an explicit family.
    ///
    /// Refuses (rather than thrashing) if any nonempty level is wider than
    /// `budget` sets.
    pub fn emit_sets(&self, budget: u64) -> Result<Vec<Family>> {
        let n = self.profile.n;
        for seg in &self.segments {
            if !seg.is_empty() && binomial(n as u64, seg.level() as i64) > BigUint::from(budget) {
                return Err(Error::budget(format!(
                    "level {} has C({n},{}) sets, beyond the materialization budget {budget}",
                    seg.level(),
                    seg.level()
                )));
            }
        }
        self.segments.iter().map(Segment::materialize).collect()
    }
}

/// A canonical collection rebuilt from explicit sets, confirming the
/// arithmetic route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimulatedSets {
    /// The collection reassembled from explicit families: `u`/`v` are
    /// measured set counts and each segment's ranks come from the formulas
    /// applied to those counts.
    pub collection: CanonicalCollection,
    /// The explicit family chosen at each level, `0..=n`.
    pub families: Vec<Family>,
}

/// Rebuilds the canonical collection by explicit lattice walking: frontiers
/// are maintained as actual families, advanced with [`shade`]/[`shadow`], and
/// every chosen level is an explicit set difference of last (or initial)
/// collections. No boundary-operator arithmetic is involved, so agreement
/// with [`canonical`] checks the cascade computations against the lattice.
pub fn simulate_sets(p: &Profile, pivot: u32, budget: u64) -> Result<SimulatedSets> {
    let n = p.n;
    if pivot > n {
        return Err(Error::invalid("pivot level exceeds n"));
    }
    let widest = binomial(n as u64, (n / 2) as i64);
    if widest > BigUint::from(budget) {
        return Err(Error::budget(format!(
            "simulation walks full levels; C({n},{}) = {widest} exceeds budget {budget}",
            n / 2
        )));
    }

    let to_i64 = |b: &BigUint| -> i64 { b.to_i64().expect("bounded by the budget") };

    // Bottom-up sweep: the frontier starts at the empty set and climbs.
    let mut up_chosen: Vec<Family> = Vec::with_capacity(n as usize + 1);
    let mut u_sizes: Vec<BigUint> = Vec::with_capacity(n as usize + 1);
    let mut frontier = Family::new(n, 0, [Subset::empty()])?;
    for m in 0..=n {
        let u_m = frontier.len() as i64;
        u_sizes.push(BigUint::from(frontier.len()));
        assert_eq!(
            frontier,
            last(u_m, m, n)?,
            "upward frontier at level {m} is a last collection"
        );
        let kept = last(u_m - to_i64(p.count(m)), m, n)?;
        up_chosen.push(frontier.difference(&kept)?);
        if m < n {
            frontier = shade(&kept)?;
        }
    }

    // Top-down sweep: the frontier starts at [n] and descends.
    let mut down_chosen: Vec<Family> = vec![Family::empty(n, 0)?; n as usize + 1];
    let mut v_sizes: Vec<BigUint> = vec![BigUint::zero(); n as usize + 1];
    let mut frontier = Family::full_level(n, n)?;
    for m in (0..=n).rev() {
        let v_m = frontier.len() as i64;
        v_sizes[m as usize] = BigUint::from(frontier.len());
        assert_eq!(
            frontier,
            initial(v_m, m, n)?,
            "downward frontier at level {m} is an initial collection"
        );
        let kept = initial(v_m - to_i64(p.count(m)), m, n)?;
        down_chosen[m as usize] = frontier.difference(&kept)?;
        if m > 0 {
            frontier = shadow(&kept)?;
        }
    }

    let measured = UvVectors {
        u: u_sizes,
        v: v_sizes,
    };
    let mut segments = Vec::with_capacity(n as usize + 1);
    let mut families = Vec::with_capacity(n as usize + 1);
    for i in 0..=n {
        let fam = if i <= pivot {
            up_chosen[i as usize].clone()
        } else {
            down_chosen[i as usize].clone()
        };
        let seg = if i <= pivot {
            up_segment(n, i, &measured.u[i as usize], p.count(i))
        } else {
            down_segment(n, i, &measured.v[i as usize], p.count(i))
        };
        // The explicit family must occupy exactly the segment's rank range.
        assert_eq!(BigUint::from(fam.len()), seg.len());
        if let (Some(first), Some(last_set)) =
            (fam.members().iter().next(), fam.members().iter().last())
        {
            assert_eq!(&rank(first), seg.start());
            assert_eq!(&rank(last_set), seg.end());
        }
        segments.push(seg);
        families.push(fam);
    }

    Ok(SimulatedSets {
        collection: CanonicalCollection {
            profile: p.clone(),
            pivot,
            uv: measured,
            segments,
        },
        families,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(n: u32, counts: &[u64]) -> Profile {
        Profile::from_counts(n, counts).unwrap()
    }

    fn bigs(values: &[u64]) -> Vec<BigUint> {
        values.iter().map(|&v| BigUint::from(v)).collect()
    }

    #[test]
    fn profile_validation() {
        assert!(Profile::from_counts(5, &[0, 2, 5, 6, 0, 0]).is_ok());
        assert!(Profile::from_counts(5, &[0, 2, 5, 6, 0]).is_err());
        assert!(Profile::from_counts(5, &[0, 6, 0, 0, 0, 0]).is_err());
        assert!(Profile::from_counts(5, &[2, 0, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn uv_on_worked_examples() {
        // A feasible five-element-ground-set profile...
        let f = profile(5, &[0, 2, 5, 6, 0, 0]);
        let got = uv(&f);
        assert_eq!(got.u, bigs(&[1, 5, 9, 6, 0, 0]));
        assert_eq!(got.v, bigs(&[0, 2, 6, 10, 5, 1]));

        // ...and an infeasible one differing only by swapping two entries.
        let g = profile(5, &[0, 2, 6, 5, 0, 0]);
        let got = uv(&g);
        assert_eq!(got.u, bigs(&[1, 5, 9, 6, 2, 1]));
        assert_eq!(got.v, bigs(&[1, 3, 8, 10, 5, 1]));
    }

    #[test]
    fn feasibility_on_worked_examples() {
        let f = profile(5, &[0, 2, 5, 6, 0, 0]);
        let fe = feasibility(&f);
        assert!(fe.feasible);
        assert!(fe.verdicts_agree());
        // This profile is tight: zero slack at every level.
        assert!(fe.slack.iter().all(|s| s.is_zero()));

        let g = profile(5, &[0, 2, 6, 5, 0, 0]);
        let fe = feasibility(&g);
        assert!(!fe.feasible);
        assert!(fe.verdicts_agree());

        // With nothing at the extreme levels, feasibility shows up as
        // u_n = 0 and v_0 = 0.
        assert!(uv(&f).u[5].is_zero() && uv(&f).v[0].is_zero());
        assert!(!uv(&g).u[5].is_zero() && !uv(&g).v[0].is_zero());
    }

    #[test]
    fn zero_and_full_profiles() {
        for n in 0..=8u32 {
            assert!(!is_cutset_profile(&Profile::zero(n)));
            // The full middle level alone is a cutset.
            let mut counts = vec![0u64; n as usize + 1];
            counts[n as usize / 2] = binomial(n as u64, (n / 2) as i64).to_u64().unwrap();
            assert!(is_cutset_profile(&profile(n, &counts)));
        }
        // n = 0: the profile (1) — just the empty set — is a cutset.
        assert!(is_cutset_profile(&profile(0, &[1])));
    }

    #[test]
    fn canonical_feasible_example_is_pivot_independent() {
        // A zero-slack profile: up- and down-anchored segments coincide, so
        // every pivot yields the same collection of sets.
        let f = profile(5, &[0, 2, 5, 6, 0, 0]);
        let reference = canonical(&f, 5).unwrap();
        let emitted = reference.emit_sets(DEFAULT_MATERIALIZE_BUDGET).unwrap();
        for pivot in 0..=4 {
            let c = canonical(&f, pivot).unwrap();
            assert_eq!(c.emit_sets(DEFAULT_MATERIALIZE_BUDGET).unwrap(), emitted);
        }
    }

    #[test]
    fn canonical_segments_on_worked_example() {
        let f = profile(5, &[0, 2, 5, 6, 0, 0]);
        let c = canonical(&f, 5).unwrap();
        let ranges: Vec<(u64, u64)> = c
            .segments()
            .iter()
            .map(|s| (s.start().to_u64().unwrap(), s.end().to_u64().unwrap()))
            .collect();
        assert_eq!(ranges, vec![(1, 0), (1, 2), (2, 6), (5, 10), (6, 5), (2, 1)]);
        assert_eq!(c.total_size(), BigUint::from(13u32));
    }

    #[test]
    fn canonical_infeasible_example_segments() {
        let g = profile(5, &[0, 2, 6, 5, 0, 0]);
        let c = canonical(&g, 5).unwrap();
        let ranges: Vec<(u64, u64)> = c
            .segments()
            .iter()
            .map(|s| (s.start().to_u64().unwrap(), s.end().to_u64().unwrap()))
            .collect();
        // Level 2 takes ranks 2..=7 (its extra set is {1,5}, rank 7); levels
        // 4 and 5 are starved: u_4 = 2 and u_5 = 1 sets stay uncovered but
        // f gives them nothing.
        assert_eq!(ranges, vec![(1, 0), (1, 2), (2, 7), (5, 9), (4, 3), (1, 0)]);
    }

    #[test]
    fn emit_sets_respects_budget() {
        let mut counts = vec![0u64; 31];
        counts[15] = 1;
        let p = profile(30, &counts);
        let c = canonical(&p, 15).unwrap();
        let err = c.emit_sets(DEFAULT_MATERIALIZE_BUDGET).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded(_)));
        // Empty levels beyond the budget are fine: only level 15 is wide,
        // and with a pivot of 30 it is up-anchored with u_15 huge.
        assert!(c.emit_sets(200_000_000).is_ok());
    }

    #[test]
    fn simulate_agrees_with_canonical_on_worked_examples() {
        for counts in [[0u64, 2, 5, 6, 0, 0], [0, 2, 6, 5, 0, 0]] {
            let p = profile(5, &counts);
            for pivot in 0..=5 {
                let sim = simulate_sets(&p, pivot, DEFAULT_MATERIALIZE_BUDGET).unwrap();
                let arith = canonical(&p, pivot).unwrap();
                assert_eq!(sim.collection, arith);
                assert_eq!(
                    sim.families,
                    arith.emit_sets(DEFAULT_MATERIALIZE_BUDGET).unwrap()
                );
            }
        }
    }

    #[test]
    fn simulate_respects_budget() {
        let p = Profile::zero(30);
        assert!(matches!(
            simulate_sets(&p, 15, 1_000_000),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn profile_helpers() {
        let p = profile(5, &[0, 2, 5, 6, 0, 0]);
        assert_eq!(p.support(), Some((1, 3)));
        assert_eq!(p.total(), BigUint::from(13u32));
        assert!(Profile::zero(5).support().is_none());
        let q = p.with_count(4, BigUint::from(2u32)).unwrap();
        assert!(q.dominates(&p));
        assert!(!p.dominates(&q));
        assert!(p.with_count(4, BigUint::from(6u32)).is_err());
    }
}
