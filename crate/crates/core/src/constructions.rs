//! Explicit cutset constructions, and brute-force oracles that check
//! cutset-ness and profile feasibility directly against the definitions.
//!
//! The oracles are deliberately independent of the boundary-operator
//! machinery: [`is_cutset`] runs a reachability sweep over all of `2^[n]`,
//! and [`exhaustive_feasible`] tries every placement of a profile level by
//! level. They exist to validate the fast arithmetic routes on small ground
//! sets.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::canonical::Profile;
use crate::colex::{Family, Subset};
use crate::error::{Error, Result};

/// Largest ground set the reachability oracle will sweep (2^25 nodes).
pub const CUTSET_ORACLE_MAX_N: u32 = 25;

/// Largest ground set the exhaustive profile search will attempt.
pub const EXHAUSTIVE_MAX_N: u32 = 5;

/// A collection of subsets of `[n]` of arbitrary sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiFamily {
    n: u32,
    members: BTreeSet<Subset>,
}

impl MultiFamily {
    pub fn new(n: u32, members: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let members: BTreeSet<Subset> = members.into_iter().collect();
        for s in &members {
            if s.elements().last().is_some_and(|&e| e > n) {
                return Err(Error::invalid(format!(
                    "set {s} has elements beyond the ground set [{n}]"
                )));
            }
        }
        Ok(MultiFamily { n, members })
    }

    /// The union of whole levels.
    pub fn from_families<'a>(
        n: u32,
        families: impl IntoIterator<Item = &'a Family>,
    ) -> Result<Self> {
        let mut members = Vec::new();
        for f in families {
            if f.n() != n {
                return Err(Error::invalid("family ground set differs"));
            }
            members.extend(f.members().iter().cloned());
        }
        MultiFamily::new(n, members)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &BTreeSet<Subset> {
        &self.members
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.members.contains(s)
    }

    /// Counts members per level.
    pub fn profile(&self) -> Profile {
        let mut counts = vec![BigUint::ZERO; self.n as usize + 1];
        for s in &self.members {
            counts[s.len()] += 1u32;
        }
        Profile::new(self.n, counts).expect("distinct sets cannot exceed a level")
    }
}

/// The two-level cutset: all `m`-subsets of `[n-1]` together with all
/// `(m+1)`-subsets of `[n]` containing `n`. Its profile is
/// `(C(n-1,m), C(n-1,m))` on levels `m` and `m+1`.
pub fn two_level(n: u32, m: u32) -> Result<MultiFamily> {
    if n == 0 || m > n - 1 {
        return Err(Error::invalid("two-level construction needs 0 <= m <= n-1"));
    }
    let mut members = Vec::new();
    for a in Family::full_level(n - 1, m)?.members() {
        members.push(a.clone());
        members.push(a.with(n)?);
    }
    MultiFamily::new(n, members)
}

/// A three-level cutset on levels `m`, `m+1`, `m+2` meeting the extremal
/// profile `(f+1, f, f)` where `f + 1 = sum_{j=0}^{m} C(n-2j-2, m-j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeLevelCutset {
    pub q: Family,
    pub r: Family,
    pub s: Family,
}

impl ThreeLevelCutset {
    pub fn union(&self) -> MultiFamily {
        MultiFamily::from_families(self.q.n(), [&self.q, &self.r, &self.s])
            .expect("levels share the ground set")
    }
}

/// Builds the three-level construction for `1 <= m <= n/2 - 1`.
///
/// With markers `M_j = {n-1, n-3, ..., n-2j+1}`:
///
/// * `Q_j = { A ∪ M_j : A ⊆ [n-2j-2], |A| = m-j }` for `j = 0..=m`,
/// * `R_j = { Q ∪ {n-2j+2} : Q ∈ Q_{j-1} }` for `j = 1..=m`,
/// * `S_j = { R ∪ {n-2j+1} : R ∈ R_j }` for `j = 1..=m`,
///
/// and the result is `Q = ∪ Q_j`, `R = ∪ R_j`, `S = ∪ S_j`. Chains missing
/// `Q_0 ∪ R_1 ∪ S_1` are trapped in the copy of `2^[n-2]` of sets containing
/// `n-1` but not `n`, where the same construction recurses — which is why
/// the union is a cutset.
pub fn three_level(n: u32, m: u32) -> Result<ThreeLevelCutset> {
    if m < 1 || 2 * (m + 1) > n {
        return Err(Error::invalid(
            "three-level construction needs 1 <= m <= n/2 - 1",
        ));
    }
    let q_layer = |j: u32| -> Result<Vec<Subset>> {
        let markers: Vec<u32> = (1..=j).map(|t| n + 1 - 2 * t).collect();
        let mut out = Vec::new();
        for a in Family::full_level(n - 2 * j - 2, m - j)?.members() {
            let mut v = a.elements().to_vec();
            // Markers all exceed n - 2j - 2, so appending them in increasing
            // order keeps the element list sorted.
            v.extend(markers.iter().rev());
            out.push(Subset::new(v)?);
        }
        Ok(out)
    };

    let mut q = Vec::new();
    let mut r = Vec::new();
    let mut s = Vec::new();
    for j in 0..=m {
        q.extend(q_layer(j)?);
    }
    for j in 1..=m {
        for base in q_layer(j - 1)? {
            let rj = base.with(n - 2 * j + 2)?;
            s.push(rj.with(n - 2 * j + 1)?);
            r.push(rj);
        }
    }

    let (ql, rl, sl) = (q.len(), r.len(), s.len());
    let q = Family::new(n, m, q)?;
    let r = Family::new(n, m + 1, r)?;
    let s = Family::new(n, m + 2, s)?;
    debug_assert_eq!((q.len(), r.len(), s.len()), (ql, rl, sl), "layers are disjoint");
    Ok(ThreeLevelCutset { q, r, s })
}

/// A doubled cutset, plus whether the input's cutset precondition was
/// actually verified (it is only checked when the oracle budget allows).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledFamily {
    pub family: MultiFamily,
    pub input_verified: bool,
}

/// Doubles a cutset of `2^[n-1]` into one of `2^[n]` by adjoining the
/// complements-in-`[n]` of all its members.
///
/// Requires the input's support to lie strictly below level `n/2`, so the
/// original and the complements do not collide. The input must be a cutset
/// of `2^[n-1]`; this is verified with [`is_cutset`] when `n - 1 <= 20` and
/// trusted otherwise (see [`DoubledFamily::input_verified`]).
pub fn double_by_complements(a: &MultiFamily, n: u32) -> Result<DoubledFamily> {
    if a.n() + 1 != n {
        return Err(Error::invalid(format!(
            "input lives in [{}], expected [{}]",
            a.n(),
            n - 1
        )));
    }
    let (_, hi) = a
        .profile()
        .support()
        .ok_or_else(|| Error::invalid("an empty collection is not a cutset"))?;
    if 2 * hi >= n {
        return Err(Error::invalid(
            "support must lie strictly below level n/2 to double",
        ));
    }
    let input_verified = if a.n() <= 20 {
        if !is_cutset(a)? {
            return Err(Error::invalid("input is not a cutset of its lattice"));
        }
        true
    } else {
        false
    };
    let mut members: Vec<Subset> = a.members().iter().cloned().collect();
    for s in a.members() {
        members.push(s.complement(n)?);
    }
    let family = MultiFamily::new(n, members)?;
    debug_assert_eq!(family.len(), 2 * a.len(), "halves cannot collide");
    Ok(DoubledFamily {
        family,
        input_verified,
    })
}

/// Whether `c` meets every maximal chain of `2^[n]`, by dynamic programming
/// over all `2^n` sets: a set is *reachable* if it is not in `c` and can be
/// reached from the empty set by single-element insertions avoiding `c`.
/// `c` is a cutset exactly when `[n]` is unreachable.
pub fn is_cutset(c: &MultiFamily) -> Result<bool> {
    let n = c.n();
    if n > CUTSET_ORACLE_MAX_N {
        return Err(Error::budget(format!(
            "cutset oracle sweeps 2^{n} sets; the limit is n <= {CUTSET_ORACLE_MAX_N}"
        )));
    }
    let size: usize = 1 << n;
    let words = size.div_ceil(64);
    let mut in_c = vec![0u64; words];
    for s in c.members() {
        let mask = s.bitmask() as usize;
        in_c[mask / 64] |= 1 << (mask % 64);
    }
    let get = |v: &[u64], i: usize| v[i / 64] >> (i % 64) & 1 == 1;
    let mut reach = vec![0u64; words];
    for mask in 0..size {
        if get(&in_c, mask) {
            continue;
        }
        let ok = if mask == 0 {
            true
        } else {
            let mut rest = mask;
            let mut found = false;
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                if get(&reach, mask ^ low) {
                    found = true;
                    break;
                }
                rest ^= low;
            }
            found
        };
        if ok {
            reach[mask / 64] |= 1 << (mask % 64);
        }
    }
    Ok(!get(&reach, size - 1))
}

/// Decides profile feasibility by exhaustive search: pick `f_m` sets at each
/// level in every possible way, propagating the set of "still escapable"
/// chains upward, with memoization on the surviving frontier. Exact but only
/// sensible for tiny `n`.
pub fn exhaustive_feasible(p: &Profile) -> Result<bool> {
    let n = p.n();
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::budget(format!(
            "exhaustive profile search is limited to n <= {EXHAUSTIVE_MAX_N}"
        )));
    }
    let counts: Vec<usize> = p
        .counts()
        .iter()
        .map(|c| c.to_usize().expect("tiny levels"))
        .collect();
    // Fixed node order per level (colex), and for each node the bitmask of
    // next-level nodes covering it.
    let mut levels: Vec<Vec<u64>> = Vec::with_capacity(n as usize + 1);
    for m in 0..=n {
        let masks = Family::full_level(n, m)?
            .members()
            .iter()
            .map(Subset::bitmask)
            .collect();
        levels.push(masks);
    }
    let mut ups: Vec<Vec<u32>> = Vec::with_capacity(n as usize);
    for m in 0..n as usize {
        let up = levels[m]
            .iter()
            .map(|&node| {
                let mut bits = 0u32;
                for (i, &next) in levels[m + 1].iter().enumerate() {
                    if next & node == node {
                        bits |= 1 << i;
                    }
                }
                bits
            })
            .collect();
        ups.push(up);
    }

    struct Search<'a> {
        n: usize,
        counts: &'a [usize],
        level_sizes: Vec<usize>,
        ups: Vec<Vec<u32>>,
        dead: Vec<HashSet<u32>>,
    }

    impl Search<'_> {
        fn escapes(&mut self, m: usize, frontier: u32) -> bool {
            // `frontier`: level-m sets reachable from the bottom avoiding
            // everything chosen so far. Returns true if some choice of the
            // remaining levels still cuts every chain.
            if frontier == 0 {
                return true;
            }
            if self.dead[m].contains(&frontier) {
                return false;
            }
            let indices: Vec<usize> = (0..self.level_sizes[m]).collect();
            for choice in indices.into_iter().combinations(self.counts[m]) {
                let chosen: u32 = choice.iter().fold(0, |acc, &i| acc | 1 << i);
                let survivors = frontier & !chosen;
                if survivors == 0 {
                    return true;
                }
                if m == self.n {
                    continue;
                }
                let mut next = 0u32;
                for i in 0..self.level_sizes[m] {
                    if survivors >> i & 1 == 1 {
                        next |= self.ups[m][i];
                    }
                }
                if self.escapes(m + 1, next) {
                    return true;
                }
            }
            self.dead[m].insert(frontier);
            false
        }
    }

    let mut search = Search {
        n: n as usize,
        counts: &counts,
        level_sizes: levels.iter().map(Vec::len).collect(),
        ups,
        dead: vec![HashSet::new(); n as usize + 1],
    };
    Ok(search.escapes(0, 1))
}
