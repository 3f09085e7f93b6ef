//! The squashed (colexicographic) order on subsets of `[n] = {1, ..., n}`.
//!
//! For two sets of the same size, `A` precedes `B` when the largest element
//! of the symmetric difference lies in `B`. Within one level of the Boolean
//! lattice this is a total order; the position of a set, counted from 1, is
//! its *rank*:
//!
//! ```text
//! rank({c_1 < c_2 < ... < c_m}) = 1 + sum_i C(c_i - 1, i)
//! ```
//!
//! The first `K` sets of a level form the *initial collection* `F_m(K)` and
//! the last `K` the *last collection* `L_m(K)`; both are empty for `K <= 0`.
//! Shadows (all sets obtained by removing one element) and shades (adding
//! one element) connect adjacent levels. Contiguous rank ranges are cheap to
//! carry around symbolically as [`Segment`]s and can be materialized into
//! explicit families on demand.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::binom::binomial;
use crate::error::{Error, Result};

/// A finite subset of positive integers, stored strictly increasing.
///
/// The ordering is by size first, then squashed order within a size; this
/// makes `BTreeSet<Subset>` iterate levels bottom-up, each in colex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subset(Vec<u32>);

impl Subset {
    /// Builds a subset from strictly increasing elements `>= 1`.
    pub fn new(elements: Vec<u32>) -> Result<Self> {
        if elements.first().is_some_and(|&e| e == 0) {
            return Err(Error::invalid("subset elements are 1-based"));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid(
                "subset elements must be strictly increasing",
            ));
        }
        Ok(Subset(elements))
    }

    fn new_unchecked(elements: Vec<u32>) -> Self {
        debug_assert!(Subset::new(elements.clone()).is_ok());
        Subset(elements)
    }

    pub fn empty() -> Self {
        Subset(Vec::new())
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    /// The set with one element added; errors if already present.
    pub fn with(&self, e: u32) -> Result<Self> {
        if e == 0 {
            return Err(Error::invalid("subset elements are 1-based"));
        }
        match self.0.binary_search(&e) {
            Ok(_) => Err(Error::invalid("element already present")),
            Err(pos) => {
                let mut v = self.0.clone();
                v.insert(pos, e);
                Ok(Subset(v))
            }
        }
    }

    /// The complement within `[n]`.
    pub fn complement(&self, n: u32) -> Result<Self> {
        if self.0.last().is_some_and(|&e| e > n) {
            return Err(Error::invalid("subset has elements beyond the ground set"));
        }
        let v = (1..=n).filter(|e| !self.contains(*e)).collect();
        Ok(Subset(v))
    }

    /// Bitmask with bit `e - 1` set for each element `e`; requires all
    /// elements `<= 64`.
    pub fn bitmask(&self) -> u64 {
        debug_assert!(self.0.last().is_none_or(|&e| e <= 64));
        self.0.iter().fold(0u64, |acc, &e| acc | 1u64 << (e - 1))
    }
}

fn colex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| colex_cmp(&self.0, &other.0))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// Squashed-order comparison of two sets of equal size.
pub fn compare_squashed(a: &Subset, b: &Subset) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::invalid(
            "squashed order compares sets of equal size",
        ));
    }
    Ok(colex_cmp(a.elements(), b.elements()))
}

/// The 1-based squashed-order rank of `a` within its level.
pub fn rank(a: &Subset) -> BigUint {
    let mut r = BigUint::one();
    for (i, &c) in a.elements().iter().enumerate() {
        r += binomial((c - 1) as u64, (i + 1) as i64);
    }
    r
}

/// The `m`-subset of `[n]` with squashed-order rank `k` (1-based).
pub fn unrank(k: &BigUint, m: u32, n: u32) -> Result<Subset> {
    if m > n {
        return Err(Error::invalid("level exceeds ground-set size"));
    }
    let total = binomial(n as u64, m as i64);
    if k.is_zero() || *k > total {
        return Err(Error::invalid(format!(
            "rank {k} out of range 1..={total} for level {m} of [{n}]"
        )));
    }
    let mut rem = k - 1u32;
    let mut elems = vec![0u32; m as usize];
    for i in (1..=m).rev() {
        // Largest c in [i-1, n-1] with C(c, i) <= rem; the element is c + 1.
        let mut lo = i - 1;
        let mut hi = n - 1;
        while lo < hi {
            let mid = (lo + hi + 1) / 2;
            if binomial(mid as u64, i as i64) <= rem {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        rem -= binomial(lo as u64, i as i64);
        elems[(i - 1) as usize] = lo + 1;
    }
    debug_assert!(rem.is_zero());
    Ok(Subset::new_unchecked(elems))
}

/// Advances `elems` in place to its colex successor among `m`-subsets of
/// `[n]`; returns `false` when it is already the last set.
fn next_colex(elems: &mut [u32], n: u32) -> bool {
    let m = elems.len();
    for i in 0..m {
        let cap = if i + 1 < m { elems[i + 1] - 1 } else { n };
        if elems[i] < cap {
            elems[i] += 1;
            for (j, e) in elems[..i].iter_mut().enumerate() {
                *e = (j + 1) as u32;
            }
            return true;
        }
    }
    false
}

/// A family of equal-size subsets of `[n]`: one level of the lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    n: u32,
    level: u32,
    members: BTreeSet<Subset>,
}

impl Family {
    pub fn new(n: u32, level: u32, members: impl IntoIterator<Item = Subset>) -> Result<Self> {
        if level > n {
            return Err(Error::invalid("level exceeds ground-set size"));
        }
        let members: BTreeSet<Subset> = members.into_iter().collect();
        for s in &members {
            if s.len() != level as usize {
                return Err(Error::invalid(format!(
                    "family at level {level} contains a set of size {}",
                    s.len()
                )));
            }
            if s.elements().last().is_some_and(|&e| e > n) {
                return Err(Error::invalid(format!(
                    "set {s} has elements beyond the ground set [{n}]"
                )));
            }
        }
        Ok(Family { n, level, members })
    }

    pub fn empty(n: u32, level: u32) -> Result<Self> {
        Family::new(n, level, [])
    }

    /// All `C(n, level)` sets of the level.
    pub fn full_level(n: u32, level: u32) -> Result<Self> {
        Segment::full(n, level)?.materialize()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in colex order.
    pub fn members(&self) -> &BTreeSet<Subset> {
        &self.members
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.members.contains(s)
    }

    /// Set difference, within the same level of the same ground set.
    pub fn difference(&self, other: &Family) -> Result<Family> {
        if self.n != other.n || self.level != other.level {
            return Err(Error::invalid("families live on different levels"));
        }
        Ok(Family {
            n: self.n,
            level: self.level,
            members: self.members.difference(&other.members).cloned().collect(),
        })
    }
}

/// The initial collection `F_m(K)`: the first `K` sets of level `m` in
/// squashed order; empty for `K <= 0`. Errors if `K > C(n, m)`.
pub fn initial(k: i64, m: u32, n: u32) -> Result<Family> {
    if m > n {
        return Err(Error::invalid("level exceeds ground-set size"));
    }
    let end = if k <= 0 { BigUint::zero() } else { BigUint::from(k as u64) };
    Segment::new(n, m, BigUint::one(), end)?.materialize()
}

/// The last collection `L_m(K)`: the last `K` sets of level `m` in squashed
/// order; empty for `K <= 0`. Errors if `K > C(n, m)`.
pub fn last(k: i64, m: u32, n: u32) -> Result<Family> {
    if m > n {
        return Err(Error::invalid("level exceeds ground-set size"));
    }
    let total = binomial(n as u64, m as i64);
    if k <= 0 {
        // An empty segment parked just past the top of the level.
        return Segment::new(n, m, &total + 1u32, total)?.materialize();
    }
    let k = BigUint::from(k as u64);
    if k > total {
        return Err(Error::invalid(format!(
            "last collection of {k} sets exceeds level size {total}"
        )));
    }
    Segment::new(n, m, &total - &k + 1u32, total)?.materialize()
}

/// All sets obtained from members of `b` by deleting one element.
pub fn shadow(b: &Family) -> Result<Family> {
    if b.level == 0 {
        return Err(Error::invalid("shadow requires level >= 1"));
    }
    let mut out = BTreeSet::new();
    for s in &b.members {
        let e = s.elements();
        for drop_idx in 0..e.len() {
            let mut v = Vec::with_capacity(e.len() - 1);
            v.extend_from_slice(&e[..drop_idx]);
            v.extend_from_slice(&e[drop_idx + 1..]);
            out.insert(Subset::new_unchecked(v));
        }
    }
    Ok(Family {
        n: b.n,
        level: b.level - 1,
        members: out,
    })
}

/// All sets obtained from members of `b` by adding one element of `[n]`.
pub fn shade(b: &Family) -> Result<Family> {
    if b.level >= b.n {
        return Err(Error::invalid("shade requires level <= n - 1"));
    }
    let mut out = BTreeSet::new();
    for s in &b.members {
        for e in 1..=b.n {
            if !s.contains(e) {
                out.insert(s.with(e).expect("e is not in s"));
            }
        }
    }
    Ok(Family {
        n: b.n,
        level: b.level + 1,
        members: out,
    })
}

/// A contiguous run of squashed-order ranks within one level: the sets with
/// ranks `start ..= end` (1-based, inclusive). Empty segments are encoded as
/// `start == end + 1`, which records *where* the empty run sits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    n: u32,
    level: u32,
    start: BigUint,
    end: BigUint,
}

impl Segment {
    pub fn new(n: u32, level: u32, start: BigUint, end: BigUint) -> Result<Self> {
        if level > n {
            return Err(Error::invalid("level exceeds ground-set size"));
        }
        if start.is_zero() {
            return Err(Error::invalid("segment ranks are 1-based"));
        }
        if end > binomial(n as u64, level as i64) {
            return Err(Error::invalid(format!(
                "segment end {end} exceeds level size C({n},{level})"
            )));
        }
        if start > &end + 1u32 {
            return Err(Error::invalid(
                "segment start may exceed its end by at most one (the empty segment)",
            ));
        }
        Ok(Segment { n, level, start, end })
    }

    /// The whole level as one segment.
    pub fn full(n: u32, level: u32) -> Result<Self> {
        let total = binomial(n as u64, level as i64);
        Segment::new(n, level, BigUint::one(), total)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn start(&self) -> &BigUint {
        &self.start
    }

    pub fn end(&self) -> &BigUint {
        &self.end
    }

    pub fn is_empty(&self) -> bool {
        self.start > self.end
    }

    /// Number of sets in the segment.
    pub fn len(&self) -> BigUint {
        if self.is_empty() {
            BigUint::zero()
        } else {
            &self.end - &self.start + 1u32
        }
    }

    pub fn contains_rank(&self, r: &BigUint) -> bool {
        *r >= self.start && *r <= self.end
    }

    /// Lists the segment's sets explicitly, in colex order.
    pub fn materialize(&self) -> Result<Family> {
        if self.is_empty() {
            return Family::empty(self.n, self.level);
        }
        let count = self.len().to_usize().ok_or_else(|| {
            Error::budget(format!("segment of {} sets is too large to list", self.len()))
        })?;
        let first = unrank(&self.start, self.level, self.n)?;
        let mut elems = first.elements().to_vec();
        let mut members = BTreeSet::new();
        members.insert(first);
        for _ in 1..count {
            let advanced = next_colex(&mut elems, self.n);
            debug_assert!(advanced, "segment end is within the level");
            members.insert(Subset::new_unchecked(elems.clone()));
        }
        Ok(Family {
            n: self.n,
            level: self.level,
            members,
        })
    }
}
