//! Binomial coefficients, the `m`-binomial "cascade" representation, and the
//! boundary operator.
//!
//! Every integer `K >= 1` has a unique representation
//!
//! ```text
//! K = C(a_m, m) + C(a_{m-1}, m-1) + ... + C(a_t, t)
//! ```
//!
//! with `a_m > a_{m-1} > ... > a_t >= t >= 1`, obtained greedily: take the
//! largest `a_m` with `C(a_m, m) <= K` and recurse on the remainder with the
//! index lowered by one. The boundary operator lowers every index in this
//! representation:
//!
//! ```text
//! boundary(K, m) = C(a_m, m-1) + C(a_{m-1}, m-2) + ... + C(a_t, t-1)
//! ```
//!
//! extended by `boundary(K, m) = 0` for `K <= 0`. By the Kruskal–Katona
//! theorem this is exactly the shadow size of the first `K` sets of size `m`
//! in squashed (colexicographic) order, and a lower bound on the shadow size
//! of any `K` sets of size `m`.
//!
//! All arithmetic is exact big-integer arithmetic.

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Pascal-triangle rows grown on demand. Row `a` stores `C(a, 0..=a/2)`; the
/// upper half is read back through the symmetry `C(a, b) = C(a, a-b)`.
static PASCAL: RwLock<Vec<Vec<BigUint>>> = RwLock::new(Vec::new());

/// Largest row kept in the cache. Larger upper arguments fall back to the
/// multiplicative formula, which is still exact but not memoized.
const PASCAL_ROW_CAP: u64 = 1024;

fn binomial_cached(a: u64, b: u64) -> BigUint {
    debug_assert!(b <= a && a <= PASCAL_ROW_CAP);
    let a = a as usize;
    let b = (b as usize).min(a - b as usize);
    {
        let rows = PASCAL.read().unwrap();
        if a < rows.len() {
            return rows[a][b].clone();
        }
    }
    let mut rows = PASCAL.write().unwrap();
    while rows.len() <= a {
        let k = rows.len();
        let mut row = Vec::with_capacity(k / 2 + 1);
        row.push(BigUint::one());
        for j in 1..=k / 2 {
            let prev = &rows[k - 1];
            // Read C(k-1, j) through the stored half of the previous row.
            let half = |j: usize| -> &BigUint { &prev[j.min(k - 1 - j)] };
            row.push(half(j - 1) + half(j));
        }
        rows.push(row);
    }
    rows[a][b].clone()
}

fn binomial_mult(a: u64, b: u64) -> BigUint {
    let b = b.min(a - b);
    let mut r = BigUint::one();
    for i in 1..=b {
        // The running product of i consecutive integers is divisible by i!,
        // so each division here is exact.
        r *= a - b + i;
        r /= i;
    }
    r
}

/// `C(a, b)` as an exact big integer; zero when `b` is negative or exceeds `a`.
pub fn binomial(a: u64, b: i64) -> BigUint {
    if b < 0 {
        return BigUint::zero();
    }
    let b = b as u64;
    if b > a {
        return BigUint::zero();
    }
    if a <= PASCAL_ROW_CAP {
        binomial_cached(a, b)
    } else {
        binomial_mult(a, b)
    }
}

/// `C(a, b)` for an arbitrary-precision upper argument.
pub fn binomial_big(a: &BigUint, b: u32) -> BigUint {
    if let Some(small) = a.to_u64() {
        return binomial(small, b as i64);
    }
    // `a` exceeds u64, so certainly b <= a.
    let mut r = BigUint::one();
    let base = a - (b - 1) as u64; // a - b + 1
    for i in 0..b as u64 {
        r *= &base + i;
        r /= i + 1;
    }
    r
}

/// `C(a, b)` with a possibly negative upper argument, taken to be zero when
/// `a < 0`. The closed-form profile formulas use this for terms that vanish
/// off the end of a sum.
pub(crate) fn binomial_i(a: i64, b: i64) -> BigUint {
    if a < 0 {
        BigUint::zero()
    } else {
        binomial(a as u64, b)
    }
}

/// One term `C(upper, index)` of a cascade representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CascadeTerm {
    pub upper: BigUint,
    pub index: u32,
}

/// The `m`-binomial representation of a positive integer: a sum
/// `C(a_m, m) + ... + C(a_t, t)` with strictly decreasing upper arguments,
/// consecutive indices down from `m`, and `a_i >= i` throughout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CascadeRep {
    m: u32,
    terms: Vec<CascadeTerm>,
}

impl CascadeRep {
    /// Builds a representation from explicit terms, validating the shape
    /// invariants (nonempty, indices consecutive from the leading one,
    /// uppers strictly decreasing, `upper >= index >= 1`).
    pub fn from_terms(terms: Vec<CascadeTerm>) -> Result<Self> {
        let first = terms
            .first()
            .ok_or_else(|| Error::invalid("cascade representation must have at least one term"))?;
        let m = first.index;
        for (i, t) in terms.iter().enumerate() {
            if t.index < 1 {
                return Err(Error::invalid("cascade indices must be at least 1"));
            }
            if t.index as usize + i != m as usize {
                return Err(Error::invalid(
                    "cascade indices must decrease consecutively from the leading index",
                ));
            }
            if t.upper < BigUint::from(t.index) {
                return Err(Error::invalid(
                    "cascade upper arguments must be at least their index",
                ));
            }
            if i > 0 && terms[i - 1].upper <= t.upper {
                return Err(Error::invalid(
                    "cascade upper arguments must strictly decrease",
                ));
            }
        }
        Ok(CascadeRep { m, terms })
    }

    /// The leading index `m`.
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn terms(&self) -> &[CascadeTerm] {
        &self.terms
    }

    /// The integer this representation stands for.
    pub fn eval(&self) -> BigUint {
        self.terms
            .iter()
            .map(|t| binomial_big(&t.upper, t.index))
            .sum()
    }

    /// The value with every index lowered by one: `C(a_m, m-1) + ...`.
    pub fn boundary(&self) -> BigUint {
        self.terms
            .iter()
            .map(|t| binomial_big(&t.upper, t.index - 1))
            .sum()
    }
}

impl fmt::Display for CascadeRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "C({},{})", t.upper, t.index)?;
        }
        Ok(())
    }
}

impl FromStr for CascadeRep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for part in s.split('+') {
            let part = part.trim();
            let inner = part
                .strip_prefix("C(")
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(|| Error::invalid(format!("malformed cascade term `{part}`")))?;
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| Error::invalid(format!("malformed cascade term `{part}`")))?;
            let upper = BigUint::from_str(a.trim())
                .map_err(|_| Error::invalid(format!("bad upper argument in `{part}`")))?;
            let index = b
                .trim()
                .parse::<u32>()
                .map_err(|_| Error::invalid(format!("bad index in `{part}`")))?;
            terms.push(CascadeTerm { upper, index });
        }
        CascadeRep::from_terms(terms)
    }
}

/// Largest `a` with `C(a, i) <= k`, for `k >= 1` and `i >= 1`.
fn largest_upper(k: &BigUint, i: u32) -> BigUint {
    if i == 1 {
        return k.clone();
    }
    // Exponential search up from a = i, where C(i, i) = 1 <= k, then bisect.
    let mut lo = BigUint::from(i);
    let mut hi = &lo + 1u32;
    while binomial_big(&hi, i) <= *k {
        lo.clone_from(&hi);
        hi <<= 1;
    }
    while &lo + 1u32 < hi {
        let mid = (&lo + &hi) >> 1;
        if binomial_big(&mid, i) <= *k {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The unique `m`-binomial representation of `k >= 1`.
pub fn cascade(k: &BigUint, m: u32) -> Result<CascadeRep> {
    if m == 0 {
        return Err(Error::invalid("cascade representation requires m >= 1"));
    }
    if k.is_zero() {
        return Err(Error::invalid("cascade representation requires K >= 1"));
    }
    let mut terms = Vec::new();
    let mut rem = k.clone();
    let mut i = m;
    while !rem.is_zero() {
        debug_assert!(i >= 1, "greedy cascade terminates by index 1");
        let upper = largest_upper(&rem, i);
        rem -= binomial_big(&upper, i);
        terms.push(CascadeTerm { upper, index: i });
        i -= 1;
    }
    debug_assert!(CascadeRep::from_terms(terms.clone()).is_ok());
    Ok(CascadeRep { m, terms })
}

/// The boundary operator `boundary(K, m)` for any integer `K`, with value 0
/// for `K <= 0`. Requires `m >= 1`.
pub fn boundary(k: &BigInt, m: u32) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::invalid("boundary operator requires m >= 1"));
    }
    if k.sign() != Sign::Plus {
        return Ok(BigUint::zero());
    }
    Ok(cascade(k.magnitude(), m)?.boundary())
}
