//! Instance generation and the out-of-place reference inverse.
//!
//! Randomness comes from `ChaCha8Rng` seeded with `seed_from_u64`, so a given
//! `(n, profile)` always yields the same permutation on every platform.
//! Element orders are drawn with an unbiased Fisher-Yates shuffle.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::array::AuditedArray;
use crate::error::{Error, Result};
use crate::word::Word;

/// Cycle structure of a generated permutation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProfileKind {
    Identity,
    /// One cycle through all `n` elements, uniformly random.
    SingleCycle,
    /// Cycles with lengths drawn uniformly from `1..=max_len`.
    SmallCycles {
        max_len: usize,
    },
    /// Uniformly random permutation.
    Random,
    /// `round(long_fraction * n)` elements split between two cycles of
    /// (almost) equal length; everything else in 3-cycles.
    Mixed {
        long_fraction: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PermProfile {
    pub kind: ProfileKind,
    pub seed: u64,
}

impl PermProfile {
    pub fn new(kind: ProfileKind, seed: u64) -> Self {
        Self { kind, seed }
    }
}

impl fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileKind::Identity => f.write_str("identity"),
            ProfileKind::SingleCycle => f.write_str("single-cycle"),
            ProfileKind::SmallCycles { max_len } => write!(f, "small-cycles:{max_len}"),
            ProfileKind::Random => f.write_str("random"),
            ProfileKind::Mixed { long_fraction } => write!(f, "mixed:{long_fraction}"),
        }
    }
}

impl FromStr for ProfileKind {
    type Err = Error;

    /// Accepts `identity`, `single-cycle`, `random`, `small-cycles:L` and
    /// `mixed:F`; `small-cycles(L)` / `mixed(F)` are accepted as well.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, arg) = match s.find([':', '(']) {
            Some(pos) => (&s[..pos], Some(s[pos + 1..].trim_end_matches(')').trim())),
            None => (s, None),
        };
        let bad = || Error::InvalidProfile(s.to_string());
        match (name, arg) {
            ("identity", None) => Ok(ProfileKind::Identity),
            ("single-cycle", None) => Ok(ProfileKind::SingleCycle),
            ("random", None) => Ok(ProfileKind::Random),
            ("small-cycles", Some(a)) => {
                let max_len: usize = a.parse().map_err(|_| bad())?;
                if max_len == 0 {
                    return Err(bad());
                }
                Ok(ProfileKind::SmallCycles { max_len })
            }
            ("mixed", Some(a)) => {
                let long_fraction: f64 = a.parse().map_err(|_| bad())?;
                if !(0.0..=1.0).contains(&long_fraction) {
                    return Err(bad());
                }
                Ok(ProfileKind::Mixed { long_fraction })
            }
            _ => Err(bad()),
        }
    }
}

/// Generates a permutation of `1..=n` as 1-based values.
pub fn generate_values(n: usize, profile: &PermProfile) -> Result<Vec<usize>> {
    if n == 0 {
        return Err(Error::EmptyArray);
    }
    if profile.kind == ProfileKind::Identity {
        return Ok((1..=n).collect());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(profile.seed);
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(&mut rng);

    match profile.kind {
        ProfileKind::Identity => unreachable!(),
        // A shuffle read as a permutation is uniform over all permutations.
        ProfileKind::Random => Ok(order),
        ProfileKind::SingleCycle => Ok(from_cycles(n, &order, std::iter::once(n))),
        ProfileKind::SmallCycles { max_len } => {
            if max_len == 0 {
                return Err(Error::InvalidProfile("small-cycles:0".into()));
            }
            let mut lens = Vec::new();
            let mut left = n;
            while left > 0 {
                let l = rng.random_range(1..=max_len).min(left);
                lens.push(l);
                left -= l;
            }
            Ok(from_cycles(n, &order, lens))
        }
        ProfileKind::Mixed { long_fraction } => {
            if !(0.0..=1.0).contains(&long_fraction) {
                return Err(Error::InvalidProfile(profile.kind.to_string()));
            }
            let long = ((long_fraction * n as f64).round() as usize).min(n);
            let mut lens = vec![long / 2, long - long / 2];
            let mut left = n - long;
            while left > 0 {
                lens.push(left.min(3));
                left -= left.min(3);
            }
            Ok(from_cycles(n, &order, lens.into_iter().filter(|&l| l > 0)))
        }
    }
}

/// Generates an audited array holding the requested permutation.
pub fn generate<W: Word>(n: usize, profile: &PermProfile) -> Result<AuditedArray<W>> {
    AuditedArray::from_values(&generate_values(n, profile)?)
}

/// Chains consecutive runs of `order` into cycles of the given lengths.
fn from_cycles(n: usize, order: &[usize], lens: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut t = vec![0; n];
    let mut at = 0;
    for len in lens {
        let run = &order[at..at + len];
        for (j, &v) in run.iter().enumerate() {
            t[v - 1] = run[(j + 1) % len];
        }
        at += len;
    }
    debug_assert_eq!(at, n);
    t
}

/// True iff `p` is a bijection on `1..=p.len()`.
pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&v| (1..=p.len()).contains(&v) && !std::mem::replace(&mut seen[v - 1], true))
}

/// Reference inverse using a second array: `q[p[i]] = i`.
pub fn oracle_invert(p: &[usize]) -> Result<Vec<usize>> {
    if !is_permutation(p) {
        return Err(Error::NotAPermutation);
    }
    let mut q = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        q[v - 1] = i + 1;
    }
    Ok(q)
}

/// Lengths of all cycles of a permutation, in order of their leaders.
pub fn cycle_lengths(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 1..=p.len() {
        if seen[start - 1] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        while !seen[v - 1] {
            seen[v - 1] = true;
            len += 1;
            v = p[v - 1];
        }
        out.push(len);
    }
    out
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations {
        next: Some((1..=n).collect()),
    }
}

/// Iterator returned by [`permutations`].
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut nxt = cur.clone();
        // standard next-permutation step
        if let Some(i) = (1..nxt.len()).rev().find(|&i| nxt[i - 1] < nxt[i]) {
            let j = (i..nxt.len()).rev().find(|&j| nxt[j] > nxt[i - 1]).unwrap();
            nxt.swap(i - 1, j);
            nxt[i..].reverse();
            self.next = Some(nxt);
        }
        Some(cur)
    }
}
