//! The three inversion strategies and a dispatcher.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::array::AuditedArray;
use crate::cycle::{cycle_leader, invert_quadratic, reverse_cycle};
use crate::error::{Error, Result};
use crate::rho::{limited_tortoise_and_hare, CycleInfo};
use crate::segment::{
    make_segments, restore_long_cycle, set_free_cycle_length, MadeSegments, SegParams,
};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Quadratic,
    Randomized { seed: u64 },
    Sqrt,
}

impl Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::Quadratic => "quadratic",
            Strategy::Randomized { .. } => "randomized",
            Strategy::Sqrt => "sqrt",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Inverts `a` in place with the chosen strategy. `a` must be a permutation.
pub fn invert<W: Word>(a: &mut AuditedArray<W>, strategy: Strategy) -> Result<()> {
    match strategy {
        Strategy::Quadratic => invert_quadratic(a),
        Strategy::Randomized { seed } => invert_randomized(a, seed),
        Strategy::Sqrt => invert_sqrt(a),
    }
}

/// `h(i) = (a*i + b) mod (2^61 - 1)`, compared together with `i` so that
/// collisions break toward the smaller index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearHash {
    multiplier: u64,
    offset: u64,
}

impl LinearHash {
    /// Mersenne prime `2^61 - 1`; larger than any array length.
    pub const MODULUS: u64 = (1 << 61) - 1;

    /// Draws an odd multiplier and an offset from `ChaCha8Rng`.
    pub fn from_seed(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let multiplier = rng.random_range(0..Self::MODULUS / 2) * 2 + 1;
        let offset = rng.random_range(0..Self::MODULUS);
        Self { multiplier, offset }
    }

    /// Arbitrary parameters, reduced modulo [`MODULUS`](Self::MODULUS).
    /// `multiplier = 0` makes every hash equal.
    pub fn new(multiplier: u64, offset: u64) -> Self {
        Self {
            multiplier: multiplier % Self::MODULUS,
            offset: offset % Self::MODULUS,
        }
    }

    pub fn hash(&self, i: usize) -> u64 {
        let h = (self.multiplier as u128 * i as u128 + self.offset as u128) % Self::MODULUS as u128;
        h as u64
    }

    #[inline]
    fn key(&self, i: usize) -> (u64, usize) {
        (self.hash(i), i)
    }
}

/// Randomized inverter with a hash seeded from `seed`.
pub fn invert_randomized<W: Word>(a: &mut AuditedArray<W>, seed: u64) -> Result<()> {
    invert_randomized_with(a, &LinearHash::from_seed(seed))
}

/// Each cycle is reversed once, at its element with the smallest
/// `(hash, index)` key. From every `i` the cycle is reversed optimistically;
/// on meeting a smaller key the reversed prefix is walked back and restored.
pub fn invert_randomized_with<W: Word>(a: &mut AuditedArray<W>, hash: &LinearHash) -> Result<()> {
    if !a.is_permutation() {
        return Err(Error::NotAPermutation);
    }
    for i in 1..=a.len() {
        let key = hash.key(i);
        let mut prev = i;
        let mut cur = a.read(i)?;
        let mut beaten = false;
        while cur != i {
            if hash.key(cur) < key {
                beaten = true;
                break;
            }
            let next = a.read(cur)?;
            a.write(cur, prev)?;
            prev = cur;
            cur = next;
        }
        if !beaten {
            a.write(i, prev)?;
            continue;
        }
        // The prefix i -> ... -> prev now points backwards; `cur` is the
        // untouched successor of `prev`.
        let mut succ = cur;
        let mut v = prev;
        while v != i {
            let back = a.read(v)?;
            a.write(v, succ)?;
            succ = v;
            v = back;
        }
    }
    Ok(())
}

/// Where the `S` values of segmented long cycles are kept.
///
/// The first long cycle's `S` lives in `first_s`. Every later one is written
/// into the free cycle of the previous long cycle's representation (as
/// `S - k`, so it fits in `[1, k]`); `storage` is the beginning of the most
/// recent free segment.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ChainState {
    pub storage: Option<usize>,
    pub first_s: Option<usize>,
}

/// Hooks into [`invert_sqrt_observed`]. All methods default to no-ops.
pub trait SqrtObserver<W: Word> {
    /// Pass one, after the bounded cycle search from `vertex`.
    fn pass_one_visit(&mut self, _vertex: usize, _found: Option<CycleInfo>, _a: &AuditedArray<W>) {}

    fn long_cycle_segmented(&mut self, _leader: usize, _made: MadeSegments, _chain: ChainState) {}

    /// Pass two is about to reverse the cycle through `start`.
    fn pass_two_reversal(&mut self, _start: usize) {}

    fn long_cycle_restored(&mut self, _leader: usize, _link_size: usize) {}

    /// Called after each of the three passes (numbered 1..=3).
    fn pass_finished(&mut self, _pass: u8, _a: &AuditedArray<W>) {}
}

impl<W: Word> SqrtObserver<W> for () {}

/// Deterministic `O(n^{3/2})` in-place inversion.
pub fn invert_sqrt<W: Word>(a: &mut AuditedArray<W>) -> Result<()> {
    invert_sqrt_observed(a, &mut ())
}

/// [`invert_sqrt`] with instrumentation hooks.
///
/// Pass one visits `i = 1..=n`. A bounded search of `4k + 2` steps fails
/// exactly on vertices of untouched long cycles; the first such vertex of a
/// cycle is its leader, where the cycle is reversed and segmented. Vertices on
/// segment tails are skipped. Everything else sits on a short cycle (an
/// original one or the small cycle of a segment) and is reversed at its
/// leader. Pass two reverses every segment's small cycle back, from the one
/// tail vertex at distance 1. Pass three rebuilds each long cycle from its
/// leader, threading `S` through the free cycles.
pub fn invert_sqrt_observed<W: Word, O: SqrtObserver<W>>(
    a: &mut AuditedArray<W>,
    observer: &mut O,
) -> Result<()> {
    if !a.is_permutation() {
        return Err(Error::NotAPermutation);
    }
    let n = a.len();
    let p = SegParams::new(n)?;
    let k = p.k();
    let mut chain = ChainState::default();

    for i in 1..=n {
        let found = limited_tortoise_and_hare(a, i, 4 * k + 2)?;
        observer.pass_one_visit(i, found, a);
        match found {
            None => {
                if !leads_cycle(a, i)? {
                    continue;
                }
                let made = make_segments(a, i, &p)?;
                match chain.storage {
                    None => chain.first_s = Some(made.link_size),
                    Some(bg) => {
                        let on_cycle = set_free_cycle_length(a, bg, made.link_size - k, &p)?;
                        // Pass two reverses every small cycle once, so each must
                        // have been reversed once in pass one. If the new free
                        // cycle's leader is behind `i`, pass one will not reach
                        // it again: reverse it now.
                        if cycle_leader(a, on_cycle)? < i {
                            reverse_cycle(a, on_cycle)?;
                        }
                    }
                }
                chain.storage = Some(made.free_segment);
                observer.long_cycle_segmented(i, made, chain);
            }
            Some(info) if info.dist_to_cycle >= 1 => {}
            Some(_) => {
                if cycle_leader(a, i)? == i {
                    reverse_cycle(a, i)?;
                }
            }
        }
    }
    observer.pass_finished(1, a);

    for i in 1..=n {
        let found = limited_tortoise_and_hare(a, i, 4 * k + 2)?;
        if found.is_some_and(|info| info.dist_to_cycle == 1) {
            let start = a.read(i)?;
            observer.pass_two_reversal(start);
            reverse_cycle(a, start)?;
        }
    }
    observer.pass_finished(2, a);

    let mut link_size = chain.first_s;
    for i in 1..=n {
        let found = limited_tortoise_and_hare(a, i, 4 * k + 1)?;
        if found.is_some_and(|info| info.dist_to_cycle >= 1) {
            let s = link_size.ok_or_else(|| {
                Error::CorruptRepresentation(format!(
                    "segment tail at {i} but no long cycle was stored"
                ))
            })?;
            observer.long_cycle_restored(i, s);
            link_size = Some(restore_long_cycle(a, i, s, &p)? + k);
        }
    }
    observer.pass_finished(3, a);
    Ok(())
}

/// True iff no vertex on the cycle through `i` is smaller than `i`. Stops at
/// the first smaller vertex.
fn leads_cycle<W: Word>(a: &AuditedArray<W>, i: usize) -> Result<bool> {
    let mut v = a.read(i)?;
    while v != i {
        if v < i {
            return Ok(false);
        }
        v = a.read(v)?;
    }
    Ok(true)
}
