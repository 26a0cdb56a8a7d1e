//! Floyd's tortoise-and-hare on the functional graph `i -> t[i]`.
//!
//! Every walk in a functional graph ends in a cycle, so from any start the
//! reachable part is rho-shaped: a tail of `dist_to_cycle` edges leading to a
//! cycle of `cycle_length` vertices.

use crate::array::AuditedArray;
use crate::error::Result;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CycleInfo {
    pub cycle_length: usize,
    /// Edges from the start to the first vertex on the cycle; zero iff the
    /// start is itself on the cycle.
    pub dist_to_cycle: usize,
}

impl CycleInfo {
    /// `dist_to_cycle + cycle_length`: the number of distinct vertices reachable
    /// from the start.
    pub fn reach(&self) -> usize {
        self.dist_to_cycle + self.cycle_length
    }
}

/// Exact tail length and cycle length from `start`. Read-only.
pub fn tortoise_and_hare<W: Word>(a: &AuditedArray<W>, start: usize) -> Result<CycleInfo> {
    let mut tortoise = start;
    let mut hare = start;
    loop {
        tortoise = a.read(tortoise)?;
        hare = a.read(a.read(hare)?)?;
        if tortoise == hare {
            break;
        }
    }
    let info = finish(a, start, tortoise, usize::MAX)?;
    Ok(info.expect("unbounded search cannot overrun"))
}

/// Like [`tortoise_and_hare`], but the first phase is capped at `max`
/// double-steps.
///
/// Returns `None` when the cap is hit. The answer is always `Some` when
/// `dist_to_cycle + cycle_length <= max`, and any `Some` is exact. The later
/// phases give up as soon as the sum is known to exceed `max`, so a call reads
/// exactly `3m + 2d + s` cells when it succeeds (`m <= max` first-phase
/// iterations) and never more than `5 * max`.
pub fn limited_tortoise_and_hare<W: Word>(
    a: &AuditedArray<W>,
    start: usize,
    mut max: usize,
) -> Result<Option<CycleInfo>> {
    let limit = max;
    let mut tortoise = start;
    let mut hare = start;
    loop {
        if max == 0 {
            return Ok(None);
        }
        tortoise = a.read(tortoise)?;
        hare = a.read(a.read(hare)?)?;
        max -= 1;
        if tortoise == hare {
            break;
        }
    }
    finish(a, start, tortoise, limit)
}

/// Phases two and three. `meet` is where the pointers met, a whole number of
/// cycle lengths past the start. Gives up with `None` once the reach is
/// provably larger than `limit`.
fn finish<W: Word>(
    a: &AuditedArray<W>,
    start: usize,
    meet: usize,
    limit: usize,
) -> Result<Option<CycleInfo>> {
    let mut tortoise = meet;
    let mut hare = start;
    let mut dist_to_cycle: usize = 0;
    // `while`, not repeat-until: when `start` is on the cycle, `meet == start`
    // and the distance is zero.
    while tortoise != hare {
        if dist_to_cycle.saturating_add(2) > limit {
            return Ok(None);
        }
        tortoise = a.read(tortoise)?;
        hare = a.read(hare)?;
        dist_to_cycle += 1;
    }
    let mut cycle_length: usize = 0;
    loop {
        if (dist_to_cycle + cycle_length).saturating_add(1) > limit {
            return Ok(None);
        }
        tortoise = a.read(tortoise)?;
        cycle_length += 1;
        if tortoise == hare {
            break;
        }
    }
    Ok(Some(CycleInfo {
        cycle_length,
        dist_to_cycle,
    }))
}
