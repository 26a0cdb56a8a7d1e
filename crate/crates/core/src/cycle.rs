//! Whole-cycle primitives and the quadratic inverter built from them.
//!
//! `reverse_cycle` and `cycle_leader` assume `start` lies on a cycle of the
//! functional graph `i -> t[i]`. Called on a tail vertex they never return to
//! `start` and loop forever; callers are responsible for the precondition.

use crate::array::AuditedArray;
use crate::error::{Error, Result};
use crate::word::Word;

/// Reverses every edge of the cycle through `start`. Other cells are untouched.
pub fn reverse_cycle<W: Word>(a: &mut AuditedArray<W>, start: usize) -> Result<()> {
    let mut cur = a.read(start)?;
    let mut prev = start;
    while cur != start {
        let next = a.read(cur)?;
        a.write(cur, prev)?;
        prev = cur;
        cur = next;
    }
    a.write(start, prev)
}

/// Smallest vertex on the cycle through `start`. Read-only.
pub fn cycle_leader<W: Word>(a: &AuditedArray<W>, start: usize) -> Result<usize> {
    let mut cur = a.read(start)?;
    let mut smallest = start;
    while cur != start {
        smallest = smallest.min(cur);
        cur = a.read(cur)?;
    }
    Ok(smallest)
}

/// Inverts a permutation by reversing each cycle once, at its leader.
pub fn invert_quadratic<W: Word>(a: &mut AuditedArray<W>) -> Result<()> {
    if !a.is_permutation() {
        return Err(Error::NotAPermutation);
    }
    for i in 1..=a.len() {
        if cycle_leader(a, i)? == i {
            reverse_cycle(a, i)?;
        }
    }
    Ok(())
}
