//! Segment representation of long cycles.
//!
//! With `k = ceil(sqrt(n))`, a cycle of at least `4k + 3` vertices is *long*.
//! A long cycle `(c_1, ..., c_p)` led by `c_1` is stored as a chain of
//! *segments*: rho-shaped components (a tail leading into a small cycle) laid
//! out along the cycle order. Every edge of the cycle is kept except the last
//! edge of each segment, which instead closes that segment's small cycle.
//! The pointer to the next segment's beginning is carried by the shape:
//!
//! * the first segment begins at `c_1`, has size in `[2k+2, 4k+1]`, and its
//!   cycle length `y` together with an external scalar `S` satisfies
//!   `(S, y) = encode(next beginning)`;
//! * every middle segment has `(size, cycle length) = encode(next beginning)`,
//!   so its size is in `[k+1, 2k]`;
//! * the last segment has size exactly `2k + 1` and a *free* cycle whose
//!   length in `[1, k]` is unconstrained and can carry a value of its own.
//!
//! Segments never exceed `4k + 1` vertices, so a bounded cycle search from any
//! of their vertices succeeds while the same search on a long cycle fails.
//! That is how the inverter tells the two apart.
//!
//! The codec is `encode(v) = ((v-1) / k + k + 1, (v-1) % k + 1)` and
//! `decode(s, c) = (s - k - 1) * k + c`, a bijection between `1..=n` and a
//! subset of `[k+1, 2k] x [1, k]`.

use std::collections::hash_map::{Entry, HashMap};

use crate::array::AuditedArray;
use crate::error::{Error, Result};
use crate::rho::tortoise_and_hare;
use crate::word::Word;

/// `n` and `k = ceil(sqrt(n))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SegParams {
    n: usize,
    k: usize,
}

impl SegParams {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyArray);
        }
        let r = n.isqrt();
        let k = if r * r == n { r } else { r + 1 };
        debug_assert!((k - 1) * (k - 1) < n && n <= k * k);
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Smallest long cycle length, `4k + 3`.
    pub fn long_threshold(&self) -> usize {
        4 * self.k + 3
    }

    /// Size of the segment holding the free cycle, `2k + 1`.
    pub fn free_segment_size(&self) -> usize {
        2 * self.k + 1
    }

    /// Largest segment ever built, `4k + 1`.
    pub fn max_segment_size(&self) -> usize {
        4 * self.k + 1
    }
}

/// A `(segment size, cycle length)` pair naming a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SegCode {
    pub segment_size: usize,
    pub cycle_length: usize,
}

pub fn encode(v: usize, p: &SegParams) -> Result<SegCode> {
    if v == 0 || v > p.n {
        return Err(Error::IndexOutOfRange { index: v, len: p.n });
    }
    let k = p.k;
    Ok(SegCode {
        segment_size: (v - 1) / k + k + 1,
        cycle_length: (v - 1) % k + 1,
    })
}

pub fn decode(code: SegCode, p: &SegParams) -> Result<usize> {
    let k = p.k;
    let SegCode {
        segment_size,
        cycle_length,
    } = code;
    if !(k + 1..=2 * k).contains(&segment_size) || !(1..=k).contains(&cycle_length) {
        return Err(Error::InvalidCode {
            segment_size,
            cycle_length,
            k,
        });
    }
    let v = (segment_size - k - 1) * k + cycle_length;
    if v > p.n {
        return Err(Error::CorruptRepresentation(format!(
            "code ({segment_size}, {cycle_length}) decodes to {v} > n = {}",
            p.n
        )));
    }
    Ok(v)
}

/// Result of [`make_segments`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MadeSegments {
    /// Beginning of the size-`2k+1` segment (the first one built).
    pub free_segment: usize,
    /// The scalar `S` that, with the first segment's cycle length, encodes the
    /// beginning of the second segment. Always in `[k+1, 2k]`.
    pub link_size: usize,
}

/// Reverses the long cycle led by `leader` and cuts it into segments.
///
/// Afterwards the cycle's vertices, together with the returned `link_size`,
/// form a segment representation of the *inverse* cycle. The free cycle has
/// length 1. Cells off the cycle are not touched.
///
/// `leader` must be the smallest vertex of a cycle of at least `4k + 3`
/// vertices. If the cycle turns out too short to build two segments a
/// `ContractViolation` is returned, with the cycle partially rewritten.
pub fn make_segments<W: Word>(
    a: &mut AuditedArray<W>,
    leader: usize,
    p: &SegParams,
) -> Result<MadeSegments> {
    let k = p.k;
    let mut to_encode = leader;
    let mut first = a.read(leader)?;
    let mut free_segment = None;
    let mut link_size = 0;
    let mut built = 0usize;

    loop {
        // stop once the leader is among the next 2k + 1 vertices
        let mut x = first;
        let mut leader_ahead = x == leader;
        for _ in 0..2 * k {
            if leader_ahead {
                break;
            }
            x = a.read(x)?;
            leader_ahead = x == leader;
        }
        if leader_ahead {
            break;
        }

        let (size, cycle_length) = if to_encode == leader {
            (2 * k + 1, 1)
        } else {
            let code = encode(to_encode, p)?;
            (code.segment_size, code.cycle_length)
        };

        // Vertices first = v_1, v_2, ..., v_size in cycle order. Point each
        // v_i (i >= 2) back at v_{i-1}, then close the cycle v_1 -> v_len.
        let mut prev = first;
        let mut cur = a.read(first)?;
        let mut closing = first;
        for i in 2..=size {
            let next = a.read(cur)?;
            a.write(cur, prev)?;
            if i == cycle_length {
                closing = cur;
            }
            prev = cur;
            cur = next;
        }
        a.write(first, closing)?;

        if to_encode == leader {
            free_segment = Some(prev);
        }
        to_encode = prev;
        link_size = size;
        first = cur;
        built += 1;
    }

    let free_segment = match free_segment {
        Some(bg) if built >= 2 => bg,
        _ => {
            return Err(Error::ContractViolation(format!(
                "cycle led by {leader} is shorter than {}",
                p.long_threshold()
            )))
        }
    };

    // Reverse the remaining path first -> ... -> leader and hang it in front
    // of the segment built last.
    let mut prev = to_encode;
    let mut cur = first;
    loop {
        if cur == leader {
            a.write(cur, prev)?;
            break;
        }
        let next = a.read(cur)?;
        a.write(cur, prev)?;
        prev = cur;
        cur = next;
    }

    Ok(MadeSegments {
        free_segment,
        link_size,
    })
}

/// Rebuilds the cycle stored as a segment representation starting at
/// `leader`, given its `link_size` (the scalar `S`). Returns the length of the
/// free cycle found in the last segment.
///
/// Fails with `CorruptRepresentation` if a segment does not decode, or if more
/// than `n` vertices are visited without reaching a segment of size `2k + 1`.
pub fn restore_long_cycle<W: Word>(
    a: &mut AuditedArray<W>,
    leader: usize,
    link_size: usize,
    p: &SegParams,
) -> Result<usize> {
    let info = tortoise_and_hare(a, leader)?;
    let size = info.reach();
    let last = a.walk(leader, size - 1)?;
    let mut visited = size;
    let mut bg = decode(
        SegCode {
            segment_size: link_size,
            cycle_length: info.cycle_length,
        },
        p,
    )?;
    a.write(last, bg)?;

    loop {
        let info = tortoise_and_hare(a, bg)?;
        let size = info.reach();
        visited += size;
        if visited > p.n {
            return Err(Error::CorruptRepresentation(format!(
                "no segment of size {} reachable from {leader}",
                p.free_segment_size()
            )));
        }
        let last = a.walk(bg, size - 1)?;
        if size == p.free_segment_size() {
            a.write(last, leader)?;
            return Ok(info.cycle_length);
        }
        bg = decode(
            SegCode {
                segment_size: size,
                cycle_length: info.cycle_length,
            },
            p,
        )?;
        a.write(last, bg)?;
    }
}

/// Changes the cycle length of the size-`2k+1` segment beginning at `bg` to
/// `len`, rewriting one cell.
///
/// Walks `2k` edges from `bg` to the segment's last vertex and points it at the
/// vertex `2k + 1 - len` edges from `bg`. Size, vertex set and beginning are
/// preserved. Returns that last vertex, which lies on the new cycle.
pub fn set_free_cycle_length<W: Word>(
    a: &mut AuditedArray<W>,
    bg: usize,
    len: usize,
    p: &SegParams,
) -> Result<usize> {
    let k = p.k;
    if !(1..=k).contains(&len) {
        return Err(Error::ContractViolation(format!(
            "free cycle length {len} outside 1..={k}"
        )));
    }
    let info = tortoise_and_hare(a, bg)?;
    if info.reach() != p.free_segment_size() || info.dist_to_cycle == 0 {
        return Err(Error::ContractViolation(format!(
            "segment at {bg} has size {} (cycle {}), expected a segment of size {}",
            info.reach(),
            info.cycle_length,
            p.free_segment_size()
        )));
    }
    let entry_steps = 2 * k + 1 - len;
    let mut v = bg;
    let mut entry = bg;
    for step in 1..=2 * k {
        v = a.read(v)?;
        if step == entry_steps {
            entry = v;
        }
    }
    a.write(v, entry)?;
    Ok(v)
}

/// One segment found by [`check_segment_representation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SegmentSummary {
    /// 1-based position of the beginning within the reference cycle.
    pub begin: usize,
    pub size: usize,
    pub cycle_length: usize,
}

/// Verdict of [`check_segment_representation`] on conditions (C1)..(C4).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SegmentationReport {
    /// Positions `i_1 = 1 < i_2 < ... < i_q` of segment beginnings.
    pub split_points: Vec<usize>,
    pub segments: Vec<SegmentSummary>,
    /// All cycle edges other than the segment-closing ones are present.
    pub c1: bool,
    /// First segment: begins at the leader, size in `[2k+2, 4k+1]`, and
    /// `(S, cycle length)` encodes the second beginning.
    pub c2: bool,
    /// Middle segments encode the next beginning.
    pub c3: bool,
    /// Last segment: size `2k + 1`, cycle length at most `k`.
    pub c4: bool,
    pub violations: Vec<String>,
}

impl SegmentationReport {
    pub fn split_count(&self) -> usize {
        self.split_points.len()
    }

    pub fn passes(&self) -> bool {
        self.c1 && self.c2 && self.c3 && self.c4
    }
}

/// Checks whether the cells on `reference` (the cycle `c_1, ..., c_p` with
/// `c_1 == leader`), together with `link_size`, form a segment representation
/// of that cycle.
///
/// Segments are located by walking from each beginning: the vertices
/// reachable from `c_{i_j}` must be exactly the next block of the reference,
/// and the following block starts right after it. Read-only; uses an
/// uncounted snapshot of the array.
pub fn check_segment_representation<W: Word>(
    a: &AuditedArray<W>,
    leader: usize,
    link_size: usize,
    reference: &[usize],
    p: &SegParams,
) -> SegmentationReport {
    let t = a.to_vec();
    let len = reference.len();
    let k = p.k;
    let mut report = SegmentationReport {
        c1: true,
        c2: true,
        c3: true,
        c4: true,
        ..Default::default()
    };

    if reference.first() != Some(&leader) {
        report.c2 = false;
        report
            .violations
            .push("reference does not start at leader".into());
        return report;
    }
    let mut pos_of = vec![0usize; t.len() + 1];
    for (j, &v) in reference.iter().enumerate() {
        pos_of[v] = j + 1;
    }

    let mut ends = Vec::new();
    let mut begin = 1;
    while begin <= len {
        let shape = walk_shape(&t, reference[begin - 1], &pos_of);
        let contiguous = shape
            .positions
            .iter()
            .all(|&q| q >= begin && q < begin + shape.size)
            && shape.positions.len() == shape.size;
        let segment = SegmentSummary {
            begin,
            size: shape.size,
            cycle_length: shape.cycle_length,
        };
        let index = report.segments.len();
        report.split_points.push(begin);
        report.segments.push(segment);

        let end = begin + shape.size - 1;
        let is_last = end >= len;
        let ok_shape = contiguous && shape.dist_to_cycle >= 1;
        let condition = if index == 0 {
            &mut report.c2
        } else if is_last {
            &mut report.c4
        } else {
            &mut report.c3
        };
        if !ok_shape {
            *condition = false;
            report.violations.push(format!(
                "segment at position {begin} is not a rho over a contiguous block"
            ));
        }
        if is_last {
            if index == 0 {
                report.c4 = false;
                report.violations.push("fewer than two segments".into());
            }
            if end != len || shape.size != p.free_segment_size() || shape.cycle_length > k {
                report.c4 = false;
                report.violations.push(format!(
                    "last segment at {begin}: size {} cycle {} ends at {end} of {len}",
                    shape.size, shape.cycle_length
                ));
            }
        } else {
            let next = reference[end];
            let expected = encode(next, p).ok();
            let actual = if index == 0 {
                if !(2 * k + 2..=4 * k + 1).contains(&shape.size) {
                    report.c2 = false;
                    report
                        .violations
                        .push(format!("first segment has size {}", shape.size));
                }
                SegCode {
                    segment_size: link_size,
                    cycle_length: shape.cycle_length,
                }
            } else {
                SegCode {
                    segment_size: shape.size,
                    cycle_length: shape.cycle_length,
                }
            };
            if expected != Some(actual) {
                if index == 0 {
                    report.c2 = false;
                } else {
                    report.c3 = false;
                }
                report.violations.push(format!(
                    "segment at {begin} carries {actual:?}, next beginning {next} needs {expected:?}"
                ));
            }
        }
        ends.push(end);
        begin = end + 1;
    }

    // C1: every edge (c_i, c_{i+1}) except at segment ends.
    let mut is_end = vec![false; len + 1];
    for &end in ends.iter().filter(|&&e| e <= len) {
        is_end[end] = true;
    }
    for i in (1..len).filter(|&i| !is_end[i]) {
        if t[reference[i - 1] - 1] != reference[i] {
            report.c1 = false;
            report.violations.push(format!(
                "edge ({}, {}) missing",
                reference[i - 1],
                reference[i]
            ));
        }
    }
    report
}

struct Shape {
    size: usize,
    cycle_length: usize,
    dist_to_cycle: usize,
    /// Reference positions of the reachable vertices (0 for vertices off the
    /// reference cycle).
    positions: Vec<usize>,
}

fn walk_shape(t: &[usize], start: usize, pos_of: &[usize]) -> Shape {
    let mut step_of = HashMap::new();
    let mut positions = Vec::new();
    let mut v = start;
    let mut step = 0;
    while let Entry::Vacant(slot) = step_of.entry(v) {
        slot.insert(step);
        positions.push(pos_of[v]);
        v = t[v - 1];
        step += 1;
    }
    let entry_step = step_of[&v];
    Shape {
        size: step,
        cycle_length: step - entry_step,
        dist_to_cycle: entry_step,
        positions,
    }
}
