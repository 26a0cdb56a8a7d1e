use std::cell::Cell;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

/// The array `t` being inverted, with range-checked writes and access counters.
///
/// Indices and values are 1-based. Every cell always holds a value in `1..=n`;
/// [`write`](Self::write) refuses anything else. The array is *not* required
/// to be a permutation between calls, since the inverters pass through
/// intermediate states that are arbitrary functional graphs.
///
/// `read` and `write` each add exactly one to their counter. Bulk accessors
/// ([`to_vec`](Self::to_vec), [`cells`](Self::cells),
/// [`is_permutation`](Self::is_permutation)) are for setup and checking and are
/// not counted.
///
/// Counters use interior mutability so read-only algorithms can take `&self`;
/// consequently the type is `Send` but not `Sync`.
#[derive(Clone)]
pub struct AuditedArray<W: Word> {
    cells: Vec<W>,
    reads: Cell<u64>,
    writes: u64,
}

impl<W: Word> AuditedArray<W> {
    /// Builds an array from 1-based values. Fails if any value is outside
    /// `1..=len`; does not require a permutation.
    pub fn from_values(values: &[usize]) -> Result<Self> {
        let len = values.len();
        Self::check_len(len)?;
        let cells = values
            .iter()
            .map(|&v| {
                if v == 0 || v > len {
                    Err(Error::ValueOutOfRange { value: v, len })
                } else {
                    Ok(W::from_index(v))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            cells,
            reads: Cell::new(0),
            writes: 0,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::check_len(n)?;
        Ok(Self {
            cells: (1..=n).map(W::from_index).collect(),
            reads: Cell::new(0),
            writes: 0,
        })
    }

    fn check_len(len: usize) -> Result<()> {
        if len == 0 {
            return Err(Error::EmptyArray);
        }
        if len > W::max_len() {
            return Err(Error::LengthTooLarge {
                len,
                max: W::max_len(),
            });
        }
        Ok(())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    /// Always false; arrays have at least one cell.
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Returns `t[i]`.
    #[inline]
    pub fn read(&self, i: usize) -> Result<usize> {
        match i.checked_sub(1).and_then(|j| self.cells.get(j)) {
            Some(&v) => {
                self.reads.set(self.reads.get() + 1);
                Ok(v.as_usize())
            }
            None => Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            }),
        }
    }

    /// Sets `t[i] = v`. `v` must lie in `1..=n`.
    #[inline]
    pub fn write(&mut self, i: usize, v: usize) -> Result<()> {
        let len = self.len();
        if v == 0 || v > len {
            return Err(Error::ValueOutOfRange { value: v, len });
        }
        match i.checked_sub(1).and_then(|j| self.cells.get_mut(j)) {
            Some(cell) => {
                *cell = W::from_index(v);
                self.writes += 1;
                Ok(())
            }
            None => Err(Error::IndexOutOfRange { index: i, len }),
        }
    }

    /// `t^steps[v]`: follows `steps` edges from `v`.
    pub fn walk(&self, mut v: usize, steps: usize) -> Result<usize> {
        for _ in 0..steps {
            v = self.read(v)?;
        }
        Ok(v)
    }

    pub fn reads(&self) -> u64 {
        self.reads.get()
    }

    pub fn writes(&self) -> u64 {
        self.writes
    }

    /// `reads + writes`.
    pub fn accesses(&self) -> u64 {
        self.reads() + self.writes
    }

    pub fn reset_counters(&mut self) {
        self.reads.set(0);
        self.writes = 0;
    }

    /// Raw cells, uncounted.
    pub fn cells(&self) -> &[W] {
        &self.cells
    }

    /// 1-based values as `usize`, uncounted.
    pub fn to_vec(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.as_usize()).collect()
    }

    /// True iff the cells form a bijection on `1..=n`. Uncounted.
    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.len()];
        for c in &self.cells {
            let j = c.as_usize() - 1;
            if std::mem::replace(&mut seen[j], true) {
                return false;
            }
        }
        true
    }
}

impl<W: Word> fmt::Debug for AuditedArray<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AuditedArray")
            .field("cells", &self.cells)
            .field("reads", &self.reads.get())
            .field("writes", &self.writes)
            .finish()
    }
}

impl<W: Word> PartialEq for AuditedArray<W> {
    /// Compares contents only; counters are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl<W: Word> Eq for AuditedArray<W> {}
