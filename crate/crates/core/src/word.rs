use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{PrimInt, Unsigned};

/// Unsigned integer type usable as an array cell.
///
/// Conversions are unchecked casts; [`AuditedArray`](crate::AuditedArray)
/// guarantees that every stored value fits before converting.
pub trait Word: PrimInt + Unsigned + Hash + Debug + Display + Send + Sync + 'static {
    fn as_usize(self) -> usize;
    fn from_index(v: usize) -> Self;

    /// Largest array length whose values all fit in this word.
    fn max_len() -> usize {
        Self::max_value().as_usize()
    }
}

macro_rules! impl_word {
    ($($t:ty),*) => {$(
        impl Word for $t {
            #[inline(always)]
            fn as_usize(self) -> usize {
                self as usize
            }

            #[inline(always)]
            fn from_index(v: usize) -> $t {
                v as $t
            }

            fn max_len() -> usize {
                usize::try_from(<$t>::MAX).unwrap_or(usize::MAX)
            }
        }
    )*};
}

impl_word!(u8, u16, u32, u64, usize);
