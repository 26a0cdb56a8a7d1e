//! In-place inversion of permutations stored in an array whose cells may only
//! ever hold values in `1..=n`.
//!
//! Three strategies are provided:
//!
//! * [`invert_quadratic`]: reverse every cycle at its leader (smallest element),
//!   `O(n^2)` worst case.
//! * [`invert_randomized`]: leaders chosen by a random linear hash, expected
//!   `O(n log n)`.
//! * [`invert_sqrt`]: deterministic `O(n^{3/2})`. Long cycles are reversed and
//!   cut into small rho-shaped segments whose sizes and cycle lengths encode
//!   the pointers needed to glue them back together.
//!
//! All of them operate on an [`AuditedArray`], which rejects out-of-range
//! writes and counts every cell read and write. The array is generic over its
//! cell word ([`Word`]); the aliases below cover the common widths.
//!
//! Indices and values are 1-based throughout the public API.

mod array;
pub mod cycle;
mod error;
pub mod generate;
pub mod invert;
pub mod io;
pub mod rho;
pub mod segment;
mod word;

pub use array::AuditedArray;
pub use cycle::{cycle_leader, invert_quadratic, reverse_cycle};
pub use error::{Error, Result};
pub use generate::{generate, is_permutation, oracle_invert, PermProfile, ProfileKind};
pub use invert::{invert, invert_randomized, invert_sqrt, LinearHash, Strategy};
pub use rho::{limited_tortoise_and_hare, tortoise_and_hare, CycleInfo};
pub use segment::{SegCode, SegParams};
pub use word::Word;

/// Array with 16-bit cells (`n <= 65535`).
pub type AuditedArray16 = AuditedArray<u16>;
/// Array with 32-bit cells.
pub type AuditedArray32 = AuditedArray<u32>;
/// Array with 64-bit cells.
pub type AuditedArray64 = AuditedArray<u64>;
/// Array with pointer-sized cells.
pub type AuditedArrayUsize = AuditedArray<usize>;
