//! Permutations, stabilizer chains, element enumeration, conjugacy classes
//! and the derived series.

pub mod bsgs;
pub mod classes;
pub mod elements;
pub mod handle;
pub mod perm;
pub mod series;

pub use bsgs::Bsgs;
pub use classes::ConjugacyData;
pub use elements::{CompositionRule, Elements};
pub use handle::{Backing, GroupHandle, Limits, DEFAULT_ENUMERATION_BOUND};
pub use perm::Permutation;
pub use series::{derived_series, group_exponent, DerivedSeriesReport};
