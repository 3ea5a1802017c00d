//! Anti-lecture hall compositions, overpartitions with congruence
//! conditions, and exact q-series checks of the identities that connect
//! them.
//!
//! - [`qseries`]: truncated power series with big-integer coefficients.
//! - [`enumerate`]: the combinatorial families and their exhaustive counts.
//! - [`triangle`]: A-triangular arrays and the `S`/`R`/tail decomposition.
//! - [`bijection`]: Durfee-rectangle dissection and the map `θ`.
//! - [`identities`]: both sides of every identity and the verification
//!   registry.

pub mod bijection;
pub mod enumerate;
pub mod identities;
pub mod qseries;
pub mod triangle;

pub use enumerate::{Composition, Family, Overpartition, Partition};
pub use qseries::TruncatedSeries;
