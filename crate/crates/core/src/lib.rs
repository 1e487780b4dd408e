//! Exact combinatorics for the first Rogers-Ramanujan identity.
//!
//! The crate is organised bottom-up:
//!
//! * [`partition`] – partition values, conjugation, sum/union, enumeration and counting.
//! * [`durfee`] – the two stacked `m`-Durfee rectangles of a partition, the
//!   `(2,m)`-rank and rank tabulation `h(n, m, ·)`.
//! * [`bijections`] – the rank-negating involution `phi` and the bijection
//!   `psi_{m,r}` (with inverse) between rank classes of different sizes.
//! * [`qseries`] – exact truncated power series over big integers and the
//!   generating functions built from them, plus a bivariate Laurent variant
//!   for the Jacobi triple product.
//! * [`verify`] – executable checks that tie the above together and emit
//!   structured reports.
//!
//! Everything is exact integer arithmetic; there is no floating point outside
//! of report timings.

pub mod bijections;
pub mod durfee;
mod error;
#[doc(hidden)]
pub mod fault;
pub mod partition;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
