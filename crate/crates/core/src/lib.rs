//! Counting integer partitions through their Durfee squares.
//!
//! - [`exact`]: big integers and rationals, truncated series about `q = 1`,
//!   Kronecker symbols and other exact helpers.
//! - [`partition`]: partitions as values, enumeration, and direct counts used
//!   as oracles.
//! - [`multisum`]: the nested-sum formula for `D(n, k)` and `p(n)`, with
//!   term and operation counts.
//! - [`quasipoly`]: principal parts at `q = 1`, the polynomial parts
//!   `D̃(n, k)`, `p_D(n)`, and fitted quasipolynomials.
//! - [`analytic`]: arbitrary-precision reals, the Rademacher series, `p_R(n)`
//!   and error bounds.
//! - [`strategy`]: named, interchangeable methods behind trait objects.
//! - [`table`] and [`verify`]: comparison rows and cross-check suites used by
//!   the command-line tool.

pub mod analytic;
pub mod error;
pub mod exact;
pub mod multisum;
pub mod partition;
pub mod quasipoly;
pub mod strategy;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
