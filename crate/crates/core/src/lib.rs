//! Exact enumerative combinatorics around Raney numbers.
//!
//! The crate evaluates Raney, Fuss-Catalan and Catalan numbers by three
//! independent routes, enumerates simultaneous `(s, t)`-core partitions
//! through order ideals of the poset of semigroup gaps, enumerates coral
//! diagrams, and cross-checks the count of `(s, s+1)`-cores whose parts are
//! all multiples of `p` against `R_{p+1, r+1}(k)` where `s = kp + r`.
//!
//! All counts are [`Natural`] values backed by arbitrary-precision integers.
//!
//! ```
//! use raney_core::numbers::{raney, RaneyParams};
//! use raney_core::verify::Harness;
//!
//! let value = raney(RaneyParams::new(2, 3, 3).unwrap());
//! assert_eq!(value, 28u64);
//!
//! let report = Harness::default().verify_main_theorem(6, 6);
//! assert!(report.summary.all_agree);
//! ```

pub mod coral;
mod error;
mod exec;
mod natural;
pub mod numbers;
pub mod partitions;
pub mod posets;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
pub use natural::Natural;
