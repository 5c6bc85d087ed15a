//! Approximate period recovery under edit distance.
//!
//! The crate is organised bottom-up:
//!
//! * [`lcp_index`] answers longest-common-prefix queries between suffixes of a
//!   text `S` and suffixes of the periodic word `P^∞` in constant time.
//! * [`wraparound`] evaluates the full wrap-around edit-distance table by a
//!   0/1 shortest-path search. It is the reference engine.
//! * [`kangaroo`] computes only the last-row values bounded by `k`, walking one
//!   frontier per diagonal and jumping along matches with lcp queries. This runs
//!   in `O(n + kp)` after indexing.
//! * [`naive`] holds brute-force ground truth used by the test suites.
//! * [`recovery`] assembles the pieces into the period recovery pipeline.
//! * [`corpus`] generates seeded periodic corpora with planted edits.
//! * [`bench`] times the two APM engines.

pub mod bench;
pub mod cli;
pub mod corpus;
mod error;
pub mod kangaroo;
pub mod lcp_index;
pub mod naive;
pub mod recovery;
pub mod wraparound;

pub use error::{Error, Result};
pub use kangaroo::{last_row_thresholded, rotation_distances, ApmOutcome, FrontierRow};
pub use lcp_index::{CompositeText, LcpIndex};
pub use recovery::{recover, PeriodReport, RecoveryParams, RotationClass};
pub use wraparound::{full_table, WrapTable};
