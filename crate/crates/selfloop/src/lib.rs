//! File formats, verification harness and command-line front end for
//! [`selfloop_core`].
//!
//! - [`graph6`]: the standard 6-bit graph encoding, orders up to 62.
//! - [`loopline`]: `<graph6> | <loops>` lines describing one self-loop graph each.
//! - [`report`]: JSON report schemas.
//! - [`harness`]: seeded and exhaustive corpora, campaigns with hard gates, oracles.

mod error;
pub mod graph6;
pub mod harness;
pub mod loopline;
pub mod report;

pub use error::{Result, ShellError};
pub use selfloop_core as core;
