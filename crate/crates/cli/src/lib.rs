//! Batch experiments over the `hausdorff-gh` library. Every command returns
//! plain data; the `hgh` binary only parses arguments and writes output.

pub mod bounds;
pub mod config;
pub mod fillrad;
pub mod lemma;
pub mod misc;
pub mod sweep;

use std::fmt;

/// A checked inequality did not hold. The binary exits with status 2 on
/// this error and with status 1 on every other one.
#[derive(Debug, Clone, PartialEq)]
pub struct AssertionFailure(pub String);

impl fmt::Display for AssertionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "assertion failed: {}", self.0)
    }
}

impl std::error::Error for AssertionFailure {}

/// Process exit status for a failed command: 2 for [`AssertionFailure`],
/// 1 for anything else.
pub fn exit_status(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<AssertionFailure>().is_some() {
        2
    } else {
        1
    }
}

/// Absolute tolerance for the sandwich inequalities.
pub const SANDWICH_TOL: f64 = 1e-9;
