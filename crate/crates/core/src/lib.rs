//! Hausdorff and Gromov–Hausdorff distances between finite samples of model
//! manifolds, together with the Vietoris–Rips machinery used to bound one
//! by the other.
//!
//! * [`metric`]: ambient manifolds, finite metric spaces, Hausdorff distance.
//! * [`complex`]: Vietoris–Rips and Čech complexes, simplicial vertex maps.
//! * [`homology`]: Betti numbers and induced maps over `Z/2`.
//! * [`gh`]: exact Gromov–Hausdorff distance by branch and bound.
//! * [`bounds`]: lower bounds on `d_GH` from Hausdorff data and Jung constants.
//! * [`counterexample`]: a family where `d_GH / d_H` tends to zero.

// `!(a < b)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bitset;
pub mod bounds;
pub mod complex;
pub mod counterexample;
mod error;
pub mod gh;
pub mod homology;
pub mod metric;
pub mod sampling;

pub use error::{Error, Result};

/// Slack used when a floating-point value is tested against a strict
/// inequality such as `r < rho`.
pub const CMP_SLACK: f64 = 1e-12;
