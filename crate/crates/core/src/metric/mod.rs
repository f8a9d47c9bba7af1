//! Model manifolds, finite subsets, and the Hausdorff-type quantities on them.

mod hausdorff;
mod manifold;
mod space;

pub use hausdorff::{covering_radius_circle, covering_radius_witness, hausdorff_subsets, hausdorff_within};
pub(crate) use hausdorff::largest_gap;
pub use manifold::{geodesic_distance, AmbientManifold, ManifoldKind, Point};
pub use space::{diameter, to_metric_space, FiniteMetricSpace, FiniteSubset, METRIC_TOLERANCE};
