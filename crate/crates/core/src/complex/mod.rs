//! Vietoris–Rips and Čech complexes, and simplicial maps between them.

mod build;
mod maps;
mod simplicial;

pub use build::{build_cech_circle, build_cech_witness, build_vr};
pub use maps::{check_contiguous, check_simplicial, induced_vr_map, nearest_point_vr_maps, VertexMap};
pub use simplicial::{faces, Simplex, SimplicialComplex};
