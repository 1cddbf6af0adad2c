//! Exact planar lattice geometry.

mod affine;
pub mod counting;
mod polygon;
pub mod text;
mod vector;

pub use affine::UnimodularAffineMap;
pub use counting::HalfPlane;
pub use polygon::MomentPolygon;
pub use vector::{LatticeVector, Point};
