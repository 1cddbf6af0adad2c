//! Exact capacities of projective toric surfaces and toric domains.
//!
//! A rational moment polygon determines both a projective toric surface
//! (through its inner normal fan) and a toric domain in `C^2` (through the
//! moment map). This crate works entirely with exact rational arithmetic and
//! provides:
//!
//! - [`lattice`]: polygons, unimodular maps, lattice-point counts, lattice width;
//! - [`toric`]: fans, torus-invariant divisors, intersection numbers, nef tests,
//!   the isoparametric transform and the preferable-nef reduction;
//! - [`capacities`]: algebraic capacities, ECH capacities of ellipsoids, convex
//!   and concave toric domains, embedding verdicts and width estimates;
//! - [`oracle`]: exhaustive, unpruned scans used to validate the optimisers.

pub mod capacities;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod rational;
pub mod toric;

pub use capacities::{
    calg, calg_sequence, ech_concave, ech_convex, ech_ellipsoid, embedding_verdict,
    width_bound_check, xi_width, CapacitySequence, ConcaveDomain, EmbeddingVerdict, Provenance,
    WidthBound, WidthEstimate,
};
pub use error::{Error, Result};
pub use lattice::{HalfPlane, LatticeVector, MomentPolygon, Point, UnimodularAffineMap};
pub use rational::Rational;
pub use toric::{DivisorClass, SupportPolytope, ToricSurface, TorusDivisor};
