//! Algebraic and ECH capacities, embedding verdicts and width estimates.

mod alg;
mod concave;
mod ech;
mod embedding;
mod sequence;

pub use alg::{calg, calg_optima, calg_sequence, AlgOptimum};
pub use concave::{ech_concave, ConcaveDomain, WEIGHT_EXPANSION_CAP};
pub use ech::{disjoint_union, ech_convex, ech_convex_sequence, ech_ellipsoid, ellipsoid_sequence};
pub use embedding::{
    embedding_verdict, width_bound_check, xi_width, EmbeddingVerdict, WidthBound, WidthEstimate,
};
pub use sequence::{CapacitySequence, Provenance};
