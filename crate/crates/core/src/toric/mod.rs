//! The polygon-to-surface dictionary on complete toric surfaces.

mod divisor;
pub(crate) mod integral;
mod resolution;
mod surface;
mod transform;

pub use divisor::{DivisorClass, SupportPolytope, TorusDivisor};
pub use resolution::hirzebruch_jung_rays;
pub use surface::{associated_divisor, ToricSurface};
pub use transform::IP_ITERATION_CAP;

pub(crate) use divisor::PrincipalLattice;

impl ToricSurface {
    /// Canonical linear-equivalence class of an integral (or rational)
    /// divisor modulo integral principal divisors.
    pub fn divisor_class(&self, d: &TorusDivisor) -> DivisorClass {
        PrincipalLattice::new(self.rays()).class(d)
    }
}
