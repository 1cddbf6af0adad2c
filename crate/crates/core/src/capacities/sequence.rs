//! Lazily extended, memoised capacity sequences.

use std::fmt;
use std::sync::RwLock;

use crate::error::Result;
use crate::lattice::MomentPolygon;
use crate::rational::Rational;

use super::{alg, concave::ConcaveDomain, ech};

/// Where the values of a [`CapacitySequence`] come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Alg,
    EchEllipsoid,
    EchConvex,
    EchConcave,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provenance::Alg => "ALG",
            Provenance::EchEllipsoid => "ECH_ELLIPSOID",
            Provenance::EchConvex => "ECH_CONVEX",
            Provenance::EchConcave => "ECH_CONCAVE",
        };
        f.write_str(s)
    }
}

type Evaluator = dyn Fn(usize) -> Result<Vec<Rational>> + Send + Sync;

/// A capacity sequence `k -> c_k`. The evaluator returns the prefix
/// `c_0, ..., c_k`; computed prefixes are cached, and reads may proceed
/// concurrently.
pub struct CapacitySequence {
    provenance: Provenance,
    evaluator: Box<Evaluator>,
    memo: RwLock<Vec<Rational>>,
}

impl CapacitySequence {
    pub fn new(
        provenance: Provenance,
        evaluator: impl Fn(usize) -> Result<Vec<Rational>> + Send + Sync + 'static,
    ) -> Self {
        CapacitySequence {
            provenance,
            evaluator: Box::new(evaluator),
            memo: RwLock::new(Vec::new()),
        }
    }

    /// Algebraic capacities of the surface of `polygon`.
    pub fn alg(polygon: &MomentPolygon) -> Self {
        let p = polygon.clone();
        CapacitySequence::new(Provenance::Alg, move |k| alg::calg_sequence(&p, k))
    }

    /// ECH capacities of the ellipsoid `E(a, b)`.
    pub fn ellipsoid(a: Rational, b: Rational) -> Self {
        CapacitySequence::new(Provenance::EchEllipsoid, move |k| {
            Ok(ech::ellipsoid_sequence(&a, &b, k))
        })
    }

    /// ECH capacities of a convex or free toric domain.
    pub fn convex(polygon: &MomentPolygon) -> Result<Self> {
        ech::check_convex_domain(polygon)?;
        let p = polygon.clone();
        Ok(CapacitySequence::new(Provenance::EchConvex, move |k| {
            ech::ech_convex_sequence(&p, k)
        }))
    }

    /// ECH capacities of a concave toric domain.
    pub fn concave(domain: &ConcaveDomain) -> Self {
        let d = domain.clone();
        CapacitySequence::new(Provenance::EchConcave, move |k| d.ech_sequence(k))
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// `c_0, ..., c_{k_max}`.
    pub fn prefix(&self, k_max: usize) -> Result<Vec<Rational>> {
        {
            let memo = self.memo.read().expect("memo lock poisoned");
            if memo.len() > k_max {
                return Ok(memo[..=k_max].to_vec());
            }
        }
        let mut memo = self.memo.write().expect("memo lock poisoned");
        if memo.len() <= k_max {
            *memo = (self.evaluator)(k_max)?;
        }
        Ok(memo[..=k_max].to_vec())
    }

    pub fn get(&self, k: usize) -> Result<Rational> {
        Ok(self.prefix(k)?.pop().expect("nonempty"))
    }

    /// Number of cached values.
    pub fn cached(&self) -> usize {
        self.memo.read().expect("memo lock poisoned").len()
    }
}

impl fmt::Debug for CapacitySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CapacitySequence")
            .field("provenance", &self.provenance)
            .field("cached", &self.cached())
            .finish()
    }
}
