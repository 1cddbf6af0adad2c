//! Embedding obstructions from concave domains into toric surfaces, and the
//! width estimates derived from them. All checks run up to a finite horizon.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{LatticeVector, MomentPolygon};
use crate::rational::{self, Rational};

use super::alg::calg_sequence;
use super::concave::ConcaveDomain;

/// Outcome of comparing `c^ECH_k(X_Delta)` with `c^alg_k(Y_Omega)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingVerdict {
    /// The least `k` with `ech > alg`.
    Obstructed { k: usize, ech: Rational, alg: Rational },
    /// Every inequality holds for `1 <= k <= horizon`. No claim is made
    /// beyond the horizon.
    CompatibleUpTo { horizon: usize },
}

impl EmbeddingVerdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, EmbeddingVerdict::Obstructed { .. })
    }
}

impl fmt::Display for EmbeddingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbeddingVerdict::Obstructed { k, ech, alg } => write!(
                f,
                "OBSTRUCTED\tk={k}\tech={}\talg={}",
                rational::format_exact(ech),
                rational::format_exact(alg)
            ),
            EmbeddingVerdict::CompatibleUpTo { horizon } => {
                write!(f, "COMPATIBLE_UP_TO_K\thorizon={horizon}")
            }
        }
    }
}

fn require_smooth_vertex(omega: &MomentPolygon) -> Result<()> {
    if omega.smooth_vertices().is_empty() {
        Err(Error::NoSmoothVertex)
    } else {
        Ok(())
    }
}

/// Checks the capacity inequalities for the interior of `delta` embedding
/// into the surface of `omega`, for `1 <= k <= horizon`.
pub fn embedding_verdict(
    delta: &ConcaveDomain,
    omega: &MomentPolygon,
    horizon: usize,
) -> Result<EmbeddingVerdict> {
    require_smooth_vertex(omega)?;
    if horizon == 0 {
        return Err(Error::EmptyHorizon);
    }
    let ech = delta.ech_sequence(horizon)?;
    let alg = calg_sequence(omega, horizon)?;
    for k in 1..=horizon {
        if ech[k] > alg[k] {
            return Ok(EmbeddingVerdict::Obstructed {
                k,
                ech: ech[k].clone(),
                alg: alg[k].clone(),
            });
        }
    }
    Ok(EmbeddingVerdict::CompatibleUpTo { horizon })
}

/// Truncated minimum of `c^alg_k(Omega) / c^ECH_k(Xi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthEstimate {
    pub value: Rational,
    /// Least `k` attaining the minimum.
    pub argmin: usize,
    /// The minimum is already attained with `k <= horizon / 2`.
    pub stable: bool,
    pub horizon: usize,
}

/// Upper bound for the `Xi`-width of the surface of `omega`.
pub fn xi_width(omega: &MomentPolygon, xi: &ConcaveDomain, horizon: usize) -> Result<WidthEstimate> {
    require_smooth_vertex(omega)?;
    if horizon == 0 {
        return Err(Error::EmptyHorizon);
    }
    let ech = xi.ech_sequence(horizon)?;
    let alg = calg_sequence(omega, horizon)?;
    let mut best: Option<(Rational, usize)> = None;
    for k in 1..=horizon {
        // c_1 of a nonempty domain is positive, so k = 1 always qualifies.
        if ech[k] > Rational::from_integer(0.into()) {
            let ratio = &alg[k] / &ech[k];
            if best.as_ref().is_none_or(|(b, _)| ratio < *b) {
                best = Some((ratio, k));
            }
        }
    }
    let (value, argmin) = best.expect("c_1 is positive");
    Ok(WidthEstimate {
        value,
        argmin,
        stable: argmin <= horizon / 2,
        horizon,
    })
}

/// The Gromov-width estimate compared against the lattice width.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthBound {
    pub estimate: WidthEstimate,
    pub lattice_width: Rational,
    pub direction: LatticeVector,
    /// `estimate <= lattice_width`.
    pub holds: bool,
}

/// Compares the truncated Gromov width of the surface of `omega` with the
/// lattice width of `omega`.
pub fn width_bound_check(omega: &MomentPolygon, horizon: usize) -> Result<WidthBound> {
    let ball = ConcaveDomain::triangle(rational::int(1), rational::int(1))?;
    let estimate = xi_width(omega, &ball, horizon)?;
    let (lattice_width, direction) = omega.lattice_width();
    let holds = estimate.value <= lattice_width;
    Ok(WidthBound {
        estimate,
        lattice_width,
        direction,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn poly(v: &[(i64, i64)]) -> MomentPolygon {
        MomentPolygon::from_i64(v).unwrap()
    }

    #[test]
    fn verdict_examples() {
        let delta = ConcaveDomain::triangle(int(1), int(2)).unwrap();
        let rect = poly(&[(0, 0), (1, 0), (1, 2), (0, 2)]);
        assert_eq!(
            embedding_verdict(&delta, &rect, 50).unwrap(),
            EmbeddingVerdict::CompatibleUpTo { horizon: 50 }
        );
        let ball = ConcaveDomain::triangle(rat(11, 10), rat(11, 10)).unwrap();
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(
            embedding_verdict(&ball, &sq, 50).unwrap(),
            EmbeddingVerdict::Obstructed {
                k: 1,
                ech: rat(11, 10),
                alg: int(1)
            }
        );
        let unit = ConcaveDomain::triangle(int(1), int(1)).unwrap();
        let tri = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert!(!embedding_verdict(&unit, &tri, 30).unwrap().is_obstructed());
    }

    #[test]
    fn needs_a_smooth_vertex() {
        let unit = ConcaveDomain::triangle(int(1), int(1)).unwrap();
        let singular = poly(&[(-1, -1), (1, 0), (0, 1)]);
        assert_eq!(embedding_verdict(&unit, &singular, 5), Err(Error::NoSmoothVertex));
        assert_eq!(width_bound_check(&singular, 5), Err(Error::NoSmoothVertex));
    }

    #[test]
    fn width_examples() {
        let unit = ConcaveDomain::triangle(int(1), int(1)).unwrap();
        let tri = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(xi_width(&tri, &unit, 20).unwrap().value, int(1));
        let r15 = poly(&[(0, 0), (1, 0), (1, 5), (0, 5)]);
        assert_eq!(xi_width(&r15, &unit, 20).unwrap().value, int(1));
        let r23 = poly(&[(0, 0), (2, 0), (2, 3), (0, 3)]);
        let w = xi_width(&r23, &unit, 20).unwrap();
        assert_eq!((w.value, w.argmin, w.stable), (int(2), 1, true));

        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let b = width_bound_check(&sq, 20).unwrap();
        assert_eq!((b.estimate.value, b.lattice_width, b.holds), (int(1), int(1), true));
        let tri2 = poly(&[(0, 0), (2, 0), (0, 2)]);
        let b = width_bound_check(&tri2, 20).unwrap();
        assert_eq!((b.estimate.value, b.lattice_width, b.holds), (int(2), int(2), true));
    }
}
