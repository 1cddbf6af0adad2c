use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{SupportPolytope, TorusDivisor};
use crate::error::{Error, Result};
use crate::lattice::{counting, HalfPlane, LatticeVector, MomentPolygon};
use crate::rational::Rational;

/// A complete two-dimensional toric surface given by its fan.
///
/// Ray `i` is followed counterclockwise by ray `i + 1`; cone `i` is spanned
/// by rays `i` and `i + 1`. When built from a polygon, ray `i` is the inner
/// normal of the edge ending at vertex `i`, so cone `i` is dual to vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricSurface {
    rays: Vec<LatticeVector>,
    cone_dets: Vec<BigInt>,
    intersections: Vec<Vec<Rational>>,
    polygon: Option<MomentPolygon>,
}

impl ToricSurface {
    /// Inner normal fan of a moment polygon.
    pub fn build(polygon: &MomentPolygon) -> ToricSurface {
        let n = polygon.len();
        let rays = (0..n).map(|i| polygon.inward_normal((i + n - 1) % n)).collect();
        let mut s = Self::from_rays(rays).expect("normal fan of a polygon is complete");
        s.polygon = Some(polygon.clone());
        s
    }

    /// Fan from primitive rays listed counterclockwise with every consecutive
    /// pair spanning a strictly convex cone.
    pub fn from_rays(rays: Vec<LatticeVector>) -> Result<ToricSurface> {
        let n = rays.len();
        if n < 3 {
            return Err(Error::InvalidFan(format!("{n} rays")));
        }
        if let Some(r) = rays.iter().find(|r| !r.is_primitive()) {
            return Err(Error::InvalidFan(format!("ray {r} is not primitive")));
        }
        let cone_dets: Vec<BigInt> = (0..n).map(|i| rays[i].det(&rays[(i + 1) % n])).collect();
        if cone_dets.iter().any(|d| !d.is_positive()) {
            return Err(Error::InvalidFan(
                "consecutive rays must turn strictly counterclockwise".into(),
            ));
        }
        // Positive turns between neighbours; make sure they add up to one
        // revolution by checking the cyclic angular order.
        let start = (0..n)
            .min_by(|&a, &b| rays[a].angle_cmp(&rays[b]))
            .expect("nonempty");
        for k in 0..n - 1 {
            let a = &rays[(start + k) % n];
            let b = &rays[(start + k + 1) % n];
            if a.angle_cmp(b) != std::cmp::Ordering::Less {
                return Err(Error::InvalidFan("rays wind more than once".into()));
            }
        }
        let intersections = intersection_matrix(&rays, &cone_dets);
        Ok(ToricSurface {
            rays,
            cone_dets,
            intersections,
            polygon: None,
        })
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    pub fn cone_dets(&self) -> &[BigInt] {
        &self.cone_dets
    }

    pub fn is_smooth_cone(&self, i: usize) -> bool {
        self.cone_dets[i].is_one()
    }

    pub fn is_smooth(&self) -> bool {
        self.cone_dets.iter().all(|d| d.is_one())
    }

    /// The polygon this surface was built from, if any.
    pub fn polygon(&self) -> Option<&MomentPolygon> {
        self.polygon.as_ref()
    }

    /// `D_i . D_j` for the boundary divisors.
    pub fn boundary_intersection(&self, i: usize, j: usize) -> &Rational {
        &self.intersections[i][j]
    }

    pub fn self_intersection(&self, i: usize) -> &Rational {
        &self.intersections[i][i]
    }

    pub fn intersection_matrix(&self) -> &[Vec<Rational>] {
        &self.intersections
    }

    pub(crate) fn check(&self, d: &TorusDivisor) -> Result<()> {
        if d.len() != self.ray_count() {
            return Err(Error::DivisorLength {
                expected: self.ray_count(),
                got: d.len(),
            });
        }
        Ok(())
    }

    pub fn zero_divisor(&self) -> TorusDivisor {
        TorusDivisor::zero(self.ray_count())
    }

    /// `K_Y = -sum D_i`.
    pub fn canonical(&self) -> TorusDivisor {
        TorusDivisor::from_i64(&vec![-1; self.ray_count()])
    }

    /// The principal divisor `div(chi^m) = sum <m, v_i> D_i`.
    pub fn principal(&self, m: &LatticeVector) -> TorusDivisor {
        TorusDivisor::new(
            self.rays
                .iter()
                .map(|v| Rational::from_integer(v.dot(m)))
                .collect(),
        )
    }

    /// `D . D_i` for every ray.
    pub fn ray_degrees(&self, d: &TorusDivisor) -> Vec<Rational> {
        let n = self.ray_count();
        (0..n)
            .map(|i| {
                let prev = (i + n - 1) % n;
                let next = (i + 1) % n;
                let mut s = &d[i] * &self.intersections[i][i];
                s += &d[prev] * &self.intersections[prev][i];
                if next != prev {
                    s += &d[next] * &self.intersections[next][i];
                }
                s
            })
            .collect()
    }

    /// Intersection pairing; bilinear and symmetric.
    pub fn intersect(&self, d1: &TorusDivisor, d2: &TorusDivisor) -> Rational {
        assert_eq!(d1.len(), self.ray_count());
        self.ray_degrees(d1)
            .iter()
            .zip(d2.coefficients())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `I(D) = D . (D - K)`.
    pub fn index(&self, d: &TorusDivisor) -> Rational {
        let deg = self.ray_degrees(d);
        let dd: Rational = deg.iter().zip(d.coefficients()).map(|(a, b)| a * b).sum();
        let dk: Rational = deg.iter().sum();
        dd + dk
    }

    /// Holomorphic Euler characteristic. Noether's formula on smooth
    /// surfaces; on singular ones only nef divisors are supported, where
    /// higher cohomology vanishes and `chi = h0`.
    pub fn chi(&self, d: &TorusDivisor) -> Result<Rational> {
        self.check(d)?;
        if self.is_smooth() {
            Ok(Rational::one() + self.index(d) / Rational::from_integer(BigInt::from(2)))
        } else if self.is_nef(d) {
            Ok(Rational::from_integer(BigInt::from(self.h0(d))))
        } else {
            Err(Error::SingularSurfaceChi)
        }
    }

    pub fn halfplanes(&self, d: &TorusDivisor) -> Vec<HalfPlane> {
        self.rays
            .iter()
            .zip(d.coefficients())
            .map(|(v, a)| HalfPlane::new(v.clone(), -a))
            .collect()
    }

    /// `P_D = { x : <v_i, x> >= -a_i }`.
    pub fn support_polytope(&self, d: &TorusDivisor) -> SupportPolytope {
        SupportPolytope::from_vertices(counting::halfplane_region(&self.halfplanes(d)))
    }

    /// Number of lattice points of `P_D`.
    pub fn h0(&self, d: &TorusDivisor) -> u64 {
        let poly = self.support_polytope(d);
        match poly.y_range() {
            None => 0,
            Some((lo, hi)) => counting::count_lattice_points(&self.halfplanes(d), &lo, &hi),
        }
    }

    /// Nef iff `D . D_i >= 0` for every boundary curve; on a complete toric
    /// surface this is convexity of the support function.
    pub fn is_nef(&self, d: &TorusDivisor) -> bool {
        self.ray_degrees(d).iter().all(|x| !x.is_negative())
    }

    /// Ample iff `D . D_i > 0` for every boundary curve (toric Kleiman).
    pub fn is_ample(&self, d: &TorusDivisor) -> bool {
        self.ray_degrees(d).iter().all(|x| x.is_positive())
    }

    /// Linear equivalence class to some divisor with nonnegative coefficients;
    /// equivalently `P_D` has a lattice point. Requires an integral divisor.
    pub fn is_effective(&self, d: &TorusDivisor) -> bool {
        d.is_integral() && self.h0(d) > 0
    }
}

/// `D_i . D_{i+1} = 1 / det(v_i, v_{i+1})` and
/// `D_i^2 = -det(v_{i-1}, v_{i+1}) / (det(v_{i-1}, v_i) det(v_i, v_{i+1}))`.
fn intersection_matrix(rays: &[LatticeVector], dets: &[BigInt]) -> Vec<Vec<Rational>> {
    let n = rays.len();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        let j = (i + 1) % n;
        let v = Rational::new(BigInt::one(), dets[i].clone());
        m[i][j] = v.clone();
        m[j][i] = v;
    }
    for i in 0..n {
        let prev = (i + n - 1) % n;
        let next = (i + 1) % n;
        let num = rays[prev].det(&rays[next]);
        let den = &dets[prev] * &dets[i];
        m[i][i] = -Rational::new(num, den);
    }
    m
}

/// The associated divisor `A_P = sum a_F D_F` with `<u_F, x> = -a_F` on `F`.
pub fn associated_divisor(polygon: &MomentPolygon) -> TorusDivisor {
    let n = polygon.len();
    TorusDivisor::new(
        (0..n)
            .map(|i| {
                let u = polygon.inward_normal((i + n - 1) % n);
                -u.dot_point(polygon.vertex(i))
            })
            .collect(),
    )
}
