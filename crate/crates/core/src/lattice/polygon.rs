use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::counting::{self, HalfPlane};
use super::{LatticeVector, Point, UnimodularAffineMap};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A convex polygon with rational vertices and nonempty interior.
///
/// Vertices are stored counterclockwise starting from the lexicographically
/// smallest one, so structurally equal polygons compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MomentPolygon {
    vertices: Vec<Point>,
}

impl MomentPolygon {
    /// Validates and canonicalises. Clockwise input is reversed; repeated
    /// or collinear consecutive vertices are rejected.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        Self::validated(vertices).map_err(|(e, _)| e)
    }

    /// As [`MomentPolygon::new`], additionally reporting the input index of
    /// the offending vertex for convexity failures.
    pub(crate) fn validated(mut vertices: Vec<Point>) -> Result<Self, (Error, Option<usize>)> {
        let n = vertices.len();
        if n < 3 {
            return Err((Error::TooFewVertices { count: n }, None));
        }
        let area = counting::cycle_area(&vertices);
        if area.is_zero() {
            return Err((Error::ZeroArea, None));
        }
        let clockwise = area.is_negative();
        // Every vertex must sit strictly left of every edge it is not on.
        for i in 0..n {
            let a = &vertices[i];
            let b = &vertices[(i + 1) % n];
            let edge = b - a;
            for (j, p) in vertices.iter().enumerate() {
                if j == i || j == (i + 1) % n {
                    continue;
                }
                let side = edge.cross(&(p - a));
                let ok = if clockwise {
                    side.is_negative()
                } else {
                    side.is_positive()
                };
                if !ok {
                    let culprit = if side.is_zero() { j } else { (i + 1) % n };
                    return Err((Error::NotConvex { line: None }, Some(culprit)));
                }
            }
        }
        if clockwise {
            vertices.reverse();
        }
        let start = (0..n)
            .min_by(|&i, &j| vertices[i].cmp(&vertices[j]))
            .expect("nonempty");
        vertices.rotate_left(start);
        Ok(MomentPolygon { vertices })
    }

    pub fn from_i64(vertices: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            vertices
                .iter()
                .map(|&(x, y)| Point::from_ints(x, y))
                .collect(),
        )
    }

    /// Axis-parallel rectangle `[0, a] x [0, b]`.
    pub fn rectangle(a: Rational, b: Rational) -> Result<Self> {
        let z = Rational::zero();
        Self::new(vec![
            Point::new(z.clone(), z.clone()),
            Point::new(a.clone(), z.clone()),
            Point::new(a, b.clone()),
            Point::new(z, b),
        ])
    }

    /// Right triangle with legs `a` along x and `b` along y.
    pub fn triangle(a: Rational, b: Rational) -> Result<Self> {
        Self::new(vec![
            Point::origin(),
            Point::new(a, Rational::zero()),
            Point::new(Rational::zero(), b),
        ])
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertex `i` taken cyclically.
    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i % self.len()]
    }

    /// The vector from vertex `i` to vertex `i + 1`.
    pub fn edge_vector(&self, i: usize) -> Point {
        self.vertex(i + 1) - self.vertex(i)
    }

    pub fn edge_direction(&self, i: usize) -> LatticeVector {
        LatticeVector::primitive_along(&self.edge_vector(i))
    }

    /// Rational lattice length of edge `i`.
    pub fn edge_lattice_length(&self, i: usize) -> Rational {
        self.edge_direction(i)
            .lattice_length_of(&self.edge_vector(i))
    }

    /// Primitive inward normal of edge `i` (from vertex `i` to `i + 1`).
    pub fn inward_normal(&self, i: usize) -> LatticeVector {
        let d = self.edge_direction(i);
        LatticeVector::new(-d.y, d.x)
    }

    /// Supporting half-plane of edge `i`.
    pub fn edge_halfplane(&self, i: usize) -> HalfPlane {
        let u = self.inward_normal(i);
        let bound = u.dot_point(self.vertex(i));
        HalfPlane::new(u, bound)
    }

    pub fn halfplanes(&self) -> Vec<HalfPlane> {
        (0..self.len()).map(|i| self.edge_halfplane(i)).collect()
    }

    pub fn area(&self) -> Rational {
        counting::cycle_area(&self.vertices)
    }

    /// A rational upper bound on the Euclidean perimeter.
    pub fn perimeter_upper_bound(&self) -> Rational {
        (0..self.len())
            .map(|i| {
                let e = self.edge_vector(i);
                rational::sqrt_upper(&(&e.x * &e.x + &e.y * &e.y))
            })
            .sum()
    }

    fn y_range(&self) -> (Rational, Rational) {
        let lo = self.vertices.iter().map(|v| &v.y).min().expect("nonempty");
        let hi = self.vertices.iter().map(|v| &v.y).max().expect("nonempty");
        (lo.clone(), hi.clone())
    }

    /// Number of integer points in the closed polygon.
    pub fn lattice_count(&self) -> u64 {
        let (lo, hi) = self.y_range();
        counting::count_lattice_points(&self.halfplanes(), &lo, &hi)
    }

    pub fn lattice_points(&self) -> Vec<(BigInt, BigInt)> {
        let (lo, hi) = self.y_range();
        counting::lattice_points(&self.halfplanes(), &lo, &hi)
    }

    /// Integer points on the boundary; only defined for lattice polygons.
    pub fn boundary_lattice_count(&self) -> Option<u64> {
        if !self.vertices.iter().all(Point::is_integral) {
            return None;
        }
        let mut total = BigInt::zero();
        for i in 0..self.len() {
            let e = self.edge_vector(i);
            total += e.x.to_integer().gcd(&e.y.to_integer());
        }
        num_traits::ToPrimitive::to_u64(&total)
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        (0..self.len()).all(|i| self.edge_halfplane(i).contains(p))
    }

    /// Whether `other` lies in the closed polygon `self`.
    pub fn contains(&self, other: &MomentPolygon) -> bool {
        let hps = self.halfplanes();
        other
            .vertices
            .iter()
            .all(|v| hps.iter().all(|h| h.contains(v)))
    }

    pub fn minkowski_sum(&self, other: &MomentPolygon) -> MomentPolygon {
        let sums = self
            .vertices
            .iter()
            .flat_map(|p| other.vertices.iter().map(move |q| p + q))
            .collect();
        MomentPolygon::new(counting::convex_hull(sums)).expect("sum of polygons is a polygon")
    }

    /// `area(P + Q) - area(P) - area(Q)`.
    pub fn mixed_area(&self, other: &MomentPolygon) -> Rational {
        self.minkowski_sum(other).area() - self.area() - other.area()
    }

    pub fn scale(&self, s: &Rational) -> Result<MomentPolygon> {
        if !s.is_positive() {
            return Err(Error::NonPositiveScale(s.to_string()));
        }
        Ok(MomentPolygon {
            vertices: self.vertices.iter().map(|v| v.scale(s)).collect(),
        })
    }

    pub fn translate(&self, t: &Point) -> MomentPolygon {
        MomentPolygon {
            vertices: self.vertices.iter().map(|v| v + t).collect(),
        }
    }

    /// `max <l, p - q>` over `p, q` in the polygon.
    pub fn width_along(&self, l: &LatticeVector) -> Rational {
        let values: Vec<Rational> = self.vertices.iter().map(|v| l.dot_point(v)).collect();
        let max = values.iter().max().expect("nonempty");
        let min = values.iter().min().expect("nonempty");
        max - min
    }

    /// Lattice width and a minimising primitive direction.
    ///
    /// The width along `l` is at least `2 r |l|` for the inradius `r`, and
    /// `r >= area / perimeter`, so only directions with
    /// `|l| <= best / (2 area / perimeter)` can compete.
    pub fn lattice_width(&self) -> (Rational, LatticeVector) {
        let e1 = LatticeVector::new(1, 0);
        let e2 = LatticeVector::new(0, 1);
        let w1 = self.width_along(&e1);
        let w2 = self.width_along(&e2);
        let (mut best, mut best_dir) = if w2 < w1 { (w2, e2) } else { (w1, e1) };
        let rho = self.area() / self.perimeter_upper_bound();
        let radius = &best / (rational::int(2) * &rho);
        let r_sq = &radius * &radius;
        let r_int = rational::floor(&rational::sqrt_upper(&r_sq));
        let key = |w: &Rational, l: &LatticeVector| {
            (w.clone(), l.norm_sq(), -l.x.clone(), -l.y.clone())
        };
        let mut best_key = key(&best, &best_dir);
        let mut x = BigInt::zero();
        while x <= r_int {
            let mut y = -r_int.clone();
            while y <= r_int {
                let l = LatticeVector::new(x.clone(), y.clone());
                let canonical = x.is_positive() || (x.is_zero() && y.is_positive());
                if canonical
                    && l.is_primitive()
                    && Rational::from_integer(l.norm_sq()) <= r_sq
                {
                    let w = self.width_along(&l);
                    let k = key(&w, &l);
                    if k < best_key {
                        best_key = k;
                        best = w;
                        best_dir = l;
                    }
                }
                y += 1;
            }
            x += 1;
        }
        (best, best_dir)
    }

    /// Primitive directions of the edges entering and leaving vertex `i`.
    fn corner_directions(&self, i: usize) -> (LatticeVector, LatticeVector) {
        let n = self.len();
        let incoming = self.edge_direction((i + n - 1) % n);
        let outgoing = self.edge_direction(i);
        (incoming, outgoing)
    }

    /// Determinant of the primitive edge directions at vertex `i` (always >= 1).
    pub fn corner_det(&self, i: usize) -> BigInt {
        let (incoming, outgoing) = self.corner_directions(i);
        incoming.det(&outgoing)
    }

    pub fn is_smooth_vertex(&self, i: usize) -> bool {
        self.corner_det(i).is_one()
    }

    pub fn smooth_vertices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_smooth_vertex(i)).collect()
    }

    /// Moves the first smooth vertex to the origin with its edges along the
    /// positive coordinate axes. Returns the image and the map `T` with
    /// `T(self) = image`.
    pub fn normalize(&self) -> Result<(MomentPolygon, UnimodularAffineMap)> {
        let i = *self.smooth_vertices().first().ok_or(Error::NoSmoothVertex)?;
        let (incoming, outgoing) = self.corner_directions(i);
        let e1 = outgoing;
        let e2 = -&incoming;
        // Inverse of the matrix with columns e1, e2 (determinant 1).
        let m = [[e2.y.clone(), -e2.x.clone()], [-e1.y.clone(), e1.x.clone()]];
        let linear = UnimodularAffineMap::new(m, Point::origin())?;
        let v = linear.apply_point(self.vertex(i));
        let t = Point::new(-v.x, -v.y);
        let map = UnimodularAffineMap::new(linear.matrix().clone(), t)?;
        Ok((map.apply(self), map))
    }

    /// Has a vertex at the origin whose edges run along the positive axes.
    pub fn is_convex_domain(&self) -> bool {
        let origin = Point::origin();
        self.vertices.iter().position(|v| *v == origin).is_some_and(|i| {
            let (incoming, outgoing) = self.corner_directions(i);
            outgoing == LatticeVector::new(1, 0) && incoming == LatticeVector::new(0, -1)
        })
    }

    /// Contained in the open positive quadrant.
    pub fn is_free(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.x.is_positive() && v.y.is_positive())
    }

    /// Cuts a corner at vertex `v` along the line through the points at
    /// lattice distance `eps` on both incident edges. At a smooth vertex this
    /// is the moment polygon of the toric blow-up with class `A - eps E`.
    pub fn corner_chop(&self, v: usize, eps: &Rational) -> Result<MomentPolygon> {
        let n = self.len();
        if v >= n {
            return Err(Error::VertexOutOfRange { index: v, len: n });
        }
        let too_large = || Error::ChopTooLarge {
            vertex: v,
            eps: eps.to_string(),
        };
        if !eps.is_positive() {
            return Err(too_large());
        }
        if *eps >= self.edge_lattice_length((v + n - 1) % n) || *eps >= self.edge_lattice_length(v) {
            return Err(too_large());
        }
        let (incoming, outgoing) = self.corner_directions(v);
        let p = self.vertex(v);
        let before = p - &incoming.to_point().scale(eps);
        let after = p + &outgoing.to_point().scale(eps);
        let mut vertices = Vec::with_capacity(n + 1);
        for (i, q) in self.vertices.iter().enumerate() {
            if i == v {
                vertices.push(before.clone());
                vertices.push(after.clone());
            } else {
                vertices.push(q.clone());
            }
        }
        MomentPolygon::new(vertices)
    }
}

impl fmt::Display for MomentPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "conv{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn tri() -> MomentPolygon {
        MomentPolygon::from_i64(&[(0, 0), (1, 0), (0, 1)]).unwrap()
    }

    fn square() -> MomentPolygon {
        MomentPolygon::from_i64(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn canonical_form() {
        let a = MomentPolygon::from_i64(&[(1, 1), (0, 1), (0, 0), (1, 0)]).unwrap();
        assert_eq!(a, square());
        assert_eq!(a.vertex(0), &Point::origin());
    }

    #[test]
    fn rejects_degenerate_input() {
        assert_eq!(
            MomentPolygon::from_i64(&[(0, 0), (1, 0), (2, 0)]),
            Err(Error::ZeroArea)
        );
        assert_eq!(
            MomentPolygon::from_i64(&[(0, 0), (1, 0), (2, 0), (0, 1)]),
            Err(Error::NotConvex { line: None })
        );
        assert!(matches!(
            MomentPolygon::from_i64(&[(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)]),
            Err(Error::NotConvex { .. })
        ));
        assert_eq!(
            MomentPolygon::from_i64(&[(0, 0), (1, 0)]),
            Err(Error::TooFewVertices { count: 2 })
        );
    }

    #[test]
    fn areas() {
        assert_eq!(tri().area(), rat(1, 2));
        assert_eq!(square().area(), int(1));
        let chopped = square().corner_chop(0, &rat(1, 2)).unwrap();
        assert_eq!(chopped.area(), rat(7, 8));
    }

    #[test]
    fn lattice_counts() {
        assert_eq!(tri().lattice_count(), 3);
        assert_eq!(tri().scale(&int(2)).unwrap().lattice_count(), 6);
        let t = MomentPolygon::triangle(rat(3, 2), rat(3, 2)).unwrap();
        assert_eq!(t.lattice_count(), 3);
        assert_eq!(square().boundary_lattice_count(), Some(4));
        assert_eq!(t.boundary_lattice_count(), None);
    }

    #[test]
    fn mixed_areas() {
        let two = tri().scale(&int(2)).unwrap();
        assert_eq!(two.mixed_area(&tri()), int(2));
        let r = MomentPolygon::rectangle(int(2), int(3)).unwrap();
        assert_eq!(square().mixed_area(&r), int(5));
        assert_eq!(r.mixed_area(&r), int(12));
    }

    #[test]
    fn widths() {
        assert_eq!(square().lattice_width(), (int(1), LatticeVector::new(1, 0)));
        let two = tri().scale(&int(2)).unwrap();
        assert_eq!(two.lattice_width(), (int(2), LatticeVector::new(1, 0)));
        let r = MomentPolygon::rectangle(rat(3, 2), int(7)).unwrap();
        assert_eq!(r.lattice_width(), (rat(3, 2), LatticeVector::new(1, 0)));
        // A long thin parallelogram along (1,1): width 1 in direction (1,-1).
        let p = MomentPolygon::from_i64(&[(0, 0), (1, 0), (11, 10), (10, 10)]).unwrap();
        assert_eq!(p.lattice_width(), (int(1), LatticeVector::new(1, -1)));
    }

    #[test]
    fn smooth_vertices() {
        assert_eq!(tri().smooth_vertices(), vec![0, 1, 2]);
        let p112 = MomentPolygon::from_i64(&[(0, 0), (1, 0), (0, 2)]).unwrap();
        assert_eq!(p112.smooth_vertices(), vec![0, 2]);
        assert_eq!(p112.vertex(1), &Point::from_ints(1, 0));
        assert_eq!(tri().scale(&int(2)).unwrap().smooth_vertices(), vec![0, 1, 2]);
    }

    #[test]
    fn normalize_examples() {
        let (n, t) = tri().normalize().unwrap();
        assert_eq!(n, tri());
        assert_eq!(t, UnimodularAffineMap::identity());
        let shifted = MomentPolygon::from_i64(&[(1, 1), (2, 1), (1, 2)]).unwrap();
        let (n, t) = shifted.normalize().unwrap();
        assert_eq!(n, tri());
        assert_eq!(t, UnimodularAffineMap::translation(Point::from_ints(-1, -1)));
        assert_eq!(t.inverse().apply(&n), shifted);
        let singular_only = MomentPolygon::from_i64(&[(0, 0), (2, 1), (1, 2)]).unwrap();
        assert_eq!(singular_only.normalize(), Err(Error::NoSmoothVertex));
    }

    #[test]
    fn normalize_puts_corner_on_axes() {
        let p = MomentPolygon::from_i64(&[(3, 1), (5, 2), (4, 2)]).unwrap();
        let (n, t) = p.normalize().unwrap();
        assert!(n.is_convex_domain());
        assert_eq!(t.apply(&p), n);
        assert_eq!(t.inverse().apply(&n), p);
    }

    #[test]
    fn chops() {
        let c = square().corner_chop(0, &rat(1, 2)).unwrap();
        let expected = MomentPolygon::new(vec![
            Point::new(rat(1, 2), int(0)),
            Point::from_ints(1, 0),
            Point::from_ints(1, 1),
            Point::from_ints(0, 1),
            Point::new(int(0), rat(1, 2)),
        ])
        .unwrap();
        assert_eq!(c, expected);
        assert!(square().contains(&c));
        assert!(square().corner_chop(0, &int(1)).is_err());
        assert!(square().corner_chop(7, &rat(1, 2)).is_err());
        let eps = rat(1, 3);
        let d = square().corner_chop(2, &eps).unwrap();
        assert_eq!(square().area() - d.area(), &eps * &eps / int(2));
    }

    #[test]
    fn containment_and_scaling() {
        let r = MomentPolygon::rectangle(int(2), int(3)).unwrap();
        let t = MomentPolygon::from_i64(&[(0, 0), (1, 0), (0, 2)]).unwrap();
        assert!(r.contains(&r));
        assert!(r.contains(&t));
        assert!(!t.contains(&r));
        assert_eq!(tri().scale(&int(3)).unwrap().area(), rat(9, 2));
        assert!(tri().scale(&int(0)).is_err());
    }
}
