//! Half-plane systems, convex hulls and exact lattice-point enumeration.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{LatticeVector, Point};
use crate::rational::{self, Rational};

/// The closed half-plane `<normal, x> >= bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfPlane {
    pub normal: LatticeVector,
    pub bound: Rational,
}

impl HalfPlane {
    pub fn new(normal: LatticeVector, bound: Rational) -> Self {
        HalfPlane { normal, bound }
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.normal.dot_point(p) >= self.bound
    }

    /// Slack `<normal, p> - bound`; zero on the boundary line.
    pub fn slack(&self, p: &Point) -> Rational {
        self.normal.dot_point(p) - &self.bound
    }

    /// Intersection point of the two boundary lines, if they are not parallel.
    pub fn meet(&self, other: &HalfPlane) -> Option<Point> {
        let det = self.normal.det(&other.normal);
        if det.is_zero() {
            return None;
        }
        let det = Rational::from_integer(det);
        let (a1, b1) = (
            Rational::from_integer(self.normal.x.clone()),
            Rational::from_integer(self.normal.y.clone()),
        );
        let (a2, b2) = (
            Rational::from_integer(other.normal.x.clone()),
            Rational::from_integer(other.normal.y.clone()),
        );
        let x = (&self.bound * &b2 - &other.bound * &b1) / &det;
        let y = (&a1 * &other.bound - &a2 * &self.bound) / &det;
        Some(Point::new(x, y))
    }
}

/// Strict convex hull in counterclockwise order (collinear points dropped).
/// Degenerate inputs give one or two points; empty input gives none.
pub fn convex_hull(mut points: Vec<Point>) -> Vec<Point> {
    points.sort();
    points.dedup();
    if points.len() <= 2 {
        return points;
    }
    let turn = |o: &Point, a: &Point, b: &Point| (a - o).cross(&(b - o));
    let mut lower: Vec<Point> = Vec::new();
    for p in &points {
        while lower.len() >= 2
            && !turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in points.iter().rev() {
        while upper.len() >= 2
            && !turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Shoelace area of a counterclockwise vertex cycle (zero for fewer than 3).
pub fn cycle_area(vertices: &[Point]) -> Rational {
    if vertices.len() < 3 {
        return Rational::zero();
    }
    let n = vertices.len();
    let twice: Rational = (0..n)
        .map(|i| vertices[i].cross(&vertices[(i + 1) % n]))
        .sum();
    twice / rational::int(2)
}

/// Integer x-range `[lo, hi]` of the row `y` inside the half-planes, or `None`.
fn row_range(halfplanes: &[HalfPlane], y: &BigInt) -> Option<(BigInt, BigInt)> {
    let y = Rational::from_integer(y.clone());
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for h in halfplanes {
        let rhs = &h.bound - Rational::from_integer(h.normal.y.clone()) * &y;
        if h.normal.x.is_zero() {
            if rhs.is_positive() {
                return None;
            }
            continue;
        }
        let edge = rhs / Rational::from_integer(h.normal.x.clone());
        if h.normal.x.is_positive() {
            if lo.as_ref().is_none_or(|l| edge > *l) {
                lo = Some(edge);
            }
        } else if hi.as_ref().is_none_or(|u| edge < *u) {
            hi = Some(edge);
        }
    }
    let lo = rational::ceil(&lo.expect("half-plane system unbounded to the left"));
    let hi = rational::floor(&hi.expect("half-plane system unbounded to the right"));
    (lo <= hi).then_some((lo, hi))
}

/// Number of integer points in the intersection of `halfplanes` whose
/// y-coordinate lies in `[y_min, y_max]`. The system must be bounded in x
/// on every row of that range.
pub fn count_lattice_points(halfplanes: &[HalfPlane], y_min: &Rational, y_max: &Rational) -> u64 {
    let mut y = rational::ceil(y_min);
    let top = rational::floor(y_max);
    let mut count = BigInt::zero();
    while y <= top {
        if let Some((lo, hi)) = row_range(halfplanes, &y) {
            count += hi - lo + 1;
        }
        y += 1;
    }
    count.to_u64().expect("lattice point count exceeds u64")
}

/// The integer points themselves, row by row (increasing y, then x).
pub fn lattice_points(halfplanes: &[HalfPlane], y_min: &Rational, y_max: &Rational) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::new();
    let mut y = rational::ceil(y_min);
    let top = rational::floor(y_max);
    while y <= top {
        if let Some((lo, hi)) = row_range(halfplanes, &y) {
            let mut x = lo;
            while x <= hi {
                out.push((x.clone(), y.clone()));
                x += 1;
            }
        }
        y += 1;
    }
    out
}

/// Vertices of the bounded region cut out by `halfplanes`, computed from all
/// pairwise line intersections. Empty when the region is empty.
pub fn halfplane_region(halfplanes: &[HalfPlane]) -> Vec<Point> {
    let mut candidates = Vec::new();
    for (i, a) in halfplanes.iter().enumerate() {
        for b in &halfplanes[i + 1..] {
            if let Some(p) = a.meet(b) {
                if halfplanes.iter().all(|h| h.contains(&p)) {
                    candidates.push(p);
                }
            }
        }
    }
    convex_hull(candidates)
}
