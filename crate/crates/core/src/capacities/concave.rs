//! Concave toric domains: the region between the axes and the graph of a
//! convex, strictly decreasing, piecewise-linear function.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{MomentPolygon, Point};
use crate::rational::Rational;

use super::ech::{disjoint_union, ellipsoid_sequence};

/// Safety cap on the number of pieces produced by a weight expansion.
pub const WEIGHT_EXPANSION_CAP: usize = 100_000;

/// A concave toric domain, stored as its upper boundary: vertices from
/// `(0, b)` to `(a, 0)` with strictly increasing `x`, strictly decreasing `y`
/// and strictly increasing slopes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConcaveDomain {
    graph: Vec<Point>,
}

fn not_concave(message: impl Into<String>) -> Error {
    Error::NotConcave(message.into())
}

impl ConcaveDomain {
    /// Validates a boundary graph from `(0, b)` to `(a, 0)`.
    pub fn new(graph: Vec<Point>) -> Result<Self> {
        if graph.len() < 2 {
            return Err(not_concave("the graph needs at least two vertices"));
        }
        let first = &graph[0];
        let last = graph.last().expect("nonempty");
        if !first.x.is_zero() || !first.y.is_positive() {
            return Err(not_concave(format!("graph must start on the positive y-axis, got {first}")));
        }
        if !last.y.is_zero() || !last.x.is_positive() {
            return Err(not_concave(format!("graph must end on the positive x-axis, got {last}")));
        }
        for w in graph.windows(2) {
            if w[1].x <= w[0].x || w[1].y >= w[0].y {
                return Err(not_concave(format!(
                    "graph is not strictly decreasing between {} and {}",
                    w[0], w[1]
                )));
            }
        }
        for w in graph.windows(3) {
            let turn = (&w[1] - &w[0]).cross(&(&w[2] - &w[1]));
            if !turn.is_positive() {
                return Err(not_concave(format!("graph does not bend upward at {}", w[1])));
            }
        }
        Ok(ConcaveDomain { graph })
    }

    /// The domain whose moment image is the triangle with legs `a` and `b`,
    /// i.e. the ellipsoid `E(a, b)`.
    pub fn triangle(a: Rational, b: Rational) -> Result<Self> {
        ConcaveDomain::new(vec![
            Point::new(Rational::zero(), b),
            Point::new(a, Rational::zero()),
        ])
    }

    /// Builds the domain from the vertices of its region, which must include
    /// the origin. Either orientation is accepted.
    pub fn from_vertices(vertices: &[Point]) -> Result<Self> {
        let origin = Point::origin();
        let Some(start) = vertices.iter().position(|v| *v == origin) else {
            return Err(not_concave("the region must have a vertex at the origin"));
        };
        let n = vertices.len();
        let mut cycle: Vec<Point> = (0..n).map(|i| vertices[(start + i) % n].clone()).collect();
        if cycle.len() >= 2 && cycle[1].x.is_zero() {
            // Clockwise: origin, (0, b), ..., (a, 0).
            cycle[1..].reverse();
        }
        // Counterclockwise: origin, (a, 0), ..., (0, b); the graph runs back.
        let mut graph: Vec<Point> = cycle[1..].to_vec();
        graph.reverse();
        ConcaveDomain::new(graph)
    }

    pub fn graph(&self) -> &[Point] {
        &self.graph
    }

    /// The region's vertices, counterclockwise from the origin.
    pub fn region_vertices(&self) -> Vec<Point> {
        let mut out = vec![Point::origin()];
        out.extend(self.graph.iter().rev().cloned());
        out
    }

    pub fn x_intercept(&self) -> &Rational {
        &self.graph.last().expect("nonempty").x
    }

    pub fn y_intercept(&self) -> &Rational {
        &self.graph[0].y
    }

    pub fn is_triangle(&self) -> bool {
        self.graph.len() == 2
    }

    pub fn area(&self) -> Rational {
        crate::lattice::counting::cycle_area(&self.region_vertices())
    }

    pub fn scale(&self, s: &Rational) -> Result<Self> {
        if !s.is_positive() {
            return Err(Error::NonPositiveScale(s.to_string()));
        }
        Ok(ConcaveDomain {
            graph: self.graph.iter().map(|p| p.scale(s)).collect(),
        })
    }

    /// The region as a (convex) moment polygon, when it is a triangle.
    pub fn as_polygon(&self) -> Option<MomentPolygon> {
        if self.is_triangle() {
            MomentPolygon::new(self.region_vertices()).ok()
        } else {
            None
        }
    }

    /// Whether the closed region lies inside the convex polygon `omega`.
    pub fn is_contained_in(&self, omega: &MomentPolygon) -> bool {
        self.region_vertices().iter().all(|v| omega.contains_point(v))
    }

    /// Whether `p` lies in the closed region.
    pub fn contains_point(&self, p: &Point) -> bool {
        if p.x.is_negative() || p.y.is_negative() || p.x > *self.x_intercept() {
            return false;
        }
        self.graph.windows(2).all(|w| {
            // On or below the line through each graph edge, where it applies.
            (p.x < w[0].x || p.x > w[1].x) || (&w[1] - &w[0]).cross(&(p - &w[0])) <= Rational::zero()
        })
    }

    /// Removes the largest ball `{x + y <= w}` and returns `w` together with
    /// the two remaining pieces, each carried to a concave domain by a
    /// shear in `SL(2, Z)`.
    fn split(&self) -> (Rational, Vec<ConcaveDomain>) {
        let sums: Vec<Rational> = self.graph.iter().map(|p| &p.x + &p.y).collect();
        let w = sums.iter().min().expect("nonempty").clone();
        let left_end = sums.iter().position(|s| *s == w).expect("minimum exists");
        let right_start = sums.iter().rposition(|s| *s == w).expect("minimum exists");
        let mut pieces = Vec::new();
        if left_end > 0 {
            let graph = self.graph[..=left_end]
                .iter()
                .map(|p| Point::new(p.x.clone(), &p.y + &p.x - &w))
                .collect();
            pieces.push(ConcaveDomain::new(graph).expect("shear preserves concavity"));
        }
        if right_start + 1 < self.graph.len() {
            let graph = self.graph[right_start..]
                .iter()
                .map(|p| Point::new(&p.x + &p.y - &w, p.y.clone()))
                .collect();
            pieces.push(ConcaveDomain::new(graph).expect("shear preserves concavity"));
        }
        (w, pieces)
    }

    /// Decomposes the domain into ellipsoids: each non-triangular piece
    /// contributes its largest ball and each triangular piece its legs.
    pub fn ellipsoid_pieces(&self) -> Result<Vec<(Rational, Rational)>> {
        let mut out = Vec::new();
        let mut stack = vec![self.clone()];
        while let Some(piece) = stack.pop() {
            if out.len() > WEIGHT_EXPANSION_CAP {
                return Err(not_concave("weight expansion exceeded its piece cap"));
            }
            if piece.is_triangle() {
                out.push((piece.x_intercept().clone(), piece.y_intercept().clone()));
                continue;
            }
            let (w, rest) = piece.split();
            out.push((w.clone(), w));
            stack.extend(rest.into_iter().rev());
        }
        Ok(out)
    }

    /// The full weight expansion: ball weights, triangles included, in the
    /// order they are removed.
    pub fn weight_expansion(&self) -> Result<Vec<Rational>> {
        let mut out = Vec::new();
        let mut stack = vec![self.clone()];
        while let Some(piece) = stack.pop() {
            if out.len() > WEIGHT_EXPANSION_CAP {
                return Err(not_concave("weight expansion exceeded its piece cap"));
            }
            let (w, rest) = piece.split();
            out.push(w);
            stack.extend(rest.into_iter().rev());
        }
        Ok(out)
    }

    /// `c^ECH_k` for `k = 0..=k_max`.
    pub fn ech_sequence(&self, k_max: usize) -> Result<Vec<Rational>> {
        if self.is_triangle() {
            return Ok(ellipsoid_sequence(self.x_intercept(), self.y_intercept(), k_max));
        }
        let parts: Vec<Vec<Rational>> = self
            .ellipsoid_pieces()?
            .iter()
            .map(|(a, b)| ellipsoid_sequence(a, b, k_max))
            .collect();
        Ok(disjoint_union(&parts, k_max))
    }
}

impl fmt::Display for ConcaveDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.graph.iter().map(|p| p.to_string()).collect();
        write!(f, "concave[{}]", parts.join(" "))
    }
}

/// The `k`-th ECH capacity of a concave toric domain.
pub fn ech_concave(domain: &ConcaveDomain, k: usize) -> Result<Rational> {
    Ok(domain.ech_sequence(k)?.pop().expect("nonempty"))
}
