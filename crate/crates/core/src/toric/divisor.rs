use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::lattice::{counting, MomentPolygon, Point};
use crate::rational::{self, Rational};

/// A torus-invariant Q-divisor `sum a_i D_i`, one coefficient per ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusDivisor {
    coeffs: Vec<Rational>,
}

impl TorusDivisor {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        TorusDivisor { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![Rational::zero(); n])
    }

    /// `m * D_i` on a surface with `n` rays.
    pub fn prime(n: usize, i: usize, m: Rational) -> Self {
        let mut d = Self::zero(n);
        d.coeffs[i] = m;
        d
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, if integral.
    pub fn integers(&self) -> Option<Vec<BigInt>> {
        self.is_integral()
            .then(|| self.coeffs.iter().map(|c| c.to_integer()).collect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn floor(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.floor()).collect())
    }

    /// Copy with coefficient `i` removed.
    pub fn without(&self, i: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.remove(i);
        Self::new(coeffs)
    }

    /// Copy with `value` inserted at position `i`.
    pub fn with_inserted(&self, i: usize, value: Rational) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.insert(i, value);
        Self::new(coeffs)
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Index<usize> for TorusDivisor {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }
}

impl Add for &TorusDivisor {
    type Output = TorusDivisor;
    fn add(self, rhs: &TorusDivisor) -> TorusDivisor {
        assert_eq!(self.len(), rhs.len());
        TorusDivisor::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &TorusDivisor {
    type Output = TorusDivisor;
    fn sub(self, rhs: &TorusDivisor) -> TorusDivisor {
        assert_eq!(self.len(), rhs.len());
        TorusDivisor::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &TorusDivisor {
    type Output = TorusDivisor;
    fn neg(self) -> TorusDivisor {
        TorusDivisor::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for TorusDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The polytope `P_D` of a divisor: empty, a point, a segment or a polygon.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SupportPolytope {
    vertices: Vec<Point>,
}

impl SupportPolytope {
    /// Vertices must already be a strict counterclockwise hull.
    pub(crate) fn from_vertices(vertices: Vec<Point>) -> Self {
        SupportPolytope { vertices }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Two-dimensional support polytopes as moment polygons.
    pub fn as_polygon(&self) -> Option<MomentPolygon> {
        (self.vertices.len() >= 3).then(|| {
            MomentPolygon::new(self.vertices.clone()).expect("hull of a 2d region is a polygon")
        })
    }

    pub fn area(&self) -> Rational {
        counting::cycle_area(&self.vertices)
    }

    pub(crate) fn y_range(&self) -> Option<(Rational, Rational)> {
        let lo = self.vertices.iter().map(|v| &v.y).min()?;
        let hi = self.vertices.iter().map(|v| &v.y).max()?;
        Some((lo.clone(), hi.clone()))
    }

    pub fn minkowski_sum(&self, other: &SupportPolytope) -> SupportPolytope {
        let sums = self
            .vertices
            .iter()
            .flat_map(|p| other.vertices.iter().map(move |q| p + q))
            .collect();
        SupportPolytope::from_vertices(counting::convex_hull(sums))
    }

    /// `area(P + Q) - area(P) - area(Q)`, valid for degenerate polytopes too.
    pub fn mixed_area(&self, other: &SupportPolytope) -> Rational {
        self.minkowski_sum(other).area() - self.area() - other.area()
    }
}

/// A divisor class: the coefficient vector modulo the lattice of principal
/// divisors `(<m, v_i>)_i`, `m` integral, stored as a canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    rep: Vec<Rational>,
}

impl DivisorClass {
    pub fn representative(&self) -> TorusDivisor {
        TorusDivisor::new(self.rep.clone())
    }
}

/// Hermite-style echelon basis of the principal lattice, used to reduce
/// coefficient vectors to canonical coset representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct PrincipalLattice {
    rows: [Vec<BigInt>; 2],
    pivots: [usize; 2],
}

impl PrincipalLattice {
    pub(crate) fn new(rays: &[crate::lattice::LatticeVector]) -> Self {
        let mut r1: Vec<BigInt> = rays.iter().map(|v| v.x.clone()).collect();
        let mut r2: Vec<BigInt> = rays.iter().map(|v| v.y.clone()).collect();
        let n = rays.len();
        let c1 = (0..n)
            .find(|&c| !(r1[c].is_zero() && r2[c].is_zero()))
            .expect("rank two");
        // Euclid on the pivot column via unimodular row operations.
        while !r2[c1].is_zero() {
            let q = r1[c1].div_floor(&r2[c1]);
            for c in 0..n {
                let t = &r1[c] - &q * &r2[c];
                r1[c] = t;
            }
            std::mem::swap(&mut r1, &mut r2);
        }
        if r1[c1].is_negative() {
            r1.iter_mut().for_each(|x| *x = -x.clone());
        }
        let c2 = (c1 + 1..n).find(|&c| !r2[c].is_zero()).expect("rank two");
        if r2[c2].is_negative() {
            r2.iter_mut().for_each(|x| *x = -x.clone());
        }
        let q = r1[c2].div_floor(&r2[c2]);
        for c in 0..n {
            let t = &r1[c] - &q * &r2[c];
            r1[c] = t;
        }
        PrincipalLattice {
            rows: [r1, r2],
            pivots: [c1, c2],
        }
    }

    pub(crate) fn reduce(&self, coeffs: &[Rational]) -> Vec<Rational> {
        let mut d = coeffs.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let pivot = Rational::from_integer(row[p].clone());
            let q = rational::floor(&(&d[p] / &pivot));
            if !q.is_zero() {
                for (x, r) in d.iter_mut().zip(row) {
                    *x -= Rational::from_integer(&q * r);
                }
            }
        }
        d
    }

    pub(crate) fn class(&self, d: &TorusDivisor) -> DivisorClass {
        DivisorClass {
            rep: self.reduce(d.coefficients()),
        }
    }
}
