use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{LatticeVector, MomentPolygon, Point};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// `x -> M x + t` with `M` an integer matrix of determinant `±1` and `t`
/// rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularAffineMap {
    m: [[BigInt; 2]; 2],
    t: Point,
}

impl UnimodularAffineMap {
    /// `m` is row-major: `m[0] = [a, b]`, `m[1] = [c, d]`.
    pub fn new(m: [[BigInt; 2]; 2], t: Point) -> Result<Self> {
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if det.abs() != BigInt::one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(UnimodularAffineMap { m, t })
    }

    pub fn from_i64(m: [[i64; 2]; 2], t: Point) -> Result<Self> {
        let m = m.map(|row| row.map(BigInt::from));
        Self::new(m, t)
    }

    pub fn identity() -> Self {
        Self::translation(Point::origin())
    }

    pub fn translation(t: Point) -> Self {
        let m = [
            [BigInt::one(), BigInt::zero()],
            [BigInt::zero(), BigInt::one()],
        ];
        UnimodularAffineMap { m, t }
    }

    pub fn matrix(&self) -> &[[BigInt; 2]; 2] {
        &self.m
    }

    pub fn translation_part(&self) -> &Point {
        &self.t
    }

    pub fn det(&self) -> BigInt {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    fn linear(&self, p: &Point) -> Point {
        let r = |v: &BigInt| Rational::from_integer(v.clone());
        Point::new(
            r(&self.m[0][0]) * &p.x + r(&self.m[0][1]) * &p.y,
            r(&self.m[1][0]) * &p.x + r(&self.m[1][1]) * &p.y,
        )
    }

    pub fn apply_point(&self, p: &Point) -> Point {
        &self.linear(p) + &self.t
    }

    /// Image of a direction vector (translation ignored).
    pub fn apply_vector(&self, v: &LatticeVector) -> LatticeVector {
        LatticeVector::new(
            &self.m[0][0] * &v.x + &self.m[0][1] * &v.y,
            &self.m[1][0] * &v.x + &self.m[1][1] * &v.y,
        )
    }

    pub fn apply(&self, polygon: &MomentPolygon) -> MomentPolygon {
        let image = polygon.vertices().iter().map(|v| self.apply_point(v)).collect();
        MomentPolygon::new(image).expect("unimodular image of a valid polygon is valid")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &UnimodularAffineMap) -> UnimodularAffineMap {
        let a = &self.m;
        let b = &other.m;
        let m = [
            [
                &a[0][0] * &b[0][0] + &a[0][1] * &b[1][0],
                &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1],
            ],
            [
                &a[1][0] * &b[0][0] + &a[1][1] * &b[1][0],
                &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1],
            ],
        ];
        let t = self.apply_point(&other.t);
        UnimodularAffineMap { m, t }
    }

    pub fn inverse(&self) -> UnimodularAffineMap {
        let det = self.det();
        let a = &self.m;
        let m = [
            [&a[1][1] * &det, -&a[0][1] * &det],
            [-&a[1][0] * &det, &a[0][0] * &det],
        ];
        let linear_inverse = UnimodularAffineMap {
            m,
            t: Point::origin(),
        };
        let t = linear_inverse.apply_point(&self.t);
        UnimodularAffineMap {
            t: Point::new(-t.x, -t.y),
            ..linear_inverse
        }
    }
}

impl fmt::Display for UnimodularAffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]] + {}",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1], self.t
        )
    }
}
