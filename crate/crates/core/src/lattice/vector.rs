use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{self, Rational};

/// A point of the plane with exact rational coordinates.
///
/// The derived ordering is lexicographic in `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rational::int(x), rational::int(y))
    }

    pub fn origin() -> Self {
        Point::new(Rational::zero(), Rational::zero())
    }

    /// `self.x * other.y - self.y * other.x`
    pub fn cross(&self, other: &Point) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn scale(&self, s: &Rational) -> Point {
        Point::new(&self.x * s, &self.y * s)
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// An integer vector. Edge normals and width directions are primitive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub x: BigInt,
    pub y: BigInt,
}

impl LatticeVector {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        LatticeVector {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_primitive(&self) -> bool {
        self.x.gcd(&self.y).is_one()
    }

    /// The primitive integer vector pointing along a nonzero rational vector.
    pub fn primitive_along(v: &Point) -> LatticeVector {
        assert!(
            !(v.x.is_zero() && v.y.is_zero()),
            "zero vector has no direction"
        );
        let l = v.x.denom().lcm(v.y.denom());
        let x = v.x.numer() * (&l / v.x.denom());
        let y = v.y.numer() * (&l / v.y.denom());
        let g = x.gcd(&y);
        LatticeVector::new(x / &g, y / &g)
    }

    /// Lattice length of a rational vector parallel to a primitive one:
    /// the rational `t >= 0` with `v = t * self`.
    pub fn lattice_length_of(&self, v: &Point) -> Rational {
        if self.x.is_zero() {
            &v.y / Rational::from_integer(self.y.clone())
        } else {
            &v.x / Rational::from_integer(self.x.clone())
        }
    }

    pub fn det(&self, other: &LatticeVector) -> BigInt {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn dot_point(&self, p: &Point) -> Rational {
        Rational::from_integer(self.x.clone()) * &p.x + Rational::from_integer(self.y.clone()) * &p.y
    }

    pub fn norm_sq(&self) -> BigInt {
        self.dot(self)
    }

    pub fn scaled(&self, s: &BigInt) -> LatticeVector {
        LatticeVector::new(&self.x * s, &self.y * s)
    }

    pub fn to_point(&self) -> Point {
        Point::new(
            Rational::from_integer(self.x.clone()),
            Rational::from_integer(self.y.clone()),
        )
    }

    pub fn to_i64(&self) -> Option<(i64, i64)> {
        Some((self.x.to_i64()?, self.y.to_i64()?))
    }

    /// Half-open angular order starting at the positive x-axis.
    pub(crate) fn angle_cmp(&self, other: &LatticeVector) -> std::cmp::Ordering {
        fn half(v: &LatticeVector) -> u8 {
            if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
                0
            } else {
                1
            }
        }
        half(self)
            .cmp(&half(other))
            .then_with(|| BigInt::zero().cmp(&self.det(other)))
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector::new(-&self.x, -&self.y)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}
