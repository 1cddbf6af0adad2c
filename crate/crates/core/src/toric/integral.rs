//! Machine-integer view of a fan for the inner loops of the optimisers.
//! Every quantity is an exact integer multiple of a fixed denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::ToricSurface;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub(crate) struct IntegralFan {
    rays: Vec<(i64, i64)>,
    dets: Vec<i64>,
    /// `denom * (D_i . D_{i-1}, D_i^2, D_i . D_{i+1})` per ray.
    local: Vec<[i64; 3]>,
}

fn small(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::Overflow(x.to_string()))
}

/// `r * scale` as an integer; `scale` must clear the denominator of `r`.
pub(crate) fn scaled(r: &Rational, scale: &BigInt) -> Result<i64> {
    let v = r * Rational::from_integer(scale.clone());
    debug_assert!(v.is_integer());
    small(&v.to_integer())
}

pub(crate) fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

impl IntegralFan {
    pub(crate) fn new(surface: &ToricSurface) -> Result<Self> {
        let n = surface.ray_count();
        let rays = surface
            .rays()
            .iter()
            .map(|v| Ok((small(&v.x)?, small(&v.y)?)))
            .collect::<Result<Vec<_>>>()?;
        let dets = surface
            .cone_dets()
            .iter()
            .map(small)
            .collect::<Result<Vec<_>>>()?;
        let m = surface.intersection_matrix();
        let denom = common_denominator(m.iter().flatten());
        let local = (0..n)
            .map(|i| {
                let prev = (i + n - 1) % n;
                let next = (i + 1) % n;
                Ok([
                    scaled(&m[prev][i], &denom)?,
                    scaled(&m[i][i], &denom)?,
                    scaled(&m[next][i], &denom)?,
                ])
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntegralFan {
            rays,
            dets,
            local,
        })
    }

    pub(crate) fn len(&self) -> usize {
        self.rays.len()
    }

    /// `denom * (D . D_j)`.
    fn scaled_degree(&self, a: &[i64], j: usize) -> i64 {
        let n = self.len();
        let [p, s, q] = self.local[j];
        a[(j + n - 1) % n] * p + a[j] * s + a[(j + 1) % n] * q
    }

    pub(crate) fn is_nef(&self, a: &[i64]) -> bool {
        (0..self.len()).all(|j| self.scaled_degree(a, j) >= 0)
    }

    /// Lattice points of `P_D` for a nef integral divisor. The vertices of
    /// `P_D` are then the points dual to the cones, which bound the rows.
    pub(crate) fn h0_nef(&self, a: &[i64]) -> u64 {
        let n = self.len();
        let mut y_lo = i64::MAX;
        let mut y_hi = i64::MIN;
        for i in 0..n {
            let j = (i + 1) % n;
            let (vi, vj) = (self.rays[i], self.rays[j]);
            let num = -a[j] * vi.0 + a[i] * vj.0;
            let d = self.dets[i];
            y_lo = y_lo.min(Integer::div_ceil(&num, &d));
            y_hi = y_hi.max(Integer::div_floor(&num, &d));
        }
        let mut count = 0u64;
        for y in y_lo..=y_hi {
            let mut lo = i64::MIN;
            let mut hi = i64::MAX;
            let mut empty = false;
            for (&(vx, vy), &ai) in self.rays.iter().zip(a) {
                let rhs = -ai - vy * y;
                match vx.signum() {
                    1 => lo = lo.max(Integer::div_ceil(&rhs, &vx)),
                    -1 => hi = hi.min(Integer::div_floor(&rhs, &vx)),
                    _ => {
                        if rhs > 0 {
                            empty = true;
                            break;
                        }
                    }
                }
            }
            if !empty && lo <= hi {
                count += (hi - lo + 1) as u64;
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::MomentPolygon;
    use crate::toric::TorusDivisor;

    #[test]
    fn agrees_with_exact_surface_on_small_divisors() {
        let polys = [
            MomentPolygon::from_i64(&[(0, 0), (1, 0), (0, 2)]).unwrap(),
            MomentPolygon::from_i64(&[(0, 0), (3, 0), (1, 1), (0, 1)]).unwrap(),
            MomentPolygon::from_i64(&[(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)]).unwrap(),
        ];
        for p in &polys {
            let s = ToricSurface::build(p);
            let f = IntegralFan::new(&s).unwrap();
            let n = s.ray_count();
            let mut a = vec![0i64; n];
            loop {
                let d = TorusDivisor::from_i64(&a);
                assert_eq!(f.is_nef(&a), s.is_nef(&d));
                if s.is_nef(&d) {
                    assert_eq!(f.h0_nef(&a), s.h0(&d), "{d} on {p}");
                }
                // odometer over [0, 3]^n
                let mut k = 0;
                while k < n && a[k] == 3 {
                    a[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
                a[k] += 1;
            }
        }
    }
}
