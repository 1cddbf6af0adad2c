//! Blow-downs, Hirzebruch-Jung resolution and pull-backs along refinements.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{ToricSurface, TorusDivisor};
use crate::error::{Error, Result};
use crate::lattice::{HalfPlane, LatticeVector};
use crate::rational::{self, Rational};

impl ToricSurface {
    /// Contracts the `(-1)`-curve of ray `i`. Both cones at the ray must be
    /// smooth, so `v_i = v_{i-1} + v_{i+1}`.
    pub fn blow_down(&self, i: usize) -> Result<ToricSurface> {
        let n = self.ray_count();
        if i >= n || n <= 3 {
            return Err(Error::NotContractible { index: i });
        }
        let prev = (i + n - 1) % n;
        if *self.self_intersection(i) != rational::int(-1)
            || !self.is_smooth_cone(prev)
            || !self.is_smooth_cone(i)
        {
            return Err(Error::NotContractible { index: i });
        }
        let mut rays = self.rays().to_vec();
        rays.remove(i);
        ToricSurface::from_rays(rays)
    }

    /// Smooth refinement: every singular cone is subdivided by the
    /// Hirzebruch-Jung rays between its generators.
    pub fn resolve(&self) -> ToricSurface {
        if self.is_smooth() {
            return self.clone();
        }
        let n = self.ray_count();
        let mut rays = Vec::new();
        for i in 0..n {
            let a = &self.rays()[i];
            let b = &self.rays()[(i + 1) % n];
            rays.push(a.clone());
            rays.extend(hirzebruch_jung_rays(a, b));
        }
        ToricSurface::from_rays(rays).expect("refinement of a complete fan is complete")
    }

    /// Pull-back of `d` on `self` to a refinement `fine` of this fan: each new
    /// ray `w` in cone `sigma` gets coefficient `-<m_sigma, w>` where `m_sigma`
    /// is the vertex of `P_D` dual to `sigma`.
    pub fn pull_back(&self, fine: &ToricSurface, d: &TorusDivisor) -> Result<TorusDivisor> {
        self.check(d)?;
        let n = self.ray_count();
        let hp = self.halfplanes(d);
        let coeffs = fine
            .rays()
            .iter()
            .map(|w| {
                if let Some(j) = self.rays().iter().position(|v| v == w) {
                    return Ok(d[j].clone());
                }
                let cone = (0..n)
                    .find(|&c| {
                        let a = &self.rays()[c];
                        let b = &self.rays()[(c + 1) % n];
                        a.det(w) > BigInt::zero() && w.det(b) > BigInt::zero()
                    })
                    .ok_or_else(|| Error::InvalidFan(format!("ray {w} not in any cone")))?;
                let vertex = hp[cone]
                    .meet(&hp[(cone + 1) % n])
                    .expect("cone generators are independent");
                Ok(-w.dot_point(&vertex))
            })
            .collect::<Result<Vec<Rational>>>()?;
        Ok(TorusDivisor::new(coeffs))
    }

    #[doc(hidden)]
    pub fn halfplane(&self, i: usize, d: &TorusDivisor) -> HalfPlane {
        HalfPlane::new(self.rays()[i].clone(), -&d[i])
    }
}

/// Rays strictly inside the cone `(a, b)` (counterclockwise, `det(a,b) = d`)
/// that resolve it: writing `b = -k a + d u` with `det(a, u) = 1` and
/// `0 < k < d`, they are `w_1 = u` and `w_{j+1} = c_j w_j - w_{j-1}` where
/// `d / k = [c_1, c_2, ...]` is the Hirzebruch-Jung continued fraction.
pub fn hirzebruch_jung_rays(a: &LatticeVector, b: &LatticeVector) -> Vec<LatticeVector> {
    let d = a.det(b);
    if d.is_one() {
        return Vec::new();
    }
    // u0 with det(a, u0) = 1 from Bezout: a.x * s + a.y * t = 1 -> u0 = (-t, s).
    let e = a.x.extended_gcd(&a.y);
    debug_assert!(e.gcd.is_one());
    let u0 = LatticeVector::new(-e.y.clone(), e.x.clone());
    debug_assert!(a.det(&u0).is_one());
    // b = p0 a + d u0 with p0 = det(b, u0) / det(a, u0).
    let p0 = b.det(&u0);
    let k = (-&p0).mod_floor(&d);
    // u = u0 + t a with p0 - d t = -k.
    let t = (&p0 + &k) / &d;
    let u = &u0 + &a.scaled(&t);
    debug_assert_eq!(&a.scaled(&-&k) + &u.scaled(&d), *b);

    let mut out = Vec::new();
    let (mut num, mut den) = (d.clone(), k);
    let mut prev = a.clone();
    let mut cur = u;
    while &cur != b {
        out.push(cur.clone());
        // c = ceil(num / den); next remainder den * c - num.
        let c = num.div_ceil(&den);
        let next = &cur.scaled(&c) - &prev;
        let r = &den * &c - &num;
        num = den;
        den = r;
        prev = cur;
        cur = next;
        assert!(
            !den.is_zero() || &cur == b,
            "continued fraction ended before reaching the cone edge"
        );
    }
    out
}
