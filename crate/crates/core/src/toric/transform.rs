//! Divisor-improving maps on toric surfaces: the isoparametric transform,
//! the preferable-nef reduction and rounding of rational nef divisors.

use num_traits::{Signed, Zero};

use super::{ToricSurface, TorusDivisor};
use crate::error::{Error, Result};
use crate::lattice::counting;
use crate::rational::{self, Rational};

/// Hard cap on isoparametric iterations; exceeding it indicates a bug.
pub const IP_ITERATION_CAP: usize = 10_000;

impl ToricSurface {
    /// `IP(D) = D - sum_{D.D_i < 0} ceil(D.D_i / D_i^2) D_i` on a smooth
    /// surface, for an integral effective `D`. Fixes nef divisors.
    pub fn ip_transform(&self, d: &TorusDivisor) -> Result<TorusDivisor> {
        self.check(d)?;
        if !self.is_smooth() {
            return Err(Error::SingularSurface);
        }
        if !d.is_integral() {
            return Err(Error::NotIntegral);
        }
        if !self.is_effective(d) {
            return Err(Error::NotEffective);
        }
        Ok(self.ip_step(d))
    }

    fn ip_step(&self, d: &TorusDivisor) -> TorusDivisor {
        let degrees = self.ray_degrees(d);
        let mut out = d.clone();
        for (i, deg) in degrees.iter().enumerate() {
            if deg.is_negative() {
                let self_int = self.self_intersection(i);
                // A prime divisor meeting an effective divisor negatively is a
                // fixed component, hence has negative self-intersection.
                assert!(self_int.is_negative(), "negative degree on a non-negative curve");
                let m = (deg / self_int).ceil();
                out = &out - &TorusDivisor::prime(d.len(), i, m);
            }
        }
        out
    }

    /// Iterates the isoparametric transform to its nef fixed point, returning
    /// every iterate starting with `d` itself.
    pub fn iterate_ip(&self, d: &TorusDivisor) -> Result<Vec<TorusDivisor>> {
        let mut chain = vec![d.clone()];
        let mut current = self.ip_transform(d)?;
        for _ in 0..IP_ITERATION_CAP {
            if current == *chain.last().expect("nonempty") {
                return Ok(chain);
            }
            chain.push(current.clone());
            current = self.ip_step(&current);
        }
        Err(Error::IpDidNotConverge(IP_ITERATION_CAP))
    }

    /// Membership in `SW(Y)`: effective with non-negative index.
    pub fn is_sw(&self, d: &TorusDivisor) -> bool {
        self.is_effective(d) && !self.index(d).is_negative()
    }

    /// A nef integral divisor preferable to `d`: no larger pairing with any
    /// ample class and no smaller index.
    ///
    /// Nef input is returned unchanged. If a torus-invariant `(-1)`-curve `E`
    /// has `D.E <= 0`, `D = pi^*D' + mE` with `m >= 0`; the result is the
    /// pull-back of the reduction of `D'` on the contracted surface.
    /// Otherwise the isoparametric transform is applied and the procedure
    /// repeats.
    pub fn preferable_nef(&self, d: &TorusDivisor) -> Result<TorusDivisor> {
        self.check(d)?;
        if !self.is_smooth() {
            return Err(Error::SingularSurface);
        }
        if !d.is_integral() {
            return Err(Error::NotIntegral);
        }
        if !self.is_sw(d) {
            return Err(Error::NotInSW);
        }
        self.preferable_nef_inner(d.clone())
    }

    fn preferable_nef_inner(&self, mut d: TorusDivisor) -> Result<TorusDivisor> {
        for _ in 0..IP_ITERATION_CAP {
            let degrees = self.ray_degrees(&d);
            if degrees.iter().all(|x| !x.is_negative()) {
                return Ok(d);
            }
            let n = self.ray_count();
            let minus_one = rational::int(-1);
            let contractible = (0..n).find(|&i| {
                n > 3
                    && *self.self_intersection(i) == minus_one
                    && !degrees[i].is_positive()
            });
            if let Some(i) = contractible {
                let coarse = self.blow_down(i)?;
                let pushed = d.without(i);
                let reduced = coarse.preferable_nef_inner(pushed)?;
                return Ok(self.pull_back_over_ray(&reduced, i));
            }
            d = self.ip_step(&d);
        }
        Err(Error::IpDidNotConverge(IP_ITERATION_CAP))
    }

    /// Pull-back along the blow-down of ray `i`: the coefficient of the
    /// exceptional ray is the sum of its neighbours'.
    fn pull_back_over_ray(&self, coarse: &TorusDivisor, i: usize) -> TorusDivisor {
        let n = self.ray_count();
        let m = coarse.len();
        debug_assert_eq!(m + 1, n);
        // In `coarse`, the neighbours of the removed ray sit at positions
        // i - 1 and i (cyclically).
        let prev = &coarse[(i + m - 1) % m];
        let next = &coarse[i % m];
        coarse.with_inserted(i, prev + next)
    }

    /// An integral nef divisor with the same lattice points as the rational
    /// nef divisor `d` and no larger pairing with any ample class: round the
    /// coefficients down, then push every hyperplane inward until it touches
    /// a lattice point.
    pub fn round_down_nef(&self, d: &TorusDivisor) -> Result<TorusDivisor> {
        self.check(d)?;
        let floored = d.floor();
        let poly = self.support_polytope(&floored);
        let (lo, hi) = poly.y_range().ok_or(Error::EmptyLatticeSet)?;
        let points = counting::lattice_points(&self.halfplanes(&floored), &lo, &hi);
        if points.is_empty() {
            return Err(Error::EmptyLatticeSet);
        }
        let coeffs = self
            .rays()
            .iter()
            .map(|v| {
                let min = points
                    .iter()
                    .map(|(x, y)| &v.x * x + &v.y * y)
                    .min()
                    .expect("nonempty");
                Rational::from_integer(-min)
            })
            .collect();
        Ok(TorusDivisor::new(coeffs))
    }

    /// Whether `d - d0` is linearly equivalent to an effective divisor.
    pub fn difference_is_effective(&self, d: &TorusDivisor, d0: &TorusDivisor) -> bool {
        let diff = d - d0;
        diff.coefficients().iter().all(Zero::is_zero) || self.is_effective(&diff)
    }
}
