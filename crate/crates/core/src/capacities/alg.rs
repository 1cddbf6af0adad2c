//! Algebraic capacities by incumbent-pruned enumeration of nef divisors.
//!
//! For `k >= 1` an optimal nef divisor has a lattice point in `P_D`;
//! translating it to the origin gives support numbers `a_F >= 0`. Since
//! `D.A = sum a_F (D_F.A)` with every `D_F.A > 0`, only vectors whose
//! weighted sum stays below a known feasible value need to be visited.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::MomentPolygon;
use crate::rational::{self, Rational};
use crate::toric::integral::{common_denominator, scaled, IntegralFan};
use crate::toric::{associated_divisor, ToricSurface, TorusDivisor};

/// An optimal divisor for one value of `k`: its pairing with the associated
/// divisor and its support numbers (lexicographically smallest among ties).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgOptimum {
    pub k: usize,
    pub value: Rational,
    pub support: TorusDivisor,
}

/// Shared setup for searches over integral divisors on the surface of `P`.
pub(crate) struct DivisorSearch {
    pub surface: ToricSurface,
    pub fan: IntegralFan,
    pub ample: TorusDivisor,
    /// `weight_denom * (D_F . A)`.
    pub weights: Vec<i64>,
    pub weight_denom: BigInt,
}

impl DivisorSearch {
    pub(crate) fn new(polygon: &MomentPolygon) -> Result<Self> {
        let surface = ToricSurface::build(polygon);
        let fan = IntegralFan::new(&surface)?;
        let ample = associated_divisor(polygon);
        let exact = surface.ray_degrees(&ample);
        let weight_denom = common_denominator(exact.iter());
        let weights = exact
            .iter()
            .map(|w| scaled(w, &weight_denom))
            .collect::<Result<Vec<_>>>()?;
        assert!(weights.iter().all(|&w| w > 0), "associated divisor is ample");
        Ok(DivisorSearch {
            surface,
            fan,
            ample,
            weights,
            weight_denom,
        })
    }

    pub(crate) fn cost(&self, scaled_cost: i64) -> Rational {
        Rational::new(BigInt::from(scaled_cost), self.weight_denom.clone())
    }
}

type Best = Vec<Option<(i64, Vec<i64>)>>;

fn offer(best: &mut Best, slot: usize, cost: i64, a: &[i64]) {
    let better = match &best[slot] {
        None => true,
        Some((c, v)) => (cost, a) < (*c, v.as_slice()),
    };
    if better {
        best[slot] = Some((cost, a.to_vec()));
    }
}

fn merge(mut a: Best, b: Best) -> Best {
    for (slot, entry) in b.into_iter().enumerate() {
        if let Some((c, v)) = entry {
            offer(&mut a, slot, c, &v);
        }
    }
    a
}

/// Visits every `a >= 0` with `sum a_i w_i <= budget` whose first coordinate
/// is `first`, recording nef divisors by `min(h0 - 1, k_max)`.
fn scan_branch(search: &DivisorSearch, first: i64, budget: i64, k_max: usize) -> Best {
    let n = search.weights.len();
    let mut best: Best = vec![None; k_max + 1];
    let mut a = vec![0i64; n];
    a[0] = first;
    let spent = first * search.weights[0];
    fn rec(
        search: &DivisorSearch,
        a: &mut Vec<i64>,
        pos: usize,
        spent: i64,
        budget: i64,
        k_max: usize,
        best: &mut Best,
    ) {
        if pos == a.len() {
            if search.fan.is_nef(a) {
                let h = search.fan.h0_nef(a);
                if h >= 1 {
                    let slot = ((h - 1) as usize).min(k_max);
                    offer(best, slot, spent, a);
                }
            }
            return;
        }
        let w = search.weights[pos];
        let mut x = 0;
        while spent + x * w <= budget {
            a[pos] = x;
            rec(search, a, pos + 1, spent + x * w, budget, k_max, best);
            x += 1;
        }
        a[pos] = 0;
    }
    rec(search, &mut a, 1, spent, budget, k_max, &mut best);
    best
}

/// A feasible value for `k_max`: round down `m A` for the first `m` whose
/// polygon `m P` has at least `k_max + 1` lattice points.
fn initial_incumbent(search: &DivisorSearch, polygon: &MomentPolygon, k_max: usize) -> Result<i64> {
    let mut m = 1i64;
    loop {
        let scale = rational::int(m);
        if polygon.scale(&scale)?.lattice_count() >= k_max as u64 + 1 {
            let d = search.surface.round_down_nef(&search.ample.scale(&scale))?;
            let cost = search.surface.intersect(&d, &search.ample);
            let scaled_cost = cost * Rational::from_integer(search.weight_denom.clone());
            return rational::floor(&scaled_cost)
                .to_i64()
                .ok_or_else(|| Error::Overflow(scaled_cost.to_string()));
        }
        m += 1;
    }
}

/// Optimal divisors for every `k <= k_max`.
pub fn calg_optima(polygon: &MomentPolygon, k_max: usize) -> Result<Vec<AlgOptimum>> {
    let search = DivisorSearch::new(polygon)?;
    let n = search.weights.len();
    if k_max == 0 {
        return Ok(vec![AlgOptimum {
            k: 0,
            value: Rational::zero(),
            support: TorusDivisor::zero(n),
        }]);
    }
    // The scan is exhaustive below its budget, so any budget at which the
    // k_max constraint is met already contains every optimum. Doubling from
    // the cheapest prime divisor avoids scanning up to a loose incumbent.
    let cap = initial_incumbent(&search, polygon, k_max)?;
    let mut budget = *search.weights.iter().min().expect("at least three rays");
    let best = loop {
        budget = budget.min(cap);
        let firsts: Vec<i64> = (0..=budget / search.weights[0]).collect();
        let best = firsts
            .par_iter()
            .map(|&f| scan_branch(&search, f, budget, k_max))
            .reduce(|| vec![None; k_max + 1], merge);
        if best[k_max].is_some() || budget == cap {
            break best;
        }
        budget = budget.saturating_mul(2);
    };

    // A divisor with h0 >= j + 1 is feasible for every k <= j.
    let mut out = Vec::with_capacity(k_max + 1);
    let mut running: Option<(i64, Vec<i64>)> = None;
    for k in (0..=k_max).rev() {
        if let Some((c, v)) = &best[k] {
            let better = match &running {
                None => true,
                Some((rc, rv)) => (c, v) < (rc, rv),
            };
            if better {
                running = Some((*c, v.clone()));
            }
        }
        let (c, v) = running
            .clone()
            .expect("the incumbent divisor lies inside the search region");
        out.push(AlgOptimum {
            k,
            value: search.cost(c),
            support: TorusDivisor::from_i64(&v),
        });
    }
    out.reverse();
    Ok(out)
}

/// `c^alg_k` for `k = 0..=k_max`.
pub fn calg_sequence(polygon: &MomentPolygon, k_max: usize) -> Result<Vec<Rational>> {
    Ok(calg_optima(polygon, k_max)?
        .into_iter()
        .map(|o| o.value)
        .collect())
}

/// The `k`-th algebraic capacity of the toric surface of `polygon` with its
/// associated ample divisor.
pub fn calg(polygon: &MomentPolygon, k: usize) -> Result<Rational> {
    Ok(calg_sequence(polygon, k)?.pop().expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn spec_examples() {
        let tri = MomentPolygon::from_i64(&[(0, 0), (1, 0), (0, 1)]).unwrap();
        let sq = MomentPolygon::from_i64(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(calg(&tri, 0).unwrap(), int(0));
        assert_eq!(calg(&sq, 0).unwrap(), int(0));
        assert_eq!(calg(&tri, 3).unwrap(), int(2));
        assert_eq!(calg(&sq, 1).unwrap(), int(1));
    }

    #[test]
    fn optimum_divisors_are_feasible() {
        let p = MomentPolygon::from_i64(&[(0, 0), (3, 0), (1, 2), (0, 2)]).unwrap();
        let s = ToricSurface::build(&p);
        let a = associated_divisor(&p);
        for o in calg_optima(&p, 12).unwrap() {
            assert!(s.is_nef(&o.support));
            assert!(s.h0(&o.support) > o.k as u64);
            assert_eq!(s.intersect(&o.support, &a), o.value);
        }
    }
}
