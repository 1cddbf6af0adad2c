//! Exhaustive verifiers. They scan every support vector in `[0, box]^n`
//! with exact arithmetic and no pruning, sharing nothing with the optimised
//! search beyond the surface itself.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::Signed;
use rayon::prelude::*;

use crate::capacities::calg_sequence;
use crate::error::{Error, Result};
use crate::lattice::MomentPolygon;
use crate::rational::{self, Rational};
use crate::toric::{associated_divisor, DivisorClass, PrincipalLattice, ToricSurface, TorusDivisor};

/// Calls `f` on every vector in `[0, bound]^n` whose first coordinate is
/// `first`.
fn for_each_with_first(n: usize, bound: i64, first: i64, mut f: impl FnMut(&[i64])) {
    let mut a = vec![0i64; n];
    a[0] = first;
    loop {
        f(&a);
        let mut i = 1;
        while i < n && a[i] == bound {
            a[i] = 0;
            i += 1;
        }
        if i == n {
            return;
        }
        a[i] += 1;
    }
}

/// The best `(cost, vector)` per bucket `j`, meaning "feasible for every
/// `k <= j`".
type Buckets = Vec<Option<(Rational, Vec<i64>)>>;

fn offer(best: &mut Buckets, slot: usize, cost: &Rational, a: &[i64]) {
    let better = match &best[slot] {
        None => true,
        Some((c, v)) => (cost, a) < (c, v.as_slice()),
    };
    if better {
        best[slot] = Some((cost.clone(), a.to_vec()));
    }
}

fn merge(mut a: Buckets, b: Buckets) -> Buckets {
    for (slot, entry) in b.into_iter().enumerate() {
        if let Some((c, v)) = entry {
            offer(&mut a, slot, &c, &v);
        }
    }
    a
}

/// Suffix minima, with the box rule: the optimum must exist and must not
/// touch the boundary of the box.
fn resolve_buckets(best: Buckets, bound: u32) -> Result<Vec<(Rational, Vec<i64>)>> {
    let mut out = Vec::with_capacity(best.len());
    let mut running: Option<(Rational, Vec<i64>)> = None;
    for entry in best.into_iter().rev() {
        if let Some((c, v)) = entry {
            let better = match &running {
                None => true,
                Some((rc, rv)) => (&c, &v) < (rc, rv),
            };
            if better {
                running = Some((c, v));
            }
        }
        match &running {
            Some((_, v)) if v.iter().all(|&x| x < i64::from(bound)) => out.push(running.clone().unwrap()),
            _ => return Err(Error::BoxTooSmall(bound)),
        }
    }
    out.reverse();
    Ok(out)
}

fn scan<F>(n: usize, bound: u32, k_max: usize, visit: F) -> Buckets
where
    F: Fn(&[i64], &mut Buckets) + Sync,
{
    let b = i64::from(bound);
    (0..=b)
        .into_par_iter()
        .map(|first| {
            let mut best: Buckets = vec![None; k_max + 1];
            for_each_with_first(n, b, first, |a| visit(a, &mut best));
            best
        })
        .reduce(|| vec![None; k_max + 1], merge)
}

/// One optimum found by an exhaustive scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteOptimum {
    pub k: usize,
    pub value: Rational,
    pub witness: TorusDivisor,
}

/// The polytope side of the toric dictionary in machine integers: rays
/// and cone determinants of the normal fan.
struct PolytopeRoute {
    rays: Vec<(i128, i128)>,
    dets: Vec<i128>,
}

impl PolytopeRoute {
    fn new(surface: &ToricSurface) -> Result<Self> {
        let small = |x: &num_bigint::BigInt| {
            i128::try_from(x).map_err(|_| Error::Overflow(x.to_string()))
        };
        let rays = surface
            .rays()
            .iter()
            .map(|v| Ok((small(&v.x)?, small(&v.y)?)))
            .collect::<Result<Vec<_>>>()?;
        let dets = surface.cone_dets().iter().map(small).collect::<Result<Vec<_>>>()?;
        Ok(PolytopeRoute { rays, dets })
    }

    /// `det_i` times the point where the boundary lines of rays `i` and
    /// `i + 1` meet.
    fn corner(&self, a: &[i64], i: usize) -> (i128, i128) {
        let j = (i + 1) % self.rays.len();
        let (vi, vj) = (self.rays[i], self.rays[j]);
        let (ai, aj) = (i128::from(a[i]), i128::from(a[j]));
        (-ai * vj.1 + aj * vi.1, -aj * vi.0 + ai * vj.0)
    }

    /// Nef iff every corner of the halfplane arrangement lies in `P_D`.
    fn is_nef(&self, a: &[i64]) -> bool {
        (0..self.rays.len()).all(|i| {
            let (x, y) = self.corner(a, i);
            let d = self.dets[i];
            self.rays
                .iter()
                .zip(a)
                .all(|(&(vx, vy), &aj)| vx * x + vy * y >= -i128::from(aj) * d)
        })
    }

    /// Lattice points of `P_D`, row by row between the extreme corners.
    fn count_nef(&self, a: &[i64]) -> u64 {
        let n = self.rays.len();
        let mut lo = i128::MAX;
        let mut hi = i128::MIN;
        for i in 0..n {
            let y = self.corner(a, i).1;
            lo = lo.min(Integer::div_ceil(&y, &self.dets[i]));
            hi = hi.max(Integer::div_floor(&y, &self.dets[i]));
        }
        let mut count = 0u64;
        for y in lo..=hi {
            let (mut x_lo, mut x_hi) = (i128::MIN, i128::MAX);
            let mut empty = false;
            for (&(vx, vy), &aj) in self.rays.iter().zip(a) {
                // vx * x >= -a_j - vy * y
                let rhs = -i128::from(aj) - vy * y;
                if vx > 0 {
                    x_lo = x_lo.max(Integer::div_ceil(&rhs, &vx));
                } else if vx < 0 {
                    x_hi = x_hi.min(Integer::div_floor(&rhs, &vx));
                } else if rhs > 0 {
                    empty = true;
                }
            }
            if !empty && x_lo <= x_hi {
                count += (x_hi - x_lo + 1) as u64;
            }
        }
        count
    }
}

/// `c^alg_k` for `k = 0..=k_max` by scanning all nef divisors with support
/// numbers in `[0, box]`. This scan works on the polytope side only: nefness
/// by the corner criterion, sections by counting, and `D.A` as the sum of
/// `a_F` times the lattice length of the edge of `P` dual to `F`.
pub fn brute_calg_table(polygon: &MomentPolygon, k_max: usize, bound: u32) -> Result<Vec<BruteOptimum>> {
    let surface = ToricSurface::build(polygon);
    let route = PolytopeRoute::new(&surface)?;
    let n = polygon.len();
    let lengths: Vec<Rational> = (0..n).map(|i| polygon.edge_lattice_length(i + n - 1)).collect();
    let best = scan(n, bound, k_max, |a, best| {
        if !route.is_nef(a) {
            return;
        }
        let h = route.count_nef(a);
        if h == 0 {
            return;
        }
        let cost: Rational = a
            .iter()
            .zip(&lengths)
            .map(|(&x, l)| l * rational::int(x))
            .sum();
        offer(best, ((h - 1) as usize).min(k_max), &cost, a);
    });
    Ok(resolve_buckets(best, bound)?
        .into_iter()
        .enumerate()
        .map(|(k, (value, v))| BruteOptimum {
            k,
            value,
            witness: TorusDivisor::from_i64(&v),
        })
        .collect())
}

/// Exhaustive `c^alg_k`.
pub fn brute_calg(polygon: &MomentPolygon, k: usize, bound: u32) -> Result<Rational> {
    Ok(brute_calg_table(polygon, k, bound)?.pop().expect("nonempty").value)
}

/// One row of the Seiberg-Witten-side table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwOptimum {
    pub k: usize,
    pub value: Rational,
    /// Lexicographically least support vector attaining the value.
    pub witness: TorusDivisor,
    pub class: DivisorClass,
}

fn require_smooth(surface: &ToricSurface) -> Result<()> {
    if surface.is_smooth() {
        Ok(())
    } else {
        Err(Error::SingularSurface)
    }
}

/// `inf { D.A : D in SW(Y), I(D) >= 2k }` for `k = 0..=k_max`, over
/// effective torus-invariant divisors with coefficients in `[0, box]`,
/// taken once per linear-equivalence class.
pub fn sw_table(polygon: &MomentPolygon, k_max: usize, bound: u32) -> Result<Vec<SwOptimum>> {
    let surface = ToricSurface::build(polygon);
    require_smooth(&surface)?;
    let ample = associated_divisor(polygon);
    let lattice = PrincipalLattice::new(surface.rays());
    let b = i64::from(bound);
    let n = surface.ray_count();

    // Each class keeps its least representative; index and pairing are
    // class functions.
    let classes: HashMap<DivisorClass, Vec<i64>> = (0..=b)
        .into_par_iter()
        .map(|first| {
            let mut seen: HashMap<DivisorClass, Vec<i64>> = HashMap::new();
            for_each_with_first(n, b, first, |a| {
                let class = lattice.class(&TorusDivisor::from_i64(a));
                seen.entry(class)
                    .and_modify(|v| {
                        if a < v.as_slice() {
                            *v = a.to_vec();
                        }
                    })
                    .or_insert_with(|| a.to_vec());
            });
            seen
        })
        .reduce(HashMap::new, |mut acc, part| {
            for (class, v) in part {
                acc.entry(class)
                    .and_modify(|w| {
                        if v < *w {
                            *w = v.clone();
                        }
                    })
                    .or_insert(v);
            }
            acc
        });

    let mut best: Buckets = vec![None; k_max + 1];
    let mut class_of: HashMap<Vec<i64>, DivisorClass> = HashMap::new();
    for (class, v) in classes {
        let d = TorusDivisor::from_i64(&v);
        let index = surface.index(&d);
        if index.is_negative() {
            continue;
        }
        // I(D) >= 2k  <=>  k <= floor(I / 2).
        let half = rational::floor(&(index / rational::int(2)));
        let slot = usize::try_from(half.min(num_bigint::BigInt::from(k_max))).expect("nonnegative");
        offer(&mut best, slot, &surface.intersect(&d, &ample), &v);
        class_of.insert(v, class);
    }
    Ok(resolve_buckets(best, bound)?
        .into_iter()
        .enumerate()
        .map(|(k, (value, v))| SwOptimum {
            k,
            value,
            class: class_of[&v].clone(),
            witness: TorusDivisor::from_i64(&v),
        })
        .collect())
}

/// The Seiberg-Witten-side infimum for a single `k`.
pub fn sw_infimum(polygon: &MomentPolygon, k: usize, bound: u32) -> Result<Rational> {
    Ok(sw_table(polygon, k, bound)?.pop().expect("nonempty").value)
}

/// A row of [`sw_equals_nef`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwRow {
    pub k: usize,
    pub sw: Rational,
    pub calg: Rational,
    pub equal: bool,
    pub witness: TorusDivisor,
    /// `preferable_nef(witness)`.
    pub certificate: TorusDivisor,
    /// The certificate is nef, pairs with `A` no more than the witness and
    /// has index no smaller.
    pub certificate_ok: bool,
}

/// Compares the Seiberg-Witten-side infimum with `c^alg_k` for every
/// `k <= k_max`, and checks the preferable-nef reduction on each witness.
pub fn sw_equals_nef(polygon: &MomentPolygon, k_max: usize, bound: u32) -> Result<Vec<SwRow>> {
    let surface = ToricSurface::build(polygon);
    require_smooth(&surface)?;
    let ample = associated_divisor(polygon);
    let sw = sw_table(polygon, k_max, bound)?;
    let alg = calg_sequence(polygon, k_max)?;
    sw.into_iter()
        .zip(alg)
        .map(|(row, calg)| {
            let certificate = surface.preferable_nef(&row.witness)?;
            let certificate_ok = surface.is_nef(&certificate)
                && surface.intersect(&certificate, &ample) <= row.value
                && surface.index(&certificate) >= surface.index(&row.witness);
            Ok(SwRow {
                k: row.k,
                equal: row.value == calg,
                sw: row.value,
                calg,
                witness: row.witness,
                certificate,
                certificate_ok,
            })
        })
        .collect()
}
