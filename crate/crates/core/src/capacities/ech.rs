//! ECH capacities of ellipsoids and convex toric domains, and the
//! disjoint-union rule used to assemble concave domains from ellipsoids.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::MomentPolygon;
use crate::rational::{self, Rational};

use super::alg;

/// The `k_max + 1` smallest values of `{a m + b n : m, n >= 0}` with
/// multiplicity, in increasing order.
pub fn ellipsoid_sequence(a: &Rational, b: &Rational, k_max: usize) -> Vec<Rational> {
    assert!(
        a > &Rational::zero() && b > &Rational::zero(),
        "ellipsoid legs must be positive"
    );
    // Any value among the first k_max + 1 has m + n <= k_max: the pairs
    // (m', n') <= (m, n) componentwise already give (m+1)(n+1) smaller or
    // equal values.
    let mut values = Vec::new();
    for m in 0..=k_max {
        for n in 0..=(k_max - m) {
            values.push(a * rational::int(m as i64) + b * rational::int(n as i64));
        }
    }
    values.sort();
    values.truncate(k_max + 1);
    values
}

/// The `k`-th ECH capacity of the ellipsoid `E(a, b)`.
pub fn ech_ellipsoid(a: &Rational, b: &Rational, k: usize) -> Rational {
    ellipsoid_sequence(a, b, k).pop().expect("nonempty")
}

/// `c_k` of a disjoint union: `max` over `k_1 + ... + k_r = k` of the sum.
pub fn disjoint_union(parts: &[Vec<Rational>], k_max: usize) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); k_max + 1];
    for part in parts {
        assert!(part.len() > k_max, "each part needs k_max + 1 values");
        let mut next = Vec::with_capacity(k_max + 1);
        for k in 0..=k_max {
            let best = (0..=k)
                .map(|j| &acc[k - j] + &part[j])
                .max()
                .expect("nonempty");
            next.push(best);
        }
        acc = next;
    }
    acc
}

pub(crate) fn check_convex_domain(polygon: &MomentPolygon) -> Result<()> {
    if polygon.is_convex_domain() || polygon.is_free() {
        Ok(())
    } else {
        Err(Error::NotDomainPolygon)
    }
}

/// `c^ECH_k` of a convex (or free) toric domain for `k = 0..=k_max`; these
/// coincide with the algebraic capacities of the polygon.
pub fn ech_convex_sequence(polygon: &MomentPolygon, k_max: usize) -> Result<Vec<Rational>> {
    check_convex_domain(polygon)?;
    alg::calg_sequence(polygon, k_max)
}

/// The `k`-th ECH capacity of a convex or free toric domain.
pub fn ech_convex(polygon: &MomentPolygon, k: usize) -> Result<Rational> {
    Ok(ech_convex_sequence(polygon, k)?.pop().expect("nonempty"))
}
