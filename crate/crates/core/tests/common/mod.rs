#![allow(dead_code)]

use num_traits::Signed;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use toricap::rational::{int, rat};
use toricap::{MomentPolygon, Point, Rational, ToricSurface, TorusDivisor, UnimodularAffineMap};

pub fn poly(v: &[(i64, i64)]) -> MomentPolygon {
    MomentPolygon::from_i64(v).unwrap()
}

pub fn ratpoly(v: &[(Rational, Rational)]) -> MomentPolygon {
    MomentPolygon::new(v.iter().map(|(x, y)| Point::new(x.clone(), y.clone())).collect()).unwrap()
}

pub fn unit_triangle() -> MomentPolygon {
    poly(&[(0, 0), (1, 0), (0, 1)])
}

pub fn unit_square() -> MomentPolygon {
    poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])
}

pub fn rectangle(a: i64, b: i64) -> MomentPolygon {
    poly(&[(0, 0), (a, 0), (a, b), (0, b)])
}

/// `Bl_1 P^2`: the triangle of size 2 with one corner chopped by 1.
pub fn f1() -> MomentPolygon {
    poly(&[(1, 0), (2, 0), (0, 2), (0, 1)])
}

pub fn f2() -> MomentPolygon {
    poly(&[(0, 0), (3, 0), (1, 1), (0, 1)])
}

/// `[0, 2]^2` with the corners at `(0, 0)` and `(2, 2)` chopped by 1.
pub fn two_corner_chop() -> MomentPolygon {
    rectangle(2, 2)
        .corner_chop(0, &int(1))
        .and_then(|p| {
            let i = p.vertices().iter().position(|v| *v == Point::from_ints(2, 2)).unwrap();
            p.corner_chop(i, &int(1))
        })
        .unwrap()
}

/// `P(1, 1, 2)`: one singular vertex.
pub fn weighted_triangle() -> MomentPolygon {
    poly(&[(0, 0), (1, 0), (0, 2)])
}

pub fn smooth_corpus() -> Vec<(&'static str, MomentPolygon)> {
    vec![
        ("P2", unit_triangle()),
        ("P1xP1", unit_square()),
        ("F1", f1()),
        ("F2", f2()),
        ("two-corner chop", two_corner_chop()),
        ("rect 2x3", rectangle(2, 3)),
    ]
}

pub fn random_divisor(rng: &mut ChaCha8Rng, n: usize, max: i64) -> TorusDivisor {
    let a: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max)).collect();
    TorusDivisor::from_i64(&a)
}

/// A random nef divisor with support numbers in `[0, max]`.
pub fn random_nef(rng: &mut ChaCha8Rng, s: &ToricSurface, max: i64) -> TorusDivisor {
    loop {
        let d = random_divisor(rng, s.ray_count(), max);
        if s.is_nef(&d) {
            return d;
        }
    }
}

/// A random element of `AGL(2, Z)` with small entries.
pub fn random_unimodular(rng: &mut ChaCha8Rng) -> UnimodularAffineMap {
    let mut m = [[1i64, 0], [0, 1]];
    for _ in 0..rng.gen_range(1..=4) {
        let t = rng.gen_range(-2..=2);
        let e = match rng.gen_range(0..3) {
            0 => [[1, t], [0, 1]],
            1 => [[1, 0], [t, 1]],
            _ => [[0, -1], [1, 0]],
        };
        m = [
            [
                e[0][0] * m[0][0] + e[0][1] * m[1][0],
                e[0][0] * m[0][1] + e[0][1] * m[1][1],
            ],
            [
                e[1][0] * m[0][0] + e[1][1] * m[1][0],
                e[1][0] * m[0][1] + e[1][1] * m[1][1],
            ],
        ];
    }
    let t = Point::new(rat(rng.gen_range(-6..=6), 2), int(rng.gen_range(-3..=3)));
    UnimodularAffineMap::from_i64(m, t).unwrap()
}

/// A random convex domain polygon: corner at the origin with edges along
/// the axes, other vertices drawn from a half-integer grid.
pub fn random_domain(rng: &mut ChaCha8Rng) -> MomentPolygon {
    loop {
        let a = rat(rng.gen_range(2..=8), 2);
        let b = rat(rng.gen_range(2..=8), 2);
        let mut pts = vec![Point::origin(), Point::new(a.clone(), int(0)), Point::new(int(0), b.clone())];
        for _ in 0..rng.gen_range(0..=3) {
            pts.push(Point::new(
                rat(rng.gen_range(1..=8), 2),
                rat(rng.gen_range(1..=8), 2),
            ));
        }
        if let Ok(p) = MomentPolygon::new(toricap::lattice::counting::convex_hull(pts)) {
            if p.is_convex_domain() {
                return p;
            }
        }
    }
}

/// A random convex domain polygon inside `outer`, sharing its corner.
pub fn random_subdomain(rng: &mut ChaCha8Rng, outer: &MomentPolygon) -> MomentPolygon {
    let xmax = outer.vertices().iter().map(|v| v.x.clone()).max().unwrap();
    let ymax = outer.vertices().iter().map(|v| v.y.clone()).max().unwrap();
    loop {
        let s = |rng: &mut ChaCha8Rng, m: &Rational| m * rat(rng.gen_range(1..=4), 4);
        let mut pts = vec![
            Point::origin(),
            Point::new(s(rng, &xmax), int(0)),
            Point::new(int(0), s(rng, &ymax)),
        ];
        for _ in 0..rng.gen_range(0..=2) {
            pts.push(Point::new(s(rng, &xmax), s(rng, &ymax)));
        }
        if !pts.iter().all(|p| outer.contains_point(p)) {
            continue;
        }
        if let Ok(p) = MomentPolygon::new(toricap::lattice::counting::convex_hull(pts)) {
            if p.is_convex_domain() && outer.contains(&p) {
                return p;
            }
        }
    }
}

/// Lattice points of `P_D` by scanning a bounding box against every
/// inequality `<u_F, x> >= -a_F`.
pub fn naive_h0(s: &ToricSurface, d: &TorusDivisor, radius: i64) -> u64 {
    let r = int(radius);
    assert!(
        s.support_polytope(d).vertices().iter().all(|v| v.x.abs() < r && v.y.abs() < r),
        "P_D of {d} does not fit the scan radius"
    );
    let mut count = 0;
    for x in -radius..=radius {
        for y in -radius..=radius {
            let inside = s.rays().iter().zip(d.coefficients()).all(|(u, a)| {
                let lhs = toricap::rational::from_bigint(&u.x * x + &u.y * y);
                lhs >= -a
            });
            if inside {
                count += 1;
            }
        }
    }
    count
}
