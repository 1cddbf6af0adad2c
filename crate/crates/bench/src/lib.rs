//! Polygons shared by the benchmarks.

use toricap::{MomentPolygon, Point};

pub fn polygon(v: &[(i64, i64)]) -> MomentPolygon {
    MomentPolygon::from_i64(v).expect("fixture polygons are valid")
}

/// Named fixtures, from the projective plane up to a six-ray surface.
pub fn fixtures() -> Vec<(&'static str, MomentPolygon)> {
    vec![
        ("triangle", polygon(&[(0, 0), (1, 0), (0, 1)])),
        ("rect_2x3", polygon(&[(0, 0), (2, 0), (2, 3), (0, 3)])),
        ("f2", polygon(&[(0, 0), (3, 0), (1, 1), (0, 1)])),
        ("hexagon", polygon(&[(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)])),
    ]
}

/// A polygon with many vertices, for the lattice-point and width routines.
pub fn large_polygon(radius: i64) -> MomentPolygon {
    let pts = (0..64)
        .map(|i| {
            let t = f64::from(i) * std::f64::consts::TAU / 64.0;
            let r = radius as f64;
            Point::from_ints((r * t.cos()).round() as i64, (r * t.sin()).round() as i64)
        })
        .collect();
    MomentPolygon::new(toricap::lattice::counting::convex_hull(pts)).expect("nondegenerate")
}
