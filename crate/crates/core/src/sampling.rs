//! Seeded random generators for test corpora and experiments.
//!
//! Everything routes through a caller-supplied RNG so that experiment
//! outputs are reproducible from a 64-bit seed.

use rand::Rng;

use crate::geom::{LineSubspace, Vec2};
use crate::polygon::ConvexPolygon;

/// Convex hull of `k` points drawn uniformly from the disk of radius
/// `scale`; retries until the hull is full-dimensional.
pub fn random_convex_polygon<R: Rng>(rng: &mut R, k: usize, scale: f64) -> ConvexPolygon {
    assert!(k >= 3);
    loop {
        let pts: Vec<Vec2> = (0..k).map(|_| random_point_in_disk(rng, scale)).collect();
        let p = ConvexPolygon::from_points(&pts).expect("finite points");
        if p.kind() == crate::polygon::PolygonKind::FullDim {
            return p;
        }
    }
}

pub fn random_point_in_disk<R: Rng>(rng: &mut R, radius: f64) -> Vec2 {
    let r = radius * rng.gen::<f64>().sqrt();
    let a = rng.gen::<f64>() * std::f64::consts::TAU;
    Vec2::from_angle(a) * r
}

/// A line through the origin with angle uniform in `[0, π)`.
pub fn random_line<R: Rng>(rng: &mut R) -> LineSubspace {
    LineSubspace::line_2d(rng.gen::<f64>() * std::f64::consts::PI).expect("finite angle")
}
