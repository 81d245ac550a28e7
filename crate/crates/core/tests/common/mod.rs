#![allow(dead_code)]

use ballconv::{ConvexBody, Point, PointSet, Tolerance};
use rand::Rng;

pub fn tol() -> Tolerance {
    Tolerance::default()
}

/// Random convex combination of the vertices of `body`.
pub fn inner_point<R: Rng>(r: &mut R, body: &ConvexBody) -> Point {
    let w: Vec<f64> = body.vertices().iter().map(|_| -r.gen::<f64>().max(1e-12).ln()).collect();
    let total: f64 = w.iter().sum();
    body.vertices()
        .iter()
        .zip(&w)
        .fold(Point::origin(body.dim()), |acc, (v, wi)| &acc + &v.scale(wi / total))
}

/// `n` random points of `body` shrunk by `s` about its vertex centroid.
pub fn inner_set<R: Rng>(r: &mut R, body: &ConvexBody, n: usize, s: f64) -> PointSet {
    let small = body.scale_about(&body.vertex_centroid(), s);
    PointSet::new(body.dim(), (0..n).map(|_| inner_point(r, &small)).collect()).unwrap()
}

pub fn unit(t: f64) -> Point {
    Point::from([t.cos(), t.sin()])
}
