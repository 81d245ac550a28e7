//! Fixtures shared by the benchmarks.

use ballconv::bodies::{ellipse_polygon, random_polygon, random_polytope_3d, rng};
use ballconv::{ConvexBody, PointSet};

/// A polygon `C` with `m` vertices and `n` random points well inside it.
///
/// `C` is random for small `m` and a sampled ellipse beyond that, since
/// rejection sampling of random polygons stalls for many vertices.
pub fn planar_instance(seed: u64, m: usize, n: usize) -> (ConvexBody, PointSet) {
    let mut r = rng(seed);
    let c = if m <= 8 {
        random_polygon(&mut r, m).unwrap()
    } else {
        ellipse_polygon(m, 1.0, 0.6).unwrap()
    };
    let a = random_polygon(&mut r, n.clamp(3, 8)).unwrap();
    (c.clone(), shrink_into(&c, &a))
}

/// A random polytope `C` in space and `n` points well inside it.
pub fn spatial_instance(seed: u64, m: usize, n: usize) -> (ConvexBody, PointSet) {
    let mut r = rng(seed);
    let c = random_polytope_3d(&mut r, m).unwrap();
    let a = random_polytope_3d(&mut r, n).unwrap();
    (c.clone(), shrink_into(&c, &a))
}

// Vertices of `a`, squeezed toward the vertex centroid of `c`.
fn shrink_into(c: &ConvexBody, a: &ConvexBody) -> PointSet {
    let g = c.vertex_centroid();
    let h = a.vertex_centroid();
    let pts = a
        .vertices()
        .iter()
        .map(|v| &g + &(v - &h).scale(0.15))
        .collect();
    PointSet::new(c.dim(), pts).unwrap()
}
