use super::body::ConvexBody;
use super::point::Point;
use crate::error::{check_dim, Result};

/// Hausdorff distance of two polytopes. For convex sets the distance to the
/// other set is a convex function, so it is maximized at a vertex.
pub fn hausdorff_distance(a: &ConvexBody, b: &ConvexBody) -> Result<f64> {
    check_dim(a.dim(), b.dim())?;
    let ab = a
        .vertices()
        .iter()
        .map(|v| point_body_distance(v, b))
        .fold(0.0, f64::max);
    let ba = b
        .vertices()
        .iter()
        .map(|v| point_body_distance(v, a))
        .fold(0.0, f64::max);
    Ok(ab.max(ba))
}

/// Euclidean distance from a point to a polytope.
pub fn point_body_distance(p: &Point, b: &ConvexBody) -> f64 {
    let eps = 1e-12;
    if b.contains(p, eps) {
        return 0.0;
    }
    let v = b.vertices();
    if !b.is_full_dimensional() {
        let aff = b.affine_hull();
        let foot = aff.lift(&aff.project(p));
        if b.contains(&foot, 1e-12) {
            return p.dist(&foot);
        }
        return pair_segments(p, v, &(0..v.len()).collect::<Vec<_>>());
    }
    match b.dim() {
        1 => (p[0] - v[1][0]).max(v[0][0] - p[0]).max(0.0),
        2 => {
            let n = v.len();
            (0..n)
                .map(|i| segment_distance(p, &v[i], &v[(i + 1) % n]))
                .fold(f64::INFINITY, f64::min)
        }
        _ => {
            let mut best = f64::INFINITY;
            for (i, h) in b.halfspaces().iter().enumerate() {
                let s = h.slack_violation(p);
                if s <= 0.0 {
                    continue;
                }
                let foot = p - &h.normal.scale(s / h.normal.dot(&h.normal));
                let d = if b.contains(&foot, 1e-12) {
                    s / h.normal.norm()
                } else {
                    pair_segments(p, v, &b.facet_vertices(i, 1e-9))
                };
                best = best.min(d);
            }
            best
        }
    }
}

fn pair_segments(p: &Point, v: &[Point], idx: &[usize]) -> f64 {
    let mut best = f64::INFINITY;
    for (k, &i) in idx.iter().enumerate() {
        best = best.min(p.dist(&v[i]));
        for &j in &idx[k + 1..] {
            best = best.min(segment_distance(p, &v[i], &v[j]));
        }
    }
    best
}

pub(crate) fn segment_distance(p: &Point, a: &Point, b: &Point) -> f64 {
    let ab = b - a;
    let l2 = ab.dot(&ab);
    if l2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(&ab) / l2).clamp(0.0, 1.0);
    p.dist(&a.lerp(b, t))
}
