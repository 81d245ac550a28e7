//! Convex hulls of full-dimensional point sets in dimensions 1 to 3.

use std::collections::HashMap;

use super::halfspace::Halfspace;
use super::point::Point;
use crate::error::{GeomError, Result};

pub(crate) struct RawHull {
    pub vertices: Vec<Point>,
    pub halfspaces: Vec<Halfspace>,
}

/// Hull of points whose affine hull is the whole space. In the plane the
/// vertices come counter-clockwise starting at the lexicographically smallest
/// one, with edge `i` running from vertex `i` to vertex `i + 1`; in space they
/// are sorted lexicographically and facets by normal.
pub(crate) fn full_hull(points: &[Point], eps: f64) -> Result<RawHull> {
    let dim = points.first().map(Point::dim).ok_or(GeomError::Empty)?;
    match dim {
        1 => hull_1d(points, eps),
        2 => hull_2d(points, eps),
        3 => hull_3d(points, eps),
        d => Err(GeomError::UnsupportedDimension(d)),
    }
}

fn hull_1d(points: &[Point], eps: f64) -> Result<RawHull> {
    let lo = points.iter().map(|p| p[0]).fold(f64::INFINITY, f64::min);
    let hi = points
        .iter()
        .map(|p| p[0])
        .fold(f64::NEG_INFINITY, f64::max);
    if hi - lo <= eps {
        return Err(GeomError::Degenerate);
    }
    Ok(RawHull {
        vertices: vec![Point::from([lo]), Point::from([hi])],
        halfspaces: vec![
            Halfspace {
                normal: Point::from([-1.0]),
                offset: -lo,
            },
            Halfspace {
                normal: Point::from([1.0]),
                offset: hi,
            },
        ],
    })
}

/// Counter-clockwise hull vertices of planar points, collinear points removed.
///
/// The chain is built with exact orientation signs. Vertices within `eps` of
/// the chord of their neighbours are then pruned in cyclic order, since the
/// lexicographic order of nearly collinear points need not follow the line.
pub(crate) fn ccw_polygon(points: &[Point], eps: f64) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort_by(|a, b| a.lex_cmp(b));
    pts.dedup_by(|a, b| a.approx_eq(b, eps));
    if pts.len() < 3 {
        return pts;
    }
    let left = |o: &Point, a: &Point, b: &Point| robust::orient2d(coord(o), coord(a), coord(b)) > 0.0;
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !left(&lower[lower.len() - 2], &lower[lower.len() - 1], p) {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !left(&upper[upper.len() - 2], &upper[upper.len() - 1], p) {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    prune_flat(lower, eps)
}

/// Drops the vertex closest to the chord of its neighbours while that
/// distance is at most `eps`.
fn prune_flat(mut poly: Vec<Point>, eps: f64) -> Vec<Point> {
    while poly.len() >= 3 {
        let m = poly.len();
        let (i, d) = (0..m)
            .map(|i| {
                let (o, a, b) = (&poly[(i + m - 1) % m], &poly[i], &poly[(i + 1) % m]);
                let len = o.dist(b);
                let d = if len > eps {
                    robust::orient2d(coord(o), coord(a), coord(b)) / len
                } else {
                    o.dist(a)
                };
                (i, d)
            })
            .min_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if d > eps {
            break;
        }
        poly.remove(i);
    }
    if poly.len() == 2 && poly[0].approx_eq(&poly[1], eps) {
        poly.truncate(1);
    }
    poly
}

fn coord(p: &Point) -> robust::Coord<f64> {
    robust::Coord { x: p[0], y: p[1] }
}

/// Outward unit-normal halfspaces of the edges of a counter-clockwise polygon.
pub(crate) fn polygon_halfspaces(verts: &[Point]) -> Vec<Halfspace> {
    let m = verts.len();
    (0..m)
        .map(|i| {
            let a = &verts[i];
            let b = &verts[(i + 1) % m];
            let n = Point::from([b[1] - a[1], a[0] - b[0]]);
            let n = n.scale(1.0 / n.norm());
            let offset = n.dot(a);
            Halfspace { normal: n, offset }
        })
        .collect()
}

fn hull_2d(points: &[Point], eps: f64) -> Result<RawHull> {
    let vertices = ccw_polygon(points, eps);
    if vertices.len() < 3 {
        return Err(GeomError::Degenerate);
    }
    let halfspaces = polygon_halfspaces(&vertices);
    Ok(RawHull {
        vertices,
        halfspaces,
    })
}

fn cross(a: &[f64], b: &[f64]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn sub3(a: &Point, b: &Point) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot3(a: &[f64; 3], b: &[f64]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

struct Face {
    v: [usize; 3],
    n: [f64; 3],
    off: f64,
    alive: bool,
}

fn make_face(pts: &[Point], v: [usize; 3]) -> Face {
    let n = cross(&sub3(&pts[v[1]], &pts[v[0]]), &sub3(&pts[v[2]], &pts[v[0]]));
    let len = dot3(&n, &n).sqrt().max(1e-300);
    let n = [n[0] / len, n[1] / len, n[2] / len];
    let off = dot3(&n, pts[v[0]].coords());
    Face {
        v,
        n,
        off,
        alive: true,
    }
}

fn hull_3d(points: &[Point], eps: f64) -> Result<RawHull> {
    let pts: Vec<Point> = super::point::dedup_points(points, eps);
    if pts.len() < 4 {
        return Err(GeomError::Degenerate);
    }
    // Initial tetrahedron from extreme points.
    let i0 = (0..pts.len())
        .min_by(|&a, &b| pts[a].lex_cmp(&pts[b]))
        .unwrap();
    let i1 = argmax(&pts, |p| p.dist(&pts[i0]));
    let d01 = sub3(&pts[i1], &pts[i0]);
    let i2 = argmax(&pts, |p| {
        let c = cross(&d01, &sub3(p, &pts[i0]));
        dot3(&c, &c)
    });
    let nrm = cross(&d01, &sub3(&pts[i2], &pts[i0]));
    let i3 = argmax(&pts, |p| dot3(&nrm, &sub3(p, &pts[i0])).abs());
    let nl = dot3(&nrm, &nrm).sqrt();
    if pts[i1].dist(&pts[i0]) <= eps
        || nl <= eps * pts[i1].dist(&pts[i0])
        || (dot3(&nrm, &sub3(&pts[i3], &pts[i0])) / nl).abs() <= eps
    {
        return Err(GeomError::Degenerate);
    }
    let mut faces: Vec<Face> = Vec::new();
    let tet = [i0, i1, i2, i3];
    for skip in 0..4 {
        let mut v: Vec<usize> = (0..4).filter(|&j| j != skip).map(|j| tet[j]).collect();
        let mut f = make_face(&pts, [v[0], v[1], v[2]]);
        if dot3(&f.n, pts[tet[skip]].coords()) - f.off > 0.0 {
            v.swap(1, 2);
            f = make_face(&pts, [v[0], v[1], v[2]]);
        }
        faces.push(f);
    }
    let mut edges: HashMap<(usize, usize), usize> = HashMap::new();
    for (fi, f) in faces.iter().enumerate() {
        for e in 0..3 {
            edges.insert((f.v[e], f.v[(e + 1) % 3]), fi);
        }
    }
    for pi in 0..pts.len() {
        if tet.contains(&pi) {
            continue;
        }
        let p = pts[pi].coords();
        let visible: Vec<usize> = (0..faces.len())
            .filter(|&fi| faces[fi].alive && dot3(&faces[fi].n, p) - faces[fi].off > eps)
            .collect();
        if visible.is_empty() {
            continue;
        }
        let mut horizon: Vec<(usize, usize)> = Vec::new();
        for &fi in &visible {
            let v = faces[fi].v;
            for e in 0..3 {
                let (a, b) = (v[e], v[(e + 1) % 3]);
                let twin = edges.get(&(b, a)).copied();
                if let Some(t) = twin {
                    if !visible.contains(&t) {
                        horizon.push((a, b));
                    }
                }
            }
        }
        for &fi in &visible {
            faces[fi].alive = false;
            let v = faces[fi].v;
            for e in 0..3 {
                edges.remove(&(v[e], v[(e + 1) % 3]));
            }
        }
        for (a, b) in horizon {
            let f = make_face(&pts, [a, b, pi]);
            let fi = faces.len();
            for e in 0..3 {
                edges.insert((f.v[e], f.v[(e + 1) % 3]), fi);
            }
            faces.push(f);
        }
    }
    finish_3d(&pts, &faces, eps)
}

fn argmax(pts: &[Point], f: impl Fn(&Point) -> f64) -> usize {
    let mut best = 0;
    let mut bv = f64::NEG_INFINITY;
    for (i, p) in pts.iter().enumerate() {
        let v = f(p);
        if v > bv {
            bv = v;
            best = i;
        }
    }
    best
}

/// Merges coplanar triangles into facets and drops non-extreme points.
fn finish_3d(pts: &[Point], faces: &[Face], eps: f64) -> Result<RawHull> {
    let mut cand: Vec<usize> = faces.iter().filter(|f| f.alive).flat_map(|f| f.v).collect();
    cand.sort_unstable();
    cand.dedup();
    let tight_eps = 10.0 * eps;
    let mut planes: Vec<([f64; 3], f64)> = Vec::new();
    for f in faces.iter().filter(|f| f.alive) {
        let n = f.n;
        if dot3(&n, &n) < 0.5 {
            continue;
        }
        if planes
            .iter()
            .any(|(m, _)| (0..3).all(|j| (m[j] - n[j]).abs() <= 1e-7))
        {
            continue;
        }
        let off = cand
            .iter()
            .map(|&i| dot3(&n, pts[i].coords()))
            .fold(f64::NEG_INFINITY, f64::max);
        let tight: Vec<usize> = cand
            .iter()
            .copied()
            .filter(|&i| dot3(&n, pts[i].coords()) >= off - tight_eps)
            .collect();
        if affine_rank(pts, &tight, eps) < 2 {
            continue;
        }
        planes.push((n, off));
    }
    let vertices: Vec<Point> = {
        let mut vs: Vec<Point> = cand
            .iter()
            .copied()
            .filter(|&i| {
                let normals: Vec<[f64; 3]> = planes
                    .iter()
                    .filter(|(n, off)| dot3(n, pts[i].coords()) >= off - tight_eps)
                    .map(|(n, _)| *n)
                    .collect();
                rank3(&normals) == 3
            })
            .map(|i| pts[i].clone())
            .collect();
        vs.sort_by(|a, b| a.lex_cmp(b));
        vs
    };
    let mut halfspaces: Vec<Halfspace> = planes
        .into_iter()
        .map(|(n, off)| Halfspace {
            normal: Point::from(n),
            offset: off,
        })
        .collect();
    halfspaces.sort_by(|a, b| a.normal.lex_cmp(&b.normal));
    Ok(RawHull {
        vertices,
        halfspaces,
    })
}

/// Affine rank (0 for a point, 1 for a segment, 2 for a plane piece, ...).
fn affine_rank(pts: &[Point], idx: &[usize], eps: f64) -> usize {
    if idx.is_empty() {
        return 0;
    }
    let sub: Vec<Point> = idx.iter().map(|&i| pts[i].clone()).collect();
    super::affine::AffineHull::of_points(&sub, eps).dim()
}

fn rank3(normals: &[[f64; 3]]) -> usize {
    let mut basis: Vec<[f64; 3]> = Vec::new();
    for n in normals {
        let mut r = *n;
        for b in &basis {
            let c = dot3(b, &r);
            for j in 0..3 {
                r[j] -= c * b[j];
            }
        }
        let l = dot3(&r, &r).sqrt();
        if l > 1e-7 {
            basis.push([r[0] / l, r[1] / l, r[2] / l]);
            if basis.len() == 3 {
                break;
            }
        }
    }
    basis.len()
}
