//! Halfspace intersections to vertex representations (dimensions 1 to 3).

use super::affine::AffineHull;
use super::body::ConvexBody;
use super::halfspace::Halfspace;
use super::hull::full_hull;
use super::lp::{lp_solve, LpOutcome};
use super::point::Point;
use crate::error::{GeomError, Result};
use crate::tolerance::Tolerance;

/// Outcome of intersecting finitely many halfspaces.
#[derive(Debug, Clone, PartialEq)]
pub enum VertexEnumeration {
    Body(ConvexBody),
    Empty,
    Unbounded,
}

/// Vertex enumeration through polar duality around a Chebyshev center; flat
/// intersections are detected by slack LPs and handled inside their affine
/// hull.
pub fn vertex_enumeration(halfspaces: &[Halfspace], tol: &Tolerance) -> Result<VertexEnumeration> {
    let dim = match halfspaces.first() {
        Some(h) => h.dim(),
        None => return Ok(VertexEnumeration::Unbounded),
    };
    if dim > 3 {
        return Err(GeomError::UnsupportedDimension(dim));
    }
    let mut hs = Vec::with_capacity(halfspaces.len());
    for h in halfspaces {
        if h.dim() != dim {
            return Err(GeomError::DimensionMismatch {
                expected: dim,
                found: h.dim(),
            });
        }
        hs.push(h.normalized());
    }
    let scale = hs.iter().fold(1.0_f64, |a, h| a.max(h.offset.abs()));
    let eps = tol.eps_geom * scale;
    let (center, radius) = match chebyshev(&hs, dim, tol)? {
        Some(c) => c,
        None => return Ok(VertexEnumeration::Empty),
    };
    if radius < -eps {
        return Ok(VertexEnumeration::Empty);
    }
    if is_unbounded(&hs, dim, tol)? {
        return Ok(VertexEnumeration::Unbounded);
    }
    let pts = if radius > 10.0 * eps {
        polar_vertices(&hs, &center, eps)?
    } else {
        match flat_vertices(&hs, &center, dim, tol, eps)? {
            Some(p) => p,
            None => return Ok(VertexEnumeration::Empty),
        }
    };
    Ok(VertexEnumeration::Body(ConvexBody::hull(&pts, tol)?))
}

/// Chebyshev center and radius (capped at one); radius is negative when the
/// system is infeasible.
fn chebyshev(hs: &[Halfspace], dim: usize, tol: &Tolerance) -> Result<Option<(Point, f64)>> {
    let mut cons: Vec<Halfspace> = hs
        .iter()
        .map(|h| {
            let mut n = h.normal.coords().to_vec();
            n.push(1.0);
            Halfspace {
                normal: Point::new(n),
                offset: h.offset,
            }
        })
        .collect();
    let mut cap = vec![0.0; dim];
    cap.push(1.0);
    cons.push(Halfspace {
        normal: Point::new(cap.clone()),
        offset: 1.0,
    });
    let obj: Vec<f64> = cap.iter().map(|c| -c).collect();
    match lp_solve(&obj, &cons, tol)? {
        LpOutcome::Optimal { point, .. } => {
            let mut c = point.into_coords();
            let r = c.pop().unwrap();
            Ok(Some((Point::new(c), r)))
        }
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded => Err(GeomError::Lp("Chebyshev program unbounded".into())),
    }
}

fn is_unbounded(hs: &[Halfspace], dim: usize, tol: &Tolerance) -> Result<bool> {
    let mut cons: Vec<Halfspace> = hs
        .iter()
        .map(|h| Halfspace {
            normal: h.normal.clone(),
            offset: 0.0,
        })
        .collect();
    for j in 0..dim {
        cons.push(Halfspace {
            normal: Point::unit(dim, j),
            offset: 1.0,
        });
        cons.push(Halfspace {
            normal: -Point::unit(dim, j),
            offset: 1.0,
        });
    }
    for j in 0..dim {
        for s in [1.0, -1.0] {
            let mut obj = vec![0.0; dim];
            obj[j] = -s;
            if let LpOutcome::Optimal { value, .. } = lp_solve(&obj, &cons, tol)? {
                if -value > 1e-7 {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

fn polar_vertices(hs: &[Halfspace], center: &Point, eps: f64) -> Result<Vec<Point>> {
    let dual: Vec<Point> = hs
        .iter()
        .map(|h| h.normal.scale(1.0 / (h.offset - h.normal.dot(center))))
        .collect();
    let deps = super::body::scaled_eps(eps, &dual);
    let raw = full_hull(&dual, deps)?;
    Ok(raw
        .halfspaces
        .iter()
        .map(|f| center + &f.normal.scale(1.0 / f.offset))
        .collect())
}

/// Vertices of a flat intersection: restrict to the affine hull cut out by the
/// implicit equalities and recurse.
fn flat_vertices(
    hs: &[Halfspace],
    x0: &Point,
    dim: usize,
    tol: &Tolerance,
    eps: f64,
) -> Result<Option<Vec<Point>>> {
    let mut eq_normals: Vec<Point> = Vec::new();
    let mut anchor = x0.clone();
    for h in hs {
        match lp_solve(h.normal.coords(), hs, tol)? {
            LpOutcome::Optimal { value, point } => {
                if value >= h.offset - 10.0 * eps {
                    eq_normals.push(h.normal.clone());
                    anchor = point;
                }
            }
            LpOutcome::Infeasible => return Ok(None),
            LpOutcome::Unbounded => {}
        }
    }
    if eq_normals.is_empty() {
        // Thin but full-dimensional.
        return polar_vertices(hs, x0, eps).map(Some);
    }
    let mut with_origin = vec![Point::origin(dim)];
    with_origin.extend(eq_normals.iter().cloned());
    let span = AffineHull::of_points(&with_origin, 1e-7);
    let sub = AffineHull {
        origin: anchor,
        basis: AffineHull {
            origin: Point::origin(dim),
            basis: span.basis,
        }
        .complement(),
    };
    let k = sub.dim();
    if k == 0 {
        return Ok(Some(vec![sub.origin]));
    }
    let mut reduced: Vec<Halfspace> = Vec::new();
    for h in hs {
        let t: Vec<f64> = sub.basis.iter().map(|b| b.dot(&h.normal)).collect();
        let off = h.offset - h.normal.dot(&sub.origin);
        let tn = t.iter().map(|x| x * x).sum::<f64>().sqrt();
        if tn <= 1e-9 {
            if off < -10.0 * eps {
                return Ok(None);
            }
            continue;
        }
        reduced.push(Halfspace {
            normal: Point::new(t),
            offset: off,
        });
    }
    let inner = match vertex_enumeration(&reduced, tol)? {
        VertexEnumeration::Body(b) => b.vertices().to_vec(),
        VertexEnumeration::Empty => return Ok(None),
        VertexEnumeration::Unbounded => return Err(GeomError::Unbounded),
    };
    Ok(Some(inner.iter().map(|y| sub.lift(y.coords())).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(n: &[f64], b: f64) -> Halfspace {
        Halfspace::from_coords(n, b).unwrap()
    }

    #[test]
    fn square() {
        let tol = Tolerance::default();
        let h = vec![
            hs(&[1.0, 0.0], 1.0),
            hs(&[-1.0, 0.0], 1.0),
            hs(&[0.0, 1.0], 1.0),
            hs(&[0.0, -1.0], 1.0),
        ];
        let VertexEnumeration::Body(b) = vertex_enumeration(&h, &tol).unwrap() else {
            panic!()
        };
        assert_eq!(b.vertices().len(), 4);
        for v in b.vertices() {
            assert!((v[0].abs() - 1.0).abs() < 1e-12 && (v[1].abs() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn triangle() {
        let tol = Tolerance::default();
        let h = vec![
            hs(&[-1.0, 0.0], 0.0),
            hs(&[0.0, -1.0], 0.0),
            hs(&[1.0, 1.0], 1.0),
        ];
        let VertexEnumeration::Body(b) = vertex_enumeration(&h, &tol).unwrap() else {
            panic!()
        };
        assert_eq!(b.vertices().len(), 3);
        for e in [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]] {
            assert!(b
                .vertices()
                .iter()
                .any(|v| v.approx_eq(&Point::from(e), 1e-12)));
        }
    }

    #[test]
    fn unbounded_and_empty() {
        let tol = Tolerance::default();
        assert_eq!(
            vertex_enumeration(&[hs(&[1.0, 0.0], 0.0)], &tol).unwrap(),
            VertexEnumeration::Unbounded
        );
        let h = vec![
            hs(&[1.0, 0.0], -1.0),
            hs(&[-1.0, 0.0], -1.0),
            hs(&[0.0, 1.0], 1.0),
            hs(&[0.0, -1.0], 1.0),
        ];
        assert_eq!(
            vertex_enumeration(&h, &tol).unwrap(),
            VertexEnumeration::Empty
        );
    }

    #[test]
    fn flat_intersection_in_space() {
        let tol = Tolerance::default();
        // The unit square in the plane z = 0.
        let h = vec![
            hs(&[1.0, 0.0, 0.0], 1.0),
            hs(&[-1.0, 0.0, 0.0], 0.0),
            hs(&[0.0, 1.0, 0.0], 1.0),
            hs(&[0.0, -1.0, 0.0], 0.0),
            hs(&[0.0, 0.0, 1.0], 0.0),
            hs(&[0.0, 0.0, -1.0], 0.0),
        ];
        let VertexEnumeration::Body(b) = vertex_enumeration(&h, &tol).unwrap() else {
            panic!()
        };
        assert_eq!(b.affine_dim(), 2);
        assert_eq!(b.vertices().len(), 4);
    }

    #[test]
    fn single_point() {
        let tol = Tolerance::default();
        let h = vec![
            hs(&[1.0, 0.0], 0.5),
            hs(&[-1.0, 0.0], -0.5),
            hs(&[0.0, 1.0], 2.0),
            hs(&[0.0, -1.0], -2.0),
        ];
        let VertexEnumeration::Body(b) = vertex_enumeration(&h, &tol).unwrap() else {
            panic!()
        };
        assert_eq!(b.vertices().len(), 1);
        assert!(b.vertices()[0].approx_eq(&Point::from([0.5, 2.0]), 1e-12));
    }
}
