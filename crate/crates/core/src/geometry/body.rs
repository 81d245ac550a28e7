use super::affine::AffineHull;
use super::halfspace::Halfspace;
use super::hull::{full_hull, RawHull};
use super::point::Point;
use super::venum::{vertex_enumeration, VertexEnumeration};
use crate::error::{check_dim, GeomError, Result};
use crate::tolerance::Tolerance;

/// A convex polytope stored with both its vertices and its facet halfspaces.
///
/// Bodies built by [`ConvexBody::from_vertices`] and
/// [`ConvexBody::from_halfspaces`] are full-dimensional. Lower-dimensional
/// polytopes (produced by [`ConvexBody::hull`] or as intersection results) keep
/// their affine hull and describe it by pairs of opposite halfspaces.
///
/// Planar full-dimensional bodies list their vertices counter-clockwise,
/// starting from the lexicographically smallest, and facet `i` is the edge from
/// vertex `i` to vertex `i + 1`. All other bodies list vertices in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexBody {
    dim: usize,
    vertices: Vec<Point>,
    halfspaces: Vec<Halfspace>,
    affine: AffineHull,
}

/// Absolute tolerance for a point configuration of the given magnitude.
pub(crate) fn scaled_eps(eps: f64, points: &[Point]) -> f64 {
    let s = points
        .iter()
        .flat_map(|p| p.coords().iter())
        .fold(1.0_f64, |a, c| a.max(c.abs()));
    eps * s
}

impl ConvexBody {
    /// Convex hull of a point set with full-dimensional affine hull.
    pub fn from_vertices(points: &[Point], tol: &Tolerance) -> Result<Self> {
        let body = Self::hull(points, tol)?;
        if !body.is_full_dimensional() {
            return Err(GeomError::Degenerate);
        }
        Ok(body)
    }

    /// Convex hull of any nonempty finite point set (dimension at most 3).
    pub fn hull(points: &[Point], tol: &Tolerance) -> Result<Self> {
        let dim = points.first().map(Point::dim).ok_or(GeomError::Empty)?;
        for p in points {
            check_dim(dim, p.dim())?;
        }
        if dim > 3 {
            return Err(GeomError::UnsupportedDimension(dim));
        }
        let eps = scaled_eps(tol.eps_geom, points);
        let affine = AffineHull::of_points(points, eps);
        if affine.is_full() {
            let RawHull {
                vertices,
                halfspaces,
            } = full_hull(points, eps)?;
            let affine = AffineHull {
                origin: Point::origin(dim),
                basis: (0..dim).map(|j| Point::unit(dim, j)).collect(),
            };
            return Ok(ConvexBody {
                dim,
                vertices,
                halfspaces,
                affine,
            });
        }
        let k = affine.dim();
        let mut halfspaces = Vec::new();
        let mut vertices: Vec<Point>;
        if k == 0 {
            vertices = vec![affine.origin.clone()];
        } else {
            let proj: Vec<Point> = points
                .iter()
                .map(|p| Point::new(affine.project(p)))
                .collect();
            let raw = full_hull(&proj, eps)?;
            vertices = raw
                .vertices
                .iter()
                .map(|y| {
                    let i = proj
                        .iter()
                        .position(|q| q.approx_eq(y, eps))
                        .expect("hull vertex comes from the input");
                    points[i].clone()
                })
                .collect();
            for h in &raw.halfspaces {
                let normal = affine.lift_direction(h.normal.coords());
                let offset = h.offset + normal.dot(&affine.origin);
                halfspaces.push(Halfspace { normal, offset });
            }
        }
        for w in affine.complement() {
            let c = w.dot(&affine.origin);
            halfspaces.push(Halfspace {
                normal: -&w,
                offset: -c,
            });
            halfspaces.push(Halfspace {
                normal: w,
                offset: c,
            });
        }
        vertices.sort_by(|a, b| a.lex_cmp(b));
        Ok(ConvexBody {
            dim,
            vertices,
            halfspaces,
            affine,
        })
    }

    /// Bounded, full-dimensional intersection of halfspaces.
    pub fn from_halfspaces(halfspaces: &[Halfspace], tol: &Tolerance) -> Result<Self> {
        match vertex_enumeration(halfspaces, tol)? {
            VertexEnumeration::Body(b) if b.is_full_dimensional() => Ok(b),
            VertexEnumeration::Body(_) => Err(GeomError::Degenerate),
            VertexEnumeration::Empty => Err(GeomError::Empty),
            VertexEnumeration::Unbounded => Err(GeomError::Unbounded),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn affine_hull(&self) -> &AffineHull {
        &self.affine
    }

    pub fn affine_dim(&self) -> usize {
        self.affine.dim()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine.is_full()
    }

    /// Support function `max_{x in B} u · x`.
    pub fn support(&self, u: &Point) -> Result<f64> {
        Ok(self.support_argmax(u)?.0)
    }

    /// Support value together with the index of the first maximizing vertex.
    pub fn support_argmax(&self, u: &Point) -> Result<(f64, usize)> {
        check_dim(self.dim, u.dim())?;
        let mut best = (f64::NEG_INFINITY, 0);
        for (i, v) in self.vertices.iter().enumerate() {
            let s = u.dot(v);
            if s > best.0 {
                best = (s, i);
            }
        }
        Ok(best)
    }

    /// `min_{x in B} u · x`.
    pub fn min_dot(&self, u: &Point) -> f64 {
        self.vertices
            .iter()
            .map(|v| u.dot(v))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, p: &Point, eps: f64) -> bool {
        p.dim() == self.dim && self.halfspaces.iter().all(|h| h.contains(p, eps))
    }

    /// True when every vertex of `other` lies in `self`.
    pub fn contains_body(&self, other: &ConvexBody, eps: f64) -> bool {
        other.vertices.iter().all(|v| self.contains(v, eps))
    }

    /// Mean of the vertices, a relative interior point.
    pub fn vertex_centroid(&self) -> Point {
        Point::centroid(&self.vertices)
    }

    pub fn translate(&self, v: &Point) -> ConvexBody {
        ConvexBody {
            dim: self.dim,
            vertices: self.vertices.iter().map(|p| p + v).collect(),
            halfspaces: self.halfspaces.iter().map(|h| h.translate(v)).collect(),
            affine: AffineHull {
                origin: &self.affine.origin + v,
                basis: self.affine.basis.clone(),
            },
        }
    }

    /// The homothet `r B` about the origin, `r > 0`.
    pub fn scale(&self, r: f64) -> ConvexBody {
        assert!(r > 0.0, "scale factor must be positive");
        ConvexBody {
            dim: self.dim,
            vertices: self.vertices.iter().map(|p| p.scale(r)).collect(),
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| Halfspace {
                    normal: h.normal.clone(),
                    offset: h.offset * r,
                })
                .collect(),
            affine: AffineHull {
                origin: self.affine.origin.scale(r),
                basis: self.affine.basis.clone(),
            },
        }
    }

    /// The homothet `c + r (B - c)`.
    pub fn scale_about(&self, c: &Point, r: f64) -> ConvexBody {
        self.translate(&-c).scale(r).translate(c)
    }

    /// The reflection `-B`, re-canonicalized.
    pub fn reflect(&self, tol: &Tolerance) -> ConvexBody {
        let pts: Vec<Point> = self.vertices.iter().map(|p| -p).collect();
        ConvexBody::hull(&pts, tol).expect("reflection of a valid body")
    }

    /// Whether `B = -B` within `eps`, compared through support values on the
    /// facet normals of both bodies.
    pub fn is_origin_symmetric(&self, eps: f64) -> bool {
        self.halfspaces.iter().all(|h| {
            let a = self.support(&h.normal).unwrap();
            let b = self.support(&-&h.normal).unwrap();
            (a - b).abs() <= eps
        })
    }

    /// Indices of vertices lying on facet `i`.
    pub fn facet_vertices(&self, i: usize, eps: f64) -> Vec<usize> {
        let h = &self.halfspaces[i];
        (0..self.vertices.len())
            .filter(|&j| h.slack_violation(&self.vertices[j]).abs() <= eps)
            .collect()
    }

    /// `table[f][v]` is true when vertex `v` lies on facet `f`.
    pub fn incidence(&self, eps: f64) -> Vec<Vec<bool>> {
        self.halfspaces
            .iter()
            .map(|h| {
                self.vertices
                    .iter()
                    .map(|v| h.slack_violation(v).abs() <= eps)
                    .collect()
            })
            .collect()
    }

    /// Vertex index pairs spanning the edges of a full-dimensional body.
    pub fn edges(&self, eps: f64) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        match self.dim {
            1 => vec![(0, 1)],
            2 => (0..n).map(|i| (i, (i + 1) % n)).collect(),
            _ => {
                let inc = self.incidence(eps);
                let mut out = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        let common: Vec<&Halfspace> = (0..inc.len())
                            .filter(|&f| inc[f][a] && inc[f][b])
                            .map(|f| &self.halfspaces[f])
                            .collect();
                        if normal_rank(&common) >= self.dim - 1 {
                            out.push((a, b));
                        }
                    }
                }
                out
            }
        }
    }

    /// Volume (area in the plane, length on the line); zero for degenerate
    /// bodies.
    pub fn volume(&self, eps: f64) -> f64 {
        if !self.is_full_dimensional() {
            return 0.0;
        }
        match self.dim {
            1 => self.vertices[1][0] - self.vertices[0][0],
            2 => polygon_area(&self.vertices),
            _ => {
                let c = self.vertex_centroid();
                let mut vol = 0.0;
                for (i, h) in self.halfspaces.iter().enumerate() {
                    let idx = self.facet_vertices(i, eps);
                    let pts: Vec<Point> = idx.iter().map(|&j| self.vertices[j].clone()).collect();
                    let area = planar_polygon_area_3d(&pts);
                    vol += area * (h.offset - h.normal.dot(&c)) / 3.0;
                }
                vol
            }
        }
    }
}

fn normal_rank(hs: &[&Halfspace]) -> usize {
    if hs.is_empty() {
        return 0;
    }
    let pts: Vec<Point> = hs
        .iter()
        .map(|h| h.normal.scale(1.0 / h.normal.norm()))
        .collect();
    let mut with_origin = vec![Point::origin(pts[0].dim())];
    with_origin.extend(pts);
    AffineHull::of_points(&with_origin, 1e-7).dim()
}

/// Signed area of a counter-clockwise polygon.
pub(crate) fn polygon_area(v: &[Point]) -> f64 {
    let n = v.len();
    let mut a = 0.0;
    for i in 0..n {
        let p = &v[i];
        let q = &v[(i + 1) % n];
        a += p[0] * q[1] - q[0] * p[1];
    }
    a / 2.0
}

fn planar_polygon_area_3d(pts: &[Point]) -> f64 {
    if pts.len() < 3 {
        return 0.0;
    }
    let aff = AffineHull::of_points(pts, 1e-12);
    if aff.dim() < 2 {
        return 0.0;
    }
    let proj: Vec<Point> = pts.iter().map(|p| Point::new(aff.project(p))).collect();
    let ring = super::hull::ccw_polygon(&proj, 1e-12);
    polygon_area(&ring).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[[f64; 2]]) -> Vec<Point> {
        v.iter().map(|c| Point::from(*c)).collect()
    }

    #[test]
    fn support_examples() {
        let tol = Tolerance::default();
        let sq = ConvexBody::from_vertices(
            &pts(&[[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]]),
            &tol,
        )
        .unwrap();
        assert_eq!(sq.support(&Point::from([1.0, 0.0])).unwrap(), 1.0);
        assert_eq!(sq.support(&Point::from([0.0, 0.0])).unwrap(), 0.0);
        let tri =
            ConvexBody::from_vertices(&pts(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]), &tol).unwrap();
        assert_eq!(tri.support(&Point::from([1.0, 1.0])).unwrap(), 1.0);
        assert!(sq.support(&Point::from([1.0, 0.0, 0.0])).is_err());
    }

    #[test]
    fn planar_order_is_ccw_from_lex_min() {
        let tol = Tolerance::default();
        let b = ConvexBody::from_vertices(
            &pts(&[[1.0, 1.0], [0.0, 1.0], [1.0, 0.0], [0.0, 0.0]]),
            &tol,
        )
        .unwrap();
        assert_eq!(b.vertices()[0], Point::from([0.0, 0.0]));
        assert_eq!(b.vertices()[1], Point::from([1.0, 0.0]));
        assert!((b.volume(1e-9) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_hull_keeps_affine_hull() {
        let tol = Tolerance::default();
        let p: Vec<Point> = [
            [0.0, 0.0, 0.0],
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.2, 0.2, 0.0],
        ]
        .iter()
        .map(|c| Point::from(*c))
        .collect();
        let b = ConvexBody::hull(&p, &tol).unwrap();
        assert_eq!(b.affine_dim(), 2);
        assert_eq!(b.vertices().len(), 3);
        assert!(b.contains(&Point::from([0.3, 0.3, 0.0]), 1e-9));
        assert!(!b.contains(&Point::from([0.3, 0.3, 0.01]), 1e-9));
        assert!(ConvexBody::from_vertices(&p, &tol).is_err());
    }

    #[test]
    fn cube_volume_and_edges() {
        let tol = Tolerance::default();
        let mut p = Vec::new();
        for i in 0..8 {
            p.push(Point::from([
                (i & 1) as f64,
                ((i >> 1) & 1) as f64,
                ((i >> 2) & 1) as f64,
            ]));
        }
        let b = ConvexBody::from_vertices(&p, &tol).unwrap();
        assert!((b.volume(1e-9) - 1.0).abs() < 1e-12);
        assert_eq!(b.edges(1e-9).len(), 12);
    }
}
