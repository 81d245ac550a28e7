//! Arc-distance in normed planes whose unit ball is an origin-symmetric
//! polygon.

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, GeomError, Result};
use crate::geometry::{ConvexBody, Point, Region};
use crate::ops::spindle;
use crate::tolerance::Tolerance;

/// An origin-symmetric convex polygon with its boundary parametrized by
/// C-arc-length. Vertex `i` sits at parameter `cumulative[i]`.
#[derive(Debug, Clone)]
pub struct SymmetricPolygon {
    body: ConvexBody,
    cumulative: Vec<f64>,
    perimeter: f64,
    tol: Tolerance,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArcDistance {
    pub value: f64,
    /// The C-distance of the endpoints is within `eps_geom` of two.
    pub near_critical: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArcDisk {
    pub rho: f64,
    pub polygon: ConvexBody,
}

impl ArcDisk {
    pub fn vertex_count(&self) -> usize {
        self.polygon.vertices().len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TriangleCase {
    Interior,
    Boundary,
    Exterior,
    NoArc,
}

/// `lhs = l(x,y) + l(y,z)` against `rhs = l(x,z)`, with the position of `y`
/// relative to the spindle `[x,z]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangleReport {
    pub case: TriangleCase,
    pub lhs: f64,
    pub rhs: f64,
}

fn cross(a: &Point, b: &Point) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

impl SymmetricPolygon {
    pub fn new(body: ConvexBody, tol: &Tolerance) -> Result<Self> {
        if body.dim() != 2 {
            return Err(GeomError::UnsupportedDimension(body.dim()));
        }
        if !body.is_full_dimensional() {
            return Err(GeomError::Degenerate);
        }
        if !body.is_origin_symmetric(tol.eps_geom * 10.0)
            || !body.contains(&Point::origin(2), -tol.eps_geom)
        {
            return Err(GeomError::Precondition(
                "polygon is not origin-symmetric".into(),
            ));
        }
        let v = body.vertices();
        let m = v.len();
        let mut cumulative = Vec::with_capacity(m);
        let mut s = 0.0;
        let hs = body.halfspaces().to_vec();
        for i in 0..m {
            cumulative.push(s);
            s += gauge(&hs, &(&v[(i + 1) % m] - &v[i]));
        }
        Ok(SymmetricPolygon {
            body,
            cumulative,
            perimeter: s,
            tol: *tol,
        })
    }

    pub fn body(&self) -> &ConvexBody {
        &self.body
    }

    pub fn vertex_count(&self) -> usize {
        self.body.vertices().len()
    }

    /// `perim_C C`.
    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    /// Cumulative C-arc-length at each vertex.
    pub fn boundary_table(&self) -> &[f64] {
        &self.cumulative
    }

    /// The norm with unit ball `C`.
    pub fn norm(&self, v: &Point) -> f64 {
        gauge(self.body.halfspaces(), v)
    }

    pub fn c_length_polyline(&self, pts: &[Point]) -> f64 {
        pts.windows(2).map(|w| self.norm(&(&w[1] - &w[0]))).sum()
    }

    /// C-length of the boundary of a polygon.
    pub fn perim_c(&self, d: &ConvexBody) -> Result<f64> {
        check_dim(2, d.dim())?;
        let v = d.vertices();
        let m = v.len();
        Ok((0..m).map(|i| self.norm(&(&v[(i + 1) % m] - &v[i]))).sum())
    }

    /// Boundary point at arc-length parameter `s` (taken modulo the perimeter).
    pub fn point_at(&self, s: f64) -> Point {
        let l = self.perimeter;
        let s = s.rem_euclid(l);
        let v = self.body.vertices();
        let m = v.len();
        let i = match self.cumulative.iter().rposition(|&c| c <= s) {
            Some(i) => i,
            None => 0,
        };
        let next = if i + 1 < m { self.cumulative[i + 1] } else { l };
        let t = if next > self.cumulative[i] {
            (s - self.cumulative[i]) / (next - self.cumulative[i])
        } else {
            0.0
        };
        v[i].lerp(&v[(i + 1) % m], t)
    }

    /// Arc-length parameter of a point on (or very near) the boundary.
    pub fn param_of(&self, x: &Point) -> f64 {
        let v = self.body.vertices();
        let m = v.len();
        let mut best = (f64::INFINITY, 0.0);
        for i in 0..m {
            let a = &v[i];
            let b = &v[(i + 1) % m];
            let ab = b - a;
            let t = ((x - a).dot(&ab) / ab.dot(&ab)).clamp(0.0, 1.0);
            let d = x.dist(&a.lerp(b, t));
            if d < best.0 {
                let next = if i + 1 < m {
                    self.cumulative[i + 1]
                } else {
                    self.perimeter
                };
                best = (d, self.cumulative[i] + t * (next - self.cumulative[i]));
            }
        }
        best.1
    }

    /// The arc-distance `l_C(p, q)`: the shortest C-length of an arc of the
    /// boundary of some translate `y + C` joining `p` and `q`. `None` when
    /// the C-distance of the points exceeds two.
    pub fn arc_distance(&self, p: &Point, q: &Point) -> Option<ArcDistance> {
        let eps = self.tol.eps_geom;
        let d = self.norm(&(q - p));
        let near_critical = (d - 2.0).abs() <= eps * d.max(1.0);
        if d > 2.0 + eps {
            return None;
        }
        if d <= eps {
            return Some(ArcDistance {
                value: d,
                near_critical,
            });
        }
        let centers = self.common_centers(p, q);
        let l = self.perimeter;
        let mut best = f64::INFINITY;
        for y in &centers {
            let a = self.param_of(&(p - y));
            let b = self.param_of(&(q - y));
            let fwd = (b - a).rem_euclid(l);
            best = best.min(fwd.min(l - fwd));
        }
        best.is_finite().then_some(ArcDistance {
            value: best,
            near_critical,
        })
    }

    /// Points `y` with `p` and `q` both on the boundary of `y + C`, i.e. the
    /// intersection of the boundaries of `p + C` and `q + C`; overlapping
    /// edges contribute their overlap endpoints.
    fn common_centers(&self, p: &Point, q: &Point) -> Vec<Point> {
        let v = self.body.vertices();
        let m = v.len();
        let ep: Vec<(Point, Point)> = (0..m).map(|i| (&v[i] + p, &v[(i + 1) % m] + p)).collect();
        let eq: Vec<(Point, Point)> = (0..m).map(|i| (&v[i] + q, &v[(i + 1) % m] + q)).collect();
        let eps = self.tol.eps_geom * 10.0;
        let mut out: Vec<Point> = Vec::new();
        for (a, b) in &ep {
            for (c, d) in &eq {
                for x in segment_intersections(a, b, c, d, eps) {
                    if !out.iter().any(|o| o.approx_eq(&x, eps)) {
                        out.push(x);
                    }
                }
            }
        }
        out
    }

    /// The arc-distance disk of radius `rho` around the origin, traced as
    /// `Gamma(t + rho) - Gamma(t)` over the boundary parametrization.
    pub fn arc_disk(&self, rho: f64) -> Result<ArcDisk> {
        let l = self.perimeter;
        let eps = self.tol.eps_geom;
        if !(rho >= -eps && rho <= l / 2.0 + eps) {
            return Err(GeomError::InvalidInput(format!(
                "radius {rho} outside [0, {}]",
                l / 2.0
            )));
        }
        let rho = rho.clamp(0.0, l / 2.0);
        let mut taus: Vec<f64> = Vec::with_capacity(2 * self.cumulative.len());
        for &s in &self.cumulative {
            taus.push(s);
            taus.push((s - rho).rem_euclid(l));
        }
        taus.sort_by(f64::total_cmp);
        taus.dedup_by(|a, b| (*a - *b).abs() <= eps);
        let curve: Vec<Point> = taus
            .iter()
            .map(|&t| &self.point_at(t + rho) - &self.point_at(t))
            .collect();
        let polygon = ConvexBody::hull(&curve, &self.tol)?;
        if polygon.is_full_dimensional() {
            let hs = polygon.halfspaces();
            let scale = curve.iter().fold(1.0_f64, |a, w| a.max(w.norm()));
            for w in &curve {
                let on_boundary = hs
                    .iter()
                    .any(|h| h.slack_violation(w) >= -1e3 * eps * scale);
                if !on_boundary {
                    return Err(GeomError::Validation(
                        "arc-distance disk boundary is not in convex position".into(),
                    ));
                }
            }
        }
        Ok(ArcDisk { rho, polygon })
    }

    pub fn triangle_report(&self, x: &Point, y: &Point, z: &Point) -> Result<TriangleReport> {
        let none = TriangleReport {
            case: TriangleCase::NoArc,
            lhs: f64::NAN,
            rhs: f64::NAN,
        };
        let (Some(xy), Some(yz), Some(xz)) = (
            self.arc_distance(x, y),
            self.arc_distance(y, z),
            self.arc_distance(x, z),
        ) else {
            return Ok(none);
        };
        let sp = spindle(&self.body, x, z, &self.tol)?;
        let eps = self.tol.eps_geom * 10.0;
        let case = match &sp.region {
            Region::Body(b) => {
                let worst = b
                    .halfspaces()
                    .iter()
                    .map(|h| h.normalized().slack_violation(y))
                    .fold(f64::NEG_INFINITY, f64::max);
                if worst > eps {
                    TriangleCase::Exterior
                } else if worst >= -eps || !b.is_full_dimensional() {
                    TriangleCase::Boundary
                } else {
                    TriangleCase::Interior
                }
            }
            _ => return Ok(none),
        };
        Ok(TriangleReport {
            case,
            lhs: xy.value + yz.value,
            rhs: xz.value,
        })
    }
}

fn gauge(hs: &[crate::geometry::Halfspace], v: &Point) -> f64 {
    hs.iter()
        .map(|h| h.normal.dot(v) / h.offset)
        .fold(0.0, f64::max)
}

fn segment_intersections(a: &Point, b: &Point, c: &Point, d: &Point, eps: f64) -> Vec<Point> {
    let r = b - a;
    let s = d - c;
    let denom = cross(&r, &s);
    let ac = c - a;
    let (rl, sl) = (r.norm(), s.norm());
    if denom.abs() <= eps * rl * sl {
        if cross(&ac, &r).abs() > eps * rl {
            return Vec::new();
        }
        let r2 = r.dot(&r);
        let t0 = ac.dot(&r) / r2;
        let t1 = (d - a).dot(&r) / r2;
        let lo = t0.min(t1).max(0.0);
        let hi = t0.max(t1).min(1.0);
        if lo > hi + eps / rl {
            return Vec::new();
        }
        let hi = hi.max(lo);
        return vec![a.lerp(b, lo), a.lerp(b, hi)];
    }
    let t = cross(&ac, &s) / denom;
    let u = cross(&ac, &r) / denom;
    let (dt, du) = (eps / rl, eps / sl);
    if t < -dt || t > 1.0 + dt || u < -du || u > 1.0 + du {
        return Vec::new();
    }
    vec![a.lerp(b, t.clamp(0.0, 1.0))]
}

/// Free-function forms of the [`SymmetricPolygon`] methods.
pub fn c_length_polyline(c: &SymmetricPolygon, pts: &[Point]) -> f64 {
    c.c_length_polyline(pts)
}

pub fn perim_c(c: &SymmetricPolygon, d: &ConvexBody) -> Result<f64> {
    c.perim_c(d)
}

pub fn arc_distance(c: &SymmetricPolygon, p: &Point, q: &Point) -> Option<f64> {
    c.arc_distance(p, q).map(|a| a.value)
}

pub fn arc_disk(c: &SymmetricPolygon, rho: f64) -> Result<ArcDisk> {
    c.arc_disk(rho)
}

pub fn triangle_report(
    c: &SymmetricPolygon,
    x: &Point,
    y: &Point,
    z: &Point,
) -> Result<TriangleReport> {
    c.triangle_report(x, y, z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{cube, hexagon_symmetral};

    fn linf() -> SymmetricPolygon {
        SymmetricPolygon::new(cube(2, 1.0).unwrap(), &Tolerance::default()).unwrap()
    }

    #[test]
    fn lengths_and_perimeters() {
        let c = linf();
        let pts = [[0.0, 0.0], [0.0, 1.0], [1.0, 1.0]].map(Point::from);
        assert!((c.c_length_polyline(&pts) - 2.0).abs() < 1e-12);
        assert!((c.perimeter() - 8.0).abs() < 1e-12);
        let h = SymmetricPolygon::new(hexagon_symmetral().unwrap(), &Tolerance::default()).unwrap();
        assert!((h.perimeter() - 6.0).abs() < 1e-12);
    }

    #[test]
    fn linf_arc_distances() {
        let c = linf();
        let o = Point::origin(2);
        assert_eq!(arc_distance(&c, &o, &o), Some(0.0));
        assert!((arc_distance(&c, &o, &Point::from([1.0, 1.0])).unwrap() - 2.0).abs() < 1e-9);
        assert!((arc_distance(&c, &o, &Point::from([2.0, 2.0])).unwrap() - 4.0).abs() < 1e-9);
        assert!((arc_distance(&c, &o, &Point::from([0.5, 0.0])).unwrap() - 0.5).abs() < 1e-9);
        assert_eq!(arc_distance(&c, &o, &Point::from([2.5, 0.0])), None);
    }

    #[test]
    fn linf_disks() {
        let c = linf();
        let d = c.arc_disk(1.0).unwrap();
        assert_eq!(d.vertex_count(), 4);
        let d = c.arc_disk(3.0).unwrap();
        assert_eq!(d.vertex_count(), 8);
        for v in d.polygon.vertices() {
            assert!((v[0].abs() + v[1].abs() - 3.0).abs() < 1e-9);
            assert!(v[0].abs() <= 2.0 + 1e-9 && v[1].abs() <= 2.0 + 1e-9);
        }
        let d = c.arc_disk(0.0).unwrap();
        assert_eq!(d.vertex_count(), 1);
        assert!(c.arc_disk(4.5).is_err());
    }

    #[test]
    fn triangle_on_spindle_boundary() {
        let c = linf();
        let x = Point::from([0.0, 0.0]);
        let z = Point::from([1.0, 1.0]);
        let r = c.triangle_report(&x, &Point::from([1.0, 0.0]), &z).unwrap();
        assert_eq!(r.case, TriangleCase::Boundary);
        assert!((r.lhs - r.rhs).abs() < 1e-9);
        let r = c.triangle_report(&x, &x, &z).unwrap();
        assert!((r.lhs - r.rhs).abs() < 1e-12);
    }
}
