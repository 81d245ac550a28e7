use super::body::ConvexBody;
use super::halfspace::Halfspace;
use super::point::{Point, PointSet};
use crate::error::{check_dim, GeomError, Result};
use crate::tolerance::Tolerance;

/// Minkowski sum of two planar bodies by merging edge sequences.
pub fn minkowski_sum_2d(a: &ConvexBody, b: &ConvexBody, tol: &Tolerance) -> Result<ConvexBody> {
    if a.dim() != 2 {
        return Err(GeomError::UnsupportedDimension(a.dim()));
    }
    check_dim(2, b.dim())?;
    if !a.is_full_dimensional() || !b.is_full_dimensional() {
        let pts: Vec<Point> = a
            .vertices()
            .iter()
            .flat_map(|p| b.vertices().iter().map(move |q| p + q))
            .collect();
        return ConvexBody::hull(&pts, tol);
    }
    let p = rotate_to_bottom(a.vertices());
    let q = rotate_to_bottom(b.vertices());
    let (n, m) = (p.len(), q.len());
    let mut out = Vec::with_capacity(n + m);
    let (mut i, mut j) = (0, 0);
    while i < n || j < m {
        out.push(&p[i % n] + &q[j % m]);
        if i == n {
            j += 1;
        } else if j == m {
            i += 1;
        } else {
            let e = &p[(i + 1) % n] - &p[i];
            let f = &q[(j + 1) % m] - &q[j];
            let cross = e[0] * f[1] - e[1] * f[0];
            if cross >= 0.0 {
                i += 1;
            }
            if cross <= 0.0 {
                j += 1;
            }
        }
    }
    ConvexBody::from_vertices(&out, tol)
}

fn rotate_to_bottom(v: &[Point]) -> Vec<Point> {
    let k = (0..v.len())
        .min_by(|&a, &b| {
            v[a][1]
                .total_cmp(&v[b][1])
                .then(v[a][0].total_cmp(&v[b][0]))
        })
        .unwrap();
    v[k..].iter().chain(v[..k].iter()).cloned().collect()
}

/// The central symmetral `(C - C) / 2`.
pub fn central_symmetral(c: &ConvexBody, tol: &Tolerance) -> Result<ConvexBody> {
    if c.dim() == 2 && c.is_full_dimensional() {
        let neg = c.reflect(tol);
        return Ok(minkowski_sum_2d(c, &neg, tol)?.scale(0.5));
    }
    let v = c.vertices();
    let mut pts = Vec::with_capacity(v.len() * v.len());
    for p in v {
        for q in v {
            pts.push((p - q).scale(0.5));
        }
    }
    ConvexBody::hull(&pts, tol)
}

/// Gauge `min { t >= 0 : v in t B }` of an origin-symmetric body.
pub fn gauge_norm(b: &ConvexBody, v: &Point, tol: &Tolerance) -> Result<f64> {
    check_dim(b.dim(), v.dim())?;
    if !b.is_full_dimensional() || b.halfspaces().iter().any(|h| h.offset <= tol.eps_geom) {
        return Err(GeomError::Precondition(
            "origin is not interior to the unit ball".into(),
        ));
    }
    if !b.is_origin_symmetric(tol.eps_set) {
        return Err(GeomError::Precondition(
            "unit ball is not origin-symmetric".into(),
        ));
    }
    Ok(facet_gauge(b.halfspaces(), v))
}

pub(crate) fn facet_gauge(hs: &[Halfspace], v: &Point) -> f64 {
    hs.iter()
        .map(|h| h.normal.dot(v) / h.offset)
        .fold(0.0, f64::max)
}

/// The relative norm of a body, with unit ball `(C - C) / 2` computed once.
#[derive(Debug, Clone)]
pub struct RelativeNorm {
    symmetral: ConvexBody,
}

impl RelativeNorm {
    pub fn new(c: &ConvexBody, tol: &Tolerance) -> Result<Self> {
        if !c.is_full_dimensional() {
            return Err(GeomError::Degenerate);
        }
        Ok(RelativeNorm {
            symmetral: central_symmetral(c, tol)?,
        })
    }

    /// Uses `b` itself as the unit ball; `b` must be origin-symmetric.
    pub fn from_symmetric(b: &ConvexBody, tol: &Tolerance) -> Result<Self> {
        gauge_norm(b, &Point::origin(b.dim()), tol)?;
        Ok(RelativeNorm {
            symmetral: b.clone(),
        })
    }

    pub fn unit_ball(&self) -> &ConvexBody {
        &self.symmetral
    }

    pub fn norm(&self, v: &Point) -> f64 {
        facet_gauge(self.symmetral.halfspaces(), v)
    }

    pub fn distance(&self, p: &Point, q: &Point) -> f64 {
        self.norm(&(q - p))
    }
}

/// C-distance of two points: the `(C - C)/2` gauge of `q - p`.
pub fn c_distance(c: &ConvexBody, p: &Point, q: &Point, tol: &Tolerance) -> Result<f64> {
    check_dim(c.dim(), p.dim())?;
    check_dim(c.dim(), q.dim())?;
    Ok(RelativeNorm::new(c, tol)?.distance(p, q))
}

/// Diameter of a finite set in C-distance.
pub fn diam_c(c: &ConvexBody, x: &PointSet, tol: &Tolerance) -> Result<f64> {
    if x.is_empty() {
        return Err(GeomError::InvalidInput("diameter of an empty set".into()));
    }
    check_dim(c.dim(), x.dim())?;
    let rn = RelativeNorm::new(c, tol)?;
    let pts = x.points();
    let mut d: f64 = 0.0;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            d = d.max(rn.distance(&pts[i], &pts[j]));
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn body(v: &[[f64; 2]]) -> ConvexBody {
        let pts: Vec<Point> = v.iter().map(|c| Point::from(*c)).collect();
        ConvexBody::from_vertices(&pts, &Tolerance::default()).unwrap()
    }

    fn same_vertices(b: &ConvexBody, expect: &[[f64; 2]]) -> bool {
        b.vertices().len() == expect.len()
            && expect.iter().all(|e| {
                b.vertices()
                    .iter()
                    .any(|v| v.approx_eq(&Point::from(*e), 1e-12))
            })
    }

    #[test]
    fn square_sum_is_doubled() {
        let tol = Tolerance::default();
        let sq = body(&[[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]]);
        let s = minkowski_sum_2d(&sq, &sq, &tol).unwrap();
        assert!(same_vertices(
            &s,
            &[[-2.0, -2.0], [2.0, -2.0], [2.0, 2.0], [-2.0, 2.0]]
        ));
    }

    #[test]
    fn triangle_difference_hexagon() {
        let tol = Tolerance::default();
        let t = body(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        let s = minkowski_sum_2d(&t, &t.reflect(&tol), &tol).unwrap();
        let hex = [
            [1.0, 0.0],
            [-1.0, 0.0],
            [0.0, 1.0],
            [0.0, -1.0],
            [1.0, -1.0],
            [-1.0, 1.0],
        ];
        assert!(same_vertices(&s, &hex));
        let sym = central_symmetral(&t, &tol).unwrap();
        assert!((gauge_norm(&sym, &Point::from([1.0, 0.0]), &tol).unwrap() - 2.0).abs() < 1e-12);
        assert!(
            (c_distance(&t, &Point::from([0.0, 0.0]), &Point::from([1.0, 0.0]), &tol).unwrap()
                - 2.0)
                .abs()
                < 1e-12
        );
    }

    #[test]
    fn sum_with_point_translates() {
        let tol = Tolerance::default();
        let t = body(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        let p = ConvexBody::hull(&[Point::from([2.0, 3.0])], &tol).unwrap();
        let s = minkowski_sum_2d(&t, &p, &tol).unwrap();
        assert!(same_vertices(&s, &[[2.0, 3.0], [3.0, 3.0], [2.0, 4.0]]));
    }

    #[test]
    fn gauge_examples() {
        let tol = Tolerance::default();
        let sq = body(&[[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]]);
        assert_eq!(
            gauge_norm(&sq, &Point::from([2.0, 0.0]), &tol).unwrap(),
            2.0
        );
        assert_eq!(
            gauge_norm(&sq, &Point::from([1.0, 1.0]), &tol).unwrap(),
            1.0
        );
        let t = body(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        assert!(gauge_norm(&t, &Point::from([1.0, 0.0]), &tol).is_err());
        assert_eq!(
            c_distance(
                &sq,
                &Point::from([0.0, 0.0]),
                &Point::from([2.0, 0.0]),
                &tol
            )
            .unwrap(),
            2.0
        );
    }

    #[test]
    fn diameter_needs_points() {
        let tol = Tolerance::default();
        let sq = body(&[[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]]);
        assert!(diam_c(&sq, &PointSet::empty(2), &tol).is_err());
    }
}
