use serde::{Deserialize, Serialize};

use super::point::Point;

/// An affine subspace `origin + span(basis)` with an orthonormal basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AffineHull {
    pub origin: Point,
    pub basis: Vec<Point>,
}

impl AffineHull {
    /// Affine hull of a nonempty point list; directions shorter than `eps` are
    /// treated as zero.
    pub fn of_points(points: &[Point], eps: f64) -> AffineHull {
        let origin = points[0].clone();
        let dim = origin.dim();
        let mut basis: Vec<Point> = Vec::new();
        while basis.len() < dim {
            let mut best: Option<(f64, Point)> = None;
            for p in points {
                let r = residual(&(p - &origin), &basis);
                let n = r.norm();
                if best.as_ref().map_or(true, |(b, _)| n > *b) {
                    best = Some((n, r));
                }
            }
            match best {
                Some((n, r)) if n > eps => {
                    // Re-orthogonalize once for stability.
                    let r = residual(&r, &basis);
                    let n2 = r.norm();
                    basis.push(r.scale(1.0 / n2.max(n * 1e-3)));
                }
                _ => break,
            }
        }
        AffineHull { origin, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.origin.dim()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Coordinates of `p - origin` in the basis.
    pub fn project(&self, p: &Point) -> Vec<f64> {
        let d = p - &self.origin;
        self.basis.iter().map(|b| b.dot(&d)).collect()
    }

    pub fn lift(&self, y: &[f64]) -> Point {
        let mut x = self.origin.clone().into_coords();
        for (b, yi) in self.basis.iter().zip(y) {
            for (xj, bj) in x.iter_mut().zip(b.coords()) {
                *xj += yi * bj;
            }
        }
        Point::new(x)
    }

    /// Ambient vector `sum_i t_i basis_i`.
    pub fn lift_direction(&self, t: &[f64]) -> Point {
        let mut x = vec![0.0; self.ambient_dim()];
        for (b, ti) in self.basis.iter().zip(t) {
            for (xj, bj) in x.iter_mut().zip(b.coords()) {
                *xj += ti * bj;
            }
        }
        Point::new(x)
    }

    /// Orthonormal basis of the orthogonal complement of the direction space.
    pub fn complement(&self) -> Vec<Point> {
        let dim = self.ambient_dim();
        let mut all = self.basis.clone();
        let mut out = Vec::new();
        for j in 0..dim {
            let r = residual(&Point::unit(dim, j), &all);
            let n = r.norm();
            if n > 1e-6 {
                let r = residual(&r, &all).scale(1.0 / n);
                let r = r.scale(1.0 / r.norm());
                all.push(r.clone());
                out.push(r);
            }
            if all.len() == dim {
                break;
            }
        }
        out
    }

    /// Euclidean distance from `p` to the subspace.
    pub fn distance(&self, p: &Point) -> f64 {
        residual(&(p - &self.origin), &self.basis).norm()
    }
}

fn residual(v: &Point, basis: &[Point]) -> Point {
    let mut r = v.clone();
    for b in basis {
        let c = b.dot(&r);
        r = &r - &b.scale(c);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_in_space() {
        let pts = vec![
            Point::from([0.0, 0.0, 1.0]),
            Point::from([1.0, 0.0, 1.0]),
            Point::from([0.0, 2.0, 1.0]),
            Point::from([1.0, 2.0, 1.0]),
        ];
        let a = AffineHull::of_points(&pts, 1e-9);
        assert_eq!(a.dim(), 2);
        let c = a.complement();
        assert_eq!(c.len(), 1);
        assert!((c[0][2].abs() - 1.0).abs() < 1e-12);
        for p in &pts {
            assert!(a.lift(&a.project(p)).approx_eq(p, 1e-12));
        }
        assert!((a.distance(&Point::from([5.0, 5.0, 3.0])) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn single_point() {
        let a = AffineHull::of_points(&[Point::from([1.0, 2.0])], 1e-9);
        assert_eq!(a.dim(), 0);
        assert_eq!(a.complement().len(), 2);
    }
}
