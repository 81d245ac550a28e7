use std::ops::{Add, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, GeomError, Result};

/// A point (or vector) in R^n with double precision coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<f64>);

impl Point {
    /// Builds a point, panicking on non-finite coordinates or zero dimension.
    pub fn new(coords: Vec<f64>) -> Self {
        Self::try_new(coords).expect("invalid point")
    }

    pub fn try_new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(GeomError::InvalidInput("point of dimension zero".into()));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(GeomError::InvalidInput("non-finite coordinate".into()));
        }
        Ok(Point(coords))
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![0.0; dim])
    }

    /// The `i`-th standard basis vector.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut c = vec![0.0; dim];
        c[i] = 1.0;
        Point(c)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    pub fn dot(&self, other: &Point) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_slice(&self, other: &[f64]) -> f64 {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dist(&self, other: &Point) -> f64 {
        (self - other).norm()
    }

    pub fn scale(&self, s: f64) -> Point {
        Point(self.0.iter().map(|c| c * s).collect())
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &Point, t: f64) -> Point {
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + t * (b - a))
                .collect(),
        )
    }

    pub fn is_zero(&self, eps: f64) -> bool {
        self.0.iter().all(|c| c.abs() <= eps)
    }

    pub fn approx_eq(&self, other: &Point, eps: f64) -> bool {
        self.dim() == other.dim() && self.dist(other) <= eps
    }

    /// Lexicographic comparison; coordinates are finite so this is total.
    pub fn lex_cmp(&self, other: &Point) -> std::cmp::Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.total_cmp(b) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.dim().cmp(&other.dim())
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        check_dim(dim, self.dim())
    }

    pub fn centroid(points: &[Point]) -> Point {
        assert!(!points.is_empty(), "centroid of no points");
        let d = points[0].dim();
        let mut c = vec![0.0; d];
        for p in points {
            for (ci, pi) in c.iter_mut().zip(&p.0) {
                *ci += pi;
            }
        }
        let n = points.len() as f64;
        Point(c.into_iter().map(|x| x / n).collect())
    }
}

impl From<Vec<f64>> for Point {
    fn from(v: Vec<f64>) -> Self {
        Point::new(v)
    }
}

impl<const N: usize> From<[f64; N]> for Point {
    fn from(v: [f64; N]) -> Self {
        Point::new(v.to_vec())
    }
}

impl Index<usize> for Point {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add<&Point> for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        debug_assert_eq!(self.dim(), rhs.dim());
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Point> for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        debug_assert_eq!(self.dim(), rhs.dim());
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        &self + &rhs
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        &self - &rhs
    }
}

impl Mul<f64> for &Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        self.scale(s)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        self.scale(s)
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        self.scale(-1.0)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        self.scale(-1.0)
    }
}

/// A finite list of points sharing one dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        if dim == 0 {
            return Err(GeomError::InvalidInput("dimension zero".into()));
        }
        for p in &points {
            p.check_dim(dim)?;
        }
        Ok(PointSet { dim, points })
    }

    /// Infers the dimension from the first point; fails on an empty list.
    pub fn from_points(points: Vec<Point>) -> Result<Self> {
        let dim = points
            .first()
            .map(Point::dim)
            .ok_or_else(|| GeomError::InvalidInput("empty point list".into()))?;
        Self::new(dim, points)
    }

    pub fn empty(dim: usize) -> Self {
        PointSet {
            dim,
            points: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn push(&mut self, p: Point) -> Result<()> {
        p.check_dim(self.dim)?;
        self.points.push(p);
        Ok(())
    }

    /// The points with indices in `idx`, in that order.
    pub fn subset(&self, idx: &[usize]) -> PointSet {
        PointSet {
            dim: self.dim,
            points: idx.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    /// Removes points within `eps` of an earlier point.
    pub fn dedup(&self, eps: f64) -> PointSet {
        PointSet {
            dim: self.dim,
            points: dedup_points(&self.points, eps),
        }
    }

    pub fn translate(&self, v: &Point) -> PointSet {
        PointSet {
            dim: self.dim,
            points: self.points.iter().map(|p| p + v).collect(),
        }
    }
}

pub(crate) fn dedup_points(points: &[Point], eps: f64) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(points.len());
    for p in points {
        if !out.iter().any(|q| q.approx_eq(p, eps)) {
            out.push(p.clone());
        }
    }
    out
}
