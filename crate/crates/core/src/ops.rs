//! Intersections of translates: `B+`, `B-`, ball hulls, spindles and spindle
//! hulls.

use crate::error::{check_dim, GeomError, Result};
use crate::geometry::{
    c_distance, dedup_points, hausdorff_distance, lp_solve, ConvexBody, Halfspace, LpOutcome,
    Point, PointSet, Region,
};
use crate::tolerance::Tolerance;

fn check_radius(r: f64) -> Result<()> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(GeomError::InvalidInput(format!(
            "radius must be positive, got {r}"
        )));
    }
    Ok(())
}

/// Halfspaces of `B+(X, r)`, the intersection of the translates `rC + v`.
/// `None` stands for an empty `X`, i.e. the whole space.
pub fn b_plus_halfspaces(c: &ConvexBody, x: &[Point], r: f64) -> Result<Option<Vec<Halfspace>>> {
    check_radius(r)?;
    if x.is_empty() {
        return Ok(None);
    }
    for p in x {
        check_dim(c.dim(), p.dim())?;
    }
    Ok(Some(
        c.halfspaces()
            .iter()
            .map(|h| {
                let m = x
                    .iter()
                    .map(|v| h.normal.dot(v))
                    .fold(f64::INFINITY, f64::min);
                Halfspace {
                    normal: h.normal.clone(),
                    offset: r * h.offset + m,
                }
            })
            .collect(),
    ))
}

/// Halfspaces of `B-(X, r)`, the intersection of the translates `-rC + v`.
pub fn b_minus_halfspaces(c: &ConvexBody, x: &[Point], r: f64) -> Result<Option<Vec<Halfspace>>> {
    check_radius(r)?;
    if x.is_empty() {
        return Ok(None);
    }
    for p in x {
        check_dim(c.dim(), p.dim())?;
    }
    Ok(Some(
        c.halfspaces()
            .iter()
            .map(|h| {
                let m = x
                    .iter()
                    .map(|v| h.normal.dot(v))
                    .fold(f64::NEG_INFINITY, f64::max);
                Halfspace {
                    normal: -&h.normal,
                    offset: r * h.offset - m,
                }
            })
            .collect(),
    ))
}

fn to_region(hs: Option<Vec<Halfspace>>, tol: &Tolerance) -> Result<Region> {
    match hs {
        None => Ok(Region::Universe),
        Some(hs) => Region::from_halfspaces(&hs, tol),
    }
}

pub fn b_plus(c: &ConvexBody, x: &PointSet, r: f64, tol: &Tolerance) -> Result<Region> {
    check_dim(c.dim(), x.dim())?;
    let pts = dedup_points(x.points(), tol.eps_geom);
    to_region(b_plus_halfspaces(c, &pts, r)?, tol)
}

pub fn b_minus(c: &ConvexBody, x: &PointSet, r: f64, tol: &Tolerance) -> Result<Region> {
    check_dim(c.dim(), x.dim())?;
    let pts = dedup_points(x.points(), tol.eps_geom);
    to_region(b_minus_halfspaces(c, &pts, r)?, tol)
}

/// Outcome of [`ball_hull_halfspaces`].
#[derive(Debug, Clone, PartialEq)]
pub enum HullHalfspaces {
    /// No translate of `C` contains the set.
    Universe,
    /// The set was empty.
    Empty,
    Halfspaces(Vec<Halfspace>),
}

/// H-representation of the ball hull `B+(B-(A))`: facet `i` of `C` contributes
/// `n_i · x <= b_i + min_{q in B-(A)} n_i · q`. Works in any dimension.
pub fn ball_hull_halfspaces(
    c: &ConvexBody,
    a: &[Point],
    tol: &Tolerance,
) -> Result<HullHalfspaces> {
    let q = match b_minus_halfspaces(c, a, 1.0)? {
        None => return Ok(HullHalfspaces::Empty),
        Some(q) => q,
    };
    let mut out = Vec::with_capacity(c.halfspaces().len());
    for h in c.halfspaces() {
        match lp_solve(h.normal.coords(), &q, tol)? {
            LpOutcome::Optimal { value, .. } => out.push(Halfspace {
                normal: h.normal.clone(),
                offset: h.offset + value,
            }),
            LpOutcome::Infeasible => return Ok(HullHalfspaces::Universe),
            LpOutcome::Unbounded => {
                return Err(GeomError::Lp(
                    "translate set of a bounded body is unbounded".into(),
                ))
            }
        }
    }
    Ok(HullHalfspaces::Halfspaces(out))
}

/// The C-ball convex hull: the intersection of all translates of `C` that
/// contain `A`, or the whole space if there are none.
pub fn ball_hull(c: &ConvexBody, a: &PointSet, tol: &Tolerance) -> Result<Region> {
    check_dim(c.dim(), a.dim())?;
    let pts = dedup_points(a.points(), tol.eps_geom);
    match ball_hull_halfspaces(c, &pts, tol)? {
        HullHalfspaces::Universe => Ok(Region::Universe),
        HullHalfspaces::Empty => Ok(Region::Empty),
        HullHalfspaces::Halfspaces(hs) => Region::from_halfspaces(&hs, tol),
    }
}

/// A C-spindle with a flag for C-distances within `eps_geom` of two, where
/// the answer is numerically fragile.
#[derive(Debug, Clone, PartialEq)]
pub struct Spindle {
    pub region: Region,
    pub c_distance: f64,
    pub near_critical: bool,
}

pub fn spindle(c: &ConvexBody, p: &Point, q: &Point, tol: &Tolerance) -> Result<Spindle> {
    let d = c_distance(c, p, q, tol)?;
    let set = PointSet::new(c.dim(), vec![p.clone(), q.clone()])?;
    let region = ball_hull(c, &set, tol)?;
    Ok(Spindle {
        region,
        c_distance: d,
        near_critical: (d - 2.0).abs() <= tol.eps_geom * d.max(1.0),
    })
}

/// Shortcut used by [`spindle_hull`] when the spindle hull is known to equal the
/// ball hull.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FastPath {
    Box,
    Simplex,
    Product,
    Planar,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpindleHull {
    pub inner: Region,
    /// Hausdorff distance from `inner` to the ball hull.
    pub gap: f64,
    pub iterations: usize,
    pub fast_path: Option<FastPath>,
}

/// Detects bodies whose spindle hulls coincide with their ball hulls.
pub fn fast_path(c: &ConvexBody, tol: &Tolerance) -> Option<FastPath> {
    let dim = c.dim();
    if dim <= 2 {
        return Some(FastPath::Planar);
    }
    let hs = c.halfspaces();
    let axis = |h: &Halfspace| -> Option<usize> {
        let n = h.normal.norm();
        (0..dim).find(|&j| (h.normal[j].abs() - n).abs() <= tol.eps_geom * n)
    };
    if hs.len() == 2 * dim && hs.iter().all(|h| axis(h).is_some()) {
        return Some(FastPath::Box);
    }
    if hs.len() == dim + 1 {
        return Some(FastPath::Simplex);
    }
    // A prism over a polygon: two facets along one axis, all others orthogonal
    // to it.
    for j in 0..dim {
        let along = hs.iter().filter(|h| axis(h) == Some(j)).count();
        let ortho = hs
            .iter()
            .filter(|h| h.normal[j].abs() <= tol.eps_geom * h.normal.norm())
            .count();
        if along == 2 && along + ortho == hs.len() {
            return Some(FastPath::Product);
        }
    }
    None
}

/// Spindle convex hull of `A`. Uses the ball hull directly when a fast path
/// applies, otherwise runs [`spindle_hull_iterate`].
pub fn spindle_hull(
    c: &ConvexBody,
    a: &PointSet,
    max_iter: usize,
    tol: &Tolerance,
) -> Result<SpindleHull> {
    check_dim(c.dim(), a.dim())?;
    if let Some(fp) = fast_path(c, tol) {
        let inner = ball_hull(c, a, tol)?;
        return Ok(SpindleHull {
            inner,
            gap: 0.0,
            iterations: 0,
            fast_path: Some(fp),
        });
    }
    spindle_hull_iterate(c, a, max_iter, tol)
}

/// Fixpoint iteration: repeatedly add the vertices of the spindles of all
/// pairs of current generators, keeping only extreme points. Returns the
/// hull of the final generators and its distance to the ball hull.
pub fn spindle_hull_iterate(
    c: &ConvexBody,
    a: &PointSet,
    max_iter: usize,
    tol: &Tolerance,
) -> Result<SpindleHull> {
    check_dim(c.dim(), a.dim())?;
    let mut gens = dedup_points(a.points(), tol.eps_geom);
    if gens.is_empty() {
        return Ok(SpindleHull {
            inner: Region::Empty,
            gap: 0.0,
            iterations: 0,
            fast_path: None,
        });
    }
    let mut hull = ConvexBody::hull(&gens, tol)?;
    gens = hull.vertices().to_vec();
    // Generators whose pairs have already been processed.
    let mut done: Vec<Point> = Vec::new();
    let mut iterations = 0;
    while iterations < max_iter {
        iterations += 1;
        let mut pts = gens.clone();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let old = |p: &Point| done.iter().any(|d| d.approx_eq(p, tol.eps_geom));
                if old(&gens[i]) && old(&gens[j]) {
                    continue;
                }
                let s = ball_hull(
                    c,
                    &PointSet::new(c.dim(), vec![gens[i].clone(), gens[j].clone()])?,
                    tol,
                )?;
                match s {
                    Region::Universe => {
                        return Ok(SpindleHull {
                            inner: Region::Universe,
                            gap: 0.0,
                            iterations,
                            fast_path: None,
                        })
                    }
                    Region::Body(b) => pts.extend(b.vertices().iter().cloned()),
                    Region::Empty => {}
                }
            }
        }
        done = gens.clone();
        let next = ConvexBody::hull(&pts, tol)?;
        let moved = hausdorff_distance(&next, &hull)?;
        hull = next;
        gens = hull.vertices().to_vec();
        if moved <= tol.eps_set {
            break;
        }
    }
    let gap = match ball_hull(c, a, tol)? {
        Region::Body(b) => hausdorff_distance(&hull, &b)?,
        _ => f64::INFINITY,
    };
    Ok(SpindleHull {
        inner: Region::Body(hull),
        gap,
        iterations,
        fast_path: None,
    })
}

/// Whether `K` equals its own C-ball hull. A body too large to fit in any
/// translate of `C` is not C-ball convex.
pub fn is_ball_convex(c: &ConvexBody, k: &ConvexBody, tol: &Tolerance) -> Result<bool> {
    check_dim(c.dim(), k.dim())?;
    let set = PointSet::new(k.dim(), k.vertices().to_vec())?;
    match ball_hull(c, &set, tol)? {
        Region::Body(b) => Ok(hausdorff_distance(&b, k)? <= tol.eps_set),
        _ => Ok(false),
    }
}
