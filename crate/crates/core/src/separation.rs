//! Separation by translates of `C`: from points, from hyperplanes and, in the
//! plane, from other sets.

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, GeomError, Result};
use crate::geometry::{lp_min, lp_solve, ConvexBody, Halfspace, LpOutcome, Point};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeparationKind {
    Point,
    Hyperplane,
    Set,
}

/// A translate `C + translate` that separates one set from another.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeparationCertificate {
    pub translate: Point,
    pub strict: bool,
    pub kind: SeparationKind,
}

/// Which closed side of the hyperplane `normal · x = offset` holds `K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `normal · x <= offset`.
    Below,
    /// `normal · x >= offset`.
    Above,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HyperplaneQuery {
    pub normal: Point,
    pub offset: f64,
    pub side: Side,
}

impl HyperplaneQuery {
    /// The same hyperplane written so that `K` lies below it, with unit normal.
    fn oriented(&self) -> (Point, f64) {
        let n = self.normal.norm();
        let (u, c) = (self.normal.scale(1.0 / n), self.offset / n);
        match self.side {
            Side::Below => (u, c),
            Side::Above => (-u, -c),
        }
    }
}

fn unit_halfspaces(c: &ConvexBody) -> Vec<Halfspace> {
    c.halfspaces().iter().map(Halfspace::normalized).collect()
}

/// Whether `C + x` separates `conv X` from `conv Y` (strictly if asked):
/// `X ⊆ C + x` and no point of `conv Y` lies in the interior of `C + x`
/// (for strict separation, `X` in the interior and `conv Y` disjoint from
/// `C + x`). An empty `Y` imposes no condition.
pub fn verify_separation(
    c: &ConvexBody,
    x: &Point,
    xs: &[Point],
    ys: &[Point],
    strict: bool,
    tol: &Tolerance,
) -> Result<bool> {
    check_dim(c.dim(), x.dim())?;
    let hs = unit_halfspaces(c);
    let eps = tol.eps_geom;
    for v in xs {
        check_dim(c.dim(), v.dim())?;
        let d = v - x;
        for h in &hs {
            let s = h.slack_violation(&d);
            if (strict && s >= -eps) || s > eps {
                return Ok(false);
            }
        }
    }
    if ys.is_empty() {
        return Ok(true);
    }
    let depth = max_depth(&hs, x, ys, tol)?;
    Ok(if strict { depth < -eps } else { depth <= eps })
}

/// `max_{y in conv Y} min_i (b_i - n_i · (y - x))`: positive exactly when
/// `conv Y` meets the interior of `C + x`.
fn max_depth(hs: &[Halfspace], x: &Point, ys: &[Point], tol: &Tolerance) -> Result<f64> {
    let m = ys.len();
    // Variables: convex weights (m of them) then t.
    let mut cons = Vec::new();
    for h in hs {
        let mut row: Vec<f64> = ys.iter().map(|y| h.normal.dot(y)).collect();
        row.push(1.0);
        cons.push(Halfspace {
            normal: Point::new(row),
            offset: h.offset + h.normal.dot(x),
        });
    }
    for j in 0..m {
        let mut row = vec![0.0; m + 1];
        row[j] = -1.0;
        cons.push(Halfspace {
            normal: Point::new(row),
            offset: 0.0,
        });
    }
    let mut ones = vec![1.0; m];
    ones.push(0.0);
    cons.push(Halfspace {
        normal: Point::new(ones.clone()),
        offset: 1.0,
    });
    cons.push(Halfspace {
        normal: -Point::new(ones),
        offset: -1.0,
    });
    let mut obj = vec![0.0; m + 1];
    obj[m] = -1.0;
    match lp_solve(&obj, &cons, tol)? {
        LpOutcome::Optimal { value, .. } => Ok(-value),
        _ => Err(GeomError::Lp("depth program has no optimum".into())),
    }
}

/// Constraints `K ⊆ C + x` on the translate `x`.
fn containment(hs: &[Halfspace], k: &ConvexBody) -> Result<Vec<Halfspace>> {
    hs.iter()
        .map(|h| {
            Ok(Halfspace {
                normal: -&h.normal,
                offset: h.offset - k.support(&h.normal)?,
            })
        })
        .collect()
}

fn feasible_translate(cons: &[Halfspace], dim: usize, tol: &Tolerance) -> Result<Option<Point>> {
    match lp_min(&Point::origin(dim), cons, tol)? {
        LpOutcome::Optimal { point, .. } => Ok(Some(point)),
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded => Err(GeomError::Lp("feasibility program unbounded".into())),
    }
}

/// A translate of `C` containing `K` whose interior misses `p`. Facets of `C`
/// are tried in stored order; `None` means no translate separates.
pub fn separate_from_point(
    c: &ConvexBody,
    k: &ConvexBody,
    p: &Point,
    tol: &Tolerance,
) -> Result<Option<SeparationCertificate>> {
    check_dim(c.dim(), k.dim())?;
    check_dim(c.dim(), p.dim())?;
    if k.contains(p, tol.eps_geom) {
        return Err(GeomError::Precondition("the point lies in K".into()));
    }
    let hs = unit_halfspaces(c);
    let base = containment(&hs, k)?;
    for h in &hs {
        let mut cons = base.clone();
        cons.push(Halfspace {
            normal: h.normal.clone(),
            offset: h.normal.dot(p) - h.offset,
        });
        if let Some(x) = feasible_translate(&cons, c.dim(), tol)? {
            return Ok(Some(SeparationCertificate {
                translate: x,
                strict: false,
                kind: SeparationKind::Point,
            }));
        }
    }
    Ok(None)
}

/// Whether `C + x` contains `K` and lies on `K`'s closed side of the hyperplane.
pub fn verify_hyperplane_separation(
    c: &ConvexBody,
    x: &Point,
    k: &ConvexBody,
    hq: &HyperplaneQuery,
    tol: &Tolerance,
) -> Result<bool> {
    let (u, off) = hq.oriented();
    let inside = verify_separation(c, x, k.vertices(), &[], false, tol)?;
    Ok(inside && c.support(&u)? + u.dot(x) <= off + tol.eps_geom)
}

/// A translate of `C` containing `K` whose interior misses the hyperplane.
pub fn separate_from_hyperplane(
    c: &ConvexBody,
    k: &ConvexBody,
    hq: &HyperplaneQuery,
    tol: &Tolerance,
) -> Result<Option<SeparationCertificate>> {
    check_dim(c.dim(), k.dim())?;
    check_dim(c.dim(), hq.normal.dim())?;
    if hq.normal.norm() <= tol.eps_geom {
        return Err(GeomError::InvalidInput("zero hyperplane normal".into()));
    }
    let (u, off) = hq.oriented();
    if k.support(&u)? > off + tol.eps_geom {
        return Err(GeomError::Precondition(
            "the hyperplane cuts the interior of K".into(),
        ));
    }
    let hs = unit_halfspaces(c);
    let mut cons = containment(&hs, k)?;
    cons.push(Halfspace {
        normal: u.clone(),
        offset: off - c.support(&u)?,
    });
    Ok(
        feasible_translate(&cons, c.dim(), tol)?.map(|x| SeparationCertificate {
            translate: x,
            strict: false,
            kind: SeparationKind::Hyperplane,
        }),
    )
}

/// Depth of the deepest common point of two bodies: positive when their
/// interiors meet.
fn overlap_depth(a: &ConvexBody, b: &ConvexBody, tol: &Tolerance) -> Result<f64> {
    let dim = a.dim();
    let mut cons = Vec::new();
    for h in a.halfspaces().iter().chain(b.halfspaces()) {
        let h = h.normalized();
        let mut row = h.normal.into_coords();
        row.push(1.0);
        cons.push(Halfspace {
            normal: Point::new(row),
            offset: h.offset,
        });
    }
    let mut cap = vec![0.0; dim];
    cap.push(1.0);
    cons.push(Halfspace {
        normal: Point::new(cap),
        offset: 1.0,
    });
    let mut obj = vec![0.0; dim];
    obj.push(-1.0);
    match lp_solve(&obj, &cons, tol)? {
        LpOutcome::Optimal { value, .. } => Ok(-value),
        _ => Ok(f64::NEG_INFINITY),
    }
}

/// A translate of `C` separating `K` from a planar body `K2` with which it
/// shares no interior point.
///
/// Candidate directions are the edge normals of `C`, `K` and `K2` with both
/// signs. When some translate `C + x` separates, `C + x` and `K2` have disjoint
/// interiors, so an edge normal of one of them separates the two, and for a
/// fixed direction the line through the nearest point of `K2` is the least
/// restrictive choice. The search is therefore complete.
pub fn separate_sets_2d(
    c: &ConvexBody,
    k: &ConvexBody,
    k2: &ConvexBody,
    tol: &Tolerance,
) -> Result<Option<SeparationCertificate>> {
    if c.dim() != 2 {
        return Err(GeomError::UnsupportedDimension(c.dim()));
    }
    check_dim(2, k.dim())?;
    check_dim(2, k2.dim())?;
    if overlap_depth(k, k2, tol)? > tol.eps_geom {
        return Err(GeomError::Precondition("the two sets overlap".into()));
    }
    let hs = unit_halfspaces(c);
    let base = containment(&hs, k)?;
    let mut dirs: Vec<Point> = Vec::new();
    for body in [c, k, k2] {
        for h in body.halfspaces() {
            let u = h.normalized().normal;
            for d in [u.clone(), -u] {
                if !dirs.iter().any(|e| e.approx_eq(&d, 1e-12)) {
                    dirs.push(d);
                }
            }
        }
    }
    for u in dirs {
        let line = k2.min_dot(&u);
        if k.support(&u)? > line + tol.eps_geom {
            continue;
        }
        let mut cons = base.clone();
        cons.push(Halfspace {
            normal: u.clone(),
            offset: line - c.support(&u)?,
        });
        if let Some(x) = feasible_translate(&cons, 2, tol)? {
            if verify_separation(c, &x, k.vertices(), k2.vertices(), false, tol)? {
                return Ok(Some(SeparationCertificate {
                    translate: x,
                    strict: false,
                    kind: SeparationKind::Set,
                }));
            }
        }
    }
    Ok(None)
}
