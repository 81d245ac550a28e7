//! Covering numbers of polygons by smaller homothets, the families `D` and
//! `D~`, and numeric probes of the stability of `B+` and of covering numbers.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, GeomError, Result};
use crate::geometry::polygon_area;
use crate::geometry::{
    hausdorff_distance, lp_min, ConvexBody, Halfspace, LpOutcome, Point, PointSet, Region,
};
use crate::ops::b_plus;
use crate::tolerance::Tolerance;

/// First homothety ratio tried when searching for covers.
pub const COVER_RATIO: f64 = 1.0 - 1.0 / 64.0;

/// Ratios `1 - 2^-j` are tried up to this `j` when fewer copies are not ruled
/// out. Beyond it a missed corner would fall below the area slack.
const MAX_RATIO_EXPONENT: i32 = 12;

/// Copies `c + ratio (K - c)` for each center `c`, covering `K`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverCertificate {
    pub ratio: f64,
    pub centers: Vec<Point>,
    pub count: usize,
}

impl CoverCertificate {
    pub fn new(ratio: f64, centers: Vec<Point>) -> Self {
        let count = centers.len();
        CoverCertificate {
            ratio,
            centers,
            count,
        }
    }

    /// Translation vectors `v` with copy `v + ratio K`.
    pub fn translations(&self) -> Vec<Point> {
        self.centers
            .iter()
            .map(|c| c.scale(1.0 - self.ratio))
            .collect()
    }
}

fn area(poly: &[Point]) -> f64 {
    polygon_area(poly).abs()
}

/// Part of the convex polygon `poly` with `n . x <= b`.
fn clip(poly: &[Point], n: &Point, b: f64) -> Vec<Point> {
    let mut out = Vec::with_capacity(poly.len() + 1);
    for i in 0..poly.len() {
        let p = &poly[i];
        let q = &poly[(i + 1) % poly.len()];
        let (sp, sq) = (n.dot(p) - b, n.dot(q) - b);
        if sp <= 0.0 {
            out.push(p.clone());
        }
        if (sp < 0.0 && sq > 0.0) || (sp > 0.0 && sq < 0.0) {
            out.push(p.lerp(q, sp / (sp - sq)));
        }
    }
    out
}

/// `poly` minus the convex polygon with halfspaces `hs`, as convex pieces.
fn subtract(poly: &[Point], hs: &[Halfspace], tiny: f64) -> Vec<Vec<Point>> {
    let mut pieces = Vec::new();
    let mut rest = poly.to_vec();
    for h in hs {
        let outside = clip(&rest, &-&h.normal, -h.offset);
        if outside.len() >= 3 && area(&outside) > tiny {
            pieces.push(outside);
        }
        rest = clip(&rest, &h.normal, h.offset);
        if rest.len() < 3 || area(&rest) <= tiny {
            break;
        }
    }
    pieces
}

/// Area of `K` left uncovered by the given convex polygons, computed by exact
/// convex subtraction.
pub fn uncovered_area(k: &ConvexBody, copies: &[ConvexBody]) -> Result<f64> {
    if k.dim() != 2 {
        return Err(GeomError::UnsupportedDimension(k.dim()));
    }
    let tiny = area(k.vertices()) * 1e-15;
    let mut rest = vec![k.vertices().to_vec()];
    for c in copies {
        check_dim(2, c.dim())?;
        rest = rest
            .iter()
            .flat_map(|p| subtract(p, c.halfspaces(), tiny))
            .collect();
        if rest.is_empty() {
            break;
        }
    }
    Ok(rest.iter().map(|p| area(p)).sum())
}

fn covers(k: &ConvexBody, copies: &[ConvexBody]) -> Result<bool> {
    Ok(uncovered_area(k, copies)? <= 1e-9 * area(k.vertices()))
}

/// Whether the certificate's copies of `K` cover `K`.
pub fn verify_cover(k: &ConvexBody, cert: &CoverCertificate) -> Result<bool> {
    if !(cert.ratio > 0.0 && cert.ratio < 1.0) || cert.count != cert.centers.len() {
        return Ok(false);
    }
    let copies: Vec<ConvexBody> = cert
        .centers
        .iter()
        .map(|c| k.scale_about(c, cert.ratio))
        .collect();
    covers(k, &copies)
}

/// Smallest ratio `r` with `S ⊆ r K + t` for some `t`.
fn containing_ratio(k: &ConvexBody, s: &[Point], tol: &Tolerance) -> Result<f64> {
    // Variables (t, r): n.s - n.t <= r b.
    let mut rows = Vec::new();
    for h in k.halfspaces() {
        for p in s {
            let a = Point::from([-h.normal[0], -h.normal[1], -h.offset]);
            rows.push(Halfspace::new(a, -h.normal.dot(p))?);
        }
    }
    match lp_min(&Point::from([0.0, 0.0, 1.0]), &rows, tol)? {
        LpOutcome::Optimal { value, .. } => Ok(value),
        _ => Err(GeomError::Lp("containing ratio".into())),
    }
}

/// Whether the vertices of `K` split into `groups` classes, each contained in
/// a homothet of `K` with ratio below one.
fn vertex_partition(k: &ConvexBody, groups: usize, tol: &Tolerance) -> Result<bool> {
    let n = k.vertices().len();
    let mut memo: HashMap<u64, bool> = HashMap::new();
    let mut fits = |mask: u64| -> Result<bool> {
        if let Some(&f) = memo.get(&mask) {
            return Ok(f);
        }
        let s: Vec<Point> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| k.vertices()[i].clone())
            .collect();
        let f = s.len() <= 1 || containing_ratio(k, &s, tol)? < 1.0 - 1e-9;
        memo.insert(mask, f);
        Ok(f)
    };
    let mut assign: Vec<u64> = Vec::new();
    partition_dfs(0, n, groups, &mut assign, &mut fits)
}

fn partition_dfs(
    v: usize,
    n: usize,
    groups: usize,
    assign: &mut Vec<u64>,
    fits: &mut dyn FnMut(u64) -> Result<bool>,
) -> Result<bool> {
    if v == n {
        return Ok(true);
    }
    for g in 0..assign.len() {
        let m = assign[g] | 1 << v;
        if fits(m)? {
            let old = assign[g];
            assign[g] = m;
            if partition_dfs(v + 1, n, groups, assign, fits)? {
                return Ok(true);
            }
            assign[g] = old;
        }
    }
    if assign.len() < groups {
        assign.push(1 << v);
        if partition_dfs(v + 1, n, groups, assign, fits)? {
            return Ok(true);
        }
        assign.pop();
    }
    Ok(false)
}

/// Intersection of the lines through edges `(a-1, a)` and `(b, b+1)`, beyond
/// the boundary arc from vertex `a` to vertex `b`.
fn apex(v: &[Point], a: usize, b: usize) -> Option<Point> {
    let n = v.len();
    if a == b {
        return Some(v[a].clone());
    }
    let p = &v[a];
    let d1 = &v[a] - &v[(a + n - 1) % n];
    let q = &v[b];
    let d2 = &v[(b + 1) % n] - &v[b];
    let det = d1[0] * d2[1] - d1[1] * d2[0];
    if det <= 1e-12 * d1.norm() * d2.norm() {
        return None;
    }
    let w = q - p;
    let s = (w[0] * d2[1] - w[1] * d2[0]) / det;
    (s > 0.0).then(|| p + &d1.scale(s))
}

/// Cyclic splittings of `0..n` into `m` arcs, as arc start indices.
fn arc_starts(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..m).collect();
    if m > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = m;
        let mut moved = false;
        while i > 0 {
            i -= 1;
            if idx[i] != i + n - m {
                idx[i] += 1;
                for j in i + 1..m {
                    idx[j] = idx[j - 1] + 1;
                }
                moved = true;
                break;
            }
        }
        if !moved {
            return out;
        }
    }
}

/// Covering number of a polygon with a certificate. Covers are searched with
/// ratio [`COVER_RATIO`] and centers at the apexes of boundary arcs (a vertex
/// for a one-vertex arc); a cover by fewer copies is ruled out by at least
/// three copies being needed for any planar body and by the vertices not
/// splitting into fewer classes that fit in smaller homothets. When that
/// bound is not met the ratio moves towards one.
pub fn illumination_number_2d(
    k: &ConvexBody,
    tol: &Tolerance,
) -> Result<(usize, CoverCertificate)> {
    if k.dim() != 2 {
        return Err(GeomError::UnsupportedDimension(k.dim()));
    }
    if !k.is_full_dimensional() {
        return Err(GeomError::Degenerate);
    }
    let n = k.vertices().len();
    if n > 60 {
        return Err(GeomError::InvalidInput("at most 60 vertices".into()));
    }
    let mut lower = 3;
    while lower < n.max(4) && !vertex_partition(k, lower, tol)? {
        lower += 1;
    }
    let mut best = None;
    for j in 6..=MAX_RATIO_EXPONENT {
        let ratio = 1.0 - 2f64.powi(-j);
        for m in lower..=n.max(4) {
            if best.as_ref().is_some_and(|(b, _)| m >= *b) {
                break;
            }
            if let Some(cert) = cover_with(k, ratio, m)? {
                best = Some((m, cert));
                break;
            }
        }
        if best.as_ref().is_some_and(|(b, _)| *b == lower) {
            break;
        }
    }
    match best {
        Some((m, cert)) if m == lower => Ok((m, cert)),
        Some((m, _)) => Err(GeomError::Validation(format!(
            "cover by {m} found but {lower} not ruled out"
        ))),
        None => Err(GeomError::Validation("no cover found".into())),
    }
}

/// A cover by `m` copies of ratio `ratio` centred at arc apexes.
fn cover_with(k: &ConvexBody, ratio: f64, m: usize) -> Result<Option<CoverCertificate>> {
    let v = k.vertices();
    let n = v.len();
    for starts in arc_starts(n, m) {
        let centers: Option<Vec<Point>> = (0..m)
            .map(|j| {
                let a = starts[j];
                let b = (starts[(j + 1) % m] + n - 1) % n;
                apex(v, a, b)
            })
            .collect();
        let Some(centers) = centers else { continue };
        let cert = CoverCertificate::new(ratio, centers);
        if verify_cover(k, &cert)? {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// Whether `K = B+(K)`. `B+(K)` is the intersection of `C + x` over the
/// vertices `x` of `K`.
pub fn is_in_d(c: &ConvexBody, k: &ConvexBody, tol: &Tolerance) -> Result<bool> {
    check_dim(c.dim(), k.dim())?;
    let set = PointSet::new(k.dim(), k.vertices().to_vec())?;
    match b_plus(c, &set, 1.0, tol)? {
        Region::Body(b) => Ok(hausdorff_distance(&b, k)? <= tol.eps_set),
        _ => Ok(false),
    }
}

/// `B+(X)` when `X ⊆ B+(X)`.
pub fn dtilde_member(c: &ConvexBody, x: &PointSet, tol: &Tolerance) -> Result<Option<ConvexBody>> {
    check_dim(c.dim(), x.dim())?;
    match b_plus(c, x, 1.0, tol)? {
        Region::Body(b) if x.iter().all(|p| b.contains(p, tol.eps_geom)) => Ok(Some(b)),
        _ => Ok(None),
    }
}

/// Distances `d_i` between `B+` over a converging sequence and its limit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub distances: Vec<f64>,
    /// `max i d_i` over the first half of the sequence (indices from 1).
    pub fitted_c: f64,
    /// Whether `d_i <= fitted_c / i + eps_set` for every `i`.
    pub fit_holds: bool,
}

pub fn bplus_stability_probe(
    c_seq: &[ConvexBody],
    x_seq: &[PointSet],
    c: &ConvexBody,
    x: &PointSet,
    tol: &Tolerance,
) -> Result<StabilityReport> {
    if c_seq.len() != x_seq.len() || c_seq.is_empty() {
        return Err(GeomError::InvalidInput(
            "sequences must be nonempty and of equal length".into(),
        ));
    }
    let limit = match b_plus(c, x, 1.0, tol)? {
        Region::Body(b) if b.is_full_dimensional() => b,
        _ => return Err(GeomError::Degenerate),
    };
    let mut distances = Vec::with_capacity(c_seq.len());
    for (ci, xi) in c_seq.iter().zip(x_seq) {
        let d = match b_plus(ci, xi, 1.0, tol)? {
            Region::Body(b) => hausdorff_distance(&b, &limit)?,
            _ => f64::INFINITY,
        };
        distances.push(d);
    }
    let half = distances.len().div_ceil(2);
    let fitted_c = distances[..half]
        .iter()
        .enumerate()
        .map(|(i, d)| (i + 1) as f64 * d)
        .fold(0.0, f64::max);
    let fit_holds = distances
        .iter()
        .enumerate()
        .all(|(i, d)| *d <= fitted_c / (i + 1) as f64 + tol.eps_set);
    Ok(StabilityReport {
        distances,
        fitted_c,
        fit_holds,
    })
}

/// Given `L ⊆ K ⊆ δ L` (scaling about the origin) with `δ = 1/sqrt(ratio)`,
/// checks that `v + sqrt(ratio) L` over the certificate's translations `v`
/// cover `L`.
pub fn covering_semicontinuity_probe(
    k: &ConvexBody,
    l: &ConvexBody,
    cert: &CoverCertificate,
    tol: &Tolerance,
) -> Result<bool> {
    check_dim(2, k.dim())?;
    check_dim(2, l.dim())?;
    let root = cert.ratio.sqrt();
    let delta = 1.0 / root;
    let eps = tol.eps_set;
    if !k.contains_body(l, eps) || !l.scale(delta).contains_body(k, eps) {
        return Err(GeomError::Precondition("L ⊆ K ⊆ δL does not hold".into()));
    }
    let scaled = l.scale(root);
    let copies: Vec<ConvexBody> = cert
        .translations()
        .iter()
        .map(|v| scaled.translate(v))
        .collect();
    covers(l, &copies)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{cube, regular_polygon, simplex};

    #[test]
    fn clipping_areas() {
        let k = cube(2, 1.0).unwrap();
        let half = crate::bodies::axis_box(&[-1.0, -1.0], &[0.0, 1.0]).unwrap();
        assert!((uncovered_area(&k, &[half]).unwrap() - 2.0).abs() < 1e-12);
        let cert = CoverCertificate::new(0.5, k.vertices().to_vec());
        assert!(verify_cover(&k, &cert).unwrap());
        let cert = CoverCertificate::new(0.5, k.vertices()[..3].to_vec());
        assert!(!verify_cover(&k, &cert).unwrap());
    }

    #[test]
    fn classic_numbers() {
        let tol = Tolerance::default();
        assert_eq!(
            illumination_number_2d(&cube(2, 1.0).unwrap(), &tol)
                .unwrap()
                .0,
            4
        );
        assert_eq!(
            illumination_number_2d(&simplex(2).unwrap(), &tol)
                .unwrap()
                .0,
            3
        );
        assert_eq!(
            illumination_number_2d(&regular_polygon(6, 1.0, 0.0).unwrap(), &tol)
                .unwrap()
                .0,
            3
        );
    }

    #[test]
    fn d_family() {
        let tol = Tolerance::default();
        let c = cube(2, 1.0).unwrap();
        assert!(is_in_d(&c, &cube(2, 0.5).unwrap(), &tol).unwrap());
        assert!(!is_in_d(&c, &cube(2, 0.25).unwrap(), &tol).unwrap());
        let one = PointSet::new(2, vec![Point::from([0.3, 0.2])]).unwrap();
        assert!(dtilde_member(&c, &one, &tol).unwrap().is_some());
        let far = PointSet::new(2, vec![Point::from([0.0, 0.0]), Point::from([5.0, 0.0])]).unwrap();
        assert!(dtilde_member(&c, &far, &tol).unwrap().is_none());
    }

    #[test]
    fn square_sandwich() {
        let tol = Tolerance::default();
        let k = cube(2, 1.0).unwrap();
        let mut hs = k.halfspaces().to_vec();
        for (a, b) in [(1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)] {
            hs.push(Halfspace::new(Point::from([a, b]), 1.6).unwrap());
        }
        let l = ConvexBody::from_halfspaces(&hs, &tol).unwrap();
        let cert = CoverCertificate::new(0.5, k.vertices().to_vec());
        assert!(covering_semicontinuity_probe(&k, &l, &cert, &tol).unwrap());
        let small = k.scale(0.5);
        assert!(covering_semicontinuity_probe(&k, &small, &cert, &tol).is_err());
    }
}
