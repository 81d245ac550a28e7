//! Ball Carathéodory numbers: membership, witness search, a seeded lower-bound
//! estimator and the paraboloid construction with many generators.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bodies::rng;
use crate::error::{check_dim, GeomError, Result};
use crate::geometry::{dedup_points, ConvexBody, Halfspace, Point, PointSet, Region};
use crate::ops::{ball_hull, ball_hull_halfspaces, HullHalfspaces};
use crate::tolerance::Tolerance;

/// A subset of the input whose ball hull already contains `point`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaratheodoryWitness {
    pub point: Point,
    pub subset: Vec<usize>,
}

/// Whether `p` lies in the ball hull of `A`. Decided on the halfspace
/// description, so it works in any dimension: `p` is in the hull exactly when
/// `B-(A)` fits in `-C + p`.
pub fn membership(c: &ConvexBody, a: &PointSet, p: &Point, tol: &Tolerance) -> Result<bool> {
    check_dim(c.dim(), a.dim())?;
    check_dim(c.dim(), p.dim())?;
    let hull = ball_hull_halfspaces(c, a.points(), tol)?;
    Ok(contains(&hull, p, tol.eps_geom))
}

fn contains(h: &HullHalfspaces, p: &Point, eps: f64) -> bool {
    match h {
        HullHalfspaces::Universe => true,
        HullHalfspaces::Empty => false,
        HullHalfspaces::Halfspaces(hs) => hs.iter().all(|h| h.contains(p, eps)),
    }
}

/// Index tuples of `0..n` of size `k` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The first subset of size at most `k` (by size, then lexicographically) whose
/// ball hull contains `p`.
pub fn caratheodory_witness(
    c: &ConvexBody,
    a: &PointSet,
    p: &Point,
    k: usize,
    tol: &Tolerance,
) -> Result<Option<CaratheodoryWitness>> {
    if !membership(c, a, p, tol)? {
        return Err(GeomError::Precondition(
            "the point is not in the ball hull".into(),
        ));
    }
    let mut cache = HullCache::new(c, a.points(), tol, tol.eps_geom);
    Ok(cache.min_witness(p, k)?.map(|subset| CaratheodoryWitness {
        point: p.clone(),
        subset,
    }))
}

/// Ball hulls of subsets of a fixed point list, computed on demand.
struct HullCache<'a> {
    c: &'a ConvexBody,
    pts: &'a [Point],
    tol: &'a Tolerance,
    /// Slack allowed when testing a point against a subset hull.
    eps: f64,
    hulls: HashMap<Vec<usize>, HullHalfspaces>,
}

impl<'a> HullCache<'a> {
    fn new(c: &'a ConvexBody, pts: &'a [Point], tol: &'a Tolerance, eps: f64) -> Self {
        HullCache {
            c,
            pts,
            tol,
            eps,
            hulls: HashMap::new(),
        }
    }

    fn contains(&mut self, subset: &[usize], p: &Point) -> Result<bool> {
        if !self.hulls.contains_key(subset) {
            let pts: Vec<Point> = subset.iter().map(|&i| self.pts[i].clone()).collect();
            let h = ball_hull_halfspaces(self.c, &pts, self.tol)?;
            self.hulls.insert(subset.to_vec(), h);
        }
        Ok(contains(&self.hulls[subset], p, self.eps))
    }

    fn min_witness(&mut self, p: &Point, k: usize) -> Result<Option<Vec<usize>>> {
        let n = self.pts.len();
        for size in 1..=k.min(n) {
            for s in combinations(n, size) {
                if self.contains(&s, p)? {
                    return Ok(Some(s));
                }
            }
        }
        Ok(None)
    }
}

/// Seeded lower bound for the ball Carathéodory number of `C`: the largest
/// witness size needed over sampled configurations `A` (at most
/// `points_per_trial` points, at most 8) and candidate points of their hulls.
///
/// Configurations mix uniform samples from homothets of `C`, vertex subsets
/// and facet centroids of homothets, tiny clusters (where `C` looks like its
/// tangent cones) and, in the plane, the circumscribed-triangle configuration.
pub fn caratheodory_estimate(
    c: &ConvexBody,
    trials: usize,
    points_per_trial: usize,
    seed: u64,
    tol: &Tolerance,
) -> Result<usize> {
    if !(1..=8).contains(&points_per_trial) {
        return Err(GeomError::InvalidInput(
            "points_per_trial must be in 1..=8".into(),
        ));
    }
    if !c.is_full_dimensional() {
        return Err(GeomError::Degenerate);
    }
    let mut r = rng(seed);
    let mut best = 1;
    let loose = 1e-6 * c.vertices().iter().map(Point::norm).fold(1.0, f64::max);
    let triangle = if c.dim() == 2 {
        triangle_instance(c, tol)?
    } else {
        None
    };
    for trial in 0..trials {
        let (a, mut cands) = match trial % 5 {
            4 if triangle.is_some() && trial % 10 == 4 => {
                let (x, p) = triangle.clone().unwrap();
                (x, vec![p])
            }
            0 | 4 => (
                uniform_config(c, &mut r, points_per_trial, 0.3, 1.0),
                Vec::new(),
            ),
            1 => (vertex_config(c, &mut r, points_per_trial), Vec::new()),
            2 => (
                facet_centroid_config(c, &mut r, points_per_trial, tol),
                Vec::new(),
            ),
            _ => (
                uniform_config(c, &mut r, points_per_trial, 0.02, 0.1),
                Vec::new(),
            ),
        };
        let a = dedup_points(&a, tol.eps_geom * 100.0);
        if a.len() <= best {
            continue;
        }
        let set = PointSet::new(c.dim(), a.clone())?;
        let hull = match ball_hull(c, &set, tol)? {
            Region::Body(b) => b,
            _ => continue,
        };
        cands.push(Point::centroid(&a));
        cands.push(hull.vertex_centroid());
        cands.extend(hull.vertices().iter().cloned());
        for _ in 0..4 {
            cands.push(random_combination(&mut r, hull.vertices()));
        }
        // Rounding near degenerate hull vertices must not raise a lower
        // bound, so subsets get a loose slack here.
        let mut cache = HullCache::new(c, &a, tol, loose);
        for p in &cands {
            if !hull.contains(p, tol.eps_geom) {
                continue;
            }
            // Only sizes above the current best can raise the estimate.
            if cache.min_witness(p, best)?.is_none() {
                let k = cache.min_witness(p, a.len())?.map_or(a.len(), |s| s.len());
                best = best.max(k);
            }
        }
    }
    Ok(best)
}

/// Whether the estimate stays within the Helly bound `facets * dim`.
pub fn kn_bound_check(c: &ConvexBody, trials: usize, seed: u64, tol: &Tolerance) -> Result<bool> {
    let est = caratheodory_estimate(c, trials, 6, seed, tol)?;
    Ok(est <= c.halfspaces().len() * c.dim())
}

fn random_combination<R: Rng>(r: &mut R, pts: &[Point]) -> Point {
    let w: Vec<f64> = pts
        .iter()
        .map(|_| -r.gen::<f64>().max(1e-12).ln())
        .collect();
    let s: f64 = w.iter().sum();
    let mut x = Point::origin(pts[0].dim());
    for (p, wi) in pts.iter().zip(&w) {
        x = &x + &p.scale(wi / s);
    }
    x
}

/// Uniform points from a random homothet `c0 + s (C - c0)` with `s` in
/// `[lo, hi]`, so that the whole configuration fits in a translate of `C`.
fn uniform_config<R: Rng>(c: &ConvexBody, r: &mut R, m: usize, lo: f64, hi: f64) -> Vec<Point> {
    let s = r.gen_range(lo..hi);
    let c0 = c.vertex_centroid();
    let body = c.scale_about(&c0, s);
    let dim = c.dim();
    let (mut bl, mut bh) = (vec![f64::INFINITY; dim], vec![f64::NEG_INFINITY; dim]);
    for v in body.vertices() {
        for j in 0..dim {
            bl[j] = bl[j].min(v[j]);
            bh[j] = bh[j].max(v[j]);
        }
    }
    let mut out = Vec::with_capacity(m);
    while out.len() < m {
        let p = Point::new((0..dim).map(|j| r.gen_range(bl[j]..bh[j])).collect());
        if body.contains(&p, 0.0) {
            out.push(p);
        }
    }
    out
}

fn vertex_config<R: Rng>(c: &ConvexBody, r: &mut R, m: usize) -> Vec<Point> {
    let s = r.gen_range(0.3..1.0);
    let shift = Point::new((0..c.dim()).map(|_| r.gen_range(-1.0..1.0)).collect());
    let mut v: Vec<Point> = c.vertices().iter().map(|p| &p.scale(s) + &shift).collect();
    v.shuffle(r);
    let k = r.gen_range(2..=m.max(2)).min(v.len());
    v.truncate(k);
    v
}

fn facet_centroid_config<R: Rng>(
    c: &ConvexBody,
    r: &mut R,
    m: usize,
    tol: &Tolerance,
) -> Vec<Point> {
    let s = r.gen_range(0.3..1.0);
    let mut pts: Vec<Point> = (0..c.halfspaces().len())
        .map(|i| {
            let idx = c.facet_vertices(i, tol.eps_geom * 10.0);
            let vs: Vec<Point> = idx.iter().map(|&j| c.vertices()[j].clone()).collect();
            Point::centroid(&vs).scale(s)
        })
        .collect();
    if pts.len() > m {
        pts.shuffle(r);
        pts.truncate(m);
    }
    pts
}

/// The circumscribed-triangle configuration for a polygon that is not a
/// parallelogram: three edge lines of `C` whose outer normals positively span
/// the plane bound a triangle; for a small enough copy of it, its centroid is
/// missed by the ball hull of every pair of its vertices.
pub fn triangle_instance(c: &ConvexBody, tol: &Tolerance) -> Result<Option<(Vec<Point>, Point)>> {
    if c.dim() != 2 {
        return Err(GeomError::UnsupportedDimension(c.dim()));
    }
    let hs: Vec<Halfspace> = c.halfspaces().iter().map(Halfspace::normalized).collect();
    let m = hs.len();
    for scale in [0.25, 1.0 / 16.0, 1.0 / 64.0] {
        for t in combinations(m, 3) {
            let lines: Vec<&Halfspace> = t.iter().map(|&i| &hs[i]).collect();
            let Some(verts) = triangle_of(&lines) else {
                continue;
            };
            let verts: Vec<Point> = verts.iter().map(|v| v.scale(scale)).collect();
            let g = Point::centroid(&verts);
            let set = PointSet::new(2, verts.clone())?;
            if !membership(c, &set, &g, tol)? {
                continue;
            }
            let mut ok = true;
            for pair in combinations(3, 2) {
                let sub = set.subset(&pair);
                if membership(c, &sub, &g, tol)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(Some((verts, g)));
            }
        }
    }
    Ok(None)
}

/// Vertices of the triangle bounded by three lines whose normals positively
/// span the plane.
fn triangle_of(lines: &[&Halfspace]) -> Option<Vec<Point>> {
    let n: Vec<&Point> = lines.iter().map(|h| &h.normal).collect();
    let det = |a: &Point, b: &Point| a[0] * b[1] - a[1] * b[0];
    // Positive spanning: the origin is a strictly positive combination.
    let (d01, d12, d20) = (det(n[0], n[1]), det(n[1], n[2]), det(n[2], n[0]));
    let pos = d01 > 1e-9 && d12 > 1e-9 && d20 > 1e-9;
    let neg = d01 < -1e-9 && d12 < -1e-9 && d20 < -1e-9;
    if !(pos || neg) {
        return None;
    }
    let meet = |a: &Halfspace, b: &Halfspace| -> Point {
        let d = det(&a.normal, &b.normal);
        Point::from([
            (a.offset * b.normal[1] - b.offset * a.normal[1]) / d,
            (a.normal[0] * b.offset - b.normal[0] * a.offset) / d,
        ])
    };
    Some(vec![
        meet(lines[0], lines[1]),
        meet(lines[1], lines[2]),
        meet(lines[2], lines[0]),
    ])
}

/// The paraboloid construction: a symmetric polytope `C` in space with `k`
/// translation vectors `X` such that the origin is in the ball hull of `X` but
/// not of `X` minus any one vector.
#[derive(Debug, Clone, PartialEq)]
pub struct BBInstance {
    pub body: ConvexBody,
    pub generators: PointSet,
    pub k: usize,
    pub arc_density: usize,
    pub puncture_radius: f64,
    pub height: f64,
}

/// Builds and validates the construction for even `k >= 4` with the arc
/// through `u_1..u_k` sampled at `arc_density` points.
pub fn bb_construction(k: usize, arc_density: usize, tol: &Tolerance) -> Result<BBInstance> {
    let inst = bb_build(k, arc_density)?;
    bb_validate(&inst, tol)?;
    Ok(inst)
}

/// [`bb_construction`] with the sampling density doubled until validation
/// passes (starting from `4k`, at most five doublings).
pub fn bb_construction_auto(k: usize, tol: &Tolerance) -> Result<BBInstance> {
    let mut density = 4 * k;
    let mut last = None;
    for _ in 0..6 {
        match bb_construction(k, density, tol) {
            Ok(i) => return Ok(i),
            Err(e @ GeomError::Validation(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
        density *= 2;
    }
    Err(last.unwrap())
}

/// Parameter of `u_j` along the parabola `x1 = 0, x3 = x2^2`.
fn u_param(k: usize, j: usize) -> f64 {
    j as f64 - (k as f64 - 1.0) / 2.0
}

/// The index shifts `-k/2..-1, 1..k/2`, paired with `u_0..u_{k-1}` in order.
fn shifts(k: usize) -> Vec<i64> {
    let h = (k / 2) as i64;
    (-h..=h).filter(|&i| i != 0).collect()
}

fn bb_build(k: usize, arc_density: usize) -> Result<BBInstance> {
    if k < 4 || k % 2 != 0 {
        return Err(GeomError::InvalidInput(
            "k must be an even integer >= 4".into(),
        ));
    }
    if arc_density < k {
        return Err(GeomError::InvalidInput(
            "arc_density must be at least k".into(),
        ));
    }
    let u: Vec<Point> = (0..k)
        .map(|j| {
            let s = u_param(k, j);
            Point::from([0.0, s, s * s])
        })
        .collect();
    let idx = shifts(k);
    let t: Vec<Point> = idx
        .iter()
        .map(|&i| Point::from([-(i as f64), 0.0, -((i * i) as f64)]))
        .collect();
    let mut gens: Vec<Point> = Vec::new();
    for (slot, ti) in t.iter().enumerate() {
        for (j, uj) in u.iter().enumerate() {
            if j != slot {
                gens.push(uj - ti);
            }
        }
    }
    let height = 1.0 + gens.iter().map(|p| p[2]).fold(f64::NEG_INFINITY, f64::max);
    let puncture = 1.0 / (10.0 * k as f64);
    let smax = height.sqrt();
    for i in 0..=arc_density {
        let s = -smax + 2.0 * smax * i as f64 / arc_density as f64;
        if (0..k).all(|j| (s - u_param(k, j)).abs() >= puncture) {
            gens.push(Point::from([0.0, s, s * s]));
        }
    }
    // Arc endpoints next to each puncture keep the sample dense where it matters.
    for j in 0..k {
        for d in [-puncture, puncture] {
            let s = u_param(k, j) + d;
            gens.push(Point::from([0.0, s, s * s]));
        }
    }
    let lift = Point::from([0.0, 0.0, height]);
    let mut all: Vec<Point> = gens.iter().map(|p| p - &lift).collect();
    let neg: Vec<Point> = all.iter().map(|p| -p).collect();
    all.extend(neg);
    let body = ConvexBody::from_vertices(&all, &Tolerance::default())?;
    Ok(BBInstance {
        body,
        generators: PointSet::new(3, t)?,
        k,
        arc_density,
        puncture_radius: puncture,
        height,
    })
}

/// Checks `o ∈ bconv(X)` and `o ∉ bconv(X \ {t_i})` for every `i`.
pub fn bb_validate(inst: &BBInstance, tol: &Tolerance) -> Result<()> {
    let o = Point::origin(3);
    let x = &inst.generators;
    if !membership(&inst.body, x, &o, tol)? {
        return Err(GeomError::Validation(
            "origin is not in the ball hull of X".into(),
        ));
    }
    for i in 0..x.len() {
        let rest: Vec<usize> = (0..x.len()).filter(|&j| j != i).collect();
        if membership(&inst.body, &x.subset(&rest), &o, tol)? {
            return Err(GeomError::Validation(format!(
                "origin is in the ball hull of X without generator {i}"
            )));
        }
    }
    Ok(())
}

impl BBInstance {
    /// The point `u_i - (0,0,h)` that lies in `B-(X \ {t_i})` but outside `C`.
    pub fn witness(&self, i: usize) -> Point {
        let s = u_param(self.k, i);
        Point::from([0.0, s, s * s - self.height])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::cube;

    fn set(v: &[[f64; 2]]) -> PointSet {
        PointSet::from_points(v.iter().map(|c| Point::from(*c)).collect()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let tol = Tolerance::default();
        let c = cube(2, 1.0).unwrap();
        let a = set(&[[0.0, 0.0], [1.0, 1.0]]);
        assert!(membership(&c, &a, &Point::from([0.0, 0.0]), &tol).unwrap());
        assert!(membership(&c, &a, &Point::from([1.0, 0.0]), &tol).unwrap());
        assert!(!membership(&c, &a, &Point::from([2.0, 0.0]), &tol).unwrap());
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(2, 3).len(), 0);
    }

    #[test]
    fn witness_in_square() {
        let tol = Tolerance::default();
        let c = cube(2, 1.0).unwrap();
        let a = set(&[[0.0, 0.0], [0.5, 0.2], [1.0, 1.0]]);
        let w = caratheodory_witness(&c, &a, &Point::from([1.0, 0.0]), 3, &tol)
            .unwrap()
            .unwrap();
        assert_eq!(w.subset, vec![0, 2]);
        assert!(caratheodory_witness(&c, &a, &Point::from([3.0, 0.0]), 3, &tol).is_err());
    }

    #[test]
    fn odd_k_rejected() {
        assert!(bb_construction(3, 16, &Tolerance::default()).is_err());
    }
}
