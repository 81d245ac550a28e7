//! Finite generation of C-ball convex polytopes: facet hitting sets, witness
//! search and the truncated simplices that need many generators.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bodies::{rng, simplex};
use crate::error::{check_dim, GeomError, Result};
use crate::geometry::{
    dedup_points, hausdorff_distance, lp_min, ConvexBody, Halfspace, LpOutcome, Point, PointSet,
    Region,
};
use crate::ops::{ball_hull, ball_hull_halfspaces, is_ball_convex, HullHalfspaces};
use crate::tolerance::Tolerance;

/// At most `k` points whose C-ball hull is the target polytope.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationCertificate {
    pub points: Vec<Point>,
    pub verified: bool,
}

/// Vertex-facet incidences of a polytope: `facets[f]` lists the vertices on
/// facet `f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceTable {
    pub vertex_count: usize,
    pub facets: Vec<Vec<usize>>,
}

impl IncidenceTable {
    pub fn of(p: &ConvexBody, tol: &Tolerance) -> Result<Self> {
        if p.dim() > 3 {
            return Err(GeomError::UnsupportedDimension(p.dim()));
        }
        let eps = tol.eps_geom * 10.0 * scale_of(p);
        let facets = (0..p.halfspaces().len())
            .map(|i| p.facet_vertices(i, eps))
            .collect();
        Ok(IncidenceTable {
            vertex_count: p.vertices().len(),
            facets,
        })
    }

    /// Facets (as a bit mask) containing each vertex.
    fn masks(&self) -> Vec<u64> {
        let mut m = vec![0u64; self.vertex_count];
        for (f, vs) in self.facets.iter().enumerate() {
            for &v in vs {
                m[v] |= 1 << f;
            }
        }
        m
    }
}

fn scale_of(p: &ConvexBody) -> f64 {
    p.vertices().iter().map(Point::norm).fold(1.0, f64::max)
}

/// Result of a bounded generation search.
#[derive(Debug, Clone, PartialEq)]
pub enum GenerationOutcome {
    Certificate(GenerationCertificate),
    /// Every generating set needs at least `hitting_number > k` points.
    Impossible {
        hitting_number: usize,
    },
    /// No certificate among the candidate points; not a proof.
    NotFound,
}

/// Smallest set of vertices meeting every facet, lexicographically first
/// among the smallest. Depth-first branch and bound with iterative deepening.
pub fn facet_hitting_number(p: &ConvexBody, tol: &Tolerance) -> Result<(usize, Vec<usize>)> {
    let table = IncidenceTable::of(p, tol)?;
    if table.facets.len() > 64 {
        return Err(GeomError::InvalidInput("more than 64 facets".into()));
    }
    if table.facets.iter().any(Vec::is_empty) {
        return Err(GeomError::Validation("facet without vertices".into()));
    }
    let masks = table.masks();
    let full: u64 = if table.facets.len() == 64 {
        u64::MAX
    } else {
        (1u64 << table.facets.len()) - 1
    };
    let widest = masks
        .iter()
        .map(|m| m.count_ones())
        .max()
        .unwrap_or(0)
        .max(1);
    let mut chosen = Vec::new();
    for size in 1..=masks.len() {
        if hit_dfs(&masks, full, 0, 0, size, widest, &mut chosen) {
            return Ok((size, chosen));
        }
    }
    Err(GeomError::Validation("facets cannot be hit".into()))
}

fn hit_dfs(
    masks: &[u64],
    full: u64,
    covered: u64,
    start: usize,
    left: usize,
    widest: u32,
    chosen: &mut Vec<usize>,
) -> bool {
    if covered == full {
        return true;
    }
    let missing = (full & !covered).count_ones();
    if left == 0 || missing > left as u32 * widest {
        return false;
    }
    for v in start..masks.len() {
        if masks[v] & !covered == 0 {
            continue;
        }
        chosen.push(v);
        if hit_dfs(
            masks,
            full,
            covered | masks[v],
            v + 1,
            left - 1,
            widest,
            chosen,
        ) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Whether every facet `F` of `P` is the whole contact set of some translate of
/// `C` containing `P`. In that case any generating set meets every facet, so
/// the facet hitting number is a lower bound for generation.
pub fn hitting_regime(c: &ConvexBody, p: &ConvexBody, tol: &Tolerance) -> Result<bool> {
    check_dim(c.dim(), p.dim())?;
    let n = c.dim();
    let ch: Vec<Halfspace> = c.halfspaces().iter().map(Halfspace::normalized).collect();
    let scale = scale_of(p);
    let table = IncidenceTable::of(p, tol)?;
    for (f, on) in table.facets.iter().enumerate() {
        let nf = p.halfspaces()[f].normalized();
        let Some(m) = ch.iter().position(|h| h.normal.approx_eq(&nf.normal, 1e-9)) else {
            return Ok(false);
        };
        // Variables (v, s): maximize the slack s of vertices off F.
        let lift = |a: &Point, s: f64| {
            let mut c = a.coords().to_vec();
            c.push(s);
            Point::new(c)
        };
        let mut rows = Vec::new();
        for (i, h) in ch.iter().enumerate() {
            for (j, q) in p.vertices().iter().enumerate() {
                let s = if on.contains(&j) { 0.0 } else { 1.0 };
                if i == m && s == 0.0 {
                    continue;
                }
                rows.push(Halfspace::new(
                    lift(&-&h.normal, s),
                    h.offset - h.normal.dot(q),
                )?);
            }
        }
        let level = nf.offset - ch[m].offset;
        rows.push(Halfspace::new(lift(&ch[m].normal, 0.0), level)?);
        rows.push(Halfspace::new(lift(&-&ch[m].normal, 0.0), -level)?);
        rows.push(Halfspace::new(Point::unit(n + 1, n), 1.0)?);
        let obj = -Point::unit(n + 1, n);
        match lp_min(&obj, &rows, tol)? {
            LpOutcome::Optimal { point, .. } if point[n] > 1e-6 * scale => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Candidate generators: vertices, then edge midpoints, then facet centroids.
fn candidates(p: &ConvexBody, tol: &Tolerance) -> Vec<Point> {
    let eps = tol.eps_geom * 10.0 * scale_of(p);
    let v = p.vertices();
    let mut out: Vec<Point> = v.to_vec();
    for (a, b) in p.edges(eps) {
        out.push(v[a].lerp(&v[b], 0.5));
    }
    for i in 0..p.halfspaces().len() {
        let on: Vec<Point> = p
            .facet_vertices(i, eps)
            .iter()
            .map(|&j| v[j].clone())
            .collect();
        if !on.is_empty() {
            out.push(Point::centroid(&on));
        }
    }
    dedup_points(&out, eps)
}

fn covers(h: &HullHalfspaces, p: &ConvexBody, eps: f64) -> bool {
    match h {
        HullHalfspaces::Universe => true,
        HullHalfspaces::Empty => false,
        HullHalfspaces::Halfspaces(hs) => p
            .vertices()
            .iter()
            .all(|v| hs.iter().all(|h| h.contains(v, eps))),
    }
}

/// Exhaustive search over tuples of candidate points of size at most `k`, by
/// size and then lexicographically. A tuple inside `P` generates `P` exactly
/// when its hull covers the vertices of `P`; the winner is then checked by
/// Hausdorff distance.
pub fn candidate_search(
    c: &ConvexBody,
    p: &ConvexBody,
    k: usize,
    tol: &Tolerance,
) -> Result<Option<GenerationCertificate>> {
    let cand = candidates(p, tol);
    let eps = tol.eps_geom * 10.0 * scale_of(p);
    for size in 1..=k.min(cand.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let pts: Vec<Point> = idx.iter().map(|&i| cand[i].clone()).collect();
            if covers(&ball_hull_halfspaces(c, &pts, tol)?, p, eps) {
                let set = PointSet::new(p.dim(), pts.clone())?;
                if let Region::Body(b) = ball_hull(c, &set, tol)? {
                    if hausdorff_distance(&b, p)? <= tol.eps_set {
                        return Ok(Some(GenerationCertificate {
                            points: pts,
                            verified: true,
                        }));
                    }
                }
            }
            if !next_combination(&mut idx, cand.len()) {
                break;
            }
        }
    }
    Ok(None)
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] != i + n - k {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Searches for a generating set of at most `k` points, using the facet
/// hitting bound to answer negatively when it applies.
pub fn generation_search(
    c: &ConvexBody,
    p: &ConvexBody,
    k: usize,
    tol: &Tolerance,
) -> Result<GenerationOutcome> {
    if !is_ball_convex(c, p, tol)? {
        return Err(GeomError::Precondition(
            "target is not C-ball convex".into(),
        ));
    }
    if p.dim() <= 3 && hitting_regime(c, p, tol)? {
        let (h, _) = facet_hitting_number(p, tol)?;
        if h > k {
            return Ok(GenerationOutcome::Impossible { hitting_number: h });
        }
    }
    Ok(match candidate_search(c, p, k, tol)? {
        Some(cert) => GenerationOutcome::Certificate(cert),
        None => GenerationOutcome::NotFound,
    })
}

/// A certificate that `P` is the C-ball hull of at most `k` points, if one is
/// found.
pub fn is_k_generated(
    c: &ConvexBody,
    p: &ConvexBody,
    k: usize,
    tol: &Tolerance,
) -> Result<Option<GenerationCertificate>> {
    Ok(match generation_search(c, p, k, tol)? {
        GenerationOutcome::Certificate(cert) => Some(cert),
        _ => None,
    })
}

/// A regular `n`-simplex (circumradius 1) with `k + 1` of its vertices cut off
/// by planes through the points at fraction `depth` along the incident edges,
/// giving `n + k + 2` facets. The cuts are pairwise disjoint for `depth < 1/2`.
pub fn truncated_simplex(n: usize, k: usize, depth: f64, tol: &Tolerance) -> Result<ConvexBody> {
    if !(2..=3).contains(&n) || k < 2 || k > n {
        return Err(GeomError::InvalidInput("need 2 <= k <= n <= 3".into()));
    }
    if !(depth > 0.0 && depth < 0.5) {
        return Err(GeomError::InvalidInput("depth must lie in (0, 1/2)".into()));
    }
    let s = simplex(n)?;
    let v = s.vertices();
    let mut hs: Vec<Halfspace> = s.halfspaces().to_vec();
    for i in 0..=k {
        let u = v[i].scale(1.0 / v[i].norm());
        let w = &v[(i + 1) % v.len()];
        let cut = v[i].lerp(w, depth);
        hs.push(Halfspace::new(u.clone(), u.dot(&cut))?);
    }
    let body = ConvexBody::from_halfspaces(&hs, tol)?;
    if body.halfspaces().len() != n + k + 2 {
        return Err(GeomError::Validation(format!(
            "expected {} facets, found {}",
            n + k + 2,
            body.halfspaces().len()
        )));
    }
    let table = IncidenceTable::of(&body, tol)?;
    let new: Vec<&Vec<usize>> = body
        .halfspaces()
        .iter()
        .zip(&table.facets)
        .filter(|(h, _)| {
            !s.halfspaces().iter().any(|g| {
                g.normalized()
                    .normal
                    .approx_eq(&h.normalized().normal, 1e-9)
            })
        })
        .map(|(_, f)| f)
        .collect();
    for a in 0..new.len() {
        for b in a + 1..new.len() {
            if new[a].iter().any(|x| new[b].contains(x)) {
                return Err(GeomError::Validation("truncation facets meet".into()));
            }
        }
    }
    Ok(body)
}

/// Outcome of [`kn_facet_bound_audit`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnAudit {
    pub dim: usize,
    pub facets: usize,
    /// Least `k` found for each sample, `None` if none up to `max_k`.
    pub min_k: Vec<Option<usize>>,
    /// The largest value of `min_k` when every sample was generated.
    pub generated_with: Option<usize>,
    /// All samples were `k`-generated but `C` has more than `k * dim` facets.
    pub violation: bool,
}

/// Samples C-ball hulls of random points in a translate of `C` and records the
/// least number of generators found for each.
pub fn kn_facet_bound_audit(
    c: &ConvexBody,
    samples: usize,
    max_k: usize,
    seed: u64,
    tol: &Tolerance,
) -> Result<KnAudit> {
    if c.dim() > 3 {
        return Err(GeomError::UnsupportedDimension(c.dim()));
    }
    let mut r = rng(seed);
    let c0 = c.vertex_centroid();
    let mut min_k = Vec::with_capacity(samples);
    while min_k.len() < samples {
        let small = c.scale_about(&c0, 0.6);
        let pts: Vec<Point> = (0..c.dim() + 3)
            .map(|_| {
                let w: Vec<f64> = small.vertices().iter().map(|_| r.gen::<f64>()).collect();
                let total: f64 = w.iter().sum();
                small
                    .vertices()
                    .iter()
                    .zip(&w)
                    .fold(Point::origin(c.dim()), |acc, (v, wi)| {
                        &acc + &v.scale(wi / total)
                    })
            })
            .collect();
        let set = PointSet::new(c.dim(), pts)?;
        let Region::Body(p) = ball_hull(c, &set, tol)? else {
            continue;
        };
        if !p.is_full_dimensional() {
            continue;
        }
        let mut found = None;
        for k in 2..=max_k {
            if candidate_search(c, &p, k, tol)?.is_some() {
                found = Some(k);
                break;
            }
        }
        min_k.push(found);
    }
    let generated_with = if min_k.iter().all(Option::is_some) {
        min_k.iter().flatten().max().copied()
    } else {
        None
    };
    let facets = c.halfspaces().len();
    Ok(KnAudit {
        dim: c.dim(),
        facets,
        violation: generated_with.is_some_and(|k| facets > k * c.dim()),
        min_k,
        generated_with,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::cube;

    #[test]
    fn hitting_numbers() {
        let tol = Tolerance::default();
        assert_eq!(
            facet_hitting_number(&cube(3, 1.0).unwrap(), &tol).unwrap(),
            (2, vec![0, 7])
        );
        assert_eq!(
            facet_hitting_number(&simplex(3).unwrap(), &tol).unwrap().0,
            2
        );
        assert_eq!(
            facet_hitting_number(&cube(2, 1.0).unwrap(), &tol)
                .unwrap()
                .0,
            2
        );
    }

    #[test]
    fn truncations() {
        let tol = Tolerance::default();
        assert_eq!(
            truncated_simplex(3, 2, 0.1, &tol)
                .unwrap()
                .halfspaces()
                .len(),
            7
        );
        assert_eq!(
            truncated_simplex(3, 3, 0.1, &tol)
                .unwrap()
                .halfspaces()
                .len(),
            8
        );
        assert!(truncated_simplex(3, 2, 0.9, &tol).is_err());
    }

    #[test]
    fn box_is_two_generated() {
        let tol = Tolerance::default();
        let c = cube(3, 1.0).unwrap();
        let p = crate::bodies::axis_box(&[0.0, 0.1, 0.2], &[0.5, 1.0, 0.7]).unwrap();
        let cert = is_k_generated(&c, &p, 2, &tol).unwrap().unwrap();
        assert_eq!(cert.points.len(), 2);
    }
}
