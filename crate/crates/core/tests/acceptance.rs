//! Acceptance checks, one line per criterion. Run with
//! `cargo test -p ballconv --test acceptance`.

mod common;

use std::time::Instant;

use ballconv::arc::{SymmetricPolygon, TriangleCase};
use ballconv::bodies::{
    cube, ellipse_polygon, hexagon_prism, random_parallelogram, random_point,
    random_polygon, random_symmetric_polygon, regular_polygon, rng, simplex,
};
use ballconv::caratheodory::{
    bb_construction_auto, caratheodory_estimate, caratheodory_witness, kn_bound_check, membership,
    triangle_instance,
};
use ballconv::covering::{
    bplus_stability_probe, covering_semicontinuity_probe, illumination_number_2d, verify_cover,
};
use ballconv::generation::{facet_hitting_number, is_k_generated, truncated_simplex};
use ballconv::ops::{ball_hull, spindle, spindle_hull_iterate};
use ballconv::separation::{
    separate_from_hyperplane, verify_hyperplane_separation, HyperplaneQuery, Side,
};
use ballconv::{
    central_symmetral, hausdorff_distance, lp_min, ConvexBody, Halfspace, LpOutcome, Point,
    PointSet, Region,
};
use common::{inner_point, inner_set, tol, unit};
use rand::Rng;

type Outcome = Result<String, String>;

const SET_EPS: f64 = 1e-7;
const VERTEX_EPS: f64 = 1e-9;
const TRIANGLE_EPS: f64 = 1e-7;
const SMOOTH_TRIANGLE_EPS: f64 = 1e-6;
const CLOSURE_GAP: f64 = 1e-4;
const CLOSURE_ITERATIONS: usize = 12;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn body(r: Region, what: &str) -> Result<ConvexBody, String> {
    match r {
        Region::Body(b) => Ok(b),
        other => Err(format!("{what} is {}", other.tag())),
    }
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

/// The section of a body in space by the plane `x3 = 0`.
fn section(b: &ConvexBody) -> Result<Region, String> {
    let mut hs = Vec::new();
    for h in b.halfspaces() {
        let n = Point::from([h.normal[0], h.normal[1]]);
        if n.norm() <= 1e-12 {
            if h.offset < 0.0 {
                return Ok(Region::Empty);
            }
            continue;
        }
        hs.push(Halfspace::new(n, h.offset).map_err(err)?);
    }
    Region::from_halfspaces(&hs, &tol()).map_err(err)
}

fn hexagon_prism_regression() -> Outcome {
    let (c, h) = hexagon_prism().map_err(err)?;
    let hv = PointSet::new(3, h.vertices().to_vec()).map_err(err)?;
    let hull = body(ball_hull(&c, &hv, &tol()).map_err(err)?, "ball hull")?;
    let d = hausdorff_distance(&hull, &c).map_err(err)?;
    ensure(d <= SET_EPS, || format!("ball hull of H is {d} from C"))?;
    let mut r = rng(1);
    for _ in 0..100 {
        let (p, q) = (inner_point(&mut r, &h), inner_point(&mut r, &h));
        let s = body(spindle(&c, &p, &q, &tol()).map_err(err)?.region, "spindle")?;
        if let Region::Body(sec) = section(&s)? {
            for v in sec.vertices() {
                let v3 = Point::from([v[0], v[1], 0.0]);
                ensure(h.contains(&v3, SET_EPS), || format!("spindle section leaves H at {v3:?}"))?;
            }
        }
    }
    let sh = spindle_hull_iterate(&c, &hv, 32, &tol()).map_err(err)?;
    let want = hausdorff_distance(&h, &c).map_err(err)?;
    ensure(sh.gap > 0.1 && (sh.gap - want).abs() <= SET_EPS, || {
        format!("spindle hull gap {} against d(H, C) = {want}", sh.gap)
    })?;
    Ok(format!("bconv(H) = C within {d:.1e}; 100 spindles in H; gap {:.4}", sh.gap))
}

/// Smallest `lambda S + t` containing `A`, by an LP in `(t, lambda)`.
fn smallest_homothet(s: &ConvexBody, a: &PointSet) -> Result<ConvexBody, String> {
    let dim = s.dim();
    let mut rows = Vec::new();
    for h in s.halfspaces() {
        for p in a.iter() {
            let mut n: Vec<f64> = h.normal.coords().iter().map(|x| -x).collect();
            n.push(-h.offset);
            rows.push(Halfspace::new(Point::new(n), -h.normal.dot(p)).map_err(err)?);
        }
    }
    let obj = Point::unit(dim + 1, dim);
    match lp_min(&obj, &rows, &tol()).map_err(err)? {
        LpOutcome::Optimal { point, .. } => {
            let t = Point::new(point.coords()[..dim].to_vec());
            Ok(s.scale(point[dim]).translate(&t))
        }
        other => Err(format!("homothet LP: {other:?}")),
    }
}

fn bounding_box(a: &PointSet) -> Result<ConvexBody, String> {
    let dim = a.dim();
    let mut lo = vec![f64::INFINITY; dim];
    let mut hi = vec![f64::NEG_INFINITY; dim];
    for p in a.iter() {
        for j in 0..dim {
            lo[j] = lo[j].min(p[j]);
            hi[j] = hi[j].max(p[j]);
        }
    }
    let corners: Vec<Point> = (0..1usize << dim)
        .map(|m| Point::new((0..dim).map(|j| if m >> j & 1 == 1 { hi[j] } else { lo[j] }).collect()))
        .collect();
    ConvexBody::hull(&corners, &tol()).map_err(err)
}

fn box_and_simplex_closed_forms() -> Outcome {
    let mut r = rng(2);
    let mut worst: f64 = 0.0;
    for dim in [2, 3] {
        let b = cube(dim, 1.0).map_err(err)?;
        let s = simplex(dim).map_err(err)?;
        for _ in 0..100 {
            let n = r.gen_range(2..8);
            let a = inner_set(&mut r, &b, n, 0.9);
            let h = body(ball_hull(&b, &a, &tol()).map_err(err)?, "box hull")?;
            let d = hausdorff_distance(&h, &bounding_box(&a)?).map_err(err)?;
            ensure(d <= SET_EPS, || format!("box hull off by {d} in dim {dim}"))?;
            worst = worst.max(d);
            let a = inner_set(&mut r, &s, n, 0.9);
            let h = body(ball_hull(&s, &a, &tol()).map_err(err)?, "simplex hull")?;
            let d = hausdorff_distance(&h, &smallest_homothet(&s, &a)?).map_err(err)?;
            ensure(d <= SET_EPS, || format!("simplex hull off by {d} in dim {dim}"))?;
            worst = worst.max(d);
        }
    }
    Ok(format!("400 hulls, worst Hausdorff {worst:.1e}"))
}

fn planar_separation_completeness() -> Outcome {
    let mut r = rng(3);
    let mut count = 0;
    for _ in 0..50 {
        let m = r.gen_range(3..10);
        let c = random_polygon(&mut r, m).map_err(err)?;
        for _ in 0..10 {
            let n = r.gen_range(1..6);
            let a = inner_set(&mut r, &c, n, 0.7);
            let k = body(ball_hull(&c, &a, &tol()).map_err(err)?, "K")?;
            for _ in 0..50 {
                let u = unit(r.gen_range(0.0..std::f64::consts::TAU));
                let h = k.support(&u).map_err(err)?;
                let hq = if r.gen::<bool>() {
                    HyperplaneQuery { normal: u, offset: h, side: Side::Below }
                } else {
                    HyperplaneQuery { normal: -&u, offset: -h, side: Side::Above }
                };
                let cert = separate_from_hyperplane(&c, &k, &hq, &tol()).map_err(err)?;
                let cert = cert.ok_or_else(|| format!("no translate for {hq:?}"))?;
                let ok = verify_hyperplane_separation(&c, &cert.translate, &k, &hq, &tol()).map_err(err)?;
                ensure(ok, || format!("certificate for {hq:?} does not verify"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} supporting lines separated and verified"))
}

fn same_vertex_set(got: &[Point], want: &[Point], eps: f64) -> bool {
    got.len() == want.len() && want.iter().all(|w| got.iter().any(|g| g.approx_eq(w, eps)))
}

fn depth(b: &ConvexBody, p: &Point) -> f64 {
    b.halfspaces()
        .iter()
        .map(|h| h.normalized().slack_violation(p))
        .fold(f64::NEG_INFINITY, f64::max)
}

fn arc_disk_oracle() -> Outcome {
    let linf = SymmetricPolygon::new(cube(2, 1.0).map_err(err)?, &tol()).map_err(err)?;
    for rho in [0.5, 1.0, 2.0, 3.0, 3.9] {
        let want: Vec<Point> = if rho <= 2.0 {
            [[rho, 0.0], [0.0, rho], [-rho, 0.0], [0.0, -rho]].map(Point::from).to_vec()
        } else {
            let t = rho - 2.0;
            [[2.0, t], [t, 2.0], [-t, 2.0], [-2.0, t], [-2.0, -t], [-t, -2.0], [t, -2.0], [2.0, -t]]
                .map(Point::from)
                .to_vec()
        };
        let d = linf.arc_disk(rho).map_err(err)?;
        ensure(same_vertex_set(d.polygon.vertices(), &want, VERTEX_EPS), || {
            format!("l-infinity disk of radius {rho}: {:?}", d.polygon.vertices())
        })?;
    }
    let mut r = rng(4);
    for _ in 0..50 {
        let half = r.gen_range(2..8);
        let c = SymmetricPolygon::new(random_symmetric_polygon(&mut r, half).map_err(err)?, &tol())
            .map_err(err)?;
        let l = c.perimeter();
        let mut radii: Vec<f64> = (0..5).map(|_| r.gen_range(0.01..0.5) * l).collect();
        radii.sort_by(f64::total_cmp);
        let mut prev: Option<ConvexBody> = None;
        for rho in radii {
            let d = c.arc_disk(rho).map_err(err)?;
            ensure(d.vertex_count() <= 2 * c.vertex_count(), || {
                format!("{} vertices for a {}-gon", d.vertex_count(), c.vertex_count())
            })?;
            for i in 0..256 {
                let t = i as f64 * l / 256.0;
                let w = &c.point_at(t + rho) - &c.point_at(t);
                let e = depth(&d.polygon, &w).abs();
                ensure(e <= VERTEX_EPS, || format!("traced point {e} off the disk boundary"))?;
            }
            if let Some(p) = &prev {
                ensure(d.polygon.contains_body(p, VERTEX_EPS), || "disks not nested".into())?;
            }
            prev = Some(d.polygon);
        }
    }
    Ok("l-infinity formula at 5 radii; 250 random disks convex, bounded and nested".into())
}

/// A pair at C-distance below two.
fn near_pair<R: Rng>(r: &mut R, c: &SymmetricPolygon) -> (Point, Point) {
    let x = random_point(r, 2, -1.0, 1.0);
    let d = random_point(r, 2, -1.0, 1.0);
    let n = c.norm(&d).max(1e-9);
    let q = &x + &d.scale(r.gen_range(0.05..1.9) / n);
    (x, q)
}

fn triangle_trichotomy() -> Outcome {
    let mut r = rng(5);
    let mut triples = 0;
    for _ in 0..20 {
        let half = r.gen_range(2..7);
        let c = SymmetricPolygon::new(random_symmetric_polygon(&mut r, half).map_err(err)?, &tol())
            .map_err(err)?;
        let mut local = 0;
        while local < 25 {
            let (x, z) = near_pair(&mut r, &c);
            let s = body(spindle(c.body(), &x, &z, &tol()).map_err(err)?.region, "spindle")?;
            if !s.is_full_dimensional() {
                continue;
            }
            let interior = local % 2 == 0;
            let y = if interior {
                inner_point(&mut r, &s).lerp(&s.vertex_centroid(), 0.1)
            } else {
                let v = s.vertices();
                let i = r.gen_range(0..v.len());
                v[i].lerp(&v[(i + 1) % v.len()], r.gen_range(0.0..1.0))
            };
            let rep = c.triangle_report(&x, &y, &z).map_err(err)?;
            if interior {
                ensure(rep.case == TriangleCase::Interior, || format!("{:?} for an interior y", rep.case))?;
                ensure(rep.lhs <= rep.rhs + TRIANGLE_EPS, || format!("interior: {} > {}", rep.lhs, rep.rhs))?;
            } else {
                ensure(rep.case == TriangleCase::Boundary, || format!("{:?} for a boundary y", rep.case))?;
                ensure((rep.lhs - rep.rhs).abs() <= TRIANGLE_EPS, || {
                    format!("boundary: {} against {}", rep.lhs, rep.rhs)
                })?;
            }
            local += 1;
            triples += 1;
        }
    }
    let mut exterior = 0;
    for _ in 0..10 {
        let e = ellipse_polygon(64, r.gen_range(0.6..1.0), r.gen_range(0.6..1.0)).map_err(err)?;
        let c = SymmetricPolygon::new(e, &tol()).map_err(err)?;
        for _ in 0..30 {
            let (x, z) = near_pair(&mut r, &c);
            let y = random_point(&mut r, 2, -1.5, 1.5);
            let rep = c.triangle_report(&x, &y, &z).map_err(err)?;
            if rep.case == TriangleCase::Exterior {
                ensure(rep.lhs >= rep.rhs - SMOOTH_TRIANGLE_EPS, || {
                    format!("exterior: {} < {}", rep.lhs, rep.rhs)
                })?;
                exterior += 1;
            }
        }
    }
    ensure(exterior >= 50, || format!("only {exterior} exterior triples sampled"))?;
    Ok(format!("{triples} interior/boundary triples, {exterior} exterior triples on 64-gons"))
}

fn perimeter_bounds() -> Outcome {
    let mut r = rng(6);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for _ in 0..100 {
        let half = r.gen_range(2..9);
        let c = SymmetricPolygon::new(random_symmetric_polygon(&mut r, half).map_err(err)?, &tol())
            .map_err(err)?;
        let l = c.perimeter();
        ensure((6.0 - 1e-7..=8.0 + 1e-7).contains(&l), || format!("perimeter {l}"))?;
        lo = lo.min(l);
        hi = hi.max(l);
    }
    let (a, b) = (random_point(&mut r, 2, -1.0, 1.0), random_point(&mut r, 2, -1.0, 1.0));
    let affine = |p: &Point| Point::from([a[0] * p[0] + b[0] * p[1], a[1] * p[0] + b[1] * p[1]]);
    let hex: Vec<Point> = regular_polygon(6, 1.0, 0.3).map_err(err)?.vertices().iter().map(affine).collect();
    let hex = SymmetricPolygon::new(ConvexBody::from_vertices(&hex, &tol()).map_err(err)?, &tol()).map_err(err)?;
    ensure((hex.perimeter() - 6.0).abs() <= 1e-9, || format!("affine hexagon {}", hex.perimeter()))?;
    let par: Vec<Point> = cube(2, 1.0).map_err(err)?.vertices().iter().map(affine).collect();
    let par = SymmetricPolygon::new(ConvexBody::from_vertices(&par, &tol()).map_err(err)?, &tol()).map_err(err)?;
    ensure((par.perimeter() - 8.0).abs() <= 1e-9, || format!("parallelogram {}", par.perimeter()))?;
    for _ in 0..50 {
        let half = r.gen_range(2..7);
        let c = SymmetricPolygon::new(random_symmetric_polygon(&mut r, half).map_err(err)?, &tol())
            .map_err(err)?;
        let m = r.gen_range(3..9);
        let d = random_polygon(&mut r, m).map_err(err)?;
        let s = central_symmetral(&d, &tol()).map_err(err)?;
        let (pd, ps) = (c.perim_c(&d).map_err(err)?, c.perim_c(&s).map_err(err)?);
        ensure((pd - ps).abs() <= 1e-7, || format!("perim of D {pd} against its symmetral {ps}"))?;
    }
    Ok(format!("range [{lo:.4}, {hi:.4}]; hexagon 6, parallelogram 8; 50 symmetrals"))
}

fn caratheodory_numbers() -> Outcome {
    const TRIALS: usize = 200;
    const POINTS: usize = 6;
    let mut r = rng(7);
    let seeded_polygon = |m: usize, seed: u64| -> Result<ConvexBody, String> {
        random_polygon(&mut rng(seed), m).map_err(err)
    };
    let mut cases: Vec<(&str, ConvexBody, usize)> = vec![
        ("parallelogram", random_parallelogram(&mut r).map_err(err)?, 2),
        ("triangle", simplex(2).map_err(err)?, 3),
        ("pentagon", regular_polygon(5, 1.0, 0.0).map_err(err)?, 3),
        ("hexagon", regular_polygon(6, 1.0, 0.0).map_err(err)?, 3),
        ("random 7-gon", seeded_polygon(7, 77)?, 3),
        ("12-gon ellipse", ellipse_polygon(12, 1.0, 0.6).map_err(err)?, 3),
    ];
    cases.push(("cube", cube(3, 1.0).map_err(err)?, 3));
    cases.push(("3-simplex", simplex(3).map_err(err)?, 4));
    let mut seen = Vec::new();
    for (name, c, want) in &cases {
        let got = caratheodory_estimate(c, TRIALS, POINTS, 70, &tol()).map_err(err)?;
        ensure(got == *want, || format!("{name}: estimate {got}, expected {want}"))?;
        let kn = kn_bound_check(c, TRIALS, 71, &tol()).map_err(err)?;
        ensure(kn, || format!("{name}: estimate above facets times dimension"))?;
        seen.push(format!("{name} {got}"));
    }
    let hex = regular_polygon(6, 1.0, 0.0).map_err(err)?;
    let (x, p) = triangle_instance(&hex, &tol())
        .map_err(err)?
        .ok_or("no triangle instance for the hexagon")?;
    let x = PointSet::new(2, x).map_err(err)?;
    ensure(membership(&hex, &x, &p, &tol()).map_err(err)?, || "centroid outside the hull".into())?;
    let two = caratheodory_witness(&hex, &x, &p, 2, &tol()).map_err(err)?;
    let three = caratheodory_witness(&hex, &x, &p, 3, &tol()).map_err(err)?;
    ensure(two.is_none() && three.is_some(), || "triangle instance has a 2-witness".into())?;
    Ok(format!("{}; triangle instance needs 3", seen.join(", ")))
}

fn bb_construction() -> Outcome {
    let mut notes = Vec::new();
    for k in [4, 6] {
        let inst = bb_construction_auto(k, &tol()).map_err(err)?;
        let o = Point::origin(3);
        let x = &inst.generators;
        ensure(x.len() == k, || format!("{} generators for k = {k}", x.len()))?;
        ensure(membership(&inst.body, x, &o, &tol()).map_err(err)?, || {
            format!("k = {k}: origin not in bconv(X)")
        })?;
        for i in 0..k {
            let rest: Vec<usize> = (0..k).filter(|&j| j != i).collect();
            ensure(!membership(&inst.body, &x.subset(&rest), &o, &tol()).map_err(err)?, || {
                format!("k = {k}: origin in bconv(X without t_{i})")
            })?;
        }
        notes.push(format!("k = {k}: {} vertices", inst.body.vertices().len()));
    }
    Ok(notes.join("; "))
}

fn generation() -> Outcome {
    let mut r = rng(9);
    for (name, c) in [("cube", cube(3, 1.0).map_err(err)?), ("simplex", simplex(3).map_err(err)?)] {
        let mut done = 0;
        while done < 50 {
            let pts: Vec<Point> = (0..5).map(|_| inner_point(&mut r, &c.scale(0.25))).collect();
            let set = PointSet::new(3, pts).map_err(err)?;
            let p = body(ball_hull(&c, &set, &tol()).map_err(err)?, "target")?;
            if !p.is_full_dimensional() {
                continue;
            }
            let cert = is_k_generated(&c, &p, 2, &tol())
                .map_err(err)?
                .ok_or_else(|| format!("{name}: target without a 2-certificate"))?;
            let q = body(
                ball_hull(&c, &PointSet::new(3, cert.points.clone()).map_err(err)?, &tol()).map_err(err)?,
                "certificate hull",
            )?;
            let d = hausdorff_distance(&p, &q).map_err(err)?;
            ensure(cert.verified && d <= SET_EPS, || format!("{name}: certificate off by {d}"))?;
            done += 1;
        }
    }
    let c = truncated_simplex(3, 2, 0.1, &tol()).map_err(err)?;
    let half = c.scale(0.5);
    let (h, _) = facet_hitting_number(&half, &tol()).map_err(err)?;
    ensure(h >= 3, || format!("hitting number {h}"))?;
    let two = is_k_generated(&c, &half, 2, &tol()).map_err(err)?;
    ensure(two.is_none(), || "half truncated simplex is 2-generated".into())?;
    Ok(format!("100 two-point certificates; truncated simplex hitting number {h}, not 2-generated"))
}

fn is_parallelogram(k: &ConvexBody) -> bool {
    let v = k.vertices();
    v.len() == 4 && (&(&v[0] + &v[2]) - &(&v[1] + &v[3])).norm() <= 1e-9
}

fn covering() -> Outcome {
    let mut r = rng(10);
    for _ in 0..10 {
        let k = random_parallelogram(&mut r).map_err(err)?;
        let (n, cert) = illumination_number_2d(&k, &tol()).map_err(err)?;
        ensure(n == 4 && verify_cover(&k, &cert).map_err(err)?, || format!("parallelogram gave {n}"))?;
    }
    let mut done = 0;
    while done < 40 {
        let m = r.gen_range(3..11);
        let k = random_polygon(&mut r, m).map_err(err)?;
        if is_parallelogram(&k) {
            continue;
        }
        let (n, cert) = illumination_number_2d(&k, &tol()).map_err(err)?;
        ensure(n == 3 && verify_cover(&k, &cert).map_err(err)?, || format!("{m}-gon gave {n}"))?;
        done += 1;
    }
    for _ in 0..20 {
        let m = r.gen_range(4..9);
        let k = random_polygon(&mut r, m).map_err(err)?;
        let k = k.translate(&-&k.vertex_centroid());
        let (_, cert) = illumination_number_2d(&k, &tol()).map_err(err)?;
        let delta = 1.0 / cert.ratio.sqrt();
        let pts: Vec<Point> = k.vertices().iter().map(|v| v.scale(r.gen_range(1.0 / delta..1.0))).collect();
        let l = ConvexBody::hull(&pts, &tol()).map_err(err)?;
        let ok = covering_semicontinuity_probe(&k, &l, &cert, &tol()).map_err(err)?;
        ensure(ok, || "sandwich copies miss part of L".into())?;
    }
    let mut worst: f64 = 0.0;
    for _ in 0..10 {
        let m = r.gen_range(3..9);
        let c = random_polygon(&mut r, m).map_err(err)?;
        let n = r.gen_range(1..5);
        let x = inner_set(&mut r, &c, n, 0.3);
        let v = random_point(&mut r, 2, -0.1, 0.1);
        let g = c.vertex_centroid();
        let c_seq: Vec<ConvexBody> = (1..=10).map(|i| c.scale_about(&g, 1.0 + 1.0 / i as f64)).collect();
        let x_seq: Vec<PointSet> = (1..=10).map(|i| x.translate(&v.scale(1.0 / i as f64))).collect();
        let rep = bplus_stability_probe(&c_seq, &x_seq, &c, &x, &tol()).map_err(err)?;
        ensure(rep.fit_holds, || format!("d_i = {:?} exceed {}/i", rep.distances, rep.fitted_c))?;
        worst = worst.max(rep.fitted_c);
    }
    Ok(format!("10 parallelograms 4, 40 polygons 3, 20 sandwiches, 10 B+ sequences (c <= {worst:.3})"))
}

fn convexity_structure_closure() -> Outcome {
    let mut r = rng(11);
    let (mut worst, mut most) = (0.0f64, 0);
    let mut done = 0;
    while done < 50 {
        let m = r.gen_range(3..10);
        let c = random_polygon(&mut r, m).map_err(err)?;
        let n = r.gen_range(3..7);
        let a = inner_set(&mut r, &c, n, 0.7);
        if !ConvexBody::hull(a.points(), &tol()).map_err(err)?.is_full_dimensional() {
            continue;
        }
        let s = spindle_hull_iterate(&c, &a, CLOSURE_ITERATIONS, &tol()).map_err(err)?;
        ensure(s.gap <= CLOSURE_GAP && s.iterations <= CLOSURE_ITERATIONS, || {
            format!("gap {} after {} iterations", s.gap, s.iterations)
        })?;
        worst = worst.max(s.gap);
        most = most.max(s.iterations);
        done += 1;
    }
    Ok(format!("50 planar instances, worst gap {worst:.1e}, at most {most} iterations"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("hexagon-prism regression", hexagon_prism_regression),
        ("box and simplex closed forms", box_and_simplex_closed_forms),
        ("planar separation completeness", planar_separation_completeness),
        ("arc-disk oracle", arc_disk_oracle),
        ("triangle trichotomy", triangle_trichotomy),
        ("perimeter bounds", perimeter_bounds),
        ("Caratheodory numbers", caratheodory_numbers),
        ("paraboloid construction", bb_construction),
        ("generation", generation),
        ("covering", covering),
        ("convexity-structure closure", convexity_structure_closure),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
