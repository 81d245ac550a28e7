mod common;

use ballconv::bodies::{random_point, random_polygon, rng};
use ballconv::ops::{ball_hull, is_ball_convex};
use ballconv::separation::{
    separate_from_hyperplane, separate_from_point, separate_sets_2d, verify_hyperplane_separation,
    verify_separation, HyperplaneQuery, Side,
};
use ballconv::{ConvexBody, Point, Region};
use common::{inner_point, inner_set, tol, unit};
use proptest::prelude::*;
use rand::Rng;

fn planar_instance(seed: u64) -> (rand_chacha::ChaCha8Rng, ConvexBody, ConvexBody) {
    let mut r = rng(seed);
    let m = r.gen_range(3..9);
    let c = random_polygon(&mut r, m).unwrap();
    let n = r.gen_range(2..6);
    let a = inner_set(&mut r, &c, n, 0.6);
    let Region::Body(k) = ball_hull(&c, &a, &tol()).unwrap() else {
        panic!("hull is not a body")
    };
    (r, c, k)
}

fn far_outside(k: &ConvexBody, p: &Point) -> bool {
    !k.contains(p, 1e-6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn point_certificates_verify(seed in any::<u64>()) {
        let (mut r, c, k) = planar_instance(seed);
        for _ in 0..20 {
            let p = random_point(&mut r, 2, -2.0, 2.0);
            if !far_outside(&k, &p) {
                continue;
            }
            let cert = separate_from_point(&c, &k, &p, &tol()).unwrap();
            let cert = cert.expect("ball convex K separates from every exterior point");
            prop_assert!(verify_separation(&c, &cert.translate, k.vertices(), &[p], false, &tol()).unwrap());
        }
    }

    #[test]
    fn supporting_lines_separate_and_imply_weaker_forms(seed in any::<u64>()) {
        let (mut r, c, k) = planar_instance(seed);
        for i in 0..20 {
            let u = unit(i as f64 * 0.314 + r.gen_range(0.0..0.3));
            let h = k.support(&u).unwrap();
            let (normal, offset, side) = if i % 2 == 0 {
                (u.clone(), h, Side::Below)
            } else {
                (-&u, -h, Side::Above)
            };
            let hq = HyperplaneQuery { normal, offset, side };
            let cert = separate_from_hyperplane(&c, &k, &hq, &tol()).unwrap();
            let cert = cert.expect("planar ball convex K separates from its supporting lines");
            prop_assert!(verify_hyperplane_separation(&c, &cert.translate, &k, &hq, &tol()).unwrap());

            // A point and a small triangle strictly beyond the line.
            let d = r.gen_range(0.01..0.5);
            let w = Point::from([-u[1], u[0]]);
            let base = &Point::from([0.0, 0.0]) + &u.scale(h + d);
            let p = &base + &w.scale(r.gen_range(-1.0..1.0));
            let cp = separate_from_point(&c, &k, &p, &tol()).unwrap();
            prop_assert!(cp.is_some());
            let tri = ConvexBody::from_vertices(
                &[p.clone(), &p + &u.scale(0.2), &(&p + &w.scale(0.2)) + &u.scale(0.1)],
                &tol(),
            )
            .unwrap();
            let cs = separate_sets_2d(&c, &k, &tri, &tol()).unwrap();
            let cs = cs.expect("set separation follows from hyperplane separation");
            prop_assert!(verify_separation(&c, &cs.translate, k.vertices(), tri.vertices(), false, &tol()).unwrap());
        }
    }

    #[test]
    fn ball_convexity_matches_point_separation(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = r.gen_range(3..9);
        let c = random_polygon(&mut r, m).unwrap();
        let small = c.scale_about(&c.vertex_centroid(), 0.7);
        let pts: Vec<Point> = (0..r.gen_range(3..7)).map(|_| inner_point(&mut r, &small)).collect();
        let k = ConvexBody::hull(&pts, &tol()).unwrap();
        prop_assume!(k.is_full_dimensional());
        let convex = is_ball_convex(&c, &k, &tol()).unwrap();
        let mut probes: Vec<Point> = (0..50).map(|_| random_point(&mut r, 2, -1.5, 1.5)).collect();
        let set = ballconv::PointSet::new(2, k.vertices().to_vec()).unwrap();
        if let Region::Body(h) = ball_hull(&c, &set, &tol()).unwrap() {
            // Just inside the hull, since hull boundary points may still separate.
            let g = h.vertex_centroid();
            probes.extend(h.vertices().iter().map(|v| v.lerp(&g, 0.01)));
        }
        let mut all = true;
        for p in probes.iter().filter(|p| far_outside(&k, p)) {
            all &= separate_from_point(&c, &k, p, &tol()).unwrap().is_some();
        }
        prop_assert_eq!(convex, all);
    }
}
