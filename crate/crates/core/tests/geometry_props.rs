use ballconv::bodies::{random_point, random_polygon, random_polytope_3d, random_symmetric_polygon, rng};
use ballconv::{
    central_symmetral, gauge_norm, hausdorff_distance, lp_min, minkowski_sum_2d,
    vertex_enumeration, ConvexBody, Halfspace, LpOutcome, Point, Tolerance, VertexEnumeration,
};
use proptest::prelude::*;
use rand::Rng;

fn tol() -> Tolerance {
    Tolerance::default()
}

fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Minimum of `c . x` over all feasible intersections of `dim` constraint
/// hyperplanes, by brute force (Cramer's rule).
fn brute_min(c: &[f64], hs: &[Halfspace]) -> Option<f64> {
    let dim = c.len();
    let mut best: Option<f64> = None;
    let feasible = |x: &Point| hs.iter().all(|h| h.normal.dot(x) <= h.offset + 1e-9);
    let n = hs.len();
    let mut consider = |x: Point| {
        if feasible(&x) {
            let v = c.iter().zip(x.coords()).map(|(a, b)| a * b).sum::<f64>();
            best = Some(best.map_or(v, |b: f64| b.min(v)));
        }
    };
    if dim == 2 {
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&hs[i], &hs[j]);
                let d = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
                if d.abs() < 1e-12 {
                    continue;
                }
                consider(Point::from([
                    (a.offset * b.normal[1] - b.offset * a.normal[1]) / d,
                    (a.normal[0] * b.offset - b.normal[0] * a.offset) / d,
                ]));
            }
        }
    } else {
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let rows = [&hs[i], &hs[j], &hs[k]];
                    let m = [0, 1, 2].map(|r| [0, 1, 2].map(|s| rows[r].normal[s]));
                    let d = det3(m);
                    if d.abs() < 1e-12 {
                        continue;
                    }
                    let x: Vec<f64> = (0..3)
                        .map(|col| {
                            let mut mm = m;
                            for r in 0..3 {
                                mm[r][col] = rows[r].offset;
                            }
                            det3(mm) / d
                        })
                        .collect();
                    consider(Point::new(x));
                }
            }
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lp_optimum_matches_vertex_minimum(seed in any::<u64>(), dim in 2usize..=3, extra in 1usize..8) {
        let mut r = rng(seed);
        let mut hs = Vec::new();
        for j in 0..dim {
            hs.push(Halfspace::new(Point::unit(dim, j), 1.0).unwrap());
            hs.push(Halfspace::new(-Point::unit(dim, j), 1.0).unwrap());
        }
        for _ in 0..extra {
            let n = random_point(&mut r, dim, -1.0, 1.0);
            if n.norm() > 0.1 {
                hs.push(Halfspace::new(n, r.gen_range(0.1..1.0)).unwrap());
            }
        }
        let c: Vec<f64> = (0..dim).map(|_| r.gen_range(-1.0..1.0)).collect();
        let out = lp_min(&Point::new(c.clone()), &hs, &tol()).unwrap();
        let expect = brute_min(&c, &hs).unwrap();
        match out {
            LpOutcome::Optimal { value, point } => {
                prop_assert!((value - expect).abs() <= 1e-8, "{value} vs {expect}");
                prop_assert!(hs.iter().all(|h| h.contains(&point, 1e-9)));
            }
            other => prop_assert!(false, "unexpected {other:?}"),
        }
    }

    #[test]
    fn minkowski_support_adds(seed in any::<u64>(), m1 in 3usize..9, m2 in 3usize..9) {
        let mut r = rng(seed);
        let a = random_polygon(&mut r, m1).unwrap();
        let b = random_polygon(&mut r, m2).unwrap();
        let s = minkowski_sum_2d(&a, &b, &tol()).unwrap();
        for i in 0..32 {
            let t = i as f64 * std::f64::consts::TAU / 32.0 + 0.01;
            let u = Point::from([t.cos(), t.sin()]);
            let lhs = s.support(&u).unwrap();
            let rhs = a.support(&u).unwrap() + b.support(&u).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-9);
        }
    }

    #[test]
    fn symmetral_is_symmetric_with_same_width(seed in any::<u64>(), m in 3usize..9) {
        let mut r = rng(seed);
        let c = random_polygon(&mut r, m).unwrap();
        let s = central_symmetral(&c, &tol()).unwrap();
        for i in 0..24 {
            let t = i as f64 * std::f64::consts::TAU / 24.0 + 0.03;
            let u = Point::from([t.cos(), t.sin()]);
            let (su, sm) = (s.support(&u).unwrap(), s.support(&-&u).unwrap());
            prop_assert!((su - sm).abs() <= 1e-9);
            let width = c.support(&u).unwrap() + c.support(&-&u).unwrap();
            prop_assert!((su + sm - width).abs() <= 1e-9);
        }
    }

    #[test]
    fn gauge_is_homogeneous_and_even(seed in any::<u64>(), half in 2usize..6, t in 0.0f64..5.0) {
        let mut r = rng(seed);
        let b = random_symmetric_polygon(&mut r, half).unwrap();
        let v = random_point(&mut r, 2, -2.0, 2.0);
        let g = gauge_norm(&b, &v, &tol()).unwrap();
        prop_assert!((gauge_norm(&b, &v.scale(t), &tol()).unwrap() - t * g).abs() <= 1e-9 * (1.0 + t * g));
        prop_assert!((gauge_norm(&b, &-&v, &tol()).unwrap() - g).abs() <= 1e-9 * (1.0 + g));
    }

    #[test]
    fn venum_inverts_facets(seed in any::<u64>(), three in any::<bool>(), m in 3usize..10) {
        let mut r = rng(seed);
        let p: ConvexBody = if three {
            random_polytope_3d(&mut r, m + 2).unwrap()
        } else {
            random_polygon(&mut r, m).unwrap()
        };
        match vertex_enumeration(p.halfspaces(), &tol()).unwrap() {
            VertexEnumeration::Body(q) => {
                prop_assert!(hausdorff_distance(&p, &q).unwrap() <= 1e-7);
                prop_assert_eq!(p.vertices().len(), q.vertices().len());
            }
            other => prop_assert!(false, "unexpected {other:?}"),
        }
    }
}
