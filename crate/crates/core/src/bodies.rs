//! Named example bodies and seeded random generators.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{GeomError, Result};
use crate::geometry::{ConvexBody, Point};
use crate::tolerance::Tolerance;

/// Deterministic generator used by every randomized routine.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn hull(points: &[Point]) -> Result<ConvexBody> {
    ConvexBody::from_vertices(points, &Tolerance::default())
}

/// The axis-parallel cube `[-h, h]^dim`.
pub fn cube(dim: usize, h: f64) -> Result<ConvexBody> {
    axis_box(&vec![-h; dim], &vec![h; dim])
}

/// The box `[lo_1, hi_1] x ... x [lo_n, hi_n]`.
pub fn axis_box(lo: &[f64], hi: &[f64]) -> Result<ConvexBody> {
    let dim = lo.len();
    if dim == 0 || hi.len() != dim || lo.iter().zip(hi).any(|(a, b)| !(a < b)) {
        return Err(GeomError::InvalidInput(
            "box needs lo < hi in every coordinate".into(),
        ));
    }
    let pts: Vec<Point> = (0..1usize << dim)
        .map(|m| {
            Point::new(
                (0..dim)
                    .map(|j| if m >> j & 1 == 1 { hi[j] } else { lo[j] })
                    .collect(),
            )
        })
        .collect();
    hull(&pts)
}

/// Regular simplex with centroid at the origin and circumradius one.
pub fn simplex(dim: usize) -> Result<ConvexBody> {
    let pts: Vec<Point> = match dim {
        1 => vec![Point::from([-1.0]), Point::from([1.0])],
        2 => return regular_polygon(3, 1.0, std::f64::consts::FRAC_PI_2),
        3 => {
            let s = 1.0 / 3f64.sqrt();
            [
                [1.0, 1.0, 1.0],
                [1.0, -1.0, -1.0],
                [-1.0, 1.0, -1.0],
                [-1.0, -1.0, 1.0],
            ]
            .iter()
            .map(|c| Point::from(*c).scale(s))
            .collect()
        }
        d => return Err(GeomError::UnsupportedDimension(d)),
    };
    hull(&pts)
}

/// Regular `m`-gon with the given circumradius, first vertex at angle `phase`.
pub fn regular_polygon(m: usize, radius: f64, phase: f64) -> Result<ConvexBody> {
    if m < 3 {
        return Err(GeomError::InvalidInput(
            "a polygon needs at least 3 vertices".into(),
        ));
    }
    let pts: Vec<Point> = (0..m)
        .map(|i| {
            let a = phase + std::f64::consts::TAU * i as f64 / m as f64;
            Point::from([radius * a.cos(), radius * a.sin()])
        })
        .collect();
    hull(&pts)
}

/// Polygon inscribed in the ellipse `(x/a)^2 + (y/b)^2 = 1`.
pub fn ellipse_polygon(m: usize, a: f64, b: f64) -> Result<ConvexBody> {
    let pts: Vec<Point> = (0..m)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / m as f64;
            Point::from([a * t.cos(), b * t.sin()])
        })
        .collect();
    hull(&pts)
}

/// Polytope inscribed in the unit `l_p` ball: `samples` boundary points in the
/// plane, or a latitude-longitude grid of that resolution in space.
pub fn lp_ball(p: f64, dim: usize, samples: usize) -> Result<ConvexBody> {
    if !(p >= 1.0) {
        return Err(GeomError::InvalidInput("l_p ball needs p >= 1".into()));
    }
    let normalize = |v: Vec<f64>| -> Point {
        let n = if p.is_infinite() {
            v.iter().fold(0.0_f64, |a, x| a.max(x.abs()))
        } else {
            v.iter().map(|x| x.abs().powf(p)).sum::<f64>().powf(1.0 / p)
        };
        Point::new(v.into_iter().map(|x| x / n).collect())
    };
    let pts: Vec<Point> = match dim {
        2 => {
            if samples < 4 {
                return Err(GeomError::InvalidInput("need at least 4 samples".into()));
            }
            (0..samples)
                .map(|i| {
                    let t = std::f64::consts::TAU * i as f64 / samples as f64;
                    normalize(vec![t.cos(), t.sin()])
                })
                .collect()
        }
        3 => {
            if samples < 4 {
                return Err(GeomError::InvalidInput("need at least 4 samples".into()));
            }
            let mut pts = vec![
                normalize(vec![0.0, 0.0, 1.0]),
                normalize(vec![0.0, 0.0, -1.0]),
            ];
            for i in 1..samples {
                let phi = std::f64::consts::PI * i as f64 / samples as f64;
                for j in 0..2 * samples {
                    let th = std::f64::consts::PI * j as f64 / samples as f64;
                    pts.push(normalize(vec![
                        phi.sin() * th.cos(),
                        phi.sin() * th.sin(),
                        phi.cos(),
                    ]));
                }
            }
            pts
        }
        d => return Err(GeomError::UnsupportedDimension(d)),
    };
    hull(&pts)
}

/// The body `conv((T + e3) ∪ (-T - e3))` for a regular triangle `T` centered
/// at the origin in the plane `x3 = 0`, together with its hexagonal section
/// `H = (T - T)/2` in that plane (as a flat body).
pub fn hexagon_prism() -> Result<(ConvexBody, ConvexBody)> {
    let tri: Vec<[f64; 2]> = (0..3)
        .map(|i| {
            let a = std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * i as f64 / 3.0;
            [a.cos(), a.sin()]
        })
        .collect();
    let mut pts = Vec::new();
    for t in &tri {
        pts.push(Point::from([t[0], t[1], 1.0]));
        pts.push(Point::from([-t[0], -t[1], -1.0]));
    }
    let c = hull(&pts)?;
    let mut hex = Vec::new();
    for a in &tri {
        for b in &tri {
            if a != b {
                hex.push(Point::from([(a[0] - b[0]) / 2.0, (a[1] - b[1]) / 2.0, 0.0]));
            }
        }
    }
    let h = ConvexBody::hull(&hex, &Tolerance::default())?;
    Ok((c, h))
}

/// The affine regular hexagon `(T - T)/2` for `T = conv{0, e1, e2}`.
pub fn hexagon_symmetral() -> Result<ConvexBody> {
    let v = [
        [0.5, 0.0],
        [-0.5, 0.0],
        [0.0, 0.5],
        [0.0, -0.5],
        [0.5, -0.5],
        [-0.5, 0.5],
    ];
    hull(&v.map(Point::from))
}

/// Random convex polygon with exactly `m` vertices: sorted random angles
/// (gaps bounded away from `pi`) on a circle with random radii, resampled
/// until all points are in convex position. Practical for `m` up to about 12.
pub fn random_polygon<R: Rng>(rng: &mut R, m: usize) -> Result<ConvexBody> {
    if m < 3 {
        return Err(GeomError::InvalidInput(
            "a polygon needs at least 3 vertices".into(),
        ));
    }
    loop {
        let mut angles: Vec<f64> = (0..m)
            .map(|_| rng.gen::<f64>() * std::f64::consts::TAU)
            .collect();
        angles.sort_by(f64::total_cmp);
        let gaps_ok = (0..m).all(|i| {
            let next = if i + 1 < m {
                angles[i + 1]
            } else {
                angles[0] + std::f64::consts::TAU
            };
            let g = next - angles[i];
            g > 0.15 && g < 0.9 * std::f64::consts::PI
        });
        if !gaps_ok {
            continue;
        }
        let pts: Vec<Point> = angles
            .iter()
            .map(|a| {
                let r = 0.7 + 0.3 * rng.gen::<f64>();
                Point::from([r * a.cos(), r * a.sin()])
            })
            .collect();
        if let Ok(b) = hull(&pts) {
            if b.vertices().len() == m && min_turn(b.vertices()) > 0.02 {
                return Ok(b);
            }
        }
    }
}

/// Smallest exterior-angle sine at a vertex, a measure of how far a polygon is
/// from having collinear consecutive vertices.
fn min_turn(v: &[Point]) -> f64 {
    let m = v.len();
    (0..m)
        .map(|i| {
            let a = &v[(i + m - 1) % m];
            let b = &v[i];
            let c = &v[(i + 1) % m];
            let e = b - a;
            let f = c - b;
            (e[0] * f[1] - e[1] * f[0]) / (e.norm() * f.norm())
        })
        .fold(f64::INFINITY, f64::min)
}

/// Random origin-symmetric polygon with `2 * half` vertices.
pub fn random_symmetric_polygon<R: Rng>(rng: &mut R, half: usize) -> Result<ConvexBody> {
    if half < 2 {
        return Err(GeomError::InvalidInput(
            "need at least 2 vertex pairs".into(),
        ));
    }
    loop {
        let mut angles: Vec<f64> = (0..half)
            .map(|_| rng.gen::<f64>() * std::f64::consts::PI)
            .collect();
        angles.sort_by(f64::total_cmp);
        let gaps_ok = (0..half).all(|i| {
            let next = if i + 1 < half {
                angles[i + 1]
            } else {
                angles[0] + std::f64::consts::PI
            };
            next - angles[i] > 0.1
        });
        if !gaps_ok {
            continue;
        }
        let mut pts = Vec::new();
        for a in &angles {
            let r = 0.6 + 0.4 * rng.gen::<f64>();
            let p = Point::from([r * a.cos(), r * a.sin()]);
            pts.push(-&p);
            pts.push(p);
        }
        if let Ok(b) = hull(&pts) {
            if b.vertices().len() == 2 * half && min_turn(b.vertices()) > 0.02 {
                return Ok(b);
            }
        }
    }
}

/// Random parallelogram `c + [-1,1] u + [-1,1] v` with well-separated `u`, `v`.
pub fn random_parallelogram<R: Rng>(rng: &mut R) -> Result<ConvexBody> {
    let a = rng.gen::<f64>() * std::f64::consts::PI;
    let b = a + 0.4 + rng.gen::<f64>() * (std::f64::consts::PI - 0.8);
    let (s, t) = (0.5 + rng.gen::<f64>(), 0.5 + rng.gen::<f64>());
    let u = Point::from([s * a.cos(), s * a.sin()]);
    let v = Point::from([t * b.cos(), t * b.sin()]);
    let c = Point::from([rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5]);
    let pts = vec![
        &(&c + &u) + &v,
        &(&c + &u) - &v,
        &(&c - &u) - &v,
        &(&c - &u) + &v,
    ];
    hull(&pts)
}

/// Random polytope in space: the hull of `n` random points on a perturbed
/// sphere, resampled until full-dimensional.
pub fn random_polytope_3d<R: Rng>(rng: &mut R, n: usize) -> Result<ConvexBody> {
    if n < 4 {
        return Err(GeomError::InvalidInput("need at least 4 points".into()));
    }
    loop {
        let pts: Vec<Point> = (0..n)
            .map(|_| {
                let z: f64 = rng.gen_range(-1.0..1.0);
                let t: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                let r = (1.0 - z * z).sqrt();
                let s = 0.7 + 0.3 * rng.gen::<f64>();
                Point::from([s * r * t.cos(), s * r * t.sin(), s * z])
            })
            .collect();
        if let Ok(b) = hull(&pts) {
            if b.volume(1e-9) > 0.2 {
                return Ok(b);
            }
        }
    }
}

/// Uniform random point in the axis box `[lo, hi]^dim`.
pub fn random_point<R: Rng>(rng: &mut R, dim: usize, lo: f64, hi: f64) -> Point {
    Point::new((0..dim).map(|_| rng.gen_range(lo..hi)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_bodies() {
        assert_eq!(cube(3, 1.0).unwrap().vertices().len(), 8);
        assert_eq!(simplex(3).unwrap().halfspaces().len(), 4);
        assert_eq!(simplex(2).unwrap().vertices().len(), 3);
        let (c, h) = hexagon_prism().unwrap();
        assert_eq!(c.vertices().len(), 6);
        assert_eq!(c.halfspaces().len(), 8);
        assert_eq!(h.vertices().len(), 6);
        assert_eq!(h.affine_dim(), 2);
        assert_eq!(hexagon_symmetral().unwrap().vertices().len(), 6);
        assert_eq!(lp_ball(f64::INFINITY, 2, 8).unwrap().vertices().len(), 4);
    }

    #[test]
    fn random_generators_are_deterministic() {
        let a = random_polygon(&mut rng(7), 6).unwrap();
        let b = random_polygon(&mut rng(7), 6).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.vertices().len(), 6);
        let s = random_symmetric_polygon(&mut rng(3), 4).unwrap();
        assert!(s.is_origin_symmetric(1e-12));
        assert_eq!(
            random_parallelogram(&mut rng(1)).unwrap().vertices().len(),
            4
        );
        assert!(random_polytope_3d(&mut rng(2), 12)
            .unwrap()
            .is_full_dimensional());
    }
}
