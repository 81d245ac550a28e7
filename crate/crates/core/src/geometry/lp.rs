//! Dense simplex solver for small linear programs `min c·x  s.t.  A x <= b`
//! with free variables.
//!
//! The solver works on the dual standard form `min b·y  s.t.  A^T y = -c, y >= 0`
//! which has one row per primal variable, so its tableau stays `d x m` even when
//! the primal has hundreds of constraints. Pivoting follows Bland's rule. The
//! primal optimum is recovered from the optimal basis as the intersection of the
//! basic constraints.

use super::halfspace::Halfspace;
use super::point::Point;
use crate::error::{GeomError, Result};
use crate::tolerance::Tolerance;

/// Result of a linear program.
#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: f64, point: Point },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn value(&self) -> Option<f64> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn point(&self) -> Option<&Point> {
        match self {
            LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

/// Minimizes `objective · x` over the constraints and returns the
/// lexicographically smallest optimal vertex.
pub fn lp_min(objective: &Point, constraints: &[Halfspace], tol: &Tolerance) -> Result<LpOutcome> {
    let dim = objective.dim();
    for h in constraints {
        h.normal.check_dim(dim)?;
    }
    let first = lp_solve(objective.coords(), constraints, tol)?;
    let value = match first {
        LpOutcome::Optimal { value, .. } => value,
        other => return Ok(other),
    };
    let mut extra: Vec<Halfspace> = constraints.to_vec();
    let slack = |v: f64| 10.0 * tol.eps_lp * v.abs().max(1.0);
    if objective.norm() > 0.0 {
        extra.push(Halfspace {
            normal: objective.clone(),
            offset: value + slack(value),
        });
    }
    let mut point = first.point().cloned().expect("optimal point");
    for j in 0..dim {
        let e = Point::unit(dim, j);
        match lp_solve(e.coords(), &extra, tol)? {
            LpOutcome::Optimal {
                value: xj,
                point: p,
            } => {
                point = p;
                extra.push(Halfspace {
                    normal: e,
                    offset: xj + slack(xj),
                });
            }
            // The coordinate is unbounded below on the optimal face; keep the
            // point found so far.
            LpOutcome::Unbounded => break,
            LpOutcome::Infeasible => break,
        }
    }
    let point = polish(&point, constraints, tol).unwrap_or(point);
    let value = objective.dot(&point);
    Ok(LpOutcome::Optimal { value, point })
}

/// Snaps a near-vertex to the exact intersection of the constraints tight at
/// it, when those determine a point that is still feasible.
fn polish(x: &Point, constraints: &[Halfspace], tol: &Tolerance) -> Option<Point> {
    let dim = x.dim();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for h in constraints {
        let n = h.normal.norm();
        if (h.normal.dot(x) - h.offset).abs() <= 1e-7 * n * h.offset.abs().max(1.0) {
            rows.push(
                h.normal
                    .coords()
                    .iter()
                    .map(|a| a / n)
                    .collect::<Vec<f64>>(),
            );
            rhs.push(h.offset / n);
        }
    }
    let idx: Vec<usize> = (0..rows.len()).collect();
    let (y, rank) = solve_tight_rank(&rows, &rhs, &idx, dim);
    if rank < dim {
        return None;
    }
    let y = Point::new(y);
    let ok = constraints.iter().all(|h| h.contains(&y, tol.eps_geom)) && y.dist(x) <= 1e-6;
    ok.then_some(y)
}

/// Minimizes `objective · x` and returns some optimal vertex.
pub fn lp_solve(
    objective: &[f64],
    constraints: &[Halfspace],
    tol: &Tolerance,
) -> Result<LpOutcome> {
    let dim = objective.len();
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(constraints.len());
    let mut rhs: Vec<f64> = Vec::with_capacity(constraints.len());
    for h in constraints {
        if h.dim() != dim {
            return Err(GeomError::DimensionMismatch {
                expected: dim,
                found: h.dim(),
            });
        }
        let n = h.normal.norm();
        if n <= 1e-300 {
            if h.offset < -tol.eps_lp {
                return Ok(LpOutcome::Infeasible);
            }
            continue;
        }
        rows.push(h.normal.coords().iter().map(|a| a / n).collect());
        rhs.push(h.offset / n);
    }
    solve_rows(objective, &rows, &rhs, tol.eps_lp)
}

/// Same as [`lp_solve`] on raw rows; rows are expected to be roughly unit length.
pub(crate) fn solve_rows(c: &[f64], rows: &[Vec<f64>], b: &[f64], eps: f64) -> Result<LpOutcome> {
    let dim = c.len();
    if rows.is_empty() {
        return Ok(if c.iter().all(|x| x.abs() <= eps) {
            LpOutcome::Optimal {
                value: 0.0,
                point: Point::origin(dim),
            }
        } else {
            LpOutcome::Unbounded
        });
    }
    let neg_c: Vec<f64> = c.iter().map(|x| -x).collect();
    let mut dual = DualTableau::new(rows, &neg_c, eps);
    if !dual.phase_one()? {
        // Dual infeasible: the primal is infeasible or unbounded. Decide
        // feasibility with a Farkas system.
        let zero = vec![0.0; dim];
        let mut farkas = DualTableau::new(rows, &zero, eps);
        let ok = farkas.phase_one()?;
        debug_assert!(ok);
        return Ok(match farkas.phase_two(b)? {
            Phase2::Unbounded => LpOutcome::Infeasible,
            Phase2::Optimal => LpOutcome::Unbounded,
        });
    }
    match dual.phase_two(b)? {
        Phase2::Unbounded => Ok(LpOutcome::Infeasible),
        Phase2::Optimal => {
            let basic: Vec<usize> = dual.basic_constraints();
            let x = solve_tight(rows, b, &basic, dim);
            let point = Point::new(x);
            let value = point.dot_slice(c);
            Ok(LpOutcome::Optimal { value, point })
        }
    }
}

enum Phase2 {
    Optimal,
    Unbounded,
}

struct DualTableau {
    m: usize,
    d: usize,
    /// `d` rows of `m + d` columns (constraint columns then artificials).
    t: Vec<Vec<f64>>,
    rhs: Vec<f64>,
    basis: Vec<usize>,
    dead_row: Vec<bool>,
    eps: f64,
}

impl DualTableau {
    fn new(rows: &[Vec<f64>], g: &[f64], eps: f64) -> Self {
        let m = rows.len();
        let d = g.len();
        let mut t = vec![vec![0.0; m + d]; d];
        let mut rhs = vec![0.0; d];
        for j in 0..d {
            let s = if g[j] < 0.0 { -1.0 } else { 1.0 };
            for (i, row) in rows.iter().enumerate() {
                t[j][i] = s * row[j];
            }
            t[j][m + j] = 1.0;
            rhs[j] = s * g[j];
        }
        DualTableau {
            m,
            d,
            t,
            rhs,
            basis: (m..m + d).collect(),
            dead_row: vec![false; d],
            eps,
        }
    }

    fn pivot(&mut self, r: usize, k: usize) {
        let p = self.t[r][k];
        let ncol = self.m + self.d;
        for c in 0..ncol {
            self.t[r][c] /= p;
        }
        self.rhs[r] /= p;
        let pivot_row = self.t[r].clone();
        let pivot_rhs = self.rhs[r];
        for j in 0..self.d {
            if j == r {
                continue;
            }
            let f = self.t[j][k];
            if f != 0.0 {
                for c in 0..ncol {
                    self.t[j][c] -= f * pivot_row[c];
                }
                self.rhs[j] -= f * pivot_rhs;
                self.t[j][k] = 0.0;
            }
        }
        self.basis[r] = k;
    }

    /// Runs the simplex method on `costs` restricted to `ncols` columns.
    fn optimize(&mut self, costs: &[f64], ncols: usize) -> Result<Phase2> {
        let limit = 50 * (self.m + self.d) + 1000;
        for _ in 0..limit {
            // Reduced costs.
            let mut entering = None;
            for k in 0..ncols {
                if self.basis.contains(&k) {
                    continue;
                }
                let mut r = costs[k];
                for j in 0..self.d {
                    let cb = costs.get(self.basis[j]).copied().unwrap_or(0.0);
                    r -= cb * self.t[j][k];
                }
                if r < -self.eps {
                    entering = Some(k);
                    break;
                }
            }
            let k = match entering {
                None => return Ok(Phase2::Optimal),
                Some(k) => k,
            };
            let mut leave: Option<(usize, f64)> = None;
            for j in 0..self.d {
                if self.dead_row[j] {
                    continue;
                }
                let a = self.t[j][k];
                if a > self.eps {
                    let ratio = self.rhs[j].max(0.0) / a;
                    leave = match leave {
                        None => Some((j, ratio)),
                        Some((lj, lr)) => {
                            let tie = (ratio - lr).abs() <= 1e-12 * lr.abs().max(1.0);
                            if ratio < lr && !tie || tie && self.basis[j] < self.basis[lj] {
                                Some((j, ratio))
                            } else {
                                Some((lj, lr))
                            }
                        }
                    };
                }
            }
            match leave {
                None => return Ok(Phase2::Unbounded),
                Some((r, _)) => self.pivot(r, k),
            }
        }
        Err(GeomError::Lp("simplex iteration limit reached".into()))
    }

    /// Returns whether the dual system is feasible.
    fn phase_one(&mut self) -> Result<bool> {
        let ncols = self.m + self.d;
        let mut costs = vec![0.0; ncols];
        for c in costs.iter_mut().skip(self.m) {
            *c = 1.0;
        }
        let scale = self.rhs.iter().fold(1.0_f64, |a, b| a.max(b.abs()));
        match self.optimize(&costs, ncols)? {
            Phase2::Unbounded => unreachable!("phase one is bounded below"),
            Phase2::Optimal => {}
        }
        let infeas: f64 = (0..self.d)
            .filter(|&j| self.basis[j] >= self.m)
            .map(|j| self.rhs[j].abs())
            .sum();
        if infeas > 1e3 * self.eps * scale {
            return Ok(false);
        }
        // Drive artificials out of the basis.
        for r in 0..self.d {
            if self.basis[r] < self.m {
                continue;
            }
            let mut best: Option<(usize, f64)> = None;
            for k in 0..self.m {
                if self.basis.contains(&k) {
                    continue;
                }
                let a = self.t[r][k].abs();
                if a > 1e-9 && best.map_or(true, |(_, b)| a > b) {
                    best = Some((k, a));
                }
            }
            match best {
                Some((k, _)) => self.pivot(r, k),
                None => {
                    self.dead_row[r] = true;
                    self.rhs[r] = 0.0;
                }
            }
        }
        Ok(true)
    }

    fn phase_two(&mut self, b: &[f64]) -> Result<Phase2> {
        self.optimize(b, self.m)
    }

    fn basic_constraints(&self) -> Vec<usize> {
        (0..self.d)
            .filter(|&j| !self.dead_row[j] && self.basis[j] < self.m)
            .map(|j| self.basis[j])
            .collect()
    }
}

/// Solves `rows[i] · x = b[i]` for `i` in `idx` by Gaussian elimination with
/// partial pivoting; undetermined coordinates are set to zero.
fn solve_tight(rows: &[Vec<f64>], b: &[f64], idx: &[usize], dim: usize) -> Vec<f64> {
    solve_tight_rank(rows, b, idx, dim).0
}

fn solve_tight_rank(rows: &[Vec<f64>], b: &[f64], idx: &[usize], dim: usize) -> (Vec<f64>, usize) {
    let mut a: Vec<Vec<f64>> = idx
        .iter()
        .map(|&i| {
            let mut r = rows[i].clone();
            r.push(b[i]);
            r
        })
        .collect();
    let n = a.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..dim {
        if row >= n {
            break;
        }
        let (best, val) = (row..n)
            .map(|r| (r, a[r][col].abs()))
            .fold((row, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if val <= 1e-12 {
            continue;
        }
        a.swap(row, best);
        for r in 0..n {
            if r != row {
                let f = a[r][col] / a[row][col];
                if f != 0.0 {
                    for c in col..=dim {
                        a[r][c] -= f * a[row][c];
                    }
                }
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    let mut x = vec![0.0; dim];
    for &(r, c) in &pivots {
        x[c] = a[r][dim] / a[r][c];
    }
    let rank = pivots.len();
    (x, rank)
}
