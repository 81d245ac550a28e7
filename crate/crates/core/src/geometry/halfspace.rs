use serde::{Deserialize, Serialize};

use super::point::Point;
use crate::error::{GeomError, Result};

/// The closed halfspace `{ x : normal · x <= offset }`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: Point,
    pub offset: f64,
}

impl Halfspace {
    pub fn new(normal: Point, offset: f64) -> Result<Self> {
        if !offset.is_finite() {
            return Err(GeomError::InvalidInput(
                "non-finite halfspace offset".into(),
            ));
        }
        if normal.norm() <= 1e-12 {
            return Err(GeomError::InvalidInput("zero halfspace normal".into()));
        }
        Ok(Halfspace { normal, offset })
    }

    pub fn from_coords(normal: &[f64], offset: f64) -> Result<Self> {
        Self::new(Point::try_new(normal.to_vec())?, offset)
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// `normal · x - offset`; positive outside.
    pub fn slack_violation(&self, x: &Point) -> f64 {
        self.normal.dot(x) - self.offset
    }

    pub fn contains(&self, x: &Point, eps: f64) -> bool {
        self.slack_violation(x) <= eps * self.normal.norm().max(1.0)
    }

    /// Same set with a unit normal.
    pub fn normalized(&self) -> Halfspace {
        let n = self.normal.norm();
        Halfspace {
            normal: self.normal.scale(1.0 / n),
            offset: self.offset / n,
        }
    }

    pub fn translate(&self, v: &Point) -> Halfspace {
        Halfspace {
            normal: self.normal.clone(),
            offset: self.offset + self.normal.dot(v),
        }
    }

    /// The halfspace describing `-H`.
    pub fn reflect(&self) -> Halfspace {
        Halfspace {
            normal: -&self.normal,
            offset: self.offset,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn containment_and_translation() {
        let h = Halfspace::from_coords(&[1.0, 0.0], 1.0).unwrap();
        assert!(h.contains(&Point::from([1.0, 5.0]), 1e-12));
        assert!(!h.contains(&Point::from([1.1, 0.0]), 1e-12));
        let t = h.translate(&Point::from([2.0, 0.0]));
        assert!(t.contains(&Point::from([3.0, 0.0]), 1e-12));
    }

    #[test]
    fn zero_normal_rejected() {
        assert!(Halfspace::from_coords(&[0.0, 0.0], 1.0).is_err());
    }

    #[test]
    fn normalization_keeps_set() {
        let h = Halfspace::from_coords(&[3.0, 4.0], 10.0)
            .unwrap()
            .normalized();
        assert!((h.normal.norm() - 1.0).abs() < 1e-15);
        assert!((h.offset - 2.0).abs() < 1e-15);
    }
}
