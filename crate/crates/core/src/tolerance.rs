use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

/// Numerical tolerances shared by every operation.
///
/// `eps_geom` is the slack for incidence and containment tests, `eps_set` is the
/// Hausdorff distance under which two sets are considered equal and `eps_lp` is
/// the pivoting tolerance of the simplex solver.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub eps_geom: f64,
    pub eps_set: f64,
    pub eps_lp: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_geom: 1e-9,
            eps_set: 1e-7,
            eps_lp: 1e-10,
        }
    }
}

impl Tolerance {
    pub fn new(eps_geom: f64, eps_set: f64, eps_lp: f64) -> Result<Self> {
        let tol = Tolerance {
            eps_geom,
            eps_set,
            eps_lp,
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        let all_positive = [self.eps_geom, self.eps_set, self.eps_lp]
            .iter()
            .all(|e| e.is_finite() && *e > 0.0);
        if !all_positive {
            return Err(GeomError::InvalidInput(
                "tolerances must be positive and finite".into(),
            ));
        }
        if !(self.eps_lp <= self.eps_geom && self.eps_geom <= self.eps_set) {
            return Err(GeomError::InvalidInput(
                "tolerances must satisfy eps_lp <= eps_geom <= eps_set".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_ordered() {
        assert!(Tolerance::default().validate().is_ok());
    }

    #[test]
    fn rejects_misordered() {
        assert!(Tolerance::new(1e-6, 1e-7, 1e-10).is_err());
        assert!(Tolerance::new(1e-9, 1e-7, 0.0).is_err());
    }
}
