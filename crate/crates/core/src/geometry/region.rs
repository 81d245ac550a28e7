use super::body::ConvexBody;
use super::distance::hausdorff_distance;
use super::halfspace::Halfspace;
use super::point::Point;
use super::venum::{vertex_enumeration, VertexEnumeration};
use crate::error::{GeomError, Result};
use crate::tolerance::Tolerance;

/// An intersection of translates: empty, the whole space, or a polytope
/// (possibly lower-dimensional).
#[derive(Debug, Clone, PartialEq)]
pub enum Region {
    Empty,
    Universe,
    Body(ConvexBody),
}

impl Region {
    /// Intersection of halfspaces, which must be bounded when nonempty. An empty
    /// list is the whole space.
    pub fn from_halfspaces(halfspaces: &[Halfspace], tol: &Tolerance) -> Result<Region> {
        if halfspaces.is_empty() {
            return Ok(Region::Universe);
        }
        match vertex_enumeration(halfspaces, tol)? {
            VertexEnumeration::Body(b) => Ok(Region::Body(b)),
            VertexEnumeration::Empty => Ok(Region::Empty),
            VertexEnumeration::Unbounded => Err(GeomError::Unbounded),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Region::Empty)
    }

    pub fn is_universe(&self) -> bool {
        matches!(self, Region::Universe)
    }

    pub fn body(&self) -> Option<&ConvexBody> {
        match self {
            Region::Body(b) => Some(b),
            _ => None,
        }
    }

    pub fn into_body(self) -> Option<ConvexBody> {
        match self {
            Region::Body(b) => Some(b),
            _ => None,
        }
    }

    /// Whether the region has lower dimension than the ambient space.
    pub fn is_degenerate(&self) -> bool {
        self.body().map_or(false, |b| !b.is_full_dimensional())
    }

    pub fn contains(&self, p: &Point, eps: f64) -> bool {
        match self {
            Region::Empty => false,
            Region::Universe => true,
            Region::Body(b) => b.contains(p, eps),
        }
    }

    /// Set equality up to `eps_set` in Hausdorff distance.
    pub fn approx_eq(&self, other: &Region, tol: &Tolerance) -> bool {
        match (self, other) {
            (Region::Empty, Region::Empty) | (Region::Universe, Region::Universe) => true,
            (Region::Body(a), Region::Body(b)) => {
                hausdorff_distance(a, b).map_or(false, |d| d <= tol.eps_set)
            }
            _ => false,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Region::Empty => "empty",
            Region::Universe => "universe",
            Region::Body(_) => "body",
        }
    }
}
