//! Ball and spindle convexity with respect to a convex body.
//!
//! A set is *C-ball convex* when it is an intersection of translates of a
//! fixed convex body `C`. The crate computes such hulls for polytopal `C`,
//! separation certificates, arc-distance geometry in normed planes,
//! Carathéodory and generation numbers, and covering numbers of polygons.

pub mod arc;
pub mod bodies;
pub mod caratheodory;
pub mod covering;
pub mod error;
pub mod generation;
pub mod geometry;
pub mod io;
pub mod ops;
pub mod separation;
pub mod svg;
pub mod tolerance;

pub use error::{GeomError, Result};
pub use geometry::*;
pub use tolerance::Tolerance;
