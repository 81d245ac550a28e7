//! Points, halfspaces, polytopes and the numeric routines behind them.

mod affine;
mod body;
mod distance;
mod halfspace;
mod hull;
mod lp;
mod norm;
mod point;
mod region;
mod venum;

pub use affine::AffineHull;
pub use body::ConvexBody;
pub use distance::{hausdorff_distance, point_body_distance};
pub use halfspace::Halfspace;
pub use lp::{lp_min, lp_solve, LpOutcome};
pub use norm::{c_distance, central_symmetral, diam_c, gauge_norm, minkowski_sum_2d, RelativeNorm};
pub use point::{Point, PointSet};
pub use region::Region;
pub use venum::{vertex_enumeration, VertexEnumeration};

pub(crate) use body::polygon_area;
pub(crate) use hull::ccw_polygon;
pub(crate) use point::dedup_points;
