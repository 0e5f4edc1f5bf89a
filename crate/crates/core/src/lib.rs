//! Convex-body symmetrization operators (Steiner, Minkowski, fiber, central
//! Minkowski) over several body representations, plus machinery to run and
//! analyze iterated symmetrization processes: angle-sequence generators,
//! rotation-correction schedules, metric traces, convergence detection, and
//! divergence certificates.
//!
//! Representations:
//! - [`polygon::ConvexPolygon`] — exact 2D convex bodies as vertex cycles;
//! - [`grid::SupportGrid`] — support functions sampled on fixed direction
//!   sets in dimensions 2 and 3;
//! - [`raster::RasterSet`] — 2D binary rasters for compact, possibly
//!   non-convex sets;
//! - [`raster::PointCloud`] — finite point sets under Minkowski averaging.

pub mod config;
pub mod error;
pub mod geom;
pub mod grid;
pub mod io;
pub mod polygon;
pub mod process;
pub mod raster;
pub mod sampling;

pub use config::{Tolerances, DEFAULT_TOLERANCES};
pub use error::{Error, Result};
pub use geom::{LineSubspace, Point, RotationOp, UnitDirection, Vec2};
pub use polygon::{BodyMeasures, ConvexPolygon, PolygonKind};
