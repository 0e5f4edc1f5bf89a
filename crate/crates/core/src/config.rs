//! Centralized numeric tolerances.
//!
//! Every epsilon used by geometric predicates and metric assertions lives
//! here so experiments can tighten or loosen them uniformly.

/// Tolerance ladder shared by all modules.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Geometric predicates: involution residuals, unit-norm checks,
    /// fixed-point tests, support-function identities.
    pub geometry: f64,
    /// Orthogonality drift allowed in rotation matrices (`‖QᵀQ − I‖_∞`).
    pub orthonormality: f64,
    /// Metric-level assertions (Hausdorff comparisons, conservation checks).
    pub metric: f64,
    /// Collinear-vertex reduction threshold, as a fraction of `diam²`:
    /// three consecutive vertices spanning less triangle area than
    /// `collinear_area_factor · diam²` are simplified away.
    pub collinear_area_factor: f64,
}

impl Tolerances {
    pub const fn default_const() -> Self {
        Tolerances {
            geometry: 1e-12,
            orthonormality: 1e-10,
            metric: 1e-9,
            collinear_area_factor: 1e-14,
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::default_const()
    }
}

/// The crate-wide default ladder.
pub const DEFAULT_TOLERANCES: Tolerances = Tolerances::default_const();
