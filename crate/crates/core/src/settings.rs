use serde::{Deserialize, Serialize};

/// Every tolerance and budget used by the numerical routines.
///
/// Defaults are the values the test and acceptance suites are pinned to.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct NumericSettings {
    /// General evaluation tolerance (round trips, contour proximity).
    pub eval_tol: f64,
    /// Below this modulus `1 + u z` is treated as a pole of the Koebe map.
    pub pole_tol: f64,
    /// Distance from `[1/4, inf)` treated as lying on the omitted ray.
    pub branch_tol: f64,
    /// Radial limits are taken from `1 - radial_eps` and extrapolated.
    pub radial_eps: f64,
    /// Tolerance accepted for the boundary preimage branch check.
    pub boundary_tol: f64,
    /// Exclusion band around slits and domain boundaries.
    pub slit_band: f64,
    /// Polar seed grid size for the two-slit inverse (per axis).
    pub newton_seed_grid: usize,
    pub newton_max_iter: usize,
    /// Residual target `|h(z) - w|` for Newton.
    pub newton_tol: f64,
    /// Number of points in a curve-slit polyline.
    pub curve_samples: usize,
    /// Curve slits are sampled for `t` up to `1 - curve_t_gap`.
    pub curve_t_gap: f64,
    /// Sample cap for adaptive contour refinement.
    pub winding_budget: usize,
    /// Values above this are saturated and flagged in reports.
    pub saturation: f64,
}

impl Default for NumericSettings {
    fn default() -> Self {
        Self {
            eval_tol: 1e-10,
            pole_tol: 1e-14,
            branch_tol: 1e-12,
            radial_eps: 1e-8,
            boundary_tol: 1e-6,
            slit_band: 1e-9,
            newton_seed_grid: 32,
            newton_max_iter: 60,
            newton_tol: 1e-12,
            curve_samples: 512,
            curve_t_gap: 1e-6,
            winding_budget: 1 << 20,
            saturation: 1e15,
        }
    }
}
