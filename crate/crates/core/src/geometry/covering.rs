use crate::error::{precondition, Result};

/// Radii `(p/(1+p)^2, p/(1-p)^2)` of the disk and of the exterior of the
/// disk covered by every univalent normalized map with a simple pole at `p`.
pub fn koebe_covering(p: f64) -> Result<(f64, f64)> {
    if !(p > 0.0 && p < 1.0) {
        return Err(precondition(format!("p must be in (0, 1), got {p}")));
    }
    Ok((p / ((1.0 + p) * (1.0 + p)), p / ((1.0 - p) * (1.0 - p))))
}
