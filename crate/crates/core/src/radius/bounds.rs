use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::grid::{Cancellation, GridSpec};
use super::report::{RadiusKind, RadiusReport};
use super::seminorm::sweep;
use crate::conformal::FunctionHandle;
use crate::error::{precondition, Result};

/// Lower endpoint used for every certified Bloch-radius bound.
pub fn bloch_constant_lower() -> f64 {
    3f64.sqrt() / 4.0 + 2e-4
}

pub fn landau_constant_lower() -> f64 {
    0.5 + 2e-8
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TheoremABounds {
    pub p: f64,
    pub fprime0: f64,
    /// `4p / (1+p)^2`.
    pub factor: f64,
    pub bloch_bound: f64,
    pub landau_bound: f64,
}

/// `4p |f'(0)| C / (1+p)^2` with the lower endpoints of the classical
/// intervals for `C = B` and `C = L`. These were once expected to be sharp.
pub fn theorem_a_bounds(p: f64, fprime0: f64) -> Result<TheoremABounds> {
    if !(p > 0.0 && p < 1.0) {
        return Err(precondition(format!("p must be in (0, 1), got {p}")));
    }
    if !(fprime0 > 0.0 && fprime0.is_finite()) {
        return Err(precondition(format!("f'(0) must be positive, got {fprime0}")));
    }
    let factor = 4.0 * p / ((1.0 + p) * (1.0 + p));
    Ok(TheoremABounds {
        p,
        fprime0,
        factor,
        bloch_bound: factor * fprime0 * bloch_constant_lower(),
        landau_bound: factor * fprime0 * landau_constant_lower(),
    })
}

/// `c_B * max d(z)|f'(z)|` over the grid, with `d(z)` the distance to the
/// unit circle or the nearest declared pole. On `D(z, d(z))` the rescaled map
/// `(f(z + d u) - f(z)) / (d f'(z))` is normalized, so it covers a schlicht
/// disk of radius `c_B`.
pub fn bloch_lower_bound(f: &FunctionHandle, grid: &GridSpec) -> Result<RadiusReport> {
    let d0 = f.deriv(Complex64::new(0.0, 0.0));
    if !((d0 - 1.0).norm() <= 1e-8) {
        return Err(precondition(format!("f'(0) must be 1, got {d0}")));
    }
    let best = sweep(f, grid, &Cancellation::new(), |z, d| {
        let dist = (1.0 - z.norm()).min(f.pole_distance(z));
        dist * d.norm()
    })?;
    let c_b = bloch_constant_lower();
    Ok(RadiusReport {
        kind: RadiusKind::Bloch,
        lower_bound: c_b * best.value,
        witness: None,
        constant_used: c_b,
        conjectured_bound: None,
        function_label: f.label().to_string(),
        truncated: best.edge || best.saturated,
        certificate: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radius::registry;

    #[test]
    fn class_bound_at_half() {
        let t = theorem_a_bounds(0.5, 1.0).unwrap();
        assert!((t.bloch_bound - 8.0 / 9.0 * bloch_constant_lower()).abs() < 1e-15);
        assert!((t.bloch_bound - 0.38508).abs() < 1e-5);
        assert!((t.landau_bound - 0.44444).abs() < 1e-5);
        let t2 = theorem_a_bounds(0.5, 2.0).unwrap();
        assert!((t2.bloch_bound - 2.0 * t.bloch_bound).abs() < 1e-15);
        assert!((t2.landau_bound - 2.0 * t.landau_bound).abs() < 1e-15);
        let near = theorem_a_bounds(0.999, 1.0).unwrap();
        assert!((near.bloch_bound - bloch_constant_lower()).abs() < 1e-6);
        assert!(theorem_a_bounds(1.0, 1.0).is_err());
        assert!(theorem_a_bounds(0.5, 0.0).is_err());
    }

    #[test]
    fn identity_bound() {
        let r = bloch_lower_bound(&registry::identity(), &GridSpec::default()).unwrap();
        assert!((r.lower_bound - bloch_constant_lower()).abs() < 1e-15);
        assert!((r.lower_bound - 0.43321).abs() < 1e-5);
        assert_eq!(r.constant_used, bloch_constant_lower());
    }

    #[test]
    fn boundary_pole_bound() {
        let g = GridSpec::default().with_outer_radius(0.999);
        let r = bloch_lower_bound(&registry::z_over_one_minus_z(), &g).unwrap();
        assert!(r.lower_bound >= 433.0, "{}", r.lower_bound);
        assert!(r.truncated);
    }

    #[test]
    fn interior_pole_bound() {
        let r = bloch_lower_bound(&registry::moebius_pole(0.5).unwrap(), &GridSpec::default()).unwrap();
        assert!(r.lower_bound >= 1e3, "{}", r.lower_bound);
        assert!(r.truncated);
    }

    #[test]
    fn requires_normalization() {
        let f = FunctionHandle::new("2z", |z| 2.0 * z, |_| Complex64::new(2.0, 0.0));
        assert!(bloch_lower_bound(&f, &GridSpec::default()).is_err());
    }
}
