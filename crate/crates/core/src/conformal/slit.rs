use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::koebe::{inverse_koebe_raw, koebe_deriv_raw, koebe_raw};
use super::limits::radial_limit;
use crate::error::{precondition, Error, Result};
use crate::geometry::segment_distance;
use crate::settings::NumericSettings;

const PLUS: Complex64 = Complex64::new(1.0, 0.0);
const MINUS: Complex64 = Complex64::new(-1.0, 0.0);

/// `4x / (1 + x)^2`, the Koebe value scale that moves the slit tip to `x`.
pub fn rho(x: f64) -> Result<f64> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(precondition(format!("rho needs 0 < x <= 1, got {x}")));
    }
    Ok(4.0 * x / ((1.0 + x) * (1.0 + x)))
}

/// Boundary point sent to `-1` by the single-slit map:
/// `1 - 2 rho s - 2 i rho s sqrt(1/(rho s) - 1)` with `s = sin^2(theta/2)`.
pub fn xi(rho_val: f64, theta: f64) -> Result<Complex64> {
    let half = (theta / 2.0).sin();
    let s = half * half;
    if !(theta > 0.0 && theta < TAU) || s == 0.0 {
        return Err(Error::DegenerateAngle { theta });
    }
    let rs = rho_val * s;
    if !(rs > 0.0 && rs <= 1.0) {
        return Err(precondition(format!("rho sin^2(theta/2) = {rs} outside (0, 1]")));
    }
    let root = (1.0 / rs - 1.0).max(0.0).sqrt();
    Ok(Complex64::new(1.0 - 2.0 * rs, -2.0 * rs * root))
}

#[inline]
pub(crate) fn omega_raw(rho: f64, rotation: Complex64, z: Complex64) -> Complex64 {
    -rotation * inverse_koebe_raw(MINUS, rho * koebe_raw(MINUS, z))
}

#[inline]
pub(crate) fn omega_deriv_raw(rho: f64, rotation: Complex64, z: Complex64) -> Complex64 {
    let inner = rho * koebe_raw(MINUS, z);
    let k_inv = inverse_koebe_raw(MINUS, inner);
    -rotation * rho * koebe_deriv_raw(MINUS, z) / koebe_deriv_raw(MINUS, k_inv)
}

/// Parameters of the radial slit `{t e^{i theta} : x <= t < 1}`.
///
/// Construction verifies numerically that the closed-form boundary point
/// [`xi`] really is sent to `-1`; the formula selects one of two conjugate
/// candidates and is only correct for `theta` in `(0, pi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlitParams {
    pub x: f64,
    pub theta: f64,
    pub rho: f64,
    xi: Complex64,
}

impl SlitParams {
    pub fn new(x: f64, theta: f64, settings: &NumericSettings) -> Result<Self> {
        if !(x > 0.0 && x < 1.0) {
            return Err(precondition(format!("slit radius must be in (0, 1), got {x}")));
        }
        let rho = rho(x)?;
        let xi = xi(rho, theta)?;
        let rotation = Complex64::from_polar(1.0, theta);
        let limit = radial_limit(|gap| Ok(omega_raw(rho, rotation, (1.0 - gap) * xi)), settings.radial_eps)?;
        let residual = (limit + 1.0).norm();
        if !(residual < settings.boundary_tol) {
            return Err(Error::BranchMismatch { theta, residual });
        }
        Ok(Self { x, theta, rho, xi })
    }

    /// The boundary preimage of `-1`.
    pub fn xi(&self) -> Complex64 {
        self.xi
    }

    /// Inner endpoint `x e^{i theta}` of the slit.
    pub fn tip(&self) -> Complex64 {
        Complex64::from_polar(self.x, self.theta)
    }

    fn rotation(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta)
    }
}

fn check_disk(z: Complex64) -> Result<()> {
    if !(z.norm() < 1.0) {
        return Err(precondition(format!("|z| must be < 1, got {}", z.norm())));
    }
    Ok(())
}

/// `-e^{i theta} K(rho k(z))` with the `z/(1-z)^2` Koebe pair: the disk onto
/// the disk minus the radial slit.
pub fn omega_slit(params: &SlitParams, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    Ok(omega_raw(params.rho, params.rotation(), z))
}

pub fn omega_slit_deriv(params: &SlitParams, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    Ok(omega_deriv_raw(params.rho, params.rotation(), z))
}

fn check_p(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(precondition(format!("p must be in (0, 1), got {p}")));
    }
    rho(p)
}

/// `K(r k(z))` with the `z/(1+z)^2` pair and `r = rho(p)`: the disk onto
/// the disk slit along `[p, 1)`.
pub fn eta(p: f64, z: Complex64) -> Result<Complex64> {
    let r = check_p(p)?;
    check_disk(z)?;
    Ok(inverse_koebe_raw(PLUS, r * koebe_raw(PLUS, z)))
}

pub fn eta_deriv(p: f64, z: Complex64) -> Result<Complex64> {
    let r = check_p(p)?;
    check_disk(z)?;
    let w = inverse_koebe_raw(PLUS, r * koebe_raw(PLUS, z));
    Ok(r * koebe_deriv_raw(PLUS, z) / koebe_deriv_raw(PLUS, w))
}

fn check_omega_p(p: f64, w: Complex64) -> Result<()> {
    let band = NumericSettings::default().slit_band;
    let on_slit = segment_distance(w, Complex64::new(p, 0.0), Complex64::new(1.0, 0.0)) <= band;
    if !(w.norm() < 1.0 - band) || on_slit {
        return Err(Error::NotInDomain { w });
    }
    Ok(())
}

/// Inverse of [`eta`]: `K(k(w) / r)`, defined on the slit disk.
pub fn zeta(p: f64, w: Complex64) -> Result<Complex64> {
    let r = check_p(p)?;
    check_omega_p(p, w)?;
    Ok(inverse_koebe_raw(PLUS, koebe_raw(PLUS, w) / r))
}

pub fn zeta_deriv(p: f64, w: Complex64) -> Result<Complex64> {
    let r = check_p(p)?;
    check_omega_p(p, w)?;
    let z = inverse_koebe_raw(PLUS, koebe_raw(PLUS, w) / r);
    Ok(koebe_deriv_raw(PLUS, w) / (r * koebe_deriv_raw(PLUS, z)))
}
