use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::koebe::{inverse_koebe_raw, koebe_deriv_raw, koebe_raw};
use super::limits::radial_limit;
use super::newton::GridInverter;
use super::slit::{omega_deriv_raw, omega_raw, rho, xi};
use crate::error::{precondition, Error, Result};
use crate::geometry::SlitDiskDomain;
use crate::settings::NumericSettings;

const MINUS: Complex64 = Complex64::new(-1.0, 0.0);

#[inline]
fn real_slit_raw(r: f64, w: Complex64) -> Complex64 {
    -inverse_koebe_raw(MINUS, r * koebe_raw(MINUS, w))
}

#[inline]
fn real_slit_deriv_raw(r: f64, w: Complex64) -> Complex64 {
    let k_inv = inverse_koebe_raw(MINUS, r * koebe_raw(MINUS, w));
    -r * koebe_deriv_raw(MINUS, w) / koebe_deriv_raw(MINUS, k_inv)
}

/// `-K(r k(w))` with the `z/(1-z)^2` pair and `r = rho(p)`: the disk onto the
/// disk slit along `[p, 1)`. It carries the upper half-disk to the lower one.
pub fn real_slit_map(p: f64, w: Complex64) -> Result<Complex64> {
    let r = check_unit(p, "p").and_then(rho)?;
    check_disk(w)?;
    Ok(real_slit_raw(r, w))
}

pub fn real_slit_map_deriv(p: f64, w: Complex64) -> Result<Complex64> {
    let r = check_unit(p, "p").and_then(rho)?;
    check_disk(w)?;
    Ok(real_slit_deriv_raw(r, w))
}

fn check_unit(v: f64, name: &str) -> Result<f64> {
    if !(v > 0.0 && v < 1.0) {
        return Err(precondition(format!("{name} must be in (0, 1), got {v}")));
    }
    Ok(v)
}

fn check_disk(z: Complex64) -> Result<()> {
    if !(z.norm() < 1.0) {
        return Err(precondition(format!("|z| must be < 1, got {}", z.norm())));
    }
    Ok(())
}

/// Parameters of the two-slit map `h = (-K(r k(.))) ∘ omega_{r1}` whose image
/// is the disk minus `[p, 1)` and the curve `-K(r k(t e^{i theta}))`,
/// `p1 <= t < 1`.
///
/// `theta = 0` is accepted here with `xi1 = 1` (the limit of the closed form):
/// it is the configuration produced when the second pole sits on the
/// negative real axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoSlitParams {
    pub p: f64,
    pub p1: f64,
    pub theta: f64,
    pub r: f64,
    pub r1: f64,
    /// Tip of the curved slit, the image of `-1`.
    pub anchor: Complex64,
    /// Boundary preimage of `p`.
    pub xi1: Complex64,
}

impl TwoSlitParams {
    pub fn new(p: f64, p1: f64, theta: f64, settings: &NumericSettings) -> Result<Self> {
        check_unit(p, "p")?;
        check_unit(p1, "p1")?;
        if !(0.0..TAU).contains(&theta) {
            return Err(precondition(format!("theta must be in [0, 2pi), got {theta}")));
        }
        let r = rho(p)?;
        let r1 = rho(p1)?;
        let rotation = Complex64::from_polar(1.0, theta);
        let anchor = real_slit_raw(r, p1 * rotation);
        let xi1 = if theta == 0.0 { Complex64::new(1.0, 0.0) } else { xi(r1, theta)? };
        let limit = radial_limit(|gap| Ok(omega_raw(r1, rotation, (1.0 - gap) * xi1)), settings.radial_eps)?;
        let residual = (limit + 1.0).norm();
        if !(residual < settings.boundary_tol) {
            return Err(Error::BranchMismatch { theta, residual });
        }
        Ok(Self { p, p1, theta, r, r1, anchor, xi1 })
    }

    /// Parameters for poles at `p` and `mu`: `p1 e^{i theta}` is the preimage
    /// of `mu` under [`real_slit_map`], found by grid-seeded Newton.
    pub fn from_poles(p: f64, mu: Complex64, settings: &NumericSettings) -> Result<Self> {
        check_unit(p, "p")?;
        if !(mu.norm() < 1.0) || mu.norm() == 0.0 {
            return Err(precondition(format!("second pole must lie in the punctured disk, got {mu}")));
        }
        let r = rho(p)?;
        let inverter = GridInverter::new(move |w| (real_slit_raw(r, w), real_slit_deriv_raw(r, w)), settings);
        let pre = inverter.invert(mu)?.root;
        let p1 = pre.norm();
        let mut theta = pre.arg().rem_euclid(TAU);
        // The real interval (-1, 0) pulls back to (0, 1); snap round-off.
        if pre.im.abs() <= 1e-13 * p1 && pre.re > 0.0 {
            theta = 0.0;
        }
        if theta >= TAU {
            theta = 0.0;
        }
        Self::new(p, p1, theta, settings)
    }

    fn rotation(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta)
    }

    /// Point of the curved slit at parameter `t in [p1, 1)`.
    pub fn curve_point(&self, t: f64) -> Complex64 {
        real_slit_raw(self.r, t * self.rotation())
    }
}

pub fn two_slit_map(params: &TwoSlitParams, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    Ok(real_slit_raw(params.r, omega_raw(params.r1, params.rotation(), z)))
}

pub fn two_slit_deriv(params: &TwoSlitParams, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    Ok(two_slit_value_deriv(params, z).1)
}

fn two_slit_value_deriv(params: &TwoSlitParams, z: Complex64) -> (Complex64, Complex64) {
    let rot = params.rotation();
    let w = omega_raw(params.r1, rot, z);
    let dw = omega_deriv_raw(params.r1, rot, z);
    (real_slit_raw(params.r, w), real_slit_deriv_raw(params.r, w) * dw)
}

/// Reusable inverse of the two-slit map: owns the image domain (for the
/// membership precondition) and the Newton seed table.
pub struct TwoSlitInverter {
    params: TwoSlitParams,
    domain: SlitDiskDomain,
    inverter: GridInverter,
}

impl TwoSlitInverter {
    pub fn new(params: &TwoSlitParams, settings: &NumericSettings) -> Self {
        let p = *params;
        Self {
            params: p,
            domain: SlitDiskDomain::two_slit(params, settings),
            inverter: GridInverter::new(move |z| two_slit_value_deriv(&p, z), settings),
        }
    }

    pub fn params(&self) -> &TwoSlitParams {
        &self.params
    }

    pub fn domain(&self) -> &SlitDiskDomain {
        &self.domain
    }

    pub fn invert(&self, w: Complex64) -> Result<Complex64> {
        if !self.domain.contains(w) {
            return Err(Error::NotInDomain { w });
        }
        Ok(self.inverter.invert(w)?.root)
    }
}

pub fn two_slit_inverse(params: &TwoSlitParams, w: Complex64, settings: &NumericSettings) -> Result<Complex64> {
    TwoSlitInverter::new(params, settings).invert(w)
}
