use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};

const POLE_TOL: f64 = 1e-14;
const BRANCH_TOL: f64 = 1e-12;

/// A unimodular rotation parameter `u` for the Koebe family `z / (1 + u z)^2`.
///
/// `u = +1` gives `z/(1+z)^2`, whose image omits `[1/4, inf)`; `u = -1` gives
/// the classical `z/(1-z)^2`, whose image omits `(-inf, -1/4]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Complex64", into = "Complex64")]
pub struct UnitRotation(Complex64);

impl UnitRotation {
    pub const PLUS: UnitRotation = UnitRotation(Complex64::new(1.0, 0.0));
    pub const MINUS: UnitRotation = UnitRotation(Complex64::new(-1.0, 0.0));

    pub fn new(u: Complex64) -> Result<Self> {
        if !u.is_finite() || (u.norm() - 1.0).abs() > 1e-12 {
            return Err(precondition(format!("rotation {u} is not unimodular")));
        }
        Ok(Self(u))
    }

    pub fn from_angle(angle: f64) -> Self {
        Self(Complex64::from_polar(1.0, angle))
    }

    pub fn value(self) -> Complex64 {
        self.0
    }
}

impl TryFrom<Complex64> for UnitRotation {
    type Error = Error;

    fn try_from(u: Complex64) -> Result<Self> {
        Self::new(u)
    }
}

impl From<UnitRotation> for Complex64 {
    fn from(u: UnitRotation) -> Self {
        u.0
    }
}

#[inline]
pub(crate) fn koebe_raw(u: Complex64, z: Complex64) -> Complex64 {
    let d = 1.0 + u * z;
    z / (d * d)
}

#[inline]
pub(crate) fn koebe_deriv_raw(u: Complex64, z: Complex64) -> Complex64 {
    let d = 1.0 + u * z;
    (1.0 - u * z) / (d * d * d)
}

/// Branch of the inverse with value 0 at 0.
///
/// With `v = u w` and `a = sqrt(1 - 4v)` (principal root), `u z = (1-a)/(1+a)
/// = 4v / (1+a)^2`. The principal cut of `a` is exactly the omitted ray
/// `v in [1/4, inf)`, and `Re a > 0` off the cut keeps the result in the disk.
#[inline]
pub(crate) fn inverse_koebe_raw(u: Complex64, w: Complex64) -> Complex64 {
    let v = u * w;
    let a = (1.0 - 4.0 * v).sqrt();
    let b = 1.0 + a;
    4.0 * v / (b * b) / u
}

fn on_omitted_ray(v: Complex64) -> bool {
    v.im.abs() <= BRANCH_TOL && v.re >= 0.25
}

/// The rotated Koebe function `z / (1 + u z)^2`.
pub fn koebe(u: UnitRotation, z: Complex64) -> Result<Complex64> {
    if (1.0 + u.0 * z).norm() < POLE_TOL {
        return Err(Error::PoleOfMap { z });
    }
    Ok(koebe_raw(u.0, z))
}

pub fn koebe_deriv(u: UnitRotation, z: Complex64) -> Result<Complex64> {
    if (1.0 + u.0 * z).norm() < POLE_TOL {
        return Err(Error::PoleOfMap { z });
    }
    Ok(koebe_deriv_raw(u.0, z))
}

/// Inverse of [`koebe`] on the plane minus the omitted ray `u w in [1/4, inf)`.
pub fn inverse_koebe(u: UnitRotation, w: Complex64) -> Result<Complex64> {
    if !w.is_finite() || on_omitted_ray(u.0 * w) {
        return Err(Error::OffBranch { w });
    }
    Ok(inverse_koebe_raw(u.0, w))
}

/// Derivative of the inverse, `1 / k'(K(w))`.
pub fn inverse_koebe_deriv(u: UnitRotation, w: Complex64) -> Result<Complex64> {
    let z = inverse_koebe(u, w)?;
    Ok(1.0 / koebe_deriv_raw(u.0, z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn koebe_examples() {
        assert_eq!(koebe(UnitRotation::PLUS, c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        let v = koebe(UnitRotation::MINUS, c(-1.0, 0.0)).unwrap();
        assert!((v - c(-0.25, 0.0)).norm() < 1e-16);
        let v = koebe(UnitRotation::PLUS, c(0.3, 0.0)).unwrap();
        assert!((v.re - 0.3 / 1.69).abs() < 1e-15 && v.im == 0.0);
    }

    #[test]
    fn koebe_pole_is_rejected() {
        assert!(matches!(koebe(UnitRotation::PLUS, c(-1.0, 0.0)), Err(Error::PoleOfMap { .. })));
        assert!(matches!(koebe(UnitRotation::MINUS, c(1.0, 0.0)), Err(Error::PoleOfMap { .. })));
    }

    #[test]
    fn koebe_normalization() {
        for u in [UnitRotation::PLUS, UnitRotation::MINUS, UnitRotation::from_angle(PI / 3.0)] {
            assert_eq!(koebe_deriv(u, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
            assert_eq!(inverse_koebe_deriv(u, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse_koebe(UnitRotation::PLUS, c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        let near_tip = inverse_koebe(UnitRotation::PLUS, c(0.25 - 1e-15, 0.0)).unwrap();
        assert!((near_tip - c(1.0, 0.0)).norm() < 1e-6, "{near_tip}");
        // rho = 8/9 at x = 1/2; k_{-1}(-1/2) = -(1/2)/(9/4) = -2/9 = -rho/4
        let rho = 8.0 / 9.0;
        let v = inverse_koebe(UnitRotation::MINUS, c(-rho / 4.0, 0.0)).unwrap();
        assert!((v - c(-0.5, 0.0)).norm() < 1e-15, "{v}");
    }

    #[test]
    fn inverse_is_accurate_near_origin() {
        // Series of K_{+1}: w + 2w^2 + 5w^3 + 14w^4 (Catalan numbers).
        for &w in &[c(1e-5, 2e-5), c(-3e-7, 1e-8), c(1e-12, -1e-12)] {
            let series = w + 2.0 * w * w + 5.0 * w * w * w + 14.0 * w * w * w * w;
            let v = inverse_koebe(UnitRotation::PLUS, w).unwrap();
            assert!((v - series).norm() <= 1e-15 * w.norm().max(1e-300) + 1e-25, "{v} vs {series}");
        }
    }

    #[test]
    fn omitted_ray_is_rejected() {
        for w in [c(0.25, 0.0), c(3.0, 0.0), c(10.0, 1e-13)] {
            assert!(matches!(inverse_koebe(UnitRotation::PLUS, w), Err(Error::OffBranch { .. })));
        }
        assert!(inverse_koebe(UnitRotation::MINUS, c(-0.3, 0.0)).is_err());
        assert!(inverse_koebe(UnitRotation::MINUS, c(0.3, 0.0)).is_ok());
    }

    #[test]
    fn non_unimodular_rotation_rejected() {
        assert!(UnitRotation::new(c(1.1, 0.0)).is_err());
        assert!(UnitRotation::new(c(0.6, 0.8)).is_ok());
    }

    #[test]
    fn inverse_identity_on_polar_grid() {
        let us = [UnitRotation::PLUS, UnitRotation::MINUS, UnitRotation::from_angle(PI / 3.0)];
        for u in us {
            let mut worst: f64 = 0.0;
            for i in 0..50 {
                let r = 0.99 * i as f64 / 49.0;
                for j in 0..50 {
                    let z = Complex64::from_polar(r, 2.0 * PI * j as f64 / 50.0);
                    let back = inverse_koebe(u, koebe(u, z).unwrap()).unwrap();
                    worst = worst.max((back - z).norm());
                }
            }
            assert!(worst < 1e-10, "u = {:?}: {worst:e}", u);
        }
    }
}
