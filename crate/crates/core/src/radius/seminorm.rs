use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::grid::{Cancellation, GridSpec};
use crate::conformal::FunctionHandle;
use crate::error::{precondition, Error, Result};
use crate::settings::NumericSettings;

/// Certified lower bound for `sup (1 - |z|^2) |f'(z)|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeminormEstimate {
    pub value: f64,
    pub argmax: Complex64,
    /// The maximizer sits on the outermost ring or the innermost pole ring,
    /// i.e. the quantity was still growing at the edge of the grid.
    pub truncated: bool,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct SweepBest {
    pub value: f64,
    pub z: Complex64,
    pub edge: bool,
    pub saturated: bool,
}

const POLE_RING_ANGLES: usize = 32;

fn admissible(f: &FunctionHandle, grid: &GridSpec, z: Complex64) -> bool {
    z.norm() <= grid.outer_radius * (1.0 + 1e-15) && f.pole_distance(z) >= grid.pole_margin * (1.0 - 1e-12)
}

fn on_edge(f: &FunctionHandle, grid: &GridSpec, z: Complex64) -> bool {
    z.norm() >= grid.outer_radius * (1.0 - 1e-12) || f.pole_distance(z) <= grid.pole_margin * (1.0 + 1e-9)
}

/// Grid maximization of `objective(z, f'(z))` over the polar grid, rings
/// around each declared pole and `refine_depth` local refinements.
pub(crate) fn sweep(
    f: &FunctionHandle,
    grid: &GridSpec,
    cancel: &Cancellation,
    objective: impl Fn(Complex64, Complex64) -> f64,
) -> Result<SweepBest> {
    grid.validate()?;
    let saturation = NumericSettings::default().saturation;
    let mut best: Option<SweepBest> = None;
    let consider = |z: Complex64, best: &mut Option<SweepBest>| {
        if !admissible(f, grid, z) {
            return;
        }
        let v = objective(z, f.deriv(z));
        if v.is_nan() {
            return;
        }
        let (v, saturated) = if v > saturation { (saturation, true) } else { (v, false) };
        if best.as_ref().is_none_or(|b| v > b.value) {
            *best = Some(SweepBest { value: v, z, edge: on_edge(f, grid, z), saturated });
        }
    };

    let n = grid.radial_count;
    let m = grid.angular_count;
    for i in 0..n {
        let r = grid.outer_radius * i as f64 / (n - 1) as f64;
        let count = if i == 0 { 1 } else { m };
        for j in 0..count {
            consider(Complex64::from_polar(r, TAU * j as f64 / m as f64), &mut best);
        }
    }
    for pole in f.poles() {
        let mut rad = grid.pole_margin;
        while rad < 0.5 {
            for j in 0..POLE_RING_ANGLES {
                let z = pole.location + Complex64::from_polar(rad, TAU * j as f64 / POLE_RING_ANGLES as f64);
                consider(z, &mut best);
            }
            rad *= 2.0;
        }
    }
    let Some(mut incumbent) = best else {
        return Err(Error::EmptyGrid);
    };

    let mut scale = (grid.outer_radius / (n - 1) as f64).max(incumbent.z.norm() * TAU / m as f64);
    for _ in 0..grid.refine_depth {
        if cancel.is_cancelled() {
            return Err(Error::Cancelled);
        }
        let center = incumbent.z;
        let mut local = Some(incumbent);
        for a in -5..=5 {
            for b in -5..=5 {
                let z = center + Complex64::new(scale * a as f64 / 5.0, scale * b as f64 / 5.0);
                consider(z, &mut local);
            }
        }
        incumbent = local.expect("incumbent retained");
        scale /= 5.0;
    }
    Ok(incumbent)
}

#[inline]
pub(crate) fn seminorm_weight(z: Complex64) -> f64 {
    let r = z.norm();
    (1.0 - r) * (1.0 + r)
}

pub fn bloch_seminorm(f: &FunctionHandle, grid: &GridSpec) -> Result<SeminormEstimate> {
    bloch_seminorm_cancellable(f, grid, &Cancellation::new())
}

pub fn bloch_seminorm_cancellable(f: &FunctionHandle, grid: &GridSpec, cancel: &Cancellation) -> Result<SeminormEstimate> {
    let d0 = f.deriv(Complex64::new(0.0, 0.0));
    if !(d0.norm() > 1e-14) {
        return Err(precondition("f'(0) vanishes; the normalized class requires f'(0) = 1"));
    }
    let best = sweep(f, grid, cancel, |z, d| seminorm_weight(z) * d.norm())?;
    Ok(SeminormEstimate { value: best.value, argmax: best.z, truncated: best.edge || best.saturated })
}
