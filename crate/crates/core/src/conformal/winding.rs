use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use super::function::FunctionHandle;
use crate::error::{precondition, Error, Result};
use crate::settings::NumericSettings;

const INITIAL_SAMPLES: usize = 256;
const POLE_CLEARANCE: f64 = 1e-6;

/// Number of solutions of `f(z) = w0` inside `|z - center| < radius`, counted
/// with multiplicity, from the argument increment of `f - w0` along the circle.
///
/// Each contour step is bisected until the argument change across it is
/// below `pi/2`.
pub fn winding_number(
    f: &FunctionHandle,
    center: Complex64,
    radius: f64,
    w0: Complex64,
    settings: &NumericSettings,
) -> Result<i64> {
    if !(radius > 0.0) {
        return Err(precondition(format!("contour radius must be positive, got {radius}")));
    }
    for pole in f.poles() {
        if ((pole.location - center).norm() - radius).abs() < POLE_CLEARANCE {
            return Err(precondition(format!("pole {} lies on the contour", pole.location)));
        }
    }
    let sample = |angle: f64| -> Result<Complex64> {
        let v = f.eval(center + Complex64::from_polar(radius, angle)) - w0;
        let d = v.norm();
        if !(d >= settings.eval_tol) {
            return Err(Error::ContourHitsValue { distance: d });
        }
        Ok(v)
    };

    let mut evaluations = 0usize;
    let mut total = 0.0;
    // Stack of (angle_a, value_a, angle_b, value_b) segments, processed in order.
    let mut stack = Vec::new();
    let first = sample(0.0)?;
    let mut prev_angle = 0.0;
    let mut prev = first;
    let mut starts = Vec::with_capacity(INITIAL_SAMPLES);
    for k in 1..=INITIAL_SAMPLES {
        let angle = TAU * k as f64 / INITIAL_SAMPLES as f64;
        let v = if k == INITIAL_SAMPLES { first } else { sample(angle)? };
        evaluations += 1;
        starts.push((prev_angle, prev, angle, v));
        prev_angle = angle;
        prev = v;
    }
    for seg in starts.into_iter().rev() {
        stack.push(seg);
    }
    while let Some((a, va, b, vb)) = stack.pop() {
        let step = (vb / va).arg();
        if step.abs() < FRAC_PI_2 {
            total += step;
            continue;
        }
        if evaluations >= settings.winding_budget {
            return Err(Error::NonResolvable { budget: settings.winding_budget });
        }
        let mid = 0.5 * (a + b);
        let vm = sample(mid)?;
        evaluations += 1;
        stack.push((mid, vm, b, vb));
        stack.push((a, va, mid, vm));
    }
    Ok((total / TAU).round() as i64)
}
