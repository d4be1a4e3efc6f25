use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::conformal::FunctionHandle;
use crate::error::{precondition, Result};
use crate::settings::NumericSettings;

pub const MAX_DEPTH: u32 = 40;
const FIT_WINDOW: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfilePoint {
    pub k: u32,
    pub t: f64,
    pub value: f64,
}

/// `(1 - t^2) |f'(t u)|` at `t = 1 - 2^-k` along a boundary direction `u`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DivergenceProfile {
    pub points: Vec<ProfilePoint>,
    /// Least-squares slope of `log value` against `log 1/(1-t)` over the
    /// last ten points.
    pub exponent: Option<f64>,
    /// Evaluation stopped early because a value exceeded the saturation cap.
    pub saturated: bool,
}

impl DivergenceProfile {
    pub fn strictly_increasing(&self) -> bool {
        self.points.windows(2).all(|w| w[1].value > w[0].value)
    }
}

/// 17 significant digits with `.` as separator, trailing zeros trimmed, so
/// every value round-trips exactly (`0.5`, `3`, `0.10000000000000001`).
pub fn format_csv_number(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let body = if (-5..17).contains(&exp) {
        if exp >= 0 {
            let split = (exp + 1) as usize;
            let (int, frac) = digits.split_at(split.min(digits.len()));
            let frac = frac.trim_end_matches('0');
            if frac.is_empty() {
                int.to_string()
            } else {
                format!("{int}.{frac}")
            }
        } else {
            let zeros = "0".repeat((-exp - 1) as usize);
            format!("0.{zeros}{}", digits.trim_end_matches('0'))
        }
    } else {
        let (lead, rest) = digits.split_at(1);
        let rest = rest.trim_end_matches('0');
        if rest.is_empty() {
            format!("{lead}e{exp}")
        } else {
            format!("{lead}.{rest}e{exp}")
        }
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

fn fit_exponent(points: &[ProfilePoint]) -> Option<f64> {
    let tail = &points[points.len().saturating_sub(FIT_WINDOW)..];
    if tail.len() < 2 {
        return None;
    }
    let xs: Vec<f64> = tail.iter().map(|p| -(1.0 - p.t).ln()).collect();
    let ys: Vec<f64> = tail.iter().map(|p| p.value.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Profile along the ray toward the unimodular `direction`.
pub fn radial_profile(f: &FunctionHandle, direction: Complex64, depth: u32) -> Result<DivergenceProfile> {
    if !(1..=MAX_DEPTH).contains(&depth) {
        return Err(precondition(format!("depth must be in 1..={MAX_DEPTH}, got {depth}")));
    }
    if (direction.norm() - 1.0).abs() > 1e-12 {
        return Err(precondition("profile direction must be unimodular"));
    }
    let cap = NumericSettings::default().saturation;
    let mut points = Vec::with_capacity(depth as usize);
    let mut saturated = false;
    for k in 1..=depth {
        let gap = (0.5f64).powi(k as i32);
        let t = 1.0 - gap;
        let value = gap * (1.0 + t) * f.deriv(direction * t).norm();
        if !(value <= cap) {
            saturated = true;
            break;
        }
        points.push(ProfilePoint { k, t, value });
    }
    let exponent = fit_exponent(&points);
    Ok(DivergenceProfile { points, exponent, saturated })
}

/// Profile toward a declared simple pole at `z = 1`.
pub fn divergence_profile(f: &FunctionHandle, depth: u32) -> Result<DivergenceProfile> {
    if !f.has_pole_at(Complex64::new(1.0, 0.0), 1e-12) {
        return Err(precondition(format!("{} has no declared pole at z = 1", f.label())));
    }
    radial_profile(f, Complex64::new(1.0, 0.0), depth)
}
