use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::bounds::{bloch_constant_lower, bloch_lower_bound, theorem_a_bounds};
use super::divergence::radial_profile;
use super::grid::GridSpec;
use super::registry::two_pole_rational;
use super::report::{RadiusKind, RadiusReport};
use crate::conformal::{
    pole_preimages, psi_map, radial_limit, real_slit_map_deriv, two_slit_deriv, two_slit_map, FunctionHandle,
    TwoSlitInverter, TwoSlitParams,
};
use crate::error::{precondition, Error, Result};
use crate::settings::NumericSettings;

const POLE_FREE_RADIUS: f64 = 1.0 - 1e-4;
const POLE_FREE_EXCLUSION: f64 = 0.05;
const GROWTH_DEPTH: u32 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PoleCase {
    /// Second pole off the positive real axis.
    OffAxis,
    /// Both poles on `(0, 1)`; reduced through a disk automorphism.
    Collinear,
}

/// Reduction of two poles `p < q` on `(0, 1)` to poles on opposite sides of 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CollinearReduction {
    pub p: f64,
    pub q: f64,
    pub z1: Complex64,
    pub z2: Complex64,
    /// `|(f∘psi)'(0)|`, the factor between the Bloch radii of `f` and of the
    /// normalized composition.
    pub scale: f64,
}

/// The two-slit construction `g = c (F∘h)` for poles `p` and `mu`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlitConstruction {
    pub p: f64,
    pub mu: Complex64,
    /// `mu` was replaced by its conjugate so the preimage angle lands in
    /// `[0, pi]`. The Bloch radius is invariant under `f -> conj f(conj z)`.
    pub reflected: bool,
    pub params: TwoSlitParams,
    /// Radial limit of the inverse map at `p`; should equal `params.xi1`.
    pub h_inverse_at_p: Complex64,
    pub h_inverse_at_p_residual: f64,
    /// Radial limit of the inverse map at `mu`; should equal -1.
    pub h_inverse_at_mu: Complex64,
    pub h_inverse_at_mu_residual: f64,
    pub c: Complex64,
    pub pole_free: bool,
    pub pole_free_max_modulus: f64,
    /// Fitted growth of `(1-t^2)|g'(-t)|`; about 2 since `F∘h` has a double pole at -1.
    pub growth_exponent: Option<f64>,
    pub outer_radius: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoPoleReport {
    #[serde(flatten)]
    pub report: RadiusReport,
    pub case: PoleCase,
    pub reduction: Option<CollinearReduction>,
    pub construction: SlitConstruction,
}

fn slit_params(p: f64, mu: Complex64, settings: &NumericSettings) -> Result<(TwoSlitParams, Complex64, bool)> {
    match TwoSlitParams::from_poles(p, mu, settings) {
        Ok(t) if t.theta <= PI => Ok((t, mu, false)),
        Ok(_) | Err(Error::BranchMismatch { .. }) => {
            let m = mu.conj();
            Ok((TwoSlitParams::from_poles(p, m, settings)?, m, true))
        }
        Err(e) => Err(e),
    }
}

fn nan() -> Complex64 {
    Complex64::new(f64::NAN, f64::NAN)
}

fn off_axis(
    p: f64,
    mu: Complex64,
    f: Option<FunctionHandle>,
    r_target: f64,
    scale: f64,
    settings: &NumericSettings,
) -> Result<(SlitConstruction, RadiusReport)> {
    let (params, mu, reflected) = slit_params(p, mu, settings)?;
    let f = match f {
        Some(f) => f,
        None => two_pole_rational(p, mu)?,
    };
    let inverter = TwoSlitInverter::new(&params, settings);
    let h_inverse_at_p = radial_limit(|gap| inverter.invert(Complex64::new(p - gap, 0.0)), settings.radial_eps)?;
    let tip_pre = Complex64::from_polar(params.p1, params.theta);
    let tangent = real_slit_map_deriv(p, tip_pre)? * Complex64::from_polar(1.0, params.theta);
    let away = -tangent / tangent.norm();
    let h_inverse_at_mu = radial_limit(|gap| inverter.invert(params.anchor + gap * away), settings.radial_eps)?;

    let zero = Complex64::new(0.0, 0.0);
    let c = 1.0 / (f.deriv(two_slit_map(&params, zero)?) * two_slit_deriv(&params, zero)?);
    let (fe, fd) = (f.eval_fn(), f.deriv_fn());
    let g = FunctionHandle::new(
        format!("c*({})∘h", f.label()),
        move |z| two_slit_map(&params, z).map(|w| c * fe(w)).unwrap_or_else(|_| nan()),
        move |z| match (two_slit_map(&params, z), two_slit_deriv(&params, z)) {
            (Ok(w), Ok(dw)) => c * fd(w) * dw,
            _ => nan(),
        },
    )
    .with_pole(params.xi1)
    .with_pole(Complex64::new(-1.0, 0.0));

    let mut pole_free = true;
    let mut max_modulus = 0.0f64;
    for i in 0..=64 {
        let r = POLE_FREE_RADIUS * i as f64 / 64.0;
        for j in 0..256 {
            let z = Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / 256.0);
            if g.pole_distance(z) < POLE_FREE_EXCLUSION {
                continue;
            }
            let v = g.eval(z);
            pole_free &= v.is_finite();
            max_modulus = max_modulus.max(v.norm());
        }
    }
    let growth = radial_profile(&g, Complex64::new(-1.0, 0.0), GROWTH_DEPTH)?;

    let mut report = None;
    let mut outer_radius = 0.0;
    for j in 2..=7 {
        outer_radius = 1.0 - 10f64.powi(-j);
        let grid = GridSpec::default().with_outer_radius(outer_radius);
        let rep = bloch_lower_bound(&g, &grid)?;
        let reached = scale * rep.lower_bound / c.norm() >= r_target;
        report = Some(rep);
        if reached {
            break;
        }
    }
    let rep = report.expect("at least one grid");
    let construction = SlitConstruction {
        p,
        mu,
        reflected,
        params,
        h_inverse_at_p,
        h_inverse_at_p_residual: (h_inverse_at_p - params.xi1).norm(),
        h_inverse_at_mu,
        h_inverse_at_mu_residual: (h_inverse_at_mu + 1.0).norm(),
        c,
        pole_free,
        pole_free_max_modulus: max_modulus,
        growth_exponent: growth.exponent,
        outer_radius,
    };
    let report = RadiusReport {
        kind: RadiusKind::Bloch,
        lower_bound: scale * rep.lower_bound / c.norm(),
        witness: None,
        constant_used: bloch_constant_lower(),
        conjectured_bound: None,
        function_label: f.label().to_string(),
        truncated: rep.truncated,
        certificate: None,
    };
    Ok((construction, report))
}

/// Bloch lower bound for the normalized rational map with simple poles at
/// `p` and `mu`, via the two-slit construction.
pub fn two_pole_report(p: f64, mu: Complex64, r_target: f64, settings: &NumericSettings) -> Result<TwoPoleReport> {
    if !(p > 0.0 && p < 1.0) {
        return Err(precondition(format!("p must be in (0, 1), got {p}")));
    }
    if !(mu.norm() < 1.0) || mu.norm() == 0.0 {
        return Err(precondition(format!("second pole must lie in the punctured disk, got {mu}")));
    }
    if !(r_target > 0.0 && r_target.is_finite()) {
        return Err(precondition(format!("target radius must be positive, got {r_target}")));
    }
    let collinear = mu.im == 0.0 && mu.re > 0.0;
    if collinear && (mu.re - p).abs() <= 1e-12 {
        return Err(Error::CollinearDegenerate { a: Complex64::new(p, 0.0), b: mu });
    }

    let theorem_a = theorem_a_bounds(p, 1.0)?.bloch_bound;
    if !collinear {
        let (construction, mut report) = off_axis(p, mu, None, r_target, 1.0, settings)?;
        report.conjectured_bound = Some(theorem_a);
        return Ok(TwoPoleReport { report, case: PoleCase::OffAxis, reduction: None, construction });
    }

    let (lo, hi) = if p < mu.re { (p, mu.re) } else { (mu.re, p) };
    let (z1, z2) = pole_preimages(lo, hi)?;
    let psi = psi_map(lo, hi)?;
    let f = two_pole_rational(p, mu)?;
    let zero = Complex64::new(0.0, 0.0);
    let k = f.deriv(psi.apply(zero)?) * psi.deriv(zero)?;
    if !(k.norm() > 1e-14) {
        return Err(precondition("composition has vanishing derivative at 0"));
    }
    let (fe, fd) = (f.eval_fn(), f.deriv_fn());
    let shift = fe(psi.apply(zero)?);
    let (psi_e, psi_d) = (psi, psi);
    let composed = FunctionHandle::new(
        format!("({})∘psi", f.label()),
        move |z| psi_e.apply(z).map(|w| (fe(w) - shift) / k).unwrap_or_else(|_| nan()),
        move |z| match (psi_d.apply(z), psi_d.deriv(z)) {
            (Ok(w), Ok(dw)) => fd(w) * dw / k,
            _ => nan(),
        },
    )
    .with_pole(z2)
    .with_pole(z1);
    let reduction = CollinearReduction { p: lo, q: hi, z1, z2, scale: k.norm() };
    let (construction, mut report) = off_axis(z2.re, z1, Some(composed), r_target, k.norm(), settings)?;
    report.conjectured_bound = Some(theorem_a);
    report.function_label = f.label().to_string();
    Ok(TwoPoleReport { report, case: PoleCase::Collinear, reduction: Some(reduction), construction })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conformal::xi;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn off_axis_half_third() {
        let rep = two_pole_report(0.5, c(0.0, 1.0 / 3.0), 1e3, &NumericSettings::default()).unwrap();
        let k = &rep.construction;
        assert!(k.reflected);
        let expected = xi(k.params.r1, k.params.theta).unwrap();
        assert!((k.h_inverse_at_p - expected).norm() < 1e-6, "{:?}", k.h_inverse_at_p);
        assert!(k.h_inverse_at_mu_residual < 1e-6, "{}", k.h_inverse_at_mu_residual);
        assert!(k.pole_free);
        assert!(rep.report.lower_bound >= 1e3, "{}", rep.report.lower_bound);
        assert!(rep.report.truncated);
        let e = k.growth_exponent.unwrap();
        assert!((e - 2.0).abs() < 0.1, "{e}");
    }

    #[test]
    fn lower_half_plane_needs_no_reflection() {
        let rep = two_pole_report(0.5, c(0.2, -0.4), 10.0, &NumericSettings::default()).unwrap();
        assert!(!rep.construction.reflected);
        assert!(rep.construction.h_inverse_at_p_residual < 1e-6);
        assert!(rep.construction.h_inverse_at_mu_residual < 1e-6);
    }

    #[test]
    fn collinear_reduction() {
        let rep = two_pole_report(0.3, c(0.6, 0.0), 100.0, &NumericSettings::default()).unwrap();
        let red = rep.reduction.unwrap();
        assert!((red.z1.re + 0.20548).abs() < 1e-5, "{:?}", red.z1);
        assert!((red.z2.re - 0.17341).abs() < 1e-5, "{:?}", red.z2);
        assert!(red.z1.re < 0.0 && red.z2.re > 0.0);
        assert_eq!(rep.construction.params.theta, 0.0);
        assert!(rep.construction.h_inverse_at_mu_residual < 1e-6);
        assert!(rep.report.lower_bound >= 100.0);
    }

    #[test]
    fn degenerate_inputs() {
        let s = NumericSettings::default();
        assert!(matches!(two_pole_report(0.5, c(0.5, 0.0), 10.0, &s), Err(Error::CollinearDegenerate { .. })));
        assert!(matches!(two_pole_report(0.5, c(0.0, 0.0), 10.0, &s), Err(Error::Precondition(_))));
        assert!(matches!(two_pole_report(0.5, c(1.0, 0.0), 10.0, &s), Err(Error::Precondition(_))));
    }
}
