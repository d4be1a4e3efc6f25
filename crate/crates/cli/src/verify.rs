use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schlicht_core::conformal::{
    eta, inverse_koebe, koebe, omega_slit, psi, radial_limit, richardson_derivative, rho, two_slit_deriv,
    two_slit_map, winding_number, xi, zeta, FunctionHandle, SlitParams, TwoSlitParams, UnitRotation,
};
use schlicht_core::{Complex64, NumericSettings};
use serde::Serialize;

use crate::args::MapVerifyArgs;
use crate::error::CliError;
use crate::output::{num, Output, Table};

#[derive(Debug, Serialize)]
struct Check {
    name: &'static str,
    value: f64,
    tolerance: f64,
    passed: bool,
}

#[derive(Debug, Serialize)]
struct Report {
    p: f64,
    x: f64,
    theta: f64,
    seed: u64,
    passed: bool,
    checks: Vec<Check>,
}

fn check(name: &'static str, value: f64, tolerance: f64) -> Check {
    Check { name, value, tolerance, passed: value < tolerance }
}

fn polar_grid(n: usize, rmax: f64) -> impl Iterator<Item = Complex64> {
    (0..n).flat_map(move |i| {
        let r = rmax * i as f64 / (n - 1) as f64;
        (0..n).map(move |j| Complex64::from_polar(r, TAU * j as f64 / n as f64))
    })
}

pub fn run(a: &MapVerifyArgs, seed: u64, s: &NumericSettings) -> Result<Output, CliError> {
    let zero = Complex64::new(0.0, 0.0);
    let t = 1.0 - s.radial_eps;
    let mut checks = Vec::new();

    let mut worst = 0.0f64;
    for u in [UnitRotation::PLUS, UnitRotation::MINUS] {
        for z in polar_grid(50, 0.99) {
            worst = worst.max((inverse_koebe(u, koebe(u, z)?)? - z).norm());
        }
    }
    checks.push(check("koebe_inverse_identity", worst, s.eval_tol));

    let slit = SlitParams::new(a.x, a.theta, s)?;
    checks.push(check("xi_unimodular", (xi(rho(a.x)?, a.theta)?.norm() - 1.0).abs(), 1e-12));
    let lim = radial_limit(|gap| omega_slit(&slit, (1.0 - gap) * slit.xi()), s.radial_eps)?;
    checks.push(check("omega_xi_to_minus_one", (lim + 1.0).norm(), s.boundary_tol));
    checks.push(check(
        "omega_minus_one_to_tip",
        (omega_slit(&slit, Complex64::new(-t, 0.0))? - slit.tip()).norm(),
        s.boundary_tol,
    ));

    let p = a.p;
    let d_eta = richardson_derivative(|z| eta(p, z).unwrap_or(zero), zero, 1e-3);
    checks.push(check("eta_derivative_at_zero", (d_eta - rho(p)?).norm(), 1e-8));
    let d_zeta = richardson_derivative(|w| zeta(p, w).unwrap_or(zero), zero, 1e-3 * p.min(0.5));
    checks.push(check("zeta_derivative_at_zero", (d_zeta - (1.0 + p).powi(2) / (4.0 * p)).norm(), 1e-8));
    let mut worst = 0.0f64;
    for z in polar_grid(40, 0.95) {
        worst = worst.max((zeta(p, eta(p, z)?)? - z).norm());
    }
    checks.push(check("zeta_eta_round_trip", worst, s.eval_tol));

    let two = TwoSlitParams::new(p, a.x, a.theta, s)?;
    checks.push(check("two_slit_derivative_at_zero", (two_slit_deriv(&two, zero)?.norm() - two.r * two.r1).abs(), 1e-8));
    checks.push(check(
        "two_slit_minus_one_to_anchor",
        (two_slit_map(&two, Complex64::new(-t, 0.0))? - two.anchor).norm(),
        s.boundary_tol,
    ));
    let at_p = radial_limit(|gap| two_slit_map(&two, (1.0 - gap) * two.xi1), s.radial_eps)?;
    checks.push(check("two_slit_xi_to_p", (at_p - p).norm(), s.boundary_tol));

    let q = (1.0 + p) / 2.0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let z = Complex64::from_polar(rng.gen_range(0.0..0.99), rng.gen_range(0.0..TAU));
        worst = worst.max((psi(p, q, psi(p, q, z)?)? - z).norm());
    }
    checks.push(check("psi_involution", worst, 1e-12));

    let h = FunctionHandle::new(
        "h",
        move |z| two_slit_map(&two, z).unwrap_or(zero),
        move |z| two_slit_deriv(&two, z).unwrap_or(zero),
    );
    let mut off_by = 0i64;
    for _ in 0..20 {
        let z = Complex64::from_polar(rng.gen_range(0.0..0.9), rng.gen_range(0.0..TAU));
        off_by = off_by.max((winding_number(&h, zero, 0.95, h.eval(z), s)? - 1).abs());
    }
    checks.push(check("two_slit_winding_is_one", off_by as f64, 0.5));

    let passed = checks.iter().all(|c| c.passed);
    let rows = checks
        .iter()
        .map(|c| vec![c.name.to_string(), num(c.value), num(c.tolerance), c.passed.to_string()])
        .collect();
    let report = Report { p, x: a.x, theta: a.theta, seed, passed, checks };
    let mut out = Output::new(&report)?.with_table(Table { header: vec!["name", "value", "tolerance", "passed"], rows });
    out.failed = !passed;
    Ok(out)
}
