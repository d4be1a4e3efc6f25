//! Built-in test functions, addressable by name from the command line.

use num_complex::Complex64;

use crate::conformal::FunctionHandle;
use crate::error::{precondition, Result};

pub const NAMES: &[&str] = &[
    "identity",
    "z-over-1-minus-z",
    "boundary-pole-quadratic",
    "moebius-pole-p",
    "two-pole-rational",
];

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

pub fn identity() -> FunctionHandle {
    FunctionHandle::new("z", |z| z, |_| one())
}

/// `z / (1 - z)`, simple pole at 1.
pub fn z_over_one_minus_z() -> FunctionHandle {
    FunctionHandle::new("z/(1-z)", |z| z / (1.0 - z), |z| (1.0 - z).powi(-2)).with_pole(one())
}

/// `(z + z^2) / (1 - z)`: pole at 1 with residue factor `h(1) = -2`.
pub fn boundary_pole_quadratic() -> FunctionHandle {
    FunctionHandle::new(
        "(z+z^2)/(1-z)",
        |z| (z + z * z) / (1.0 - z),
        |z| (1.0 + 2.0 * z - z * z) / ((1.0 - z) * (1.0 - z)),
    )
    .with_pole(one())
}

fn check_p(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(precondition(format!("p must be in (0, 1), got {p}")));
    }
    Ok(p)
}

/// `p z / (p - z)`: normalized, single pole at `p`.
pub fn moebius_pole(p: f64) -> Result<FunctionHandle> {
    check_p(p)?;
    Ok(FunctionHandle::new(
        format!("{p}z/({p}-z)"),
        move |z| p * z / (p - z),
        move |z| p * p / ((p - z) * (p - z)),
    )
    .with_pole(Complex64::new(p, 0.0)))
}

/// `c (1/(z-p) + b/(z-mu))`, shifted so `f(0) = 0` and scaled so `f'(0) = 1`.
/// The weight `b` is 1 unless the derivatives at 0 nearly cancel, then 2.
pub fn two_pole_rational(p: f64, mu: Complex64) -> Result<FunctionHandle> {
    check_p(p)?;
    if !(mu.norm() < 1.0) || mu.norm() == 0.0 {
        return Err(precondition(format!("second pole must lie in the punctured disk, got {mu}")));
    }
    let pc = Complex64::new(p, 0.0);
    if (mu - pc).norm() < 1e-12 {
        return Err(precondition("the two poles coincide"));
    }
    let raw_d0 = |b: f64| -(1.0 / (p * p)) - b / (mu * mu);
    let b = if raw_d0(1.0).norm() < 1e-3 { 2.0 } else { 1.0 };
    let c = 1.0 / raw_d0(b);
    let shift = -(1.0 / pc) - b / mu;
    Ok(FunctionHandle::new(
        format!("two-pole(p={p}, mu={mu})"),
        move |z| c * (1.0 / (z - pc) + b / (z - mu) - shift),
        move |z| -c * (1.0 / ((z - pc) * (z - pc)) + b / ((z - mu) * (z - mu))),
    )
    .with_pole(pc)
    .with_pole(mu))
}

/// Look up a built-in by name. `p` and `mu` are consulted by the families
/// that need them.
pub fn builtin(name: &str, p: Option<f64>, mu: Option<Complex64>) -> Result<FunctionHandle> {
    let need_p = || p.ok_or_else(|| precondition(format!("function {name} needs p")));
    match name {
        "identity" => Ok(identity()),
        "z-over-1-minus-z" => Ok(z_over_one_minus_z()),
        "boundary-pole-quadratic" => Ok(boundary_pole_quadratic()),
        "moebius-pole-p" => moebius_pole(need_p()?),
        "two-pole-rational" => {
            let mu = mu.ok_or_else(|| precondition("function two-pole-rational needs mu"))?;
            two_pole_rational(need_p()?, mu)
        }
        other => Err(precondition(format!("unknown function {other}; known: {}", NAMES.join(", ")))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivatives_match_finite_differences() {
        let fs = [
            identity(),
            z_over_one_minus_z(),
            boundary_pole_quadratic(),
            moebius_pole(0.5).unwrap(),
            two_pole_rational(0.5, Complex64::new(0.0, 1.0 / 3.0)).unwrap(),
            two_pole_rational(0.3, Complex64::new(0.6, 0.0)).unwrap(),
        ];
        for f in &fs {
            assert!(f.derivative_mismatch(64, 7) < 1e-7, "{}", f.label());
        }
    }

    #[test]
    fn normalized_at_origin() {
        let zero = Complex64::new(0.0, 0.0);
        for f in [moebius_pole(0.2).unwrap(), two_pole_rational(0.5, Complex64::new(-0.1, 0.4)).unwrap()] {
            assert!(f.eval(zero).norm() < 1e-12);
            assert!((f.deriv(zero) - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn cancelling_weights_switch_b() {
        // 1/p^2 + 1/mu^2 = 0 for mu = i p.
        let f = two_pole_rational(0.5, Complex64::new(0.0, 0.5)).unwrap();
        assert!((f.deriv(Complex64::new(0.0, 0.0)) - 1.0).norm() < 1e-12);
    }

    #[test]
    fn lookup() {
        assert!(builtin("identity", None, None).is_ok());
        assert!(builtin("moebius-pole-p", None, None).is_err());
        assert!(builtin("nope", None, None).is_err());
        assert_eq!(builtin("moebius-pole-p", Some(0.5), None).unwrap().poles().len(), 1);
    }
}
