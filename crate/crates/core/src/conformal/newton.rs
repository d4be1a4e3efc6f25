use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::settings::NumericSettings;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonSolve {
    pub root: Complex64,
    pub iterations: usize,
    pub residual: f64,
}

/// Damped Newton iteration for `map(z) = target` restricted to the open unit
/// disk. `map` returns the value and the analytic derivative.
///
/// Steps are halved until the iterate stays inside the disk and the residual
/// decreases.
pub fn newton_in_disk<F>(map: F, target: Complex64, seed: Complex64, settings: &NumericSettings) -> Result<NewtonSolve>
where
    F: Fn(Complex64) -> (Complex64, Complex64),
{
    let mut z = seed;
    let (mut value, mut deriv) = map(z);
    let mut residual = (value - target).norm();
    for it in 0..settings.newton_max_iter {
        if residual <= settings.newton_tol {
            return Ok(NewtonSolve { root: z, iterations: it, residual });
        }
        let step = (value - target) / deriv;
        if !step.is_finite() {
            break;
        }
        let mut lambda = 1.0;
        let mut accepted = None;
        for _ in 0..40 {
            let cand = z - lambda * step;
            if cand.norm() < 1.0 {
                let (v, d) = map(cand);
                let r = (v - target).norm();
                if v.is_finite() && r < residual {
                    accepted = Some((cand, v, d, r));
                    break;
                }
            }
            lambda *= 0.5;
        }
        match accepted {
            Some((cand, v, d, r)) => {
                z = cand;
                value = v;
                deriv = d;
                residual = r;
            }
            None => {
                // No decrease possible at machine precision.
                if residual <= 100.0 * settings.newton_tol {
                    return Ok(NewtonSolve { root: z, iterations: it, residual });
                }
                return Err(Error::NonConvergence { iterations: it, residual });
            }
        }
    }
    if residual <= settings.newton_tol {
        return Ok(NewtonSolve { root: z, iterations: settings.newton_max_iter, residual });
    }
    Err(Error::NonConvergence { iterations: settings.newton_max_iter, residual })
}

type DiskMap = Box<dyn Fn(Complex64) -> (Complex64, Complex64) + Send + Sync>;

/// Inverts a conformal self-map of the disk by Newton iteration, seeded from
/// the nearest image point of a coarse polar grid.
pub struct GridInverter {
    map: DiskMap,
    seeds: Vec<(Complex64, Complex64)>,
    settings: NumericSettings,
}

/// Number of nearest seeds tried before giving up.
const SEED_ATTEMPTS: usize = 8;

impl GridInverter {
    pub fn new<F>(map: F, settings: &NumericSettings) -> Self
    where
        F: Fn(Complex64) -> (Complex64, Complex64) + Send + Sync + 'static,
    {
        let n = settings.newton_seed_grid.max(2);
        let mut seeds = Vec::with_capacity(n * n + 1);
        let origin = Complex64::new(0.0, 0.0);
        seeds.push((origin, map(origin).0));
        for i in 0..n {
            let r = 0.98 * (i + 1) as f64 / n as f64;
            for j in 0..n {
                let z = Complex64::from_polar(r, TAU * j as f64 / n as f64);
                let w = map(z).0;
                if w.is_finite() {
                    seeds.push((z, w));
                }
            }
        }
        Self { map: Box::new(map), seeds, settings: *settings }
    }

    pub fn invert(&self, target: Complex64) -> Result<NewtonSolve> {
        let mut order: Vec<(f64, usize)> =
            self.seeds.iter().enumerate().map(|(i, (_, w))| ((w - target).norm(), i)).collect();
        order.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let mut last = Error::NonConvergence { iterations: 0, residual: f64::INFINITY };
        for &(_, idx) in order.iter().take(SEED_ATTEMPTS) {
            match newton_in_disk(&self.map, target, self.seeds[idx].0, &self.settings) {
                Ok(sol) => return Ok(sol),
                Err(e) => last = e,
            }
        }
        Err(last)
    }
}
