use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub type ComplexFn = Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

/// A declared simple pole of a [`FunctionHandle`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pole {
    pub location: Complex64,
    pub order: u32,
}

impl Pole {
    pub fn simple(location: Complex64) -> Self {
        Self { location, order: 1 }
    }
}

/// An analytic or meromorphic map on the unit disk together with its
/// analytic derivative and pole metadata.
#[derive(Clone)]
pub struct FunctionHandle {
    eval: ComplexFn,
    deriv: ComplexFn,
    poles: Vec<Pole>,
    label: String,
}

impl fmt::Debug for FunctionHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionHandle")
            .field("label", &self.label)
            .field("poles", &self.poles)
            .finish_non_exhaustive()
    }
}

impl FunctionHandle {
    pub fn new<F, D>(label: impl Into<String>, eval: F, deriv: D) -> Self
    where
        F: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
        D: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    {
        Self {
            eval: Arc::new(eval),
            deriv: Arc::new(deriv),
            poles: Vec::new(),
            label: label.into(),
        }
    }

    pub fn with_pole(mut self, location: Complex64) -> Self {
        self.poles.push(Pole::simple(location));
        self
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        (self.eval)(z)
    }

    pub fn deriv(&self, z: Complex64) -> Complex64 {
        (self.deriv)(z)
    }

    pub fn poles(&self) -> &[Pole] {
        &self.poles
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval_fn(&self) -> ComplexFn {
        Arc::clone(&self.eval)
    }

    pub fn deriv_fn(&self) -> ComplexFn {
        Arc::clone(&self.deriv)
    }

    /// Distance from `z` to the nearest declared pole (infinite if none).
    pub fn pole_distance(&self, z: Complex64) -> f64 {
        self.poles
            .iter()
            .map(|p| (z - p.location).norm())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn has_pole_at(&self, location: Complex64, tol: f64) -> bool {
        self.poles.iter().any(|p| (p.location - location).norm() <= tol)
    }

    /// Worst relative disagreement between `deriv` and a Richardson
    /// extrapolated central difference of `eval` at `samples` random points
    /// of `|z| < 0.95` that stay at least 0.05 away from every pole.
    pub fn derivative_mismatch(&self, samples: usize, seed: u64) -> f64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut worst: f64 = 0.0;
        let mut taken = 0;
        while taken < samples {
            let r = 0.95 * rng.gen::<f64>().sqrt();
            let z = Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU));
            if self.pole_distance(z) <= 0.05 {
                continue;
            }
            taken += 1;
            let h = 1e-3 * self.pole_distance(z).min(1.0);
            let numeric = richardson_derivative(|w| self.eval(w), z, h);
            let exact = self.deriv(z);
            let err = (numeric - exact).norm() / exact.norm().max(1.0);
            worst = worst.max(err);
        }
        worst
    }
}

/// Central difference with two Richardson steps; error `O(h^6)`.
pub fn richardson_derivative(f: impl Fn(Complex64) -> Complex64, z: Complex64, h: f64) -> Complex64 {
    let central = |h: f64| (f(z + h) - f(z - h)) / (2.0 * h);
    let d1 = central(h);
    let d2 = central(h / 2.0);
    let d3 = central(h / 4.0);
    let r1 = (4.0 * d2 - d1) / 3.0;
    let r2 = (4.0 * d3 - d2) / 3.0;
    (16.0 * r2 - r1) / 15.0
}
