use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};

const DET_TOL: f64 = 1e-14;
const POLE_TOL: f64 = 1e-14;

/// Fractional linear map `z -> (a z + b) / (c z + d)` with `ad - bc != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MoebiusMap {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl MoebiusMap {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let m = Self { a, b, c, d };
        if !(m.det().norm() > DET_TOL) {
            return Err(precondition(format!("degenerate Moebius map, det = {}", m.det())));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self { a: one, b: zero, c: zero, d: one }
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, z: Complex64) -> Result<Complex64> {
        let den = self.c * z + self.d;
        if den.norm() < POLE_TOL {
            return Err(Error::PoleOfMap { z });
        }
        Ok((self.a * z + self.b) / den)
    }

    pub fn deriv(&self, z: Complex64) -> Result<Complex64> {
        let den = self.c * z + self.d;
        if den.norm() < POLE_TOL {
            return Err(Error::PoleOfMap { z });
        }
        Ok(self.det() / (den * den))
    }

    /// The point sent to infinity, if any.
    pub fn pole(&self) -> Option<Complex64> {
        (self.c.norm() > 0.0).then(|| -self.d / self.c)
    }

    /// `self ∘ other`, i.e. the coefficient-matrix product `self * other`.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        MoebiusMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    pub fn inverse(&self) -> MoebiusMap {
        MoebiusMap { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// Equality as maps, i.e. of coefficient matrices up to a common scalar.
    pub fn same_map(&self, other: &MoebiusMap, tol: f64) -> bool {
        let lhs = [self.a, self.b, self.c, self.d];
        let rhs = [other.a, other.b, other.c, other.d];
        // Compare all 2x2 minors of the stacked coefficient vectors.
        let scale = lhs.iter().chain(rhs.iter()).map(|v| v.norm()).fold(0.0, f64::max).max(1.0);
        (0..4).all(|i| (0..4).all(|j| (lhs[i] * rhs[j] - lhs[j] * rhs[i]).norm() <= tol * scale * scale))
    }
}

fn check_pair(p: f64, q: f64) -> Result<()> {
    if !(0.0 < p && p < q && q < 1.0) {
        return Err(precondition(format!("need 0 < p < q < 1, got p = {p}, q = {q}")));
    }
    Ok(())
}

/// The disk automorphism `(p + q - 2z) / (2 - (p + q) z)` exchanging `0`
/// and the midpoint `(p + q)/2`.
pub fn psi_map(p: f64, q: f64) -> Result<MoebiusMap> {
    check_pair(p, q)?;
    let s = p + q;
    MoebiusMap::new(Complex64::new(-2.0, 0.0), Complex64::new(s, 0.0), Complex64::new(-s, 0.0), Complex64::new(2.0, 0.0))
}

pub fn psi(p: f64, q: f64, z: Complex64) -> Result<Complex64> {
    psi_map(p, q)?.apply(z)
}

/// The preimages `(z1, z2)` of `q` and `p` under [`psi`]; `z1 < 0 < z2`.
pub fn pole_preimages(p: f64, q: f64) -> Result<(Complex64, Complex64)> {
    check_pair(p, q)?;
    let s = p + q;
    let z1 = (p - q) / (2.0 - q * s);
    let z2 = (q - p) / (2.0 - p * s);
    Ok((Complex64::new(z1, 0.0), Complex64::new(z2, 0.0)))
}
