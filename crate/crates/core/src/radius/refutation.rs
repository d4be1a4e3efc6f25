use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::bounds::{bloch_constant_lower, theorem_a_bounds, TheoremABounds};
use super::report::{InjectivityCertificate, RadiusKind, RadiusReport};
use crate::conformal::{eta, zeta};
use crate::error::{precondition, Result};
use crate::geometry::{witness_disk, DiskWitness, Domain, ExteriorDomain, SlitDiskDomain};
use crate::settings::NumericSettings;

const CERT_SAMPLES: usize = 128;
const FACTOR_DISKS: usize = 10;

/// Image of the disk under `f(z) = p z / (p - z)`: the plane minus a closed
/// disk, together with the exact inverse `w -> p w / (p + w)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExteriorImage {
    pub p: f64,
    pub center: f64,
    pub radius: f64,
    pub domain: ExteriorDomain,
}

impl ExteriorImage {
    pub fn map(&self, z: Complex64) -> Complex64 {
        self.p * z / (self.p - z)
    }

    pub fn inverse(&self, w: Complex64) -> Complex64 {
        self.p * w / (self.p + w)
    }

    /// `p - f^-1(w)`, computed without cancellation.
    pub fn inverse_offset(&self, w: Complex64) -> Complex64 {
        self.p * self.p / (self.p + w)
    }

    /// Round trip through the exact inverse on `n` points of the disk. The
    /// forward map is evaluated as `p z / (p - z)` with `p - z` taken from
    /// [`Self::inverse_offset`]; far from the excluded disk `z` crowds `p`
    /// and the naive difference would lose `log10(|w| / p)` digits.
    pub fn certify(&self, witness: &DiskWitness, n: usize, tolerance: f64) -> InjectivityCertificate {
        let mut max_round_trip = 0.0f64;
        let mut preimages_in_disk = true;
        for w in witness.fill_samples(n) {
            let z = self.inverse(w);
            preimages_in_disk &= z.norm() < 1.0;
            let back = self.p * z / self.inverse_offset(w);
            let err = (back - w).norm() / w.norm().max(1.0);
            max_round_trip = max_round_trip.max(if err.is_nan() { f64::INFINITY } else { err });
        }
        InjectivityCertificate { samples: n, max_round_trip, tolerance, preimages_in_disk }
    }
}

pub fn moebius_image_circle(p: f64) -> Result<ExteriorImage> {
    if !(p > 0.0 && p < 1.0) {
        return Err(precondition(format!("p must be in (0, 1), got {p}")));
    }
    let den = 1.0 - p * p;
    let center = -p / den;
    let radius = p * p / den;
    let domain = ExteriorDomain::disk(Complex64::new(center, 0.0), radius)?;
    Ok(ExteriorImage { p, center, radius, domain })
}

/// Disks placed in the normalized coordinates `g = f∘eta / r` and scaled by
/// `r = 4p/(1+p)^2` into the image of the slit disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorizationCheck {
    pub scale: f64,
    /// `g'(0)`, which must be 1.
    pub g_prime_zero: Complex64,
    pub disks: usize,
    pub contained_in_g_image: usize,
    pub scaled_contained: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RefutationReport {
    #[serde(flatten)]
    pub report: RadiusReport,
    pub p: f64,
    pub r_target: f64,
    pub excluded_center: f64,
    pub excluded_radius: f64,
    pub theorem_a: TheoremABounds,
    /// Witness radius over the conjectured bound `4p B / (1+p)^2`.
    pub ratio: f64,
    pub factorization: FactorizationCheck,
}

fn factorization_check(img: &ExteriorImage, seed: u64) -> Result<FactorizationCheck> {
    let p = img.p;
    let scale = 4.0 * p / ((1.0 + p) * (1.0 + p));
    let slit = SlitDiskDomain::omega_p(p)?;
    let h = 1e-6;
    let g = |z: Complex64| -> Result<Complex64> { Ok(img.map(eta(p, z)?) / scale) };
    let g_prime_zero = (g(Complex64::new(h, 0.0))? - g(Complex64::new(-h, 0.0))?) / (2.0 * h);

    // Membership in g(D): pull back through f^-1, then zeta must land in D
    // and g must reproduce the point.
    let in_g_image = |w: Complex64| -> bool {
        let z = img.inverse(scale * w);
        if !slit.contains(z) {
            return false;
        }
        match zeta(p, z).and_then(|u| g(u).map(|gw| (u, gw))) {
            Ok((u, gw)) => u.norm() < 1.0 && (gw - w).norm() <= 1e-8 * w.norm().max(1.0),
            Err(_) => false,
        }
    };
    let in_scaled_image = |w: Complex64| slit.contains(img.inverse(w));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let right_edge = (img.center + img.radius) / scale;
    let (mut inside_g, mut inside_scaled) = (0, 0);
    for _ in 0..FACTOR_DISKS {
        let s: f64 = rng.gen_range(0.1..50.0);
        let gap: f64 = rng.gen_range(0.05..5.0);
        let y: f64 = rng.gen_range(-20.0..20.0);
        let disk = DiskWitness { center: Complex64::new(right_edge + s + gap, y), radius: s, schlicht: false };
        if disk.membership_samples().into_iter().all(in_g_image) {
            inside_g += 1;
            let scaled = DiskWitness { center: scale * disk.center, radius: scale * disk.radius, schlicht: false };
            if scaled.membership_samples().into_iter().all(in_scaled_image) {
                inside_scaled += 1;
            }
        }
    }
    Ok(FactorizationCheck {
        scale,
        g_prime_zero,
        disks: FACTOR_DISKS,
        contained_in_g_image: inside_g,
        scaled_contained: inside_scaled,
        passed: inside_g == FACTOR_DISKS && inside_scaled == FACTOR_DISKS && (g_prime_zero - 1.0).norm() < 1e-6,
    })
}

/// Schlicht disk of radius `r_target` in the image of `p z / (p - z)`,
/// compared against the conjectured class bound.
pub fn refutation_report(p: f64, r_target: f64, seed: u64, settings: &NumericSettings) -> Result<RefutationReport> {
    if !(r_target > 0.0 && r_target.is_finite()) {
        return Err(precondition(format!("target radius must be positive, got {r_target}")));
    }
    let img = moebius_image_circle(p)?;
    let domain = Domain::Exterior(img.domain.clone());
    let mut witness = witness_disk(&domain, r_target)?;
    let certificate = img.certify(&witness, CERT_SAMPLES, settings.eval_tol);
    witness.schlicht = certificate.passed();
    let theorem_a = theorem_a_bounds(p, 1.0)?;
    let factorization = factorization_check(&img, seed)?;
    Ok(RefutationReport {
        report: RadiusReport {
            kind: RadiusKind::Bloch,
            lower_bound: witness.radius,
            witness: Some(witness),
            constant_used: bloch_constant_lower(),
            conjectured_bound: Some(theorem_a.bloch_bound),
            function_label: format!("{p}z/({p}-z)"),
            truncated: false,
            certificate: Some(certificate),
        },
        p,
        r_target,
        excluded_center: img.center,
        excluded_radius: img.radius,
        ratio: witness.radius / theorem_a.bloch_bound,
        theorem_a,
        factorization,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_circle() {
        let img = moebius_image_circle(0.5).unwrap();
        assert!((img.center + 2.0 / 3.0).abs() < 1e-15);
        assert!((img.radius - 1.0 / 3.0).abs() < 1e-15);
        assert!(img.domain.contains(Complex64::new(0.0, 0.0)));
        assert!(moebius_image_circle(1.0).is_err());
    }

    #[test]
    fn exterior_round_trip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for p in [0.1, 0.5, 0.9] {
            let img = moebius_image_circle(p).unwrap();
            let mut n = 0;
            while n < 100 {
                let w = Complex64::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
                if !img.domain.contains(w) {
                    continue;
                }
                n += 1;
                assert!((img.map(img.inverse(w)) - w).norm() < 1e-12, "{p} {w}");
                assert!(img.inverse(w).norm() < 1.0);
            }
        }
    }

    #[test]
    fn circumcircle_oracle() {
        // Circle through three boundary images.
        let img = moebius_image_circle(0.5).unwrap();
        for z in [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0), Complex64::new(0.0, 1.0)] {
            let w = img.map(z);
            assert!(((w - img.center).norm() - img.radius).abs() < 1e-14);
        }
    }

    #[test]
    fn report_half() {
        let rep = refutation_report(0.5, 100.0, 42, &NumericSettings::default()).unwrap();
        let w = rep.report.witness.unwrap();
        assert_eq!(w.radius, 100.0);
        assert_eq!(rep.report.lower_bound, 100.0);
        assert!(w.schlicht);
        assert!(rep.ratio >= 259.6, "{}", rep.ratio);
        assert!(rep.factorization.passed, "{:?}", rep.factorization);
    }

    #[test]
    fn huge_target() {
        let rep = refutation_report(0.5, 1e6, 42, &NumericSettings::default()).unwrap();
        assert!(rep.report.witness.unwrap().schlicht, "{:?}", rep.report.certificate);
    }

    #[test]
    fn json_fields() {
        let rep = refutation_report(0.3, 10.0, 1, &NumericSettings::default()).unwrap();
        let v = serde_json::to_value(&rep).unwrap();
        for key in ["kind", "lower_bound", "witness", "constant_used", "conjectured_bound", "function_label", "truncated", "ratio"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["kind"], "bloch");
        assert!(v["witness"]["center"].is_array());
    }
}
