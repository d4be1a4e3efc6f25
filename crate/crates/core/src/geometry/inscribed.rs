use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::domain::{Domain, ExcludedSet, SlitDiskDomain};
use crate::error::{precondition, Error, Result};

/// A disk `D(center, radius)` certified to lie in some image domain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskWitness {
    pub center: Complex64,
    pub radius: f64,
    pub schlicht: bool,
}

impl DiskWitness {
    /// 64 points on the boundary circle followed by 32 interior points
    /// (the center and rings at 1/4, 1/2, 3/4 of the radius).
    pub fn membership_samples(&self) -> Vec<Complex64> {
        let mut pts = Vec::with_capacity(96);
        for k in 0..64 {
            pts.push(self.center + Complex64::from_polar(self.radius, TAU * k as f64 / 64.0));
        }
        pts.push(self.center);
        for (frac, count) in [(0.25, 7), (0.5, 11), (0.75, 13)] {
            for k in 0..count {
                let angle = TAU * (k as f64 + 0.5) / count as f64;
                pts.push(self.center + Complex64::from_polar(frac * self.radius, angle));
            }
        }
        pts
    }

    /// Uniformly spread points of the closed disk (sunflower pattern).
    pub fn fill_samples(&self, n: usize) -> Vec<Complex64> {
        let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
        (0..n)
            .map(|k| {
                let r = self.radius * ((k as f64 + 0.5) / n as f64).sqrt();
                self.center + Complex64::from_polar(r, golden * k as f64)
            })
            .collect()
    }
}

/// Membership ring test of a witness against a domain.
pub fn verify_witness(domain: &Domain, witness: &DiskWitness) -> bool {
    witness.radius > 0.0 && witness.membership_samples().into_iter().all(|w| domain.contains(w))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LargestDisk {
    Disk(DiskWitness),
    Unbounded,
}

impl LargestDisk {
    pub fn radius(&self) -> f64 {
        match self {
            LargestDisk::Disk(w) => w.radius,
            LargestDisk::Unbounded => f64::INFINITY,
        }
    }

    pub fn witness(&self) -> Option<&DiskWitness> {
        match self {
            LargestDisk::Disk(w) => Some(w),
            LargestDisk::Unbounded => None,
        }
    }
}

/// Center-grid search for the inscribed-disk radius of a slit disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InscribedSearch {
    /// Points per axis of the uniform grid on `[-1, 1]^2`.
    pub grid: usize,
    /// Local refinement passes around the incumbent.
    pub passes: usize,
    /// Resolution gain per pass.
    pub factor: usize,
    /// Half-width of each refinement window, in cells of the previous pass.
    pub window: usize,
    /// Subtracted from the best clearance so the reported disk is strictly
    /// inside the membership band.
    pub margin: f64,
}

impl Default for InscribedSearch {
    fn default() -> Self {
        Self { grid: 200, passes: 2, factor: 10, window: 5, margin: 1e-8 }
    }
}

fn slit_disk_search(domain: &SlitDiskDomain, search: &InscribedSearch) -> DiskWitness {
    let n = search.grid.max(2);
    let mut h = 2.0 / (n - 1) as f64;
    let mut best = (f64::NEG_INFINITY, Complex64::new(0.0, 0.0));
    for i in 0..n {
        for j in 0..n {
            let c = Complex64::new(-1.0 + h * i as f64, -1.0 + h * j as f64);
            if domain.contains(c) {
                let d = domain.clearance(c);
                if d > best.0 {
                    best = (d, c);
                }
            }
        }
    }
    let f = search.factor.max(1) as i64;
    let span = f * search.window.max(1) as i64;
    for _ in 0..search.passes {
        h /= f as f64;
        let center = best.1;
        for i in -span..=span {
            for j in -span..=span {
                let c = center + Complex64::new(h * i as f64, h * j as f64);
                if domain.contains(c) {
                    let d = domain.clearance(c);
                    if d > best.0 {
                        best = (d, c);
                    }
                }
            }
        }
    }
    DiskWitness { center: best.1, radius: best.0 - search.margin, schlicht: false }
}

/// Largest inscribed disk: unbounded for half-planes and exteriors, a
/// certified grid search for slit disks.
pub fn largest_disk(domain: &Domain, search: &InscribedSearch) -> LargestDisk {
    match domain {
        Domain::SlitDisk(d) => {
            let mut w = slit_disk_search(d, search);
            for _ in 0..40 {
                if verify_witness(domain, &w) {
                    break;
                }
                w.radius *= 1.0 - 1e-6;
            }
            LargestDisk::Disk(w)
        }
        Domain::HalfPlane(_) | Domain::Exterior(_) => LargestDisk::Unbounded,
    }
}

/// A membership-verified disk of radius `radius` inside an unbounded domain.
pub fn witness_disk(domain: &Domain, radius: f64) -> Result<DiskWitness> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(precondition(format!("witness radius must be positive, got {radius}")));
    }
    let center = match domain {
        Domain::SlitDisk(_) => return Err(Error::UnboundedRequired),
        Domain::HalfPlane(h) => Complex64::new(h.edge() + radius + 1.0, 0.0),
        Domain::Exterior(e) => match &e.excluded {
            ExcludedSet::Disk { center, radius: r0 } => center + Complex64::new(r0 + radius + 1.0, 0.0),
            ExcludedSet::Polygon(v) => {
                let centroid = v.iter().sum::<Complex64>() / v.len() as f64;
                let diameter = v
                    .iter()
                    .flat_map(|a| v.iter().map(move |b| (a - b).norm()))
                    .fold(0.0, f64::max);
                centroid + Complex64::new(diameter + radius + 1.0, 0.0)
            }
        },
    };
    let w = DiskWitness { center, radius, schlicht: false };
    if !verify_witness(domain, &w) {
        return Err(precondition("witness disk failed the membership ring"));
    }
    Ok(w)
}
