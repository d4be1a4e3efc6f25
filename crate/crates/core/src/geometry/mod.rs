//! Planar domains: slit disks, half-planes and complements of compact sets.

mod covering;
mod domain;
mod inscribed;

pub use covering::koebe_covering;
pub use domain::{CurveSlit, Domain, ExcludedSet, ExteriorDomain, HalfPlane, RadialSlit, SlitDiskDomain};
pub use inscribed::{largest_disk, verify_witness, witness_disk, DiskWitness, InscribedSearch, LargestDisk};

use num_complex::Complex64;

/// Euclidean distance from `w` to the closed segment `[a, b]`.
pub fn segment_distance(w: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (w - a).norm();
    }
    let t = ((w - a) * ab.conj()).re / len2;
    let t = t.clamp(0.0, 1.0);
    (w - (a + t * ab)).norm()
}

/// Distance from `w` to an open polyline given by its vertices.
pub fn polyline_distance(w: Complex64, vertices: &[Complex64]) -> f64 {
    match vertices {
        [] => f64::INFINITY,
        [only] => (w - only).norm(),
        _ => vertices
            .windows(2)
            .map(|s| segment_distance(w, s[0], s[1]))
            .fold(f64::INFINITY, f64::min),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_distance_cases() {
        let a = Complex64::new(0.5, 0.0);
        let b = Complex64::new(1.0, 0.0);
        assert!((segment_distance(Complex64::new(-0.25, 0.0), a, b) - 0.75).abs() < 1e-15);
        assert!((segment_distance(Complex64::new(0.75, 0.3), a, b) - 0.3).abs() < 1e-15);
        assert!((segment_distance(Complex64::new(1.0, 1.0), a, b) - 1.0).abs() < 1e-15);
        assert_eq!(segment_distance(Complex64::new(0.0, 1.0), a, a), (Complex64::new(0.0, 1.0) - a).norm());
    }
}
