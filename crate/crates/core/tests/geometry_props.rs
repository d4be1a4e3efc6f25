use std::f64::consts::{PI, TAU};

use proptest::prelude::*;
use schlicht_core::conformal::{two_slit_map, TwoSlitParams};
use schlicht_core::geometry::*;
use schlicht_core::{Complex64, NumericSettings};

fn disk_point(rmax: f64) -> impl Strategy<Value = Complex64> {
    (0.0..rmax, 0.0..TAU).prop_map(|(r, a)| Complex64::from_polar(r, a))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn slit_disk_distance_below_circle_gap(p in 0.05..0.95f64, w in disk_point(0.999)) {
        let d = SlitDiskDomain::omega_p(p).unwrap();
        if let Ok(dist) = d.boundary_distance(w) {
            prop_assert!(dist <= 1.0 - w.norm() + 1e-15);
        }
    }

    #[test]
    fn two_slit_images_are_members(z in disk_point(0.9)) {
        let s = NumericSettings::default();
        let params = TwoSlitParams::new(0.6, 0.4, 2.0, &s).unwrap();
        let d = SlitDiskDomain::two_slit(&params, &s);
        let w = two_slit_map(&params, z).unwrap();
        prop_assert!(d.contains(w));
        prop_assert!(d.boundary_distance(w).unwrap() <= 1.0 - w.norm() + 1e-15);
    }
}

#[test]
fn largest_disk_witness_and_monotonicity() {
    let mut prev = 0.0;
    for i in 1..=9 {
        let p = 0.1 * i as f64;
        let d: Domain = SlitDiskDomain::omega_p(p).unwrap().into();
        let LargestDisk::Disk(w) = largest_disk(&d, &InscribedSearch::default()) else { panic!() };
        assert!(verify_witness(&d, &w));
        assert!(w.radius >= prev, "{p}");
        assert!((w.radius - (1.0 + p) / 2.0).abs() < 1e-3, "{p}: {}", w.radius);
        prev = w.radius;
    }
}

#[test]
fn koebe_covering_closed_forms() {
    let (inner, outer) = koebe_covering(0.5).unwrap();
    assert!((inner - 2.0 / 9.0).abs() < 1e-15);
    assert!((outer - 2.0).abs() < 1e-15);
}

#[test]
fn unbounded_kinds_are_structural() {
    let h: Domain = HalfPlane::new(1.5).unwrap().into();
    assert!(h.is_unbounded());
    let w = witness_disk(&h, 1e9).unwrap();
    assert!(verify_witness(&h, &w));
    let sq = ExteriorDomain::polygon(vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 1.0),
        Complex64::new(0.0, 1.0),
    ])
    .unwrap();
    let e: Domain = sq.into();
    assert_eq!(largest_disk(&e, &InscribedSearch::default()), LargestDisk::Unbounded);
    assert!(verify_witness(&e, &witness_disk(&e, 50.0).unwrap()));
    let slit: Domain = SlitDiskDomain::omega_p(0.5).unwrap().into();
    assert!(witness_disk(&slit, 0.1).is_err());
}

#[test]
fn domain_json_round_trip() {
    let s = NumericSettings::default();
    let params = TwoSlitParams::new(0.5, 1.0 / 3.0, PI / 2.0, &s).unwrap();
    let d: Domain = SlitDiskDomain::two_slit(&params, &s).into();
    let text = serde_json::to_string(&d).unwrap();
    let back: Domain = serde_json::from_str(&text).unwrap();
    for w in [Complex64::new(0.0, 0.0), params.anchor, Complex64::new(0.7, 0.0), Complex64::new(-0.2, 0.5)] {
        assert_eq!(d.contains(w), back.contains(w));
    }
}
