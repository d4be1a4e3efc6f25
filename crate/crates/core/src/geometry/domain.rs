use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{polyline_distance, segment_distance};
use crate::conformal::TwoSlitParams;
use crate::error::{precondition, Error, Result};
use crate::settings::NumericSettings;

fn default_band() -> f64 {
    NumericSettings::default().slit_band
}

/// The radial segment `{t e^{i angle} : inner <= t < 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialSlit {
    pub angle: f64,
    pub inner: f64,
}

impl RadialSlit {
    pub fn new(angle: f64, inner: f64) -> Result<Self> {
        let s = Self { angle, inner };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        if !(self.inner > 0.0 && self.inner < 1.0) || !(0.0..TAU).contains(&self.angle) {
            return Err(precondition(format!(
                "radial slit needs angle in [0, 2pi) and inner in (0, 1), got ({}, {})",
                self.angle, self.inner
            )));
        }
        Ok(())
    }

    pub fn tip(&self) -> Complex64 {
        Complex64::from_polar(self.inner, self.angle)
    }

    pub fn end(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.angle)
    }

    pub fn distance(&self, w: Complex64) -> f64 {
        segment_distance(w, self.tip(), self.end())
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
struct CurveSlitSpec {
    p: f64,
    p1: f64,
    theta: f64,
}

/// Polyline approximation of the curved slit of a two-slit domain.
///
/// Serialized as its parameters `{p, p1, theta}`; the polyline is rebuilt
/// on load with default settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "CurveSlitSpec", try_from = "CurveSlitSpec")]
pub struct CurveSlit {
    samples: Vec<Complex64>,
    params: TwoSlitParams,
}

impl CurveSlit {
    /// Samples `t` in `[p1, 1 - gap]`, geometrically clustered toward `t = 1`.
    pub fn new(params: &TwoSlitParams, settings: &NumericSettings) -> Self {
        let n = settings.curve_samples.max(2);
        let span = 1.0 - params.p1;
        let ratio = (settings.curve_t_gap / span).min(1.0);
        let samples = (0..n)
            .map(|j| {
                let frac = j as f64 / (n - 1) as f64;
                let t = if j == 0 { params.p1 } else { 1.0 - span * ratio.powf(frac) };
                params.curve_point(t)
            })
            .collect();
        Self { samples, params: *params }
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn params(&self) -> &TwoSlitParams {
        &self.params
    }

    pub fn distance(&self, w: Complex64) -> f64 {
        polyline_distance(w, &self.samples)
    }
}

impl From<CurveSlit> for CurveSlitSpec {
    fn from(c: CurveSlit) -> Self {
        Self { p: c.params.p, p1: c.params.p1, theta: c.params.theta }
    }
}

impl TryFrom<CurveSlitSpec> for CurveSlit {
    type Error = Error;

    fn try_from(spec: CurveSlitSpec) -> Result<Self> {
        let settings = NumericSettings::default();
        let params = TwoSlitParams::new(spec.p, spec.p1, spec.theta, &settings)?;
        Ok(CurveSlit::new(&params, &settings))
    }
}

/// The unit disk minus at most two slits reaching the unit circle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlitDiskDomain {
    #[serde(default)]
    pub radial_slits: Vec<RadialSlit>,
    #[serde(default)]
    pub curve_slits: Vec<CurveSlit>,
    #[serde(skip, default = "default_band")]
    band: f64,
}

impl SlitDiskDomain {
    pub const MAX_SLITS: usize = 2;

    pub fn new(radial_slits: Vec<RadialSlit>, curve_slits: Vec<CurveSlit>) -> Result<Self> {
        let d = Self { radial_slits, curve_slits, band: default_band() };
        d.validate()?;
        Ok(d)
    }

    pub fn unit_disk() -> Self {
        Self { radial_slits: Vec::new(), curve_slits: Vec::new(), band: default_band() }
    }

    /// The disk slit along `[p, 1)`.
    pub fn omega_p(p: f64) -> Result<Self> {
        Self::new(vec![RadialSlit::new(0.0, p)?], Vec::new())
    }

    /// The image domain of the two-slit map.
    pub fn two_slit(params: &TwoSlitParams, settings: &NumericSettings) -> Self {
        Self {
            radial_slits: vec![RadialSlit { angle: 0.0, inner: params.p }],
            curve_slits: vec![CurveSlit::new(params, settings)],
            band: settings.slit_band,
        }
    }

    pub fn with_band(mut self, band: f64) -> Self {
        self.band = band;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.radial_slits.len() + self.curve_slits.len() > Self::MAX_SLITS {
            return Err(precondition("at most two slits are supported"));
        }
        self.radial_slits.iter().try_for_each(RadialSlit::validate)
    }

    /// Distance to the nearest boundary component, without a membership test.
    pub fn clearance(&self, w: Complex64) -> f64 {
        let mut d = 1.0 - w.norm();
        for s in &self.radial_slits {
            d = d.min(s.distance(w));
        }
        for c in &self.curve_slits {
            d = d.min(c.distance(w));
        }
        d
    }

    pub fn contains(&self, w: Complex64) -> bool {
        w.is_finite() && self.clearance(w) > self.band
    }

    pub fn boundary_distance(&self, w: Complex64) -> Result<f64> {
        if !self.contains(w) {
            return Err(Error::NotInDomain { w });
        }
        Ok(self.clearance(w))
    }
}

/// The half-plane `Re w > -1/(2 alpha)`, `1 < alpha <= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfPlane {
    pub alpha: f64,
}

impl HalfPlane {
    pub fn new(alpha: f64) -> Result<Self> {
        let h = Self { alpha };
        h.validate()?;
        Ok(h)
    }

    fn validate(&self) -> Result<()> {
        if !(self.alpha > 1.0 && self.alpha <= 2.0) {
            return Err(precondition(format!("alpha must be in (1, 2], got {}", self.alpha)));
        }
        Ok(())
    }

    /// Abscissa of the boundary line.
    pub fn edge(&self) -> f64 {
        -1.0 / (2.0 * self.alpha)
    }

    pub fn contains(&self, w: Complex64) -> bool {
        w.is_finite() && w.re - self.edge() > default_band()
    }

    pub fn boundary_distance(&self, w: Complex64) -> Result<f64> {
        if !self.contains(w) {
            return Err(Error::NotInDomain { w });
        }
        Ok(w.re - self.edge())
    }
}

/// The compact connected set removed from the plane.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExcludedSet {
    Disk { center: Complex64, radius: f64 },
    Polygon(Vec<Complex64>),
}

/// The complement of a compact connected set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExteriorDomain {
    pub excluded: ExcludedSet,
}

impl ExteriorDomain {
    pub fn disk(center: Complex64, radius: f64) -> Result<Self> {
        let d = Self { excluded: ExcludedSet::Disk { center, radius } };
        d.validate()?;
        Ok(d)
    }

    pub fn polygon(vertices: Vec<Complex64>) -> Result<Self> {
        let d = Self { excluded: ExcludedSet::Polygon(vertices) };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        match &self.excluded {
            ExcludedSet::Disk { center, radius } => {
                if !(center.is_finite() && *radius >= 0.0 && radius.is_finite()) {
                    return Err(precondition("excluded disk needs a finite center and radius >= 0"));
                }
            }
            ExcludedSet::Polygon(v) => {
                if v.len() < 3 || v.iter().any(|z| !z.is_finite()) {
                    return Err(precondition("excluded polygon needs at least three finite vertices"));
                }
            }
        }
        Ok(())
    }

    fn edge_distance(vertices: &[Complex64], w: Complex64) -> f64 {
        let n = vertices.len();
        (0..n)
            .map(|i| segment_distance(w, vertices[i], vertices[(i + 1) % n]))
            .fold(f64::INFINITY, f64::min)
    }

    fn inside_polygon(vertices: &[Complex64], w: Complex64) -> bool {
        let n = vertices.len();
        let mut inside = false;
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            if (a.im > w.im) != (b.im > w.im) {
                let x = a.re + (w.im - a.im) * (b.re - a.re) / (b.im - a.im);
                if w.re < x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    fn clearance(&self, w: Complex64) -> f64 {
        match &self.excluded {
            ExcludedSet::Disk { center, radius } => (w - center).norm() - radius,
            ExcludedSet::Polygon(v) => {
                if Self::inside_polygon(v, w) {
                    -Self::edge_distance(v, w)
                } else {
                    Self::edge_distance(v, w)
                }
            }
        }
    }

    pub fn contains(&self, w: Complex64) -> bool {
        w.is_finite() && self.clearance(w) > default_band()
    }

    pub fn boundary_distance(&self, w: Complex64) -> Result<f64> {
        if !self.contains(w) {
            return Err(Error::NotInDomain { w });
        }
        Ok(self.clearance(w))
    }
}

/// Any planar domain handled by the geometry queries.
///
/// JSON form: `{"kind": "slit_disk" | "half_plane" | "exterior", ...}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Domain {
    SlitDisk(SlitDiskDomain),
    HalfPlane(HalfPlane),
    Exterior(ExteriorDomain),
}

impl Domain {
    pub fn validate(&self) -> Result<()> {
        match self {
            Domain::SlitDisk(d) => d.validate(),
            Domain::HalfPlane(h) => h.validate(),
            Domain::Exterior(e) => e.validate(),
        }
    }

    pub fn contains(&self, w: Complex64) -> bool {
        match self {
            Domain::SlitDisk(d) => d.contains(w),
            Domain::HalfPlane(h) => h.contains(w),
            Domain::Exterior(e) => e.contains(w),
        }
    }

    pub fn boundary_distance(&self, w: Complex64) -> Result<f64> {
        match self {
            Domain::SlitDisk(d) => d.boundary_distance(w),
            Domain::HalfPlane(h) => h.boundary_distance(w),
            Domain::Exterior(e) => e.boundary_distance(w),
        }
    }

    /// Structural unboundedness: decided by kind, never numerically.
    pub fn is_unbounded(&self) -> bool {
        !matches!(self, Domain::SlitDisk(_))
    }
}

impl From<SlitDiskDomain> for Domain {
    fn from(d: SlitDiskDomain) -> Self {
        Domain::SlitDisk(d)
    }
}

impl From<HalfPlane> for Domain {
    fn from(h: HalfPlane) -> Self {
        Domain::HalfPlane(h)
    }
}

impl From<ExteriorDomain> for Domain {
    fn from(e: ExteriorDomain) -> Self {
        Domain::Exterior(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conformal::two_slit_map;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn membership_examples() {
        let om = SlitDiskDomain::omega_p(0.5).unwrap();
        assert!(om.contains(c(0.0, 0.0)));
        assert!(!om.contains(c(0.75, 0.0)));
        assert!(!om.contains(c(0.75, 5e-10)));
        assert!(om.contains(c(0.75, 1e-6)));
        assert!(!om.contains(c(0.0, 1.0)));
        let h = HalfPlane::new(2.0).unwrap();
        assert!(!h.contains(c(-0.25, 0.0)));
        assert!(h.contains(c(-0.2, 100.0)));
    }

    #[test]
    fn distance_examples() {
        let om = SlitDiskDomain::omega_p(0.5).unwrap();
        assert!((om.boundary_distance(c(-0.25, 0.0)).unwrap() - 0.75).abs() < 1e-15);
        let h = HalfPlane::new(1.25).unwrap();
        assert!((h.boundary_distance(c(0.0, 0.0)).unwrap() - 0.4).abs() < 1e-15);
        let e = ExteriorDomain::disk(c(-2.0 / 3.0, 0.0), 1.0 / 3.0).unwrap();
        assert!((e.boundary_distance(c(0.0, 0.0)).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!(matches!(om.boundary_distance(c(0.9, 0.0)), Err(Error::NotInDomain { .. })));
    }

    #[test]
    fn polygon_exterior() {
        let sq = ExteriorDomain::polygon(vec![c(-1.0, -1.0), c(1.0, -1.0), c(1.0, 1.0), c(-1.0, 1.0)]).unwrap();
        assert!(!sq.contains(c(0.0, 0.0)));
        assert!(!sq.contains(c(1.0, 0.5)));
        assert!((sq.boundary_distance(c(3.0, 0.0)).unwrap() - 2.0).abs() < 1e-15);
        assert!(ExteriorDomain::polygon(vec![c(0.0, 0.0), c(1.0, 0.0)]).is_err());
    }

    #[test]
    fn parameter_validation() {
        assert!(HalfPlane::new(1.0).is_err());
        assert!(HalfPlane::new(2.5).is_err());
        assert!(SlitDiskDomain::omega_p(1.0).is_err());
        let three = vec![RadialSlit::new(0.0, 0.5).unwrap(); 3];
        assert!(SlitDiskDomain::new(three, Vec::new()).is_err());
    }

    #[test]
    fn two_slit_membership_consistency() {
        let s = NumericSettings::default();
        let params = TwoSlitParams::new(0.5, 1.0 / 3.0, PI / 2.0, &s).unwrap();
        let dom = SlitDiskDomain::two_slit(&params, &s);
        let curve = &dom.curve_slits[0];
        assert_eq!(curve.samples()[0], params.anchor);
        assert!(curve.samples().last().unwrap().norm() > 1.0 - 1e-4);
        assert!(curve.samples().iter().all(|z| z.norm() <= 1.0));
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..500 {
            let z = Complex64::from_polar(0.9 * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..TAU));
            let w = two_slit_map(&params, z).unwrap();
            assert!(dom.contains(w), "{z} -> {w}");
            assert!(dom.boundary_distance(w).unwrap() <= 1.0 - w.norm());
        }
        for _ in 0..500 {
            let i = rng.gen_range(0..curve.samples().len() - 1);
            let t = rng.gen::<f64>();
            let on_curve = curve.samples()[i] * (1.0 - t) + curve.samples()[i + 1] * t;
            assert!(!dom.contains(on_curve));
            let on_radial = c(0.5 + 0.5 * t, 0.0);
            assert!(!dom.contains(on_radial));
        }
    }

    #[test]
    fn json_round_trip() {
        let s = NumericSettings::default();
        let params = TwoSlitParams::new(0.5, 1.0 / 3.0, PI / 2.0, &s).unwrap();
        let domains: Vec<Domain> = vec![
            SlitDiskDomain::omega_p(0.5).unwrap().into(),
            SlitDiskDomain::two_slit(&params, &s).into(),
            HalfPlane::new(2.0).unwrap().into(),
            ExteriorDomain::disk(c(-2.0 / 3.0, 0.0), 1.0 / 3.0).unwrap().into(),
            ExteriorDomain::polygon(vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0)]).unwrap().into(),
        ];
        for d in domains {
            let text = serde_json::to_string(&d).unwrap();
            let back: Domain = serde_json::from_str(&text).unwrap();
            assert_eq!(back, d, "{text}");
        }
        let parsed: Domain = serde_json::from_str(r#"{"kind":"half_plane","alpha":1.5}"#).unwrap();
        assert_eq!(parsed, Domain::HalfPlane(HalfPlane { alpha: 1.5 }));
        let ext: Domain =
            serde_json::from_str(r#"{"kind":"exterior","excluded":{"disk":{"center":[-1.0,0.0],"radius":0.5}}}"#).unwrap();
        assert!(ext.is_unbounded());
        let bad: Domain = serde_json::from_str(r#"{"kind":"half_plane","alpha":3.0}"#).unwrap();
        assert!(bad.validate().is_err());
    }
}
