use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantBound {
    pub value: f64,
    /// The bound as it is usually quoted.
    pub printed: String,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantEntry {
    pub name: String,
    pub symbol: String,
    pub description: String,
    pub lower: ConstantBound,
    pub upper: ConstantBound,
}

impl ConstantEntry {
    pub fn interval(&self) -> (f64, f64) {
        (self.lower.value, self.upper.value)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantsTable {
    pub entries: Vec<ConstantEntry>,
}

impl ConstantsTable {
    pub fn get(&self, name: &str) -> Option<&ConstantEntry> {
        self.entries.iter().find(|e| e.name == name || e.symbol == name)
    }
}

fn bound(value: f64, printed: &str, citation: &str) -> ConstantBound {
    ConstantBound { value, printed: printed.into(), citation: citation.into() }
}

/// `Gamma(1/3) Gamma(11/12) / (sqrt(1 + sqrt 3) Gamma(1/4))`.
pub(crate) fn ahlfors_grunsky() -> f64 {
    gamma(1.0 / 3.0) * gamma(11.0 / 12.0) / ((1.0 + 3f64.sqrt()).sqrt() * gamma(0.25))
}

/// `Gamma(1/3) Gamma(5/6) / Gamma(1/6)`.
pub(crate) fn rademacher() -> f64 {
    gamma(1.0 / 3.0) * gamma(5.0 / 6.0) / gamma(1.0 / 6.0)
}

pub fn classical_constants() -> ConstantsTable {
    let b_lo = 3f64.sqrt() / 4.0 + 2e-4;
    let l_lo = 0.5 + 2e-8;
    let l_hi = rademacher();
    let entry = |name: &str, symbol: &str, description: &str, lower, upper| ConstantEntry {
        name: name.into(),
        symbol: symbol.into(),
        description: description.into(),
        lower,
        upper,
    };
    ConstantsTable {
        entries: vec![
            entry(
                "bloch",
                "B",
                "Bloch constant",
                bound(b_lo, "√3/4 + 2×10⁻⁴", "Chen and Gauthier (1996)"),
                bound(ahlfors_grunsky(), "≈ 0.4719", "Ahlfors and Grunsky (1937)"),
            ),
            entry(
                "landau",
                "L",
                "Landau constant",
                bound(l_lo, "1/2 + 2×10⁻⁸", "Chen and Shiba (2004)"),
                bound(l_hi, "≈ 0.5433", "Rademacher (1943)"),
            ),
            entry(
                "univalent_bloch",
                "𝒰",
                "univalent Bloch-Landau constant",
                bound(0.5708858, "0.5708858", "Skinner (2009)"),
                bound(0.6563937, "0.6563937", "Carroll and Cerda (2009)"),
            ),
            entry(
                "locally_univalent_bloch",
                "B_ℓ",
                "Bloch constant for locally univalent functions",
                bound(l_lo, "1/2 + 2×10⁻⁸", "Chen and Shiba (2004)"),
                bound(l_hi, "≤ L ≈ 0.5433", "B_ℓ ≤ L; Rademacher (1943)"),
            ),
            entry(
                "meromorphic_plane_locally_univalent",
                "B_m,ℓ",
                "spherical Bloch constant, locally univalent meromorphic functions in the plane",
                bound(std::f64::consts::FRAC_PI_2, "π/2", "Minda (1982)"),
                bound(std::f64::consts::FRAC_PI_2, "π/2", "Minda (1982)"),
            ),
            entry(
                "meromorphic_plane",
                "B_m",
                "spherical Bloch constant, meromorphic functions in the plane",
                bound(8f64.sqrt().atan(), "arctan(√8)", "Bonk and Eremenko (2000)"),
                bound(8f64.sqrt().atan(), "arctan(√8)", "Bonk and Eremenko (2000)"),
            ),
        ],
    }
}
