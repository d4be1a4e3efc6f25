use serde::{Deserialize, Serialize};

use crate::geometry::DiskWitness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadiusKind {
    Bloch,
    Landau,
}

/// Round-trip evidence that a witness disk is covered injectively.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InjectivityCertificate {
    pub samples: usize,
    /// Largest `|f(f^-1(w)) - w| / max(1, |w|)` over the samples.
    pub max_round_trip: f64,
    pub tolerance: f64,
    /// Every preimage landed strictly inside the unit disk.
    pub preimages_in_disk: bool,
}

impl InjectivityCertificate {
    pub fn passed(&self) -> bool {
        self.preimages_in_disk && self.max_round_trip < self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusReport {
    pub kind: RadiusKind,
    pub lower_bound: f64,
    pub witness: Option<DiskWitness>,
    pub constant_used: f64,
    pub conjectured_bound: Option<f64>,
    pub function_label: String,
    pub truncated: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<InjectivityCertificate>,
}
