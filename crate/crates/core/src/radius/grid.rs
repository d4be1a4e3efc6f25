use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};

/// Deterministic polar sampling of the disk used by the supremum searches.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub radial_count: usize,
    pub angular_count: usize,
    pub refine_depth: usize,
    /// Samples closer than this to a declared pole are skipped.
    pub pole_margin: f64,
    /// Radius of the outermost ring.
    pub outer_radius: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self { radial_count: 64, angular_count: 64, refine_depth: 3, pole_margin: 1e-4, outer_radius: 0.99 }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.radial_count < 8 || self.angular_count < 8 {
            return Err(precondition("grid counts must be at least 8"));
        }
        if !(self.pole_margin >= 1e-6) {
            return Err(precondition(format!("pole margin must be >= 1e-6, got {}", self.pole_margin)));
        }
        if !(self.outer_radius > 0.0 && self.outer_radius < 1.0) {
            return Err(precondition(format!("outer radius must be in (0, 1), got {}", self.outer_radius)));
        }
        Ok(())
    }

    pub fn with_outer_radius(mut self, outer_radius: f64) -> Self {
        self.outer_radius = outer_radius;
        self
    }

    pub fn with_pole_margin(mut self, pole_margin: f64) -> Self {
        self.pole_margin = pole_margin;
        self
    }
}

/// Cooperative cancellation flag, checked between refinement passes.
#[derive(Debug, Clone, Default)]
pub struct Cancellation(Arc<AtomicBool>);

impl Cancellation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}
