//! Bloch seminorms, radius lower bounds and the unboundedness reports.

mod bounds;
mod constants;
mod divergence;
mod grid;
mod refutation;
pub mod registry;
mod report;
mod seminorm;
mod two_pole;

pub use bounds::{bloch_constant_lower, bloch_lower_bound, landau_constant_lower, theorem_a_bounds, TheoremABounds};
pub use constants::{classical_constants, ConstantBound, ConstantEntry, ConstantsTable};
pub use divergence::{divergence_profile, format_csv_number, radial_profile, DivergenceProfile, ProfilePoint};
pub use grid::{Cancellation, GridSpec};
pub use refutation::{moebius_image_circle, refutation_report, ExteriorImage, FactorizationCheck, RefutationReport};
pub use report::{InjectivityCertificate, RadiusKind, RadiusReport};
pub use seminorm::{bloch_seminorm, bloch_seminorm_cancellable, SeminormEstimate};
pub use two_pole::{two_pole_report, CollinearReduction, PoleCase, SlitConstruction, TwoPoleReport};
