//! Explicit conformal maps of the unit disk.

mod function;
mod koebe;
mod limits;
mod moebius;
mod newton;
mod slit;
mod two_slit;
mod winding;

pub use function::{richardson_derivative, ComplexFn, FunctionHandle, Pole};
pub use koebe::{inverse_koebe, inverse_koebe_deriv, koebe, koebe_deriv, UnitRotation};
pub use limits::radial_limit;
pub use moebius::{pole_preimages, psi, psi_map, MoebiusMap};
pub use newton::{newton_in_disk, GridInverter, NewtonSolve};
pub use slit::{eta, eta_deriv, omega_slit, omega_slit_deriv, rho, xi, zeta, zeta_deriv, SlitParams};
pub use two_slit::{
    real_slit_map, real_slit_map_deriv, two_slit_deriv, two_slit_inverse, two_slit_map, TwoSlitInverter,
    TwoSlitParams,
};
pub use winding::winding_number;
