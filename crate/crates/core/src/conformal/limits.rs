use num_complex::Complex64;

use crate::error::Result;

/// Radial boundary limit of a map.
///
/// `f(gap)` must evaluate the map at radius `1 - gap` along the chosen ray.
/// The map is sampled at gaps `eps`, `4 eps`, `16 eps` and extrapolated in
/// powers of `sqrt(gap)`, which removes the square-root term present at
/// slit tips and corners as well as the linear term of a smooth boundary.
pub fn radial_limit(f: impl Fn(f64) -> Result<Complex64>, eps: f64) -> Result<Complex64> {
    let a = f(eps)?;
    let b = f(4.0 * eps)?;
    let c = f(16.0 * eps)?;
    let r1 = 2.0 * a - b;
    let r2 = 2.0 * b - c;
    Ok((4.0 * r1 - r2) / 3.0)
}
