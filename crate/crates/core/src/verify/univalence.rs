use num_complex::Complex64;

use super::CheckResult;
use crate::error::Result;
use crate::mesh::DiskGrid;
use crate::shear::HarmonicShear;

/// `J = |f_z|² - |f_z̄|²` from central differences of `f`.
///
/// The step shrinks with the distance to the unit circle, where the slit
/// shears blow up.
pub fn jacobian_fd(shear: &HarmonicShear, z: Complex64) -> Result<f64> {
    let gap = 1.0 - z.norm();
    let step = (1e-5 * gap.max(1e-3)).min(0.5 * gap);
    let dx = (shear.f_at(z + step)? - shear.f_at(z - step)?) / (2.0 * step);
    let i_step = Complex64::new(0.0, step);
    let dy = (shear.f_at(z + i_step)? - shear.f_at(z - i_step)?) / (2.0 * step);
    let i = Complex64::i();
    let fz = 0.5 * (dx - i * dy);
    let fzb = 0.5 * (dx + i * dy);
    Ok(fz.norm_sqr() - fzb.norm_sqr())
}

/// Lewy: `J > 0` on every grid node. The residual is `-min J`.
pub fn check_local_univalence(shear: &HarmonicShear, grid: &DiskGrid) -> Result<CheckResult> {
    let nodes = grid.nodes();
    let mut min_j = f64::INFINITY;
    for &z in &nodes {
        let j = jacobian_fd(shear, z)?;
        min_j = if j.is_nan() { f64::NAN } else { min_j.min(j) };
        if min_j.is_nan() {
            break;
        }
    }
    Ok(CheckResult::new(
        "local_univalence",
        -min_j,
        nodes.len(),
        -f64::MIN_POSITIVE,
    ))
}
