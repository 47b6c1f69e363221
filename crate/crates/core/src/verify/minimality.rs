use num_complex::Complex64;

use super::CheckResult;
use crate::error::Result;
use crate::lift::MinimalLift;
use crate::mesh::DiskGrid;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinimalityConfig {
    pub step: f64,
    pub r_max: f64,
    pub n_circles: usize,
    pub n_rays: usize,
    pub tolerance: f64,
}

impl Default for MinimalityConfig {
    fn default() -> Self {
        Self {
            step: 1e-3,
            r_max: 0.8,
            n_circles: 8,
            n_rays: 24,
            tolerance: 1e-4,
        }
    }
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Harmonic coordinates plus isothermal parameters certify a minimal surface.
///
/// Returns three entries: the 5-point Laplacian of every coordinate scaled by
/// the local Hessian magnitude, `|E - G|/(E + G)` and `|F|/(E + G)`. The
/// Hessian is floored by its RMS over the sample set, since at a flat point
/// all second derivatives vanish together with the Laplacian. First
/// derivatives use the fourth-order central stencil with the same step.
pub fn minimality_certificate(
    lift: &MinimalLift,
    label: &str,
    cfg: &MinimalityConfig,
) -> Result<[CheckResult; 3]> {
    let grid = DiskGrid::new(cfg.n_circles, cfg.n_rays, cfg.r_max, true)?;
    let nodes = grid.nodes();
    let h = cfg.step;
    let ih = Complex64::new(0.0, h);
    let x = |z: Complex64| lift.eval_at(z).map(|p| p.to_array());
    let d1 = |z: Complex64, dir: Complex64| -> Result<[f64; 3]> {
        let (p2, p1, m1, m2) = (
            x(z + 2.0 * dir)?,
            x(z + dir)?,
            x(z - dir)?,
            x(z - 2.0 * dir)?,
        );
        Ok(std::array::from_fn(|k| {
            (-p2[k] + 8.0 * p1[k] - 8.0 * m1[k] + m2[k]) / (12.0 * h)
        }))
    };
    let mut laps = Vec::with_capacity(nodes.len());
    let mut hessians = Vec::with_capacity(nodes.len());
    let (mut eg_worst, mut f_worst) = (0.0_f64, 0.0_f64);
    for &z in &nodes {
        let c = x(z)?;
        let (e, w) = (x(z + h)?, x(z - h)?);
        let (n, s) = (x(z + ih)?, x(z - ih)?);
        let (ne, nw) = (x(z + h + ih)?, x(z - h + ih)?);
        let (se, sw) = (x(z + h - ih)?, x(z - h - ih)?);
        let mut lap = 0.0;
        let mut hess = 0.0;
        for k in 0..3 {
            let xx = (e[k] - 2.0 * c[k] + w[k]) / (h * h);
            let yy = (n[k] - 2.0 * c[k] + s[k]) / (h * h);
            let xy = (ne[k] - nw[k] - se[k] + sw[k]) / (4.0 * h * h);
            lap += (xx + yy) * (xx + yy);
            hess += xx * xx + yy * yy + 2.0 * xy * xy;
        }
        laps.push(lap.sqrt());
        hessians.push(hess.sqrt());

        let dx = d1(z, Complex64::new(h, 0.0))?;
        let dy = d1(z, ih)?;
        let (ee, gg, ff) = (dot(dx, dx), dot(dy, dy), dot(dx, dy));
        eg_worst = eg_worst.max((ee - gg).abs() / (ee + gg));
        f_worst = f_worst.max(ff.abs() / (ee + gg));
    }
    let rms = (hessians.iter().map(|v| v * v).sum::<f64>() / hessians.len() as f64).sqrt();
    let lap_worst = laps
        .iter()
        .zip(&hessians)
        .map(|(l, m)| l / m.max(rms))
        .fold(0.0_f64, f64::max);
    let count = nodes.len();
    Ok([
        CheckResult::new(format!("harmonic_{label}"), lap_worst, count, cfg.tolerance),
        CheckResult::new(
            format!("isothermal_eg_{label}"),
            eg_worst,
            count,
            cfg.tolerance,
        ),
        CheckResult::new(
            format!("isothermal_f_{label}"),
            f_worst,
            count,
            cfg.tolerance,
        ),
    ])
}
