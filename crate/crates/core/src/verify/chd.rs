use std::f64::consts::PI;

use num_complex::Complex64;

use super::CheckResult;
use crate::error::Result;
use crate::families::ConformalFamily;
use crate::shear::HarmonicShear;

/// Circle samples imaged per CHD check.
const CIRCLE_SAMPLES: usize = 4096;

/// A map of the disk into the plane.
pub trait PlanarMap {
    fn map(&self, z: Complex64) -> Result<Complex64>;
}

impl PlanarMap for HarmonicShear {
    fn map(&self, z: Complex64) -> Result<Complex64> {
        self.f_at(z)
    }
}

/// The conformal map itself, i.e. the shear with `g = 0`.
impl PlanarMap for ConformalFamily {
    fn map(&self, z: Complex64) -> Result<Complex64> {
        self.value_at(z)
    }
}

impl<F: Fn(Complex64) -> Complex64> PlanarMap for F {
    fn map(&self, z: Complex64) -> Result<Complex64> {
        Ok(self(z))
    }
}

/// Most crossings of the closed polygon `pts` with `n_lines` evenly spaced horizontal lines.
pub fn max_horizontal_crossings(pts: &[Complex64], n_lines: usize) -> usize {
    let (lo, hi) = pts
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
            (lo.min(p.im), hi.max(p.im))
        });
    (0..n_lines)
        .map(|k| {
            let y = lo + (hi - lo) * (k as f64 + 0.5) / n_lines as f64;
            (0..pts.len())
                .filter(|&i| {
                    let a = pts[i].im < y;
                    let b = pts[(i + 1) % pts.len()].im < y;
                    a != b
                })
                .count()
        })
        .max()
        .unwrap_or(0)
}

/// Heuristic convexity in the horizontal direction: every sampled line meets
/// the image of `|z| = r` at most twice.
pub fn check_chd<M: PlanarMap + ?Sized>(map: &M, r: f64, n_lines: usize) -> Result<CheckResult> {
    let pts = (0..CIRCLE_SAMPLES)
        .map(|k| {
            map.map(Complex64::from_polar(
                r,
                2.0 * PI * k as f64 / CIRCLE_SAMPLES as f64,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let worst = max_horizontal_crossings(&pts, n_lines);
    Ok(CheckResult::new(
        format!("chd_r{r}"),
        worst as f64,
        n_lines,
        2.0,
    ))
}
