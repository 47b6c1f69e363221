//! Canonical Enneper and helicoid parameterizations and the normalizations
//! that carry the explicit lifts `X₋₂`, `X₀`, `X₂` onto them.

use std::f64::consts::{FRAC_PI_4, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::CheckResult;
use crate::error::{Error, Result};
use crate::families::DiskPoint;
use crate::lift::x3_closed_case;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CanonicalSurface {
    /// `(Re(w - w³/3), Im(w + w³/3), -Re(w²))`
    Enneper,
    /// `(Re(w - 1/w), Im(w + 1/w), 2 Im log w)`, off `(-∞, 0]`
    Helicoid,
}

pub fn canonical_eval(surface: CanonicalSurface, w: Complex64) -> Result<[f64; 3]> {
    match surface {
        CanonicalSurface::Enneper => {
            let w3 = w * w * w;
            Ok([(w - w3 / 3.0).re, (w + w3 / 3.0).im, -(w * w).re])
        }
        CanonicalSurface::Helicoid => {
            if w.im == 0.0 && w.re <= 0.0 {
                return Err(Error::DomainViolation(w));
            }
            let inv = 1.0 / w;
            Ok([(w - inv).re, (w + inv).im, 2.0 * w.arg()])
        }
    }
}

/// One invertible normalization step.
///
/// `Mobius` acts on the parameter, every other step on the point in space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum PipelineStep {
    /// `w ↦ (a w + b)/(c w + d)` with `coeffs = [a, b, c, d]`.
    Mobius {
        coeffs: [Complex64; 4],
    },
    Scale {
        factor: f64,
    },
    Translate {
        vector: [f64; 3],
    },
    SwapAxes {
        i: usize,
        j: usize,
    },
    Reflect {
        axis: usize,
    },
    /// Counter-clockwise rotation by `angle` about coordinate axis `axis`.
    RotateAboutAxis {
        axis: usize,
        angle: f64,
    },
}

impl PipelineStep {
    pub fn mobius(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self::Mobius {
            coeffs: [a, b, c, d],
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            Self::Mobius {
                coeffs: [a, b, c, d],
            } => {
                if (a * d - b * c).norm() == 0.0 {
                    return bad("singular Möbius coefficients".into());
                }
            }
            Self::Scale { factor } if factor == 0.0 || !factor.is_finite() => {
                return bad(format!("scale factor {factor} is not invertible"));
            }
            Self::SwapAxes { i, j } if i > 2 || j > 2 => {
                return bad(format!("axes ({i}, {j}) out of range"))
            }
            Self::Reflect { axis } | Self::RotateAboutAxis { axis, .. } if axis > 2 => {
                return bad(format!("axis {axis} out of range"));
            }
            _ => {}
        }
        Ok(())
    }

    pub fn inverse(&self) -> Self {
        match *self {
            Self::Mobius {
                coeffs: [a, b, c, d],
            } => Self::Mobius {
                coeffs: [d, -b, -c, a],
            },
            Self::Scale { factor } => Self::Scale {
                factor: 1.0 / factor,
            },
            Self::Translate { vector: [x, y, z] } => Self::Translate {
                vector: [-x, -y, -z],
            },
            Self::SwapAxes { .. } | Self::Reflect { .. } => *self,
            Self::RotateAboutAxis { axis, angle } => Self::RotateAboutAxis {
                axis,
                angle: -angle,
            },
        }
    }

    pub fn apply_param(&self, w: Complex64) -> Complex64 {
        match *self {
            Self::Mobius {
                coeffs: [a, b, c, d],
            } => (a * w + b) / (c * w + d),
            _ => w,
        }
    }

    pub fn apply_point(&self, mut p: [f64; 3]) -> [f64; 3] {
        match *self {
            Self::Mobius { .. } => {}
            Self::Scale { factor } => p.iter_mut().for_each(|x| *x *= factor),
            Self::Translate { vector } => p.iter_mut().zip(vector).for_each(|(x, t)| *x += t),
            Self::SwapAxes { i, j } => p.swap(i, j),
            Self::Reflect { axis } => p[axis] = -p[axis],
            Self::RotateAboutAxis { axis, angle } => {
                let (u, v) = ((axis + 1) % 3, (axis + 2) % 3);
                let (s, c) = angle.sin_cos();
                let (x, y) = (p[u], p[v]);
                p[u] = c * x - s * y;
                p[v] = s * x + c * y;
            }
        }
        p
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct NormalizationPipeline {
    /// The case this pipeline was written for, if any.
    pub case_id: Option<i32>,
    pub steps: Vec<PipelineStep>,
}

impl NormalizationPipeline {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(case_id: Option<i32>, steps: Vec<PipelineStep>) -> Result<Self> {
        steps.iter().try_for_each(PipelineStep::validate)?;
        Ok(Self { case_id, steps })
    }

    pub fn then(mut self, step: PipelineStep) -> Result<Self> {
        step.validate()?;
        self.steps.push(step);
        Ok(self)
    }

    /// Concatenation: `self` first, then `other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            case_id: self.case_id.or(other.case_id),
            steps: self.steps.iter().chain(&other.steps).copied().collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            case_id: self.case_id,
            steps: self.steps.iter().rev().map(PipelineStep::inverse).collect(),
        }
    }

    pub fn apply_param(&self, z: Complex64) -> Complex64 {
        self.steps.iter().fold(z, |w, s| s.apply_param(w))
    }

    pub fn apply_point(&self, p: [f64; 3]) -> [f64; 3] {
        self.steps.iter().fold(p, |q, s| s.apply_point(q))
    }
}

/// The target surface of each explicit case.
pub fn case_surface(case_id: i32) -> Result<CanonicalSurface> {
    match case_id {
        -2 | 2 => Ok(CanonicalSurface::Enneper),
        0 => Ok(CanonicalSurface::Helicoid),
        other => Err(Error::PipelineMismatch(other)),
    }
}

/// The normalization carrying `X_c` onto its canonical surface.
///
/// Cases ±2 land on Enneper's surface after a quarter-turn of the parameter
/// half plane, matched by a 45° rotation in space.
pub fn case_pipeline(case_id: i32) -> Result<NormalizationPipeline> {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let i = Complex64::i();
    let lambda = Complex64::from_polar(1.0, FRAC_PI_4);
    use PipelineStep::*;
    let steps = match case_id {
        -2 => vec![
            PipelineStep::mobius(one, one, -one, one),
            PipelineStep::mobius(lambda, zero, zero, one),
            Translate {
                vector: [1.0 / 3.0, 0.0, 0.0],
            },
            Scale { factor: 4.0 },
            SwapAxes { i: 1, j: 2 },
            RotateAboutAxis {
                axis: 2,
                angle: -FRAC_PI_4,
            },
            Reflect { axis: 1 },
        ],
        0 => vec![
            PipelineStep::mobius(one, i, -one, i),
            Scale { factor: 4.0 },
            Reflect { axis: 0 },
            Reflect { axis: 2 },
            SwapAxes { i: 0, j: 1 },
            SwapAxes { i: 1, j: 2 },
        ],
        2 => vec![
            PipelineStep::mobius(-one, one, one, one),
            PipelineStep::mobius(lambda, zero, zero, one),
            Translate {
                vector: [-1.0 / 3.0, 0.0, 0.0],
            },
            Scale { factor: -4.0 },
            SwapAxes { i: 1, j: 2 },
            RotateAboutAxis {
                axis: 2,
                angle: FRAC_PI_4,
            },
        ],
        other => return Err(Error::PipelineMismatch(other)),
    };
    NormalizationPipeline::new(Some(case_id), steps)
}

/// `n` points uniform in `|z| <= r_max`, reproducible from `seed`.
pub fn seeded_disk_samples(n: usize, r_max: f64, seed: u64) -> Result<Vec<DiskPoint>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let r = r_max * rng.random::<f64>().sqrt();
            let theta = TAU * rng.random::<f64>();
            DiskPoint::with_r_max(Complex64::from_polar(r, theta), r_max).or_else(|_| {
                DiskPoint::with_r_max(
                    Complex64::from_polar(r * (1.0 - f64::EPSILON), theta),
                    r_max,
                )
            })
        })
        .collect()
}

fn distance(p: [f64; 3], q: [f64; 3]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

/// Worst distance between the normalized `X_c(z)` and the canonical surface at the mapped parameter.
pub fn identify_surface(
    case_id: i32,
    pipeline: &NormalizationPipeline,
    samples: &[DiskPoint],
) -> Result<CheckResult> {
    let surface = case_surface(case_id)?;
    if pipeline.case_id.is_some_and(|c| c != case_id) {
        return Err(Error::PipelineMismatch(case_id));
    }
    let mut worst = 0.0_f64;
    for &z in samples {
        let x = pipeline.apply_point(x3_closed_case(case_id, z)?.to_array());
        let y = canonical_eval(surface, pipeline.apply_param(z.z()))?;
        worst = worst.max(distance(x, y));
    }
    Ok(CheckResult::new(
        format!("identify_case_{case_id}"),
        worst,
        samples.len(),
        1e-8,
    ))
}

/// A canonical surface against itself through `pipeline` (which should act trivially).
pub fn identify_canonical(
    surface: CanonicalSurface,
    pipeline: &NormalizationPipeline,
    params: &[Complex64],
) -> Result<CheckResult> {
    let mut worst = 0.0_f64;
    for &w in params {
        let x = pipeline.apply_point(canonical_eval(surface, w)?);
        let y = canonical_eval(surface, pipeline.apply_param(w))?;
        worst = worst.max(distance(x, y));
    }
    Ok(CheckResult::new(
        format!("identify_{surface:?}").to_lowercase(),
        worst,
        params.len(),
        1e-8,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_values() {
        let y0 = canonical_eval(CanonicalSurface::Helicoid, Complex64::new(0.5, 0.0)).unwrap();
        assert_eq!(y0, [-1.5, 0.0, 0.0]);
        let y2 = canonical_eval(CanonicalSurface::Enneper, Complex64::new(0.5, 0.0)).unwrap();
        assert!((y2[0] - 0.4583333).abs() < 1e-7 && y2[1] == 0.0 && (y2[2] + 0.25).abs() < 1e-15);
        assert_eq!(
            canonical_eval(CanonicalSurface::Enneper, Complex64::new(0.0, 0.0)).unwrap(),
            [0.0; 3]
        );
        assert!(matches!(
            canonical_eval(CanonicalSurface::Helicoid, Complex64::new(-0.5, 0.0)),
            Err(Error::DomainViolation(_))
        ));
        assert!(canonical_eval(CanonicalSurface::Helicoid, Complex64::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn enneper_is_isothermal() {
        let f = |w: Complex64| canonical_eval(CanonicalSurface::Enneper, w).unwrap();
        let w = Complex64::new(0.3, 0.2);
        let h = 1e-5;
        let dx: Vec<f64> = f(w + h)
            .iter()
            .zip(f(w - h))
            .map(|(a, b)| (a - b) / (2.0 * h))
            .collect();
        let dy: Vec<f64> = f(w + Complex64::new(0.0, h))
            .iter()
            .zip(f(w - Complex64::new(0.0, h)))
            .map(|(a, b)| (a - b) / (2.0 * h))
            .collect();
        let dot = |u: &[f64], v: &[f64]| u.iter().zip(v).map(|(a, b)| a * b).sum::<f64>();
        let (e, g, ff) = (dot(&dx, &dx), dot(&dy, &dy), dot(&dx, &dy));
        assert!((e - g).abs() / (e + g) < 1e-8 && ff.abs() / (e + g) < 1e-8);
    }

    #[test]
    fn helicoid_checkpoint() {
        let p = case_pipeline(0).unwrap();
        let z = DiskPoint::new(Complex64::new(0.0, 0.5)).unwrap();
        let w = p.apply_param(z.z());
        assert!((w - 3.0).norm() < 1e-15);
        assert!(identify_surface(0, &p, &[z]).unwrap().max_residual <= 1e-8);
    }

    #[test]
    fn all_cases_identified() {
        let samples = seeded_disk_samples(500, 0.95, 42).unwrap();
        for case in [-2, 0, 2] {
            let r = identify_surface(case, &case_pipeline(case).unwrap(), &samples).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn identity_pipeline_on_canonical() {
        let params: Vec<Complex64> = seeded_disk_samples(50, 0.9, 7)
            .unwrap()
            .iter()
            .map(|z| z.z())
            .collect();
        let r = identify_canonical(
            CanonicalSurface::Enneper,
            &NormalizationPipeline::identity(),
            &params,
        )
        .unwrap();
        assert_eq!(r.max_residual, 0.0);
    }

    #[test]
    fn mismatch_errors() {
        assert!(matches!(case_pipeline(1), Err(Error::PipelineMismatch(1))));
        let p = case_pipeline(2).unwrap();
        assert!(matches!(
            identify_surface(-2, &p, &[]),
            Err(Error::PipelineMismatch(-2))
        ));
        assert!(matches!(
            identify_surface(3, &p, &[]),
            Err(Error::PipelineMismatch(3))
        ));
    }

    #[test]
    fn inverse_replays() {
        let p = case_pipeline(-2).unwrap();
        let q = p.compose(&p.inverse());
        let z = Complex64::new(0.2, -0.6);
        assert!((q.apply_param(z) - z).norm() < 1e-12);
        let x = [0.3, -1.2, 2.5];
        assert!(distance(q.apply_point(x), x) < 1e-12);
        assert!(NormalizationPipeline::identity()
            .then(PipelineStep::Scale { factor: 0.0 })
            .is_err());
    }

    #[test]
    fn seeded_samples_reproduce() {
        let a = seeded_disk_samples(10, 0.9, 42).unwrap();
        let b = seeded_disk_samples(10, 0.9, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|z| z.z().norm() <= 0.9));
    }
}
