//! Adaptive Gauss-Kronrod quadrature along straight segments of the complex plane.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Minimum allowed distance between the path and the unit circle, where all
/// poles of the shear integrands live.
pub const POLE_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathStrategy {
    /// The segment `[0, z]`.
    Radial,
    /// `0 → Re z → z`: a horizontal then a vertical leg.
    TwoSegment,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: usize,
    pub path_strategy: PathStrategy,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-13,
            rel_tol: 1e-12,
            max_depth: 40,
            path_strategy: PathStrategy::Radial,
        }
    }
}

impl QuadratureConfig {
    pub fn new(
        abs_tol: f64,
        rel_tol: f64,
        max_depth: usize,
        path_strategy: PathStrategy,
    ) -> Result<Self> {
        let cfg = Self {
            abs_tol,
            rel_tol,
            max_depth,
            path_strategy,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::InvalidParameter(
                "quadrature tolerances must be positive".into(),
            ));
        }
        if self.max_depth < 1 {
            return Err(Error::InvalidParameter("max_depth must be >= 1".into()));
        }
        Ok(())
    }

    pub fn with_path(mut self, path_strategy: PathStrategy) -> Self {
        self.path_strategy = path_strategy;
        self
    }
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the odd-indexed Kronrod nodes XGK[1], XGK[3], XGK[5], XGK[7].
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// One G7/K15 pass over `[from, to]`: (Kronrod estimate, |K15 - G7|).
fn gk15<F>(f: &F, from: Complex64, to: Complex64) -> (Complex64, f64)
where
    F: Fn(Complex64) -> Complex64,
{
    let mid = (from + to) * 0.5;
    let half = (to - from) * 0.5;
    let fc = f(mid);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (j, &x) in XGK[..7].iter().enumerate() {
        let f1 = f(mid - half * x);
        let f2 = f(mid + half * x);
        let pair = f1 + f2;
        kron += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    (kron * half, ((kron - gauss) * half).norm())
}

/// Integrates `f` along the straight segment `[from, to]`.
///
/// Intervals are bisected until the local error estimate falls under the
/// length-weighted share of `max(abs_tol, rel_tol·|I|)`.
pub fn integrate_segment<F>(
    f: &F,
    from: Complex64,
    to: Complex64,
    cfg: &QuadratureConfig,
) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    if from == to {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let (whole, _) = gk15(f, from, to);
    let total_len = (to - from).norm();
    let target = cfg.abs_tol.max(cfg.rel_tol * whole.norm());

    let mut sum = Complex64::new(0.0, 0.0);
    // depth-first, left to right, so the accumulation order is fixed
    let mut stack = vec![(from, to, 0usize)];
    while let Some((a, b, depth)) = stack.pop() {
        let (est, err) = gk15(f, a, b);
        let share = target * (b - a).norm() / total_len;
        if err <= share || err <= 8.0 * f64::EPSILON * est.norm() {
            sum += est;
            continue;
        }
        if depth >= cfg.max_depth {
            return Err(Error::QuadratureFailure {
                depth: cfg.max_depth,
                from: a,
                to: b,
            });
        }
        let m = (a + b) * 0.5;
        stack.push((m, b, depth + 1));
        stack.push((a, m, depth + 1));
    }
    Ok(sum)
}

/// Vertices of the configured path from the origin to `z`.
pub fn path_vertices(z: Complex64, strategy: PathStrategy) -> Vec<Complex64> {
    let origin = Complex64::new(0.0, 0.0);
    match strategy {
        PathStrategy::Radial => vec![origin, z],
        PathStrategy::TwoSegment => vec![origin, Complex64::new(z.re, 0.0), z],
    }
}

/// `∫₀ᶻ f(ζ) dζ` along the configured path.
///
/// Every point of either path has modulus at most `|z|`, so the distance to
/// the unit circle is `1 - |z|`.
pub fn integrate_from_origin<F>(f: &F, z: Complex64, cfg: &QuadratureConfig) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    let distance = 1.0 - z.norm();
    if distance < POLE_EPS {
        return Err(Error::SingularPath { distance });
    }
    let vertices = path_vertices(z, cfg.path_strategy);
    vertices
        .windows(2)
        .try_fold(Complex64::new(0.0, 0.0), |acc, w| {
            Ok(acc + integrate_segment(f, w[0], w[1], cfg)?)
        })
}
