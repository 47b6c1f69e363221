//! Complex special functions used by the closed-form shears.
//!
//! Everything here uses principal branches. The hypergeometric series is only
//! summed inside the unit disk, which is all the closed forms ever need: their
//! arguments are `zⁿ` with `|z| < 1`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative tolerance for the series tail.
pub const TOL_SERIES: f64 = 1e-14;
/// Hard cap on the number of summed terms.
pub const MAX_TERMS: usize = 100_000;

/// Arguments closer than this (relative) to a cut are rejected.
const CUT_TOL: f64 = 1e-15;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hyp2F1Params {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub z: Complex64,
}

impl Hyp2F1Params {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Self> {
        if c.im == 0.0 && c.re <= 0.0 && c.re.fract() == 0.0 {
            return Err(Error::InvalidParameter(format!(
                "c = {c} is a non-positive integer"
            )));
        }
        if z.norm() >= 1.0 {
            return Err(Error::InvalidParameter(format!(
                "series needs |z| < 1, got |z| = {}",
                z.norm()
            )));
        }
        Ok(Self { a, b, c, z })
    }

    pub fn real(a: f64, b: f64, c: f64, z: Complex64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), z)
    }
}

/// Gauss ₂F₁ by forward summation of its power series.
///
/// Terms are accumulated in a fixed order; the loop stops once the geometric
/// tail bound `|tₖ|·|z|/(1 - |z|)` drops below `TOL_SERIES·|S|`.
pub fn hyp2f1(p: &Hyp2F1Params) -> Result<Complex64> {
    let Hyp2F1Params { a, b, c, z } = *p;
    let one = Complex64::new(1.0, 0.0);
    if z == Complex64::new(0.0, 0.0) {
        return Ok(one);
    }
    let rz = z.norm();
    let tail_factor = rz / (1.0 - rz);
    let mut term = one;
    let mut sum = one;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term = term * (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        if term == Complex64::new(0.0, 0.0) {
            return Ok(sum);
        }
        if term.norm() * tail_factor <= TOL_SERIES * sum.norm() {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence { terms: MAX_TERMS })
}

/// Rising factorial `(x)ₖ = x(x+1)…(x+k-1)`.
pub fn pochhammer(x: Complex64, k: usize) -> Complex64 {
    (0..k).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (x + j as f64))
}

fn on_real_ray(z: Complex64, pred: impl Fn(f64) -> bool) -> bool {
    z.im.abs() <= CUT_TOL * z.norm().max(1.0) && pred(z.re)
}

/// Principal logarithm; cut along `(-∞, 0]`.
pub fn log_c(z: Complex64) -> Result<Complex64> {
    if on_real_ray(z, |x| x <= 0.0) {
        return Err(Error::BranchCutHit { func: "log", z });
    }
    Ok(z.ln())
}

/// Principal `atanh(z) = ½ log((1+z)/(1-z))`; cuts `(-∞, -1] ∪ [1, ∞)`.
pub fn atanh_c(z: Complex64) -> Result<Complex64> {
    if on_real_ray(z, |x| x.abs() >= 1.0) {
        return Err(Error::BranchCutHit { func: "atanh", z });
    }
    Ok(z.atanh())
}

/// Principal `atan(z) = (i/2) log((i+z)/(i-z))`; cuts on the imaginary axis beyond `±i`.
pub fn atan_c(z: Complex64) -> Result<Complex64> {
    let iz = Complex64::new(-z.im, z.re);
    if on_real_ray(iz, |x| x.abs() >= 1.0) {
        return Err(Error::BranchCutHit { func: "atan", z });
    }
    Ok(z.atan())
}

/// Principal power `exp(p · log z)` for `z ≠ 0`.
pub fn principal_pow(z: Complex64, p: f64) -> Complex64 {
    (z.ln() * p).exp()
}

/// The σ-helpers of the closed-form `Fc` shear.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SigmaValues {
    pub sigma1: Complex64,
    pub sigma2: Complex64,
    pub sigma3: Complex64,
    pub sigma4: Complex64,
}

impl SigmaValues {
    #[inline]
    pub fn product34(&self) -> Complex64 {
        self.sigma3 * self.sigma4
    }
}

/// `σ₃ = (c-2)^{3/2}`, `σ₄ = (c+2)^{3/2}` and the two atanh terms.
pub fn sigma_values(c: f64, z: Complex64) -> Result<SigmaValues> {
    if c.abs() >= 2.0 {
        return Err(Error::EndpointParameter { c });
    }
    let sigma3 = principal_pow(Complex64::new(c - 2.0, 0.0), 1.5);
    let sigma4 = principal_pow(Complex64::new(c + 2.0, 0.0), 1.5);
    let s34 = sigma3 * sigma4;
    let sigma1 = atanh_c((c * c - 4.0) * (c + 2.0 * z) / s34)?;
    let sigma2 = atanh_c(Complex64::new(4.0 * c - c * c * c, 0.0) / s34)?;
    Ok(SigmaValues {
        sigma1,
        sigma2,
        sigma3,
        sigma4,
    })
}
