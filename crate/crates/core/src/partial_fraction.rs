//! Partial-fraction evaluation of the shear of `Fc` (c = -2 cos γ) with `ω = zⁿ`.
//!
//! With `η = e^{iγ}` the derivative of `Fc` splits as
//!
//! ```text
//! Fc'(z) = -i/(2 sin γ) · ( η̄/(z - η̄)² - η/(z - η)² )
//! ```
//!
//! so `h` is a combination of integrals `∫₀ᶻ dζ / ((ζ - p)² (1 ∓ ζⁿ))` with the
//! pole `p` on the unit circle. Those are expanded over the roots `r` of
//! `1 ∓ ζⁿ` using `1/(1 ∓ ζⁿ) = -(1/n) Σ r/(ζ - r)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::families::DiskPoint;
use crate::quadrature::{integrate_from_origin, QuadratureConfig};
use crate::special::log_c;

/// Resonance `γ = 2πm/n` (or `(2s+1)π/n`) is matched within this many radians.
pub const RESONANCE_TOL: f64 = 1e-12;
/// Closer than this to a resonance the expansion cancels catastrophically; use quadrature.
pub const NEAR_RESONANCE_TOL: f64 = 1e-6;
/// Minimum distance between a pole and a root for the non-resonant expansion.
pub const POLE_COLLISION_EPS: f64 = 1e-9;

/// Which polynomial the roots belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootFamily {
    /// roots of `1 - ζⁿ`
    Unity,
    /// roots of `1 + ζⁿ`
    NegativeUnity,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PartialFractionContext {
    pub n: u32,
    pub gamma: f64,
    pub roots_unity: Vec<Complex64>,
    pub roots_neg: Vec<Complex64>,
    pub eta: Complex64,
    pub rho: Complex64,
    /// `Some(m)` when `γ = 2πm/n`.
    pub m_index: Option<usize>,
    /// `Some(s)` when `γ = (2s+1)π/n`.
    pub s_index: Option<usize>,
}

impl PartialFractionContext {
    pub fn new(n: u32, gamma: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter("n must be >= 1".into()));
        }
        if !(gamma > 0.0 && gamma < PI) {
            return Err(Error::InvalidParameter(format!(
                "γ must lie in (0, π), got {gamma}"
            )));
        }
        let nf = f64::from(n);
        let roots_unity = (0..n)
            .map(|k| Complex64::from_polar(1.0, 2.0 * PI * f64::from(k) / nf))
            .collect();
        let roots_neg = (0..n)
            .map(|l| Complex64::from_polar(1.0, (2.0 * f64::from(l) + 1.0) * PI / nf))
            .collect();
        let eta = Complex64::from_polar(1.0, gamma);
        let resonance = |offset: f64| {
            // γ = (2k + offset)π/n for integer k
            let k = ((gamma * nf / PI - offset) / 2.0).round();
            let target = (2.0 * k + offset) * PI / nf;
            ((gamma - target).abs() <= RESONANCE_TOL).then_some(k as usize)
        };
        Ok(Self {
            n,
            gamma,
            roots_unity,
            roots_neg,
            eta,
            rho: eta,
            m_index: resonance(0.0),
            s_index: resonance(1.0),
        })
    }

    /// Context for `Fc` with `c = -2 cos γ`, `c ∈ (-2, 2)`.
    pub fn for_c(n: u32, c: f64) -> Result<Self> {
        if !(c > -2.0 && c < 2.0) {
            return Err(Error::EndpointParameter { c });
        }
        Self::new(n, (-c / 2.0).acos())
    }

    pub fn c(&self) -> f64 {
        -2.0 * self.gamma.cos()
    }

    pub fn roots(&self, family: RootFamily) -> &[Complex64] {
        match family {
            RootFamily::Unity => &self.roots_unity,
            RootFamily::NegativeUnity => &self.roots_neg,
        }
    }
}

/// `∫₀ᶻ dζ / ((ζ - p)² (ζ - r))` for `p ≠ r`, both off the disk interior.
fn double_simple(pole: Complex64, root: Complex64, z: Complex64) -> Result<Complex64> {
    let d = pole - root;
    let rational = (1.0 / (pole - z) - 1.0 / pole) / d;
    let logs = log_c(1.0 - z / pole)? - log_c(1.0 - z / root)?;
    Ok(rational - logs / (d * d))
}

/// `∫₀ᶻ dζ / (ζ - r)³`.
fn triple(root: Complex64, z: Complex64) -> Complex64 {
    let dz = z - root;
    -0.5 * (1.0 / (dz * dz) - 1.0 / (root * root))
}

fn nearest_root(roots: &[Complex64], pole: Complex64) -> (usize, f64) {
    roots
        .iter()
        .enumerate()
        .map(|(k, r)| (k, (pole - r).norm()))
        .fold(
            (0, f64::INFINITY),
            |best, cur| if cur.1 < best.1 { cur } else { best },
        )
}

fn non_resonant(roots: &[Complex64], pole: Complex64, z: Complex64) -> Result<Complex64> {
    let (_, dist) = nearest_root(roots, pole);
    if dist < POLE_COLLISION_EPS {
        return Err(Error::PoleCollision { pole });
    }
    let n = roots.len() as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for &r in roots {
        sum += r * double_simple(pole, r, z)?;
    }
    Ok(-sum / n)
}

fn resonant(roots: &[Complex64], m: usize, z: Complex64) -> Result<Complex64> {
    let zm = roots[m];
    let n = roots.len() as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for (k, &r) in roots.iter().enumerate() {
        if k != m {
            sum += r * double_simple(zm, r, z)?;
        }
    }
    Ok(-(sum + zm * triple(zm, z)) / n)
}

/// Direct quadrature of `∫₀ᶻ dζ / ((ζ - p)² (1 ∓ ζⁿ))`.
pub fn pole_integral_quadrature(
    family: RootFamily,
    n: u32,
    pole: Complex64,
    z: Complex64,
    cfg: &QuadratureConfig,
) -> Result<Complex64> {
    let sign = match family {
        RootFamily::Unity => -1.0,
        RootFamily::NegativeUnity => 1.0,
    };
    integrate_from_origin(
        &|s: Complex64| {
            let d = s - pole;
            1.0 / (d * d * (1.0 + sign * s.powu(n)))
        },
        z,
        cfg,
    )
}

/// `I_η = ∫₀ᶻ dζ / ((ζ - η)² (1 - ζⁿ))` for a pole that is not an n-th root of unity.
pub fn integral_i_eta(
    ctx: &PartialFractionContext,
    pole: Complex64,
    z: DiskPoint,
) -> Result<Complex64> {
    non_resonant(&ctx.roots_unity, pole, z.z())
}

/// `I_ρ = ∫₀ᶻ dζ / ((ζ - ρ)² (1 + ζⁿ))` for a pole that is not a root of `1 + ζⁿ`.
pub fn integral_i_rho(
    ctx: &PartialFractionContext,
    pole: Complex64,
    z: DiskPoint,
) -> Result<Complex64> {
    non_resonant(&ctx.roots_neg, pole, z.z())
}

/// `I_{3,m} = ∫₀ᶻ dζ / ((ζ - z_m)² (1 - ζⁿ))` with `z_m = e^{2πim/n}`.
pub fn integral_i_3m(ctx: &PartialFractionContext, m: usize, z: DiskPoint) -> Result<Complex64> {
    if m >= ctx.roots_unity.len() {
        return Err(Error::InvalidParameter(format!(
            "m = {m} out of range for n = {}",
            ctx.n
        )));
    }
    resonant(&ctx.roots_unity, m, z.z())
}

/// `I_{3,s} = ∫₀ᶻ dζ / ((ζ - z_s)² (1 + ζⁿ))` with `z_s = e^{(2s+1)πi/n}`.
pub fn integral_i_3s(ctx: &PartialFractionContext, s: usize, z: DiskPoint) -> Result<Complex64> {
    if s >= ctx.roots_neg.len() {
        return Err(Error::InvalidParameter(format!(
            "s = {s} out of range for n = {}",
            ctx.n
        )));
    }
    resonant(&ctx.roots_neg, s, z.z())
}

/// The cubic-pole contribution of `I_{3,m}` on its own.
pub fn cubic_pole_term(ctx: &PartialFractionContext, m: usize, z: DiskPoint) -> Complex64 {
    let zm = ctx.roots_unity[m];
    -zm * triple(zm, z.z()) / f64::from(ctx.n)
}

/// `∫₀ᶻ dζ / ((ζ - p)² (1 ∓ ζⁿ))`, dispatched on how close `p` sits to a root.
pub(crate) fn pole_integral(
    ctx: &PartialFractionContext,
    family: RootFamily,
    pole: Complex64,
    z: Complex64,
) -> Result<Complex64> {
    let roots = ctx.roots(family);
    let (k, dist) = nearest_root(roots, pole);
    if dist <= RESONANCE_TOL {
        resonant(roots, k, z)
    } else if dist <= NEAR_RESONANCE_TOL {
        pole_integral_quadrature(family, ctx.n, pole, z, &QuadratureConfig::default())
    } else {
        non_resonant(roots, pole, z)
    }
}

/// `h(z) = -i/(2 sin γ) (e^{-iγ} I₂ - e^{iγ} I₃)` with `I₂`, `I₃` chosen per resonance.
pub fn assemble_h_gamma(ctx: &PartialFractionContext, z: DiskPoint) -> Result<Complex64> {
    h_gamma_at(ctx, z.z())
}

pub(crate) fn h_gamma_at(ctx: &PartialFractionContext, z: Complex64) -> Result<Complex64> {
    let eta = ctx.eta;
    let eta_bar = eta.conj();
    let i2 = pole_integral(ctx, RootFamily::Unity, eta_bar, z)?;
    let i3 = pole_integral(ctx, RootFamily::Unity, eta, z)?;
    let pref = Complex64::new(0.0, -1.0) / (2.0 * ctx.gamma.sin());
    Ok(pref * (eta_bar * i2 - eta * i3))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(re: f64, im: f64) -> DiskPoint {
        DiskPoint::new(Complex64::new(re, im)).unwrap()
    }

    #[test]
    fn context_roots() {
        let ctx = PartialFractionContext::new(5, 1.0).unwrap();
        for r in &ctx.roots_unity {
            assert!((r.powu(5) - 1.0).norm() < 1e-14);
        }
        for r in &ctx.roots_neg {
            assert!((r.powu(5) + 1.0).norm() < 1e-14);
        }
        assert!((ctx.c() + 2.0 * 1.0_f64.cos()).abs() < 1e-15);
        let from_c = PartialFractionContext::for_c(3, 0.7).unwrap();
        assert!((from_c.c() - 0.7).abs() < 1e-14);
    }

    #[test]
    fn resonance_detection() {
        let ctx = PartialFractionContext::new(4, PI / 2.0).unwrap();
        assert_eq!(ctx.m_index, Some(1));
        assert_eq!(ctx.s_index, None);
        let ctx = PartialFractionContext::new(4, PI / 4.0).unwrap();
        assert_eq!(ctx.m_index, None);
        assert_eq!(ctx.s_index, Some(0));
        let ctx = PartialFractionContext::new(2, PI / 2.0).unwrap();
        assert_eq!(ctx.m_index, None);
        assert_eq!(ctx.s_index, Some(0));
    }

    #[test]
    fn rejects_bad_gamma() {
        assert!(PartialFractionContext::new(2, 0.0).is_err());
        assert!(PartialFractionContext::new(2, PI).is_err());
        assert!(PartialFractionContext::for_c(2, 2.0).is_err());
    }

    #[test]
    fn empty_integrals_vanish() {
        let ctx = PartialFractionContext::new(2, PI / 2.0).unwrap();
        let i = Complex64::new(0.0, 1.0);
        assert!(integral_i_eta(&ctx, i, DiskPoint::origin()).unwrap().norm() < 1e-16);
        assert!(integral_i_3m(&ctx, 0, DiskPoint::origin()).unwrap().norm() < 1e-16);
        let ctx4 = PartialFractionContext::new(4, PI / 2.0).unwrap();
        assert!(assemble_h_gamma(&ctx4, DiskPoint::origin()).unwrap().norm() < 1e-16);
    }

    #[test]
    fn cubic_term_value() {
        let ctx = PartialFractionContext::new(2, PI / 2.0).unwrap();
        let t = cubic_pole_term(&ctx, 0, dp(0.4, 0.0));
        let expected = 0.25 * (1.0 / 0.36 - 1.0);
        assert!((t - expected).norm() < 1e-14);
        assert!((expected - 0.4444444444).abs() < 1e-9);
    }

    #[test]
    fn pole_collision() {
        let ctx = PartialFractionContext::new(4, 1.0).unwrap();
        let near = Complex64::new(0.0, 1.0) + 1e-11;
        assert!(matches!(
            integral_i_eta(&ctx, near, dp(0.2, 0.0)),
            Err(Error::PoleCollision { .. })
        ));
        assert!(integral_i_3m(&ctx, 4, dp(0.2, 0.0)).is_err());
    }

    #[test]
    fn near_resonance_falls_back() {
        let gamma = PI / 2.0 + 1e-8;
        let ctx = PartialFractionContext::new(4, gamma).unwrap();
        assert_eq!(ctx.m_index, None);
        let z = Complex64::new(0.3, 0.2);
        let got = pole_integral(&ctx, RootFamily::Unity, ctx.eta, z).unwrap();
        let quad = pole_integral_quadrature(
            RootFamily::Unity,
            4,
            ctx.eta,
            z,
            &QuadratureConfig::default(),
        )
        .unwrap();
        assert!((got - quad).norm() < 1e-14);
    }
}
