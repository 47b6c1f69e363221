//! Horizontal shears `f = h + conj(g)` with `h - g = F` and `g' = ω h'`.
//!
//! Every shear can be built by quadrature of `h' = F'/(1 - ω)`, which serves
//! as ground truth; the closed forms below are checked against it.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{ConformalFamily, Dilatation, DiskPoint};
use crate::partial_fraction::{h_gamma_at, PartialFractionContext};
use crate::quadrature::{integrate_from_origin, QuadratureConfig};
use crate::special::{hyp2f1, log_c, sigma_values, Hyp2F1Params};

/// A conformal family paired with a dilatation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct ShearSpec {
    family: ConformalFamily,
    dilatation: Dilatation,
}

#[derive(Deserialize)]
struct RawSpec {
    family: ConformalFamily,
    dilatation: Dilatation,
}

impl TryFrom<RawSpec> for ShearSpec {
    type Error = Error;
    fn try_from(raw: RawSpec) -> Result<Self> {
        Self::new(raw.family, raw.dilatation)
    }
}

impl ShearSpec {
    pub fn new(family: ConformalFamily, dilatation: Dilatation) -> Result<Self> {
        if let (ConformalFamily::Fn { .. }, Dilatation::MobiusProduct { .. }) = (family, dilatation)
        {
            return Err(Error::UnsupportedPair(format!(
                "{family} with {dilatation}"
            )));
        }
        Ok(Self { family, dilatation })
    }

    /// `Fc` sheared with `ω = z(z+a)/(1+az)`.
    pub fn fc_mobius(c: f64, a: f64) -> Result<Self> {
        Self::new(ConformalFamily::fc(c)?, Dilatation::mobius_product(a)?)
    }

    /// `Fc` sheared with `ω = zⁿ`.
    pub fn fc_power(c: f64, n: u32) -> Result<Self> {
        Self::new(ConformalFamily::fc(c)?, Dilatation::power(n)?)
    }

    /// `Fn` sheared with `ω = zⁿ` (same n).
    pub fn epicycloid(n: u32) -> Result<Self> {
        Self::new(ConformalFamily::epicycloid(n)?, Dilatation::power(n)?)
    }

    pub fn family(&self) -> ConformalFamily {
        self.family
    }

    pub fn dilatation(&self) -> Dilatation {
        self.dilatation
    }

    /// `(c, a) = (2, 1)`: the boundary circle collapses onto the point 1/2.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            (self.family, self.dilatation),
            (ConformalFamily::Fc { c }, Dilatation::MobiusProduct { a }) if c == 2.0 && a == 1.0
        )
    }

    /// `h'(z) = F'(z)/(1 - ω(z))`.
    pub fn h_prime_at(&self, z: Complex64) -> Result<Complex64> {
        match (self.family, self.dilatation) {
            // 1 - ω = (1 - z²)/(1 + az) cancels the (1 - z²) of Fc'
            (ConformalFamily::Fc { c }, Dilatation::MobiusProduct { a }) => {
                let den = 1.0 + c * z + z * z;
                if den.norm() <= 4.0 * f64::EPSILON {
                    return Err(Error::DegenerateDenominator { z });
                }
                Ok((1.0 + a * z) / (den * den))
            }
            _ => Ok(self.family.derivative_at(z)? / (1.0 - self.dilatation.value_at(z))),
        }
    }

    pub fn g_prime_at(&self, z: Complex64) -> Result<Complex64> {
        Ok(self.dilatation.value_at(z) * self.h_prime_at(z)?)
    }
}

impl fmt::Display for ShearSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} sheared with ω = {}", self.family, self.dilatation)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    Quadrature,
}

#[derive(Clone, Debug, PartialEq)]
enum Backend {
    Quadrature(QuadratureConfig),
    MobiusClosed {
        c: f64,
        a: f64,
    },
    Slit {
        c: f64,
        a: f64,
    },
    Epicycloid {
        n: u32,
    },
    Gamma {
        ctx: PartialFractionContext,
        family: ConformalFamily,
    },
}

/// Paired evaluators for `h` and `g`, normalized so that `h(0) = g(0) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicShear {
    spec: ShearSpec,
    backend: Backend,
}

impl HarmonicShear {
    /// `h`, `g` by adaptive quadrature along the configured path.
    pub fn numeric(spec: ShearSpec, cfg: QuadratureConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Self {
            spec,
            backend: Backend::Quadrature(cfg),
        })
    }

    /// The closed form for this spec, when one exists.
    pub fn closed(spec: ShearSpec) -> Result<Self> {
        let backend = match (spec.family, spec.dilatation) {
            (ConformalFamily::Fc { c }, Dilatation::MobiusProduct { a }) if c.abs() < 2.0 => {
                Backend::MobiusClosed { c, a }
            }
            (ConformalFamily::Fc { c }, Dilatation::MobiusProduct { a }) => Backend::Slit { c, a },
            (ConformalFamily::Fn { n }, Dilatation::Power { n: m }) if n == m => {
                Backend::Epicycloid { n }
            }
            (family @ ConformalFamily::Fc { c }, Dilatation::Power { n }) if c.abs() < 2.0 => {
                Backend::Gamma {
                    ctx: PartialFractionContext::for_c(n, c)?,
                    family,
                }
            }
            _ => {
                return Err(Error::UnsupportedPair(format!("no closed form for {spec}")));
            }
        };
        Ok(Self { spec, backend })
    }

    /// Closed form when available, quadrature otherwise.
    pub fn best(spec: ShearSpec, cfg: QuadratureConfig) -> Result<Self> {
        match Self::closed(spec) {
            Ok(s) => Ok(s),
            Err(Error::UnsupportedPair(_)) => Self::numeric(spec, cfg),
            Err(e) => Err(e),
        }
    }

    pub fn spec(&self) -> &ShearSpec {
        &self.spec
    }

    pub fn provenance(&self) -> Provenance {
        match self.backend {
            Backend::Quadrature(_) => Provenance::Quadrature,
            _ => Provenance::ClosedForm,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.spec.is_degenerate()
    }

    pub fn h(&self, z: DiskPoint) -> Result<Complex64> {
        Ok(self.hg_at(z.z())?.0)
    }

    pub fn g(&self, z: DiskPoint) -> Result<Complex64> {
        Ok(self.hg_at(z.z())?.1)
    }

    /// `f(z) = h(z) + conj(g(z))`.
    pub fn f(&self, z: DiskPoint) -> Result<Complex64> {
        self.f_at(z.z())
    }

    pub fn h_prime(&self, z: DiskPoint) -> Result<Complex64> {
        self.spec.h_prime_at(z.z())
    }

    pub fn g_prime(&self, z: DiskPoint) -> Result<Complex64> {
        self.spec.g_prime_at(z.z())
    }

    pub(crate) fn f_at(&self, z: Complex64) -> Result<Complex64> {
        let (h, g) = self.hg_at(z)?;
        Ok(h + g.conj())
    }

    pub(crate) fn hg_at(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        match &self.backend {
            Backend::Quadrature(cfg) => {
                let spec = self.spec;
                let h = integrate_from_origin(
                    &|s| spec.h_prime_at(s).unwrap_or(Complex64::new(f64::NAN, 0.0)),
                    z,
                    cfg,
                )?;
                let g = integrate_from_origin(
                    &|s| spec.g_prime_at(s).unwrap_or(Complex64::new(f64::NAN, 0.0)),
                    z,
                    cfg,
                )?;
                if !(h.re.is_finite() && h.im.is_finite() && g.re.is_finite() && g.im.is_finite()) {
                    return Err(Error::DegenerateDenominator { z });
                }
                Ok((h, g))
            }
            Backend::MobiusClosed { c, a } => mobius_closed_at(*c, *a, z),
            Backend::Slit { c, a } => Ok(slit_hg_at(*c, *a, z)),
            Backend::Epicycloid { n } => epicycloid_hg_at(*n, z),
            Backend::Gamma { ctx, family } => {
                let h = h_gamma_at(ctx, z)?;
                Ok((h, h - family.value_at(z)?))
            }
        }
    }
}

/// `h`, `g` by quadrature.
pub fn shear_numeric(spec: ShearSpec, cfg: QuadratureConfig) -> Result<HarmonicShear> {
    HarmonicShear::numeric(spec, cfg)
}

/// The printed p(z) and r(z) polynomials share all but three terms.
fn mobius_pqr(c: f64, a: f64, z: Complex64) -> Result<(Complex64, Complex64, Complex64)> {
    let s = sigma_values(c, z)?;
    let (s1, s2) = (s.sigma1, s.sigma2);
    let s34 = s.product34();
    let (c2, c3, c4) = (c * c, c * c * c, c * c * c * c);
    let z2 = z * z;
    let common = 16.0 * s2 + 16.0 * s1 - 4.0 * c2 * s2 + 16.0 * z2 * s2 - 4.0 * c2 * s1
        + 16.0 * z2 * s1
        - 4.0 * c2 * z2 * s2
        + 2.0 * a * c3 * s1
        - 4.0 * c3 * z * s1
        - 8.0 * a * c * s2
        + 16.0 * c * z * s2
        - 4.0 * c2 * z2 * s1
        + 2.0 * a * c3 * s2
        - 4.0 * c3 * z * s2
        - 8.0 * a * c * s1
        + 16.0 * c * z * s1
        + 2.0 * a * c3 * z2 * s1
        - 8.0 * a * c * z2 * s2
        - 8.0 * a * c2 * z * s2
        + 2.0 * a * c4 * z * s2
        + 2.0 * a * c3 * z2 * s2
        - 8.0 * a * c * z2 * s1
        - 8.0 * a * c2 * z * s1
        + 2.0 * a * c4 * z * s1
        + 2.0 * a * z2 * s34
        - c * z2 * s34
        + a * c * z * s34;
    let p = common + 2.0 * z * s34 - c2 * z * s34;
    let r = common - 2.0 * z * s34;
    let q = (c2 - 4.0) * s34 * (1.0 + c * z + z2);
    Ok((p, q, r))
}

fn mobius_closed_raw(c: f64, a: f64, z: Complex64) -> Result<(Complex64, Complex64)> {
    let (p, q, r) = mobius_pqr(c, a, z)?;
    Ok((-p / q, -r / q))
}

fn mobius_closed_at(c: f64, a: f64, z: Complex64) -> Result<(Complex64, Complex64)> {
    let (h, g) = mobius_closed_raw(c, a, z)?;
    let (h0, g0) = mobius_closed_raw(c, a, Complex64::new(0.0, 0.0))?;
    Ok((h - h0, g - g0))
}

/// Closed-form `h` of `Fc` sheared with `z(z+a)/(1+az)`, `c ∈ (-2, 2)`.
pub fn closed_h_ca(c: f64, a: f64, z: DiskPoint) -> Result<Complex64> {
    check_mobius_params(c, a)?;
    Ok(mobius_closed_at(c, a, z.z())?.0)
}

/// Closed-form `g` companion of [`closed_h_ca`].
pub fn closed_g_ca(c: f64, a: f64, z: DiskPoint) -> Result<Complex64> {
    check_mobius_params(c, a)?;
    Ok(mobius_closed_at(c, a, z.z())?.1)
}

fn check_mobius_params(c: f64, a: f64) -> Result<()> {
    if c.abs() >= 2.0 {
        return Err(Error::EndpointParameter { c });
    }
    if !(-1.0..=1.0).contains(&a) {
        return Err(Error::InvalidParameter(format!(
            "a must lie in [-1, 1], got {a}"
        )));
    }
    Ok(())
}

/// `h`, `g` of the `c = -2` slit shear.
fn slit_minus_two(a: f64, z: Complex64) -> (Complex64, Complex64) {
    let z2 = z * z;
    let z3 = z2 * z;
    let den = 6.0 * (z - 1.0).powu(3);
    let h = -(6.0 * z + 3.0 * a * z2 - a * z3 - 6.0 * z2 + 2.0 * z3) / den;
    let g = -(3.0 * a * z2 - a * z3 + 2.0 * z3) / den;
    (h, g)
}

/// `c = 2` follows from `c = -2` by `f_{2,a}(z) = -f_{-2,-a}(-z)`.
fn slit_hg_at(c: f64, a: f64, z: Complex64) -> (Complex64, Complex64) {
    if c < 0.0 {
        slit_minus_two(a, z)
    } else {
        let (h, g) = slit_minus_two(-a, -z);
        (-h, -g)
    }
}

/// `(u, v)` of a slit shear, with the degenerate pair flagged.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpecialShearValue {
    pub u: f64,
    pub v: f64,
    pub degenerate: bool,
}

impl SpecialShearValue {
    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.u, self.v)
    }
}

/// The slit shears `f_{-2,a}` and `f_{2,a}` as printed in (Re, Im) form.
pub fn closed_f_special(c: f64, a: f64, z: DiskPoint) -> Result<SpecialShearValue> {
    special_uv(c, a, z.z())
}

pub(crate) fn special_uv(c: f64, a: f64, z: Complex64) -> Result<SpecialShearValue> {
    if c.abs() != 2.0 {
        return Err(Error::InvalidParameter(format!(
            "slit formulas need c = ±2, got {c}"
        )));
    }
    if !(-1.0..=1.0).contains(&a) {
        return Err(Error::InvalidParameter(format!(
            "a must lie in [-1, 1], got {a}"
        )));
    }
    let (u, v) = if c < 0.0 {
        let cube = (z - 1.0).powu(3);
        let u = a / 3.0 - (z * z + (a - 1.0) * z - a / 3.0 + 2.0 / 3.0) / cube - 2.0 / 3.0;
        let w = (1.0 + z) / (1.0 - z);
        let v = (w * w - 1.0) / 4.0;
        (u.re, v.im)
    } else {
        let cube = (z + 1.0).powu(3);
        let u = a / 3.0 - (z * z + (a + 1.0) * z + a / 3.0 + 2.0 / 3.0) / cube + 2.0 / 3.0;
        let v = z / ((1.0 + z) * (1.0 + z));
        (u.re, v.im)
    };
    Ok(SpecialShearValue {
        u,
        v,
        degenerate: c == 2.0 && a == 1.0,
    })
}

/// `z·₂F₁(1, 1/n; 1 + 1/n; zⁿ) = ∫₀ᶻ dζ/(1 - ζⁿ)`.
pub(crate) fn inverse_one_minus_power_integral(n: u32, z: Complex64) -> Result<Complex64> {
    let b = 1.0 / f64::from(n);
    let p = Hyp2F1Params::real(1.0, b, 1.0 + b, z.powu(n))?;
    Ok(z * hyp2f1(&p)?)
}

fn epicycloid_hg_at(n: u32, z: Complex64) -> Result<(Complex64, Complex64)> {
    let n2 = f64::from(n * n);
    let zn = z.powu(n);
    // log(zⁿ - 1) - iπ, continued across Im(zⁿ) = 0 so that h stays analytic
    let log_term = log_c(1.0 - zn)? / n2;
    let h = inverse_one_minus_power_integral(n, z)? + log_term;
    let g = h - z + zn / n2;
    Ok((h, g))
}

/// `h_n(z) = z ₂F₁(1, 1/n; 1/n + 1; zⁿ) + log(zⁿ - 1)/n² - πi/n²`.
pub fn closed_h_n(n: u32, z: DiskPoint) -> Result<Complex64> {
    check_epicycloid_n(n)?;
    Ok(epicycloid_hg_at(n, z.z())?.0)
}

/// `g_n = h_n - Fn`.
pub fn closed_g_n(n: u32, z: DiskPoint) -> Result<Complex64> {
    check_epicycloid_n(n)?;
    Ok(epicycloid_hg_at(n, z.z())?.1)
}

fn check_epicycloid_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be >= 2, got {n}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::PathStrategy;

    fn dp(re: f64, im: f64) -> DiskPoint {
        DiskPoint::new(Complex64::new(re, im)).unwrap()
    }

    fn case2_h(z: Complex64) -> Complex64 {
        let at = z.atan();
        (z + at + z * z * at) / (2.0 * (z * z + 1.0))
    }

    #[test]
    fn numeric_matches_case2_closed_form() {
        let spec = ShearSpec::fc_mobius(0.0, 0.0).unwrap();
        let s = shear_numeric(spec, QuadratureConfig::default()).unwrap();
        let z = dp(0.5, 0.0);
        let h = s.h(z).unwrap();
        let g = s.g(z).unwrap();
        assert!((h.re - 0.4318238045).abs() < 1e-10);
        assert!((g.re - 0.0318238045).abs() < 1e-10);
        assert!((h - g - 0.4).norm() < 1e-13);
        assert!((h - case2_h(z.z())).norm() < 1e-13);
        assert_eq!(s.h(DiskPoint::origin()).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn mobius_closed_form_values() {
        let z = dp(0.5, 0.0);
        let numeric = shear_numeric(
            ShearSpec::fc_mobius(0.0, 0.0).unwrap(),
            QuadratureConfig::default(),
        )
        .unwrap();
        assert!((closed_h_ca(0.0, 0.0, z).unwrap() - numeric.h(z).unwrap()).norm() < 1e-8);
        assert!(closed_h_ca(1.0, 0.5, DiskPoint::origin()).unwrap().norm() < 1e-15);
        let z = dp(0.3, 0.0);
        let diff = closed_h_ca(-1.0, -1.0, z).unwrap() - closed_g_ca(-1.0, -1.0, z).unwrap();
        assert!((diff - 0.3 / 0.79).norm() < 1e-13);
        assert!((0.3_f64 / 0.79 - 0.3797468).abs() < 1e-7);
    }

    #[test]
    fn mobius_closed_rejects_endpoints() {
        assert!(matches!(
            closed_h_ca(2.0, 0.0, dp(0.1, 0.0)),
            Err(Error::EndpointParameter { .. })
        ));
        assert!(closed_g_ca(-2.0, 0.0, dp(0.1, 0.0)).is_err());
    }

    #[test]
    fn slit_values() {
        let v = closed_f_special(-2.0, 0.0, DiskPoint::origin()).unwrap();
        assert!(v.u.abs() < 1e-15 && v.v.abs() < 1e-15);
        assert!(!v.degenerate);
        let d = closed_f_special(2.0, 1.0, dp(0.5, 0.0)).unwrap();
        assert!(d.degenerate);
        assert!(closed_f_special(1.0, 0.0, dp(0.1, 0.0)).is_err());
    }

    #[test]
    fn slit_closed_matches_numeric() {
        for c in [-2.0, 2.0] {
            for a in [-1.0, 0.0, 0.5, 1.0] {
                let spec = ShearSpec::fc_mobius(c, a).unwrap();
                let closed = HarmonicShear::closed(spec).unwrap();
                let numeric = shear_numeric(spec, QuadratureConfig::default()).unwrap();
                for z in [dp(0.3, 0.4), dp(-0.6, 0.1), dp(0.2, -0.7)] {
                    let (hc, gc) = closed.hg_at(z.z()).unwrap();
                    let (hn, gn) = numeric.hg_at(z.z()).unwrap();
                    assert!((hc - hn).norm() < 1e-11, "c={c} a={a} z={z}");
                    assert!((gc - gn).norm() < 1e-11, "c={c} a={a} z={z}");
                }
            }
        }
    }

    #[test]
    fn epicycloid_values() {
        assert!(closed_h_n(2, DiskPoint::origin()).unwrap().norm() < 1e-16);
        let z = dp(0.5, 0.0);
        let diff = closed_h_n(2, z).unwrap() - closed_g_n(2, z).unwrap();
        assert!((diff - 0.4375).norm() < 1e-14);
        let numeric = shear_numeric(
            ShearSpec::epicycloid(3).unwrap(),
            QuadratureConfig::default(),
        )
        .unwrap();
        let z = dp(0.4, 0.0);
        assert!((closed_h_n(3, z).unwrap() - numeric.h(z).unwrap()).norm() < 1e-8);
        // below the real axis the printed log branch would be off by 2πi/n²
        let z = dp(0.3, -0.5);
        assert!((closed_h_n(3, z).unwrap() - numeric.h(z).unwrap()).norm() < 1e-8);
    }

    #[test]
    fn gamma_backend_matches_numeric() {
        let cfg = QuadratureConfig::default();
        // includes resonant (n = 4, c = 0) and generic parameters
        for (c, n) in [(0.0, 4), (0.0, 2), (1.0, 3), (-0.7, 5), (1.9, 2)] {
            let spec = ShearSpec::fc_power(c, n).unwrap();
            let closed = HarmonicShear::closed(spec).unwrap();
            let numeric = shear_numeric(spec, cfg).unwrap();
            for z in [dp(0.3, 0.4), dp(-0.5, -0.2), dp(0.1, -0.8)] {
                let (hc, gc) = closed.hg_at(z.z()).unwrap();
                let (hn, gn) = numeric.hg_at(z.z()).unwrap();
                assert!((hc - hn).norm() < 1e-10, "c={c} n={n} z={z}");
                assert!((gc - gn).norm() < 1e-10, "c={c} n={n} z={z}");
            }
        }
    }

    #[test]
    fn slit_real_form_matches_h_plus_conj_g() {
        for c in [-2.0, 2.0] {
            for a in [-1.0, 0.3, 1.0] {
                let s = HarmonicShear::closed(ShearSpec::fc_mobius(c, a).unwrap()).unwrap();
                for z in [dp(0.3, 0.4), dp(-0.6, -0.1)] {
                    let printed = closed_f_special(c, a, z).unwrap().as_complex();
                    assert!((printed - s.f(z).unwrap()).norm() < 1e-12, "c={c} a={a}");
                }
            }
        }
    }

    #[test]
    fn fn_with_mobius_rejected() {
        let res = ShearSpec::new(
            ConformalFamily::epicycloid(3).unwrap(),
            Dilatation::mobius_product(0.0).unwrap(),
        );
        assert!(matches!(res, Err(Error::UnsupportedPair(_))));
    }

    #[test]
    fn best_picks_closed_or_quadrature() {
        let cfg = QuadratureConfig::default();
        let closed = HarmonicShear::best(ShearSpec::epicycloid(4).unwrap(), cfg).unwrap();
        assert_eq!(closed.provenance(), Provenance::ClosedForm);
        let spec = ShearSpec::new(
            ConformalFamily::epicycloid(4).unwrap(),
            Dilatation::power(2).unwrap(),
        )
        .unwrap();
        assert_eq!(
            HarmonicShear::best(spec, cfg).unwrap().provenance(),
            Provenance::Quadrature
        );
        let spec = ShearSpec::fc_power(2.0, 2).unwrap();
        assert_eq!(
            HarmonicShear::best(spec, cfg).unwrap().provenance(),
            Provenance::Quadrature
        );
    }

    #[test]
    fn paths_agree() {
        let spec = ShearSpec::fc_mobius(1.5, -0.5).unwrap();
        let z = dp(-0.7, 0.6);
        let radial = shear_numeric(spec, QuadratureConfig::default()).unwrap();
        let two = shear_numeric(
            spec,
            QuadratureConfig::default().with_path(PathStrategy::TwoSegment),
        )
        .unwrap();
        let (a, b) = (radial.h(z).unwrap(), two.h(z).unwrap());
        assert!((a - b).norm() <= 1e-12_f64.max(1e-12 * a.norm()));
    }

    #[test]
    fn degenerate_flag() {
        assert!(ShearSpec::fc_mobius(2.0, 1.0).unwrap().is_degenerate());
        assert!(!ShearSpec::fc_mobius(-2.0, 1.0).unwrap().is_degenerate());
    }

    #[test]
    fn spec_serde_round_trip() {
        let spec = ShearSpec::fc_power(1.0, 4).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        let back: ShearSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(spec, back);
        let bad =
            r#"{"family":{"kind":"fn","n":3},"dilatation":{"kind":"mobius_product","a":0.0}}"#;
        assert!(serde_json::from_str::<ShearSpec>(bad).is_err());
    }
}
