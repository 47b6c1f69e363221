//! Weierstrass–Enneper lifts of square-dilatation shears.
//!
//! For `ω = q²` the map `z ↦ (Re(h+g), Im(h-g), 2 Im ∫₀ᶻ q h')` is a minimal
//! graph over the shear image. The root is fixed as `q = z^m` for `ω = z^{2m}`,
//! and the additive constant by `x₃(0) = 0`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{ConformalFamily, Dilatation, DiskPoint, SquareRoot};
use crate::partial_fraction::{pole_integral, PartialFractionContext, RootFamily};
use crate::quadrature::{integrate_from_origin, QuadratureConfig};
use crate::shear::{inverse_one_minus_power_integral, HarmonicShear, Provenance, ShearSpec};
use crate::special::{atan_c, atanh_c};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimalGraphPoint {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl MinimalGraphPoint {
    pub const fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Self { x1, x2, x3 }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn from_array(p: [f64; 3]) -> Self {
        Self::new(p[0], p[1], p[2])
    }

    pub fn distance(&self, other: &Self) -> f64 {
        ((self.x1 - other.x1).powi(2) + (self.x2 - other.x2).powi(2) + (self.x3 - other.x3).powi(2))
            .sqrt()
    }
}

fn graph_point(h: Complex64, g: Complex64, x3: f64) -> MinimalGraphPoint {
    MinimalGraphPoint::new((h + g).re, (h - g).im, x3)
}

fn x3_numeric_at(
    spec: &ShearSpec,
    root: SquareRoot,
    z: Complex64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let integrand = |s: Complex64| match spec.h_prime_at(s) {
        Ok(hp) => root.eval(s) * hp,
        Err(_) => Complex64::new(f64::NAN, f64::NAN),
    };
    let w = integrate_from_origin(&integrand, z, cfg)?;
    if !w.im.is_finite() {
        return Err(Error::DegenerateDenominator { z });
    }
    Ok(2.0 * w.im)
}

/// Lift by quadrature of `q h'`; `(x₁, x₂)` come from `shear` itself.
pub fn lift_numeric(
    shear: &HarmonicShear,
    z: DiskPoint,
    cfg: &QuadratureConfig,
) -> Result<MinimalGraphPoint> {
    cfg.validate()?;
    let root = shear.spec().dilatation().sqrt()?;
    let x3 = x3_numeric_at(shear.spec(), root, z.z(), cfg)?;
    let (h, g) = shear.hg_at(z.z())?;
    Ok(graph_point(h, g, x3))
}

fn x3_fc_at(c: f64, z: Complex64) -> Result<f64> {
    if c.abs() >= 2.0 {
        return Err(Error::EndpointParameter { c });
    }
    let d = c * c - 4.0;
    let s = crate::special::sigma_values(c, z)?.product34();
    let e = (2.0 / d + c * z / d) / (z * z + c * z + 1.0) - 2.0 / d
        + 2.0 * c * atanh_c(Complex64::new(c * d, 0.0) / s)? / s
        - 2.0 * c * atanh_c(d * (c + 2.0 * z) / s)? / s;
    Ok(2.0 * e.im)
}

/// `x₃` of the `Fc` lift with `ω = z²`, `c ∈ (-2, 2)`.
pub fn x3_closed_fc(c: f64, z: DiskPoint) -> Result<f64> {
    x3_fc_at(c, z.z())
}

fn case_at(c: i32, z: Complex64) -> Result<MinimalGraphPoint> {
    let one = Complex64::new(1.0, 0.0);
    match c {
        -2 => {
            if (z - one).norm() < f64::EPSILON {
                return Err(Error::PoleAtBoundary { z });
            }
            let zm = z - one;
            let cube = zm * zm * zm;
            let x1 = (-(z * z - z + 2.0 / 3.0) / cube - 2.0 / 3.0).re;
            let x2 = (z / (zm * zm)).im;
            let x3 = 2.0 * (1.0 / 6.0 - (3.0 * z - one) / (6.0 * cube)).im;
            Ok(MinimalGraphPoint::new(x1, x2, x3))
        }
        0 => {
            let z2 = z * z;
            let at = atan_c(z)?;
            let h = (z + at + z2 * at) / (2.0 * (z2 + one));
            let g = h - z / (one + z2);
            let x3 = 2.0 * (0.5 - one / (2.0 * (z2 + one))).im;
            Ok(graph_point(h, g, x3))
        }
        2 => {
            if (z + one).norm() < f64::EPSILON {
                return Err(Error::PoleAtBoundary { z });
            }
            let zp = z + one;
            let cube = zp * zp * zp;
            let x1 = (2.0 / 3.0 - (z * z + z + 2.0 / 3.0) / cube).re;
            let x2 = (z / (zp * zp)).im;
            let x3 = 2.0 * (1.0 / 6.0 - (z / 2.0 + 1.0 / 6.0) / cube).im;
            Ok(MinimalGraphPoint::new(x1, x2, x3))
        }
        other => Err(Error::InvalidParameter(format!(
            "case formulas exist for c = -2, 0, 2, got {other}"
        ))),
    }
}

/// The explicit lifts `X₋₂`, `X₀`, `X₂` of the `ω = z²` shears.
pub fn x3_closed_case(c: i32, z: DiskPoint) -> Result<MinimalGraphPoint> {
    case_at(c, z.z())
}

fn eq9_at(m: u32, z: Complex64) -> Result<f64> {
    if m < 1 {
        return Err(Error::InvalidParameter("m must be >= 1".into()));
    }
    let mf = f64::from(m);
    let zm = z.powu(m);
    // ζ^m/(1 - ζ^{2m}) = ½(1/(1 - ζ^m) - 1/(1 + ζ^m))
    let plus = inverse_one_minus_power_integral(m, z)?;
    let minus = neg_power_integral(m, z)?;
    let tail = (atanh_c(zm)? - zm) / (2.0 * mf * mf);
    Ok(2.0 * (0.5 * (plus - minus) - tail).im)
}

/// `∫₀ᶻ dζ/(1 + ζ^m) = z·₂F₁(1, 1/m; 1 + 1/m; -z^m)`.
fn neg_power_integral(m: u32, z: Complex64) -> Result<Complex64> {
    use crate::special::{hyp2f1, Hyp2F1Params};
    let b = 1.0 / f64::from(m);
    let p = Hyp2F1Params::real(1.0, b, 1.0 + b, -z.powu(m))?;
    Ok(z * hyp2f1(&p)?)
}

/// `x₃` of the `Fn` lift, `n = 2m`, with `ω = zⁿ`.
pub fn x3_closed_eq9(m: u32, z: DiskPoint) -> Result<f64> {
    eq9_at(m, z.z())
}

fn x3_gamma_at(ctx: &PartialFractionContext, z: Complex64) -> Result<f64> {
    let eta = ctx.eta;
    let eta_bar = eta.conj();
    let i2 = pole_integral(ctx, RootFamily::Unity, eta_bar, z)?;
    let i3 = pole_integral(ctx, RootFamily::Unity, eta, z)?;
    let i4 = pole_integral(ctx, RootFamily::NegativeUnity, eta_bar, z)?;
    let i5 = pole_integral(ctx, RootFamily::NegativeUnity, eta, z)?;
    let pref = Complex64::new(0.0, -1.0) / (2.0 * ctx.gamma.sin());
    let w = pref * (0.5 * eta_bar * (i2 - i4) - 0.5 * eta * (i3 - i5));
    Ok(2.0 * w.im)
}

/// `x₃` of the `Fc` lift with `ω = z^{2n}`, where `ctx` carries `n` and `γ`.
pub fn assemble_x3_gamma(ctx: &PartialFractionContext, z: DiskPoint) -> Result<f64> {
    x3_gamma_at(ctx, z.z())
}

#[derive(Clone, Debug, PartialEq)]
enum X3Backend {
    Quadrature(QuadratureConfig),
    Fc { c: f64 },
    Case { c: i32 },
    Eq9 { m: u32 },
    Gamma(PartialFractionContext),
}

/// A lift with the fastest available `x₃` evaluator.
#[derive(Clone, Debug, PartialEq)]
pub struct MinimalLift {
    shear: HarmonicShear,
    root: SquareRoot,
    x3: X3Backend,
}

impl MinimalLift {
    /// Quadrature for `h`, `g` and `x₃`.
    pub fn numeric(spec: ShearSpec, cfg: QuadratureConfig) -> Result<Self> {
        let root = spec.dilatation().sqrt()?;
        Ok(Self {
            shear: HarmonicShear::numeric(spec, cfg)?,
            root,
            x3: X3Backend::Quadrature(cfg),
        })
    }

    /// Closed forms where they exist; quadrature with `cfg` elsewhere.
    pub fn best(spec: ShearSpec, cfg: QuadratureConfig) -> Result<Self> {
        let root = spec.dilatation().sqrt()?;
        let shear = HarmonicShear::best(spec, cfg)?;
        let x3 = match (spec.family(), spec.dilatation()) {
            (ConformalFamily::Fc { c }, Dilatation::MobiusProduct { .. }) if c.abs() < 2.0 => {
                X3Backend::Fc { c }
            }
            (ConformalFamily::Fc { c }, Dilatation::MobiusProduct { .. }) => {
                X3Backend::Case { c: c as i32 }
            }
            (ConformalFamily::Fn { n }, Dilatation::Power { n: p }) if n == p => {
                X3Backend::Eq9 { m: n / 2 }
            }
            (ConformalFamily::Fc { c }, Dilatation::Power { n }) if c.abs() < 2.0 => {
                X3Backend::Gamma(PartialFractionContext::for_c(n / 2, c)?)
            }
            _ => X3Backend::Quadrature(cfg),
        };
        Ok(Self { shear, root, x3 })
    }

    pub fn shear(&self) -> &HarmonicShear {
        &self.shear
    }

    pub fn spec(&self) -> &ShearSpec {
        self.shear.spec()
    }

    pub fn provenance(&self) -> Provenance {
        match (&self.x3, self.shear.provenance()) {
            (X3Backend::Quadrature(_), _) | (_, Provenance::Quadrature) => Provenance::Quadrature,
            _ => Provenance::ClosedForm,
        }
    }

    pub fn eval(&self, z: DiskPoint) -> Result<MinimalGraphPoint> {
        self.eval_at(z.z())
    }

    pub(crate) fn eval_at(&self, z: Complex64) -> Result<MinimalGraphPoint> {
        if let X3Backend::Case { c } = self.x3 {
            return case_at(c, z);
        }
        let (h, g) = self.shear.hg_at(z)?;
        let x3 = match &self.x3 {
            X3Backend::Quadrature(cfg) => x3_numeric_at(self.shear.spec(), self.root, z, cfg)?,
            X3Backend::Fc { c } => x3_fc_at(*c, z)?,
            X3Backend::Eq9 { m } => eq9_at(*m, z)?,
            X3Backend::Gamma(ctx) => x3_gamma_at(ctx, z)?,
            X3Backend::Case { .. } => unreachable!(),
        };
        Ok(graph_point(h, g, x3))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn dp(z: Complex64) -> DiskPoint {
        DiskPoint::new(z).unwrap()
    }

    fn numeric(spec: ShearSpec) -> HarmonicShear {
        HarmonicShear::numeric(spec, QuadratureConfig::default()).unwrap()
    }

    #[test]
    fn real_axis_gives_zero_height() {
        let s = numeric(ShearSpec::fc_mobius(0.7, 0.0).unwrap());
        let p = lift_numeric(
            &s,
            dp(Complex64::new(0.6, 0.0)),
            &QuadratureConfig::default(),
        )
        .unwrap();
        assert_eq!(p.x3, 0.0);
        assert_eq!(
            x3_closed_fc(0.0, dp(Complex64::new(-0.4, 0.0))).unwrap(),
            0.0
        );
        assert_eq!(
            x3_closed_case(2, dp(Complex64::new(0.4, 0.0))).unwrap().x3,
            0.0
        );
        assert_eq!(x3_closed_eq9(1, dp(Complex64::new(0.4, 0.0))).unwrap(), 0.0);
    }

    #[test]
    fn helicoid_checkpoint() {
        let z = dp(Complex64::from_polar(0.5, PI / 4.0));
        let s = numeric(ShearSpec::fc_mobius(0.0, 0.0).unwrap());
        let p = lift_numeric(&s, z, &QuadratureConfig::default()).unwrap();
        assert!((p.x3 - 0.2352941).abs() < 1e-6);
        assert!((x3_closed_fc(0.0, z).unwrap() - p.x3).abs() < 1e-12);
        assert!((x3_closed_case(0, z).unwrap().x3 - p.x3).abs() < 1e-12);
    }

    #[test]
    fn non_square_refused() {
        let s = numeric(ShearSpec::fc_mobius(0.0, 1.0).unwrap());
        let res = lift_numeric(&s, DiskPoint::origin(), &QuadratureConfig::default());
        assert!(matches!(res, Err(Error::NotASquare(_))));
        assert!(MinimalLift::best(
            ShearSpec::epicycloid(3).unwrap(),
            QuadratureConfig::default()
        )
        .is_err());
    }

    #[test]
    fn fc_closed_matches_numeric() {
        let z = dp(Complex64::new(0.0, 0.3));
        let s = numeric(ShearSpec::fc_mobius(1.0, 0.0).unwrap());
        let p = lift_numeric(&s, z, &QuadratureConfig::default()).unwrap();
        assert!((x3_closed_fc(1.0, z).unwrap() - p.x3).abs() < 1e-8);
        assert!(matches!(
            x3_closed_fc(2.0, z),
            Err(Error::EndpointParameter { .. })
        ));
    }

    #[test]
    fn case_formulas_match_numeric() {
        let z = dp(Complex64::from_polar(0.5, PI / 3.0));
        for c in [-2, 0, 2] {
            let s = numeric(ShearSpec::fc_mobius(f64::from(c), 0.0).unwrap());
            let p = lift_numeric(&s, z, &QuadratureConfig::default()).unwrap();
            let q = x3_closed_case(c, z).unwrap();
            assert!(p.distance(&q) < 1e-8, "c={c}: {p:?} vs {q:?}");
        }
        assert_eq!(
            x3_closed_case(0, DiskPoint::origin()).unwrap(),
            MinimalGraphPoint::new(0.0, 0.0, 0.0)
        );
        assert!(x3_closed_case(1, DiskPoint::origin()).is_err());
    }

    #[test]
    fn eq9_checkpoints() {
        let x3 = x3_closed_eq9(1, dp(Complex64::new(0.0, 0.5))).unwrap();
        assert!((x3 - 0.0363524).abs() < 1e-6);
        let z = dp(Complex64::from_polar(0.4, PI / 6.0));
        let s = numeric(ShearSpec::epicycloid(4).unwrap());
        let p = lift_numeric(&s, z, &QuadratureConfig::default()).unwrap();
        assert!((x3_closed_eq9(2, z).unwrap() - p.x3).abs() < 1e-8);
    }

    #[test]
    fn gamma_assembly() {
        let ctx = PartialFractionContext::new(1, PI / 2.0).unwrap();
        let z = dp(Complex64::new(0.2, 0.5));
        let case = x3_closed_case(0, z).unwrap().x3;
        assert!((assemble_x3_gamma(&ctx, z).unwrap() - case).abs() < 1e-8);
        assert_eq!(assemble_x3_gamma(&ctx, DiskPoint::origin()).unwrap(), 0.0);

        let ctx = PartialFractionContext::new(2, PI / 3.0).unwrap();
        let s = numeric(ShearSpec::fc_power(ctx.c(), 4).unwrap());
        for z in [dp(Complex64::new(0.3, 0.0)), dp(Complex64::new(-0.3, 0.6))] {
            let p = lift_numeric(&s, z, &QuadratureConfig::default()).unwrap();
            assert!((assemble_x3_gamma(&ctx, z).unwrap() - p.x3).abs() < 1e-8);
        }
    }

    #[test]
    fn best_lift_matches_numeric() {
        let cfg = QuadratureConfig::default();
        let specs = [
            ShearSpec::fc_mobius(1.0, 0.0).unwrap(),
            ShearSpec::fc_mobius(-2.0, 0.0).unwrap(),
            ShearSpec::fc_mobius(2.0, 0.0).unwrap(),
            ShearSpec::epicycloid(6).unwrap(),
            ShearSpec::fc_power(0.5, 6).unwrap(),
            ShearSpec::fc_power(0.0, 4).unwrap(),
        ];
        let z = Complex64::new(-0.35, 0.55);
        for spec in specs {
            let best = MinimalLift::best(spec, cfg).unwrap();
            let num = MinimalLift::numeric(spec, cfg).unwrap();
            let (a, b) = (best.eval_at(z).unwrap(), num.eval_at(z).unwrap());
            assert!(a.distance(&b) < 1e-8, "{spec}: {a:?} vs {b:?}");
        }
    }
}
