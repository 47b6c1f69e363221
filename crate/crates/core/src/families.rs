//! Conformal families and dilatations.
//!
//! Two conformal families are supported, both univalent on the unit disk
//! with images convex in the horizontal direction:
//!
//! ```text
//! Fc(z) = z / (1 + c z + z²),   c ∈ [-2, 2]
//! Fn(z) = z - zⁿ / n²,          n ≥ 2
//! ```
//!
//! and two dilatation families, `ω(z) = z(z + a)/(1 + a z)` with `a ∈ [-1, 1]`
//! and `ω(z) = zⁿ` with `n ≥ 1`. Parameters are validated when a value is
//! constructed, so evaluators never re-check them.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The universal scalar.
pub type ComplexValue = Complex64;

/// Default radius bound for disk samples; all figures are drawn on `|z| = 0.999`.
pub const DEFAULT_R_MAX: f64 = 0.999;

/// A finite point of the open unit disk with `|z| <= r_max < 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiskPoint(Complex64);

impl DiskPoint {
    pub fn new(z: Complex64) -> Result<Self> {
        Self::with_r_max(z, DEFAULT_R_MAX)
    }

    pub fn with_r_max(z: Complex64, r_max: f64) -> Result<Self> {
        if !(r_max > 0.0 && r_max < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "r_max must lie in (0, 1), got {r_max}"
            )));
        }
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::InvalidParameter(format!("non-finite point {z}")));
        }
        if z.norm() > r_max {
            return Err(Error::InvalidParameter(format!(
                "|z| = {} exceeds r_max = {r_max}",
                z.norm()
            )));
        }
        Ok(Self(z))
    }

    pub fn from_polar(r: f64, theta: f64) -> Result<Self> {
        Self::new(Complex64::from_polar(r, theta))
    }

    /// Like [`DiskPoint::with_r_max`], but pulls back points that overshoot `r_max` by rounding.
    pub fn with_r_max_clamped(z: Complex64, r_max: f64) -> Result<Self> {
        let m = z.norm();
        if m > r_max && m <= r_max * (1.0 + 8.0 * f64::EPSILON) {
            return Self::with_r_max(z * (r_max / m), r_max)
                .or_else(|_| Self::with_r_max(z * ((r_max / m) * (1.0 - f64::EPSILON)), r_max));
        }
        Self::with_r_max(z, r_max)
    }

    /// For nodes that are inside the disk by construction but may overshoot `r_max` by an ulp.
    pub(crate) fn new_unchecked(z: Complex64) -> Self {
        Self(z)
    }

    pub const fn origin() -> Self {
        Self(Complex64::new(0.0, 0.0))
    }

    #[inline]
    pub fn z(self) -> Complex64 {
        self.0
    }
}

impl fmt::Display for DiskPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One of the two conformal families.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawFamily", into = "RawFamily")]
pub enum ConformalFamily {
    #[non_exhaustive]
    Fc { c: f64 },
    #[non_exhaustive]
    Fn { n: u32 },
}

#[derive(Clone, Copy, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RawFamily {
    Fc { c: f64 },
    Fn { n: u32 },
}

impl TryFrom<RawFamily> for ConformalFamily {
    type Error = Error;
    fn try_from(raw: RawFamily) -> Result<Self> {
        match raw {
            RawFamily::Fc { c } => Self::fc(c),
            RawFamily::Fn { n } => Self::epicycloid(n),
        }
    }
}

impl From<ConformalFamily> for RawFamily {
    fn from(f: ConformalFamily) -> Self {
        match f {
            ConformalFamily::Fc { c } => RawFamily::Fc { c },
            ConformalFamily::Fn { n } => RawFamily::Fn { n },
        }
    }
}

fn floor_for(scale: f64) -> f64 {
    4.0 * f64::EPSILON * scale
}

impl ConformalFamily {
    /// `Fc(z) = z/(1 + cz + z²)`; `c = ±2` is accepted as a boundary case.
    pub fn fc(c: f64) -> Result<Self> {
        if !c.is_finite() || !(-2.0..=2.0).contains(&c) {
            return Err(Error::InvalidParameter(format!(
                "c must lie in [-2, 2], got {c}"
            )));
        }
        Ok(Self::Fc { c })
    }

    /// `Fn(z) = z - zⁿ/n²`, mapping onto the interior of an epicycloid.
    pub fn epicycloid(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("n must be >= 2, got {n}")));
        }
        Ok(Self::Fn { n })
    }

    pub fn is_boundary_case(&self) -> bool {
        matches!(*self, Self::Fc { c } if c.abs() == 2.0)
    }

    pub fn eval(&self, z: DiskPoint) -> Result<Complex64> {
        self.value_at(z.z())
    }

    pub fn eval_prime(&self, z: DiskPoint) -> Result<Complex64> {
        self.derivative_at(z.z())
    }

    pub(crate) fn value_at(&self, z: Complex64) -> Result<Complex64> {
        match *self {
            Self::Fc { c } => {
                let den = fc_denominator(c, z)?;
                Ok(z / den)
            }
            Self::Fn { n } => Ok(z - z.powu(n) / f64::from(n * n)),
        }
    }

    pub(crate) fn derivative_at(&self, z: Complex64) -> Result<Complex64> {
        match *self {
            Self::Fc { c } => {
                let den = fc_denominator(c, z)?;
                Ok((1.0 - z * z) / (den * den))
            }
            Self::Fn { n } => Ok(1.0 - z.powu(n - 1) / f64::from(n)),
        }
    }
}

fn fc_denominator(c: f64, z: Complex64) -> Result<Complex64> {
    let den = 1.0 + c * z + z * z;
    let scale = 1.0 + c.abs() * z.norm() + z.norm_sqr();
    if den.norm() <= floor_for(scale) {
        return Err(Error::DegenerateDenominator { z });
    }
    Ok(den)
}

impl fmt::Display for ConformalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Fc { c } => write!(f, "F_c(c={c})"),
            Self::Fn { n } => write!(f, "F_n(n={n})"),
        }
    }
}

/// One of the two dilatation families.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawDilatation", into = "RawDilatation")]
pub enum Dilatation {
    #[non_exhaustive]
    MobiusProduct { a: f64 },
    #[non_exhaustive]
    Power { n: u32 },
}

#[derive(Clone, Copy, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum RawDilatation {
    MobiusProduct { a: f64 },
    Power { n: u32 },
}

impl TryFrom<RawDilatation> for Dilatation {
    type Error = Error;
    fn try_from(raw: RawDilatation) -> Result<Self> {
        match raw {
            RawDilatation::MobiusProduct { a } => Self::mobius_product(a),
            RawDilatation::Power { n } => Self::power(n),
        }
    }
}

impl From<Dilatation> for RawDilatation {
    fn from(d: Dilatation) -> Self {
        match d {
            Dilatation::MobiusProduct { a } => RawDilatation::MobiusProduct { a },
            Dilatation::Power { n } => RawDilatation::Power { n },
        }
    }
}

impl Dilatation {
    /// `ω(z) = z(z + a)/(1 + a z)`.
    pub fn mobius_product(a: f64) -> Result<Self> {
        if !a.is_finite() || !(-1.0..=1.0).contains(&a) {
            return Err(Error::InvalidParameter(format!(
                "a must lie in [-1, 1], got {a}"
            )));
        }
        Ok(Self::MobiusProduct { a })
    }

    /// `ω(z) = zⁿ`.
    pub fn power(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(
                "dilatation power must be >= 1".into(),
            ));
        }
        Ok(Self::Power { n })
    }

    pub fn eval(&self, z: DiskPoint) -> Complex64 {
        self.value_at(z.z())
    }

    pub(crate) fn value_at(&self, z: Complex64) -> Complex64 {
        match *self {
            // the pole of 1/(1 + az) cancels against z + a at |a| = 1
            Self::MobiusProduct { a: 1.0 } => z,
            Self::MobiusProduct { a: -1.0 } => -z,
            Self::MobiusProduct { a } => z * (z + a) / (1.0 + a * z),
            Self::Power { n } => z.powu(n),
        }
    }

    /// The analytic square root `q` with `q² = ω`, if one exists on the disk.
    pub fn sqrt(&self) -> Result<SquareRoot> {
        match *self {
            Self::MobiusProduct { a: 0.0 } => Ok(SquareRoot { power: 1 }),
            Self::Power { n } if n % 2 == 0 => Ok(SquareRoot { power: n / 2 }),
            _ => Err(Error::NotASquare(self.to_string())),
        }
    }
}

impl fmt::Display for Dilatation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MobiusProduct { a } => write!(f, "z(z+a)/(1+az) with a={a}"),
            Self::Power { n } => write!(f, "z^{n}"),
        }
    }
}

/// `q(z) = z^power`, the branch fixed so that the printed third coordinates are matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SquareRoot {
    pub power: u32,
}

impl SquareRoot {
    #[inline]
    pub fn eval(&self, z: Complex64) -> Complex64 {
        z.powu(self.power)
    }
}

pub fn eval_f(family: &ConformalFamily, z: DiskPoint) -> Result<Complex64> {
    family.eval(z)
}

pub fn eval_f_prime(family: &ConformalFamily, z: DiskPoint) -> Result<Complex64> {
    family.eval_prime(z)
}

pub fn eval_omega(d: &Dilatation, z: DiskPoint) -> Complex64 {
    d.eval(z)
}

pub fn sqrt_dilatation(d: &Dilatation) -> Result<SquareRoot> {
    d.sqrt()
}
