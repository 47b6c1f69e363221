//! Boundary behaviour: slit tips, the collapsing shear, epicycloid cusps and
//! the concave arcs and growth of the `Fn` shears.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use super::{CheckResult, VerificationReport};
use crate::error::{Error, Result};
use crate::shear::{special_uv, HarmonicShear, ShearSpec};

const ARC_SAMPLES: usize = 2001;

/// `-(2-a)/6` for `c = -2`, `(a+2)/6` for `c = 2`.
pub fn slit_tip_target(c: f64, a: f64) -> f64 {
    if c < 0.0 {
        -(2.0 - a) / 6.0
    } else {
        (a + 2.0) / 6.0
    }
}

fn check_slit_params(c: f64, a: f64, r: f64) -> Result<()> {
    if c.abs() != 2.0 {
        return Err(Error::InvalidParameter(format!(
            "slit tips need c = ±2, got {c}"
        )));
    }
    if !(-1.0..=1.0).contains(&a) {
        return Err(Error::InvalidParameter(format!(
            "a must lie in [-1, 1], got {a}"
        )));
    }
    if c == 2.0 && a == 1.0 {
        return Err(Error::DegenerateShear { c, a });
    }
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "r must lie in (0, 1), got {r}"
        )));
    }
    Ok(())
}

/// `u` at the point of `|z| = r` on the slit side whose image is closest to the real axis.
pub fn slit_tip_estimate(c: f64, a: f64, r: f64) -> Result<f64> {
    check_slit_params(c, a, r)?;
    // the arc facing the tip, away from the preimage of the point at infinity
    let start = if c < 0.0 { PI / 2.0 } else { -PI / 2.0 };
    let mut best = (f64::INFINITY, f64::NAN);
    for k in 0..ARC_SAMPLES {
        let theta = start + PI * k as f64 / (ARC_SAMPLES - 1) as f64;
        let uv = special_uv(c, a, Complex64::from_polar(r, theta))?;
        if uv.v.abs() < best.0 {
            best = (uv.v.abs(), uv.u);
        }
    }
    Ok(best.1)
}

/// The slit tip estimate against its formula; the tolerance is `50(1 - r)`.
pub fn check_slit_tip(c: f64, a: f64, r: f64) -> Result<CheckResult> {
    let est = slit_tip_estimate(c, a, r)?;
    Ok(CheckResult::new(
        format!("slit_tip_c{c}_a{a}"),
        (est - slit_tip_target(c, a)).abs(),
        ARC_SAMPLES,
        50.0 * (1.0 - r),
    ))
}

/// `(c, a) = (2, 1)`: the image of `|z| = r`, `θ ∈ [-π/2, π/2]`, shrinks onto 1/2.
///
/// The residual is the larger of the sample diameter and the distance to 1/2.
pub fn check_degenerate_collapse(r: f64, n_samples: usize, tolerance: f64) -> Result<CheckResult> {
    let n = n_samples.max(2);
    let pts = (0..n)
        .map(|k| {
            let theta = -PI / 2.0 + PI * k as f64 / (n - 1) as f64;
            special_uv(2.0, 1.0, Complex64::from_polar(r, theta)).map(|uv| uv.as_complex())
        })
        .collect::<Result<Vec<_>>>()?;
    let mut spread = 0.0_f64;
    for (i, p) in pts.iter().enumerate() {
        spread = spread.max((p - 0.5).norm());
        for q in &pts[i + 1..] {
            spread = spread.max((p - q).norm());
        }
    }
    Ok(CheckResult::new(
        "degenerate_collapse",
        spread,
        n,
        tolerance,
    ))
}

fn epicycloid_speed(n: u32, theta: f64) -> f64 {
    (1.0 - Complex64::from_polar(1.0, f64::from(n - 1) * theta) / f64::from(n)).norm()
}

fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let inv_phi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > 1e-13 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    0.5 * (lo + hi)
}

/// Local minima `(θ, speed)` of `|d/dθ Fn(e^{iθ})|` on `[0, 2π)`.
pub fn epicycloid_speed_minima(n: u32) -> Result<Vec<(f64, f64)>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be >= 2, got {n}")));
    }
    let m = 720 * (n as usize - 1);
    let step = TAU / m as f64;
    let s: Vec<f64> = (0..m)
        .map(|k| epicycloid_speed(n, k as f64 * step))
        .collect();
    let mut minima = Vec::new();
    for k in 0..m {
        let prev = s[(k + m - 1) % m];
        let next = s[(k + 1) % m];
        if s[k] < prev && s[k] <= next {
            let centre = k as f64 * step;
            let theta = golden_min(|t| epicycloid_speed(n, t), centre - step, centre + step)
                .rem_euclid(TAU);
            minima.push((theta, epicycloid_speed(n, theta)));
        }
    }
    Ok(minima)
}

/// Exactly `n - 1` speed minima, at `θ = 2πk/(n-1)`, each of value `1 - 1/n`.
pub fn check_epicycloid_boundary(n: u32) -> Result<VerificationReport> {
    let minima = epicycloid_speed_minima(n)?;
    let cusps = f64::from(n - 1);
    let spacing = TAU / cusps;
    let expected = 1.0 - 1.0 / f64::from(n);
    let mut pos_err = 0.0_f64;
    let mut val_err = 0.0_f64;
    for &(theta, s) in &minima {
        let off = theta - spacing * (theta / spacing).round();
        pos_err = pos_err.max(off.abs());
        val_err = val_err.max((s - expected).abs());
    }
    let count_err = (minima.len() as f64 - cusps).abs();
    let mut report = VerificationReport::new();
    report.push(CheckResult::new(
        format!("epicycloid_n{n}_minima_count"),
        count_err,
        minima.len(),
        0.0,
    ));
    report.push(CheckResult::new(
        format!("epicycloid_n{n}_minima_position"),
        pos_err,
        minima.len(),
        1e-6,
    ));
    report.push(CheckResult::new(
        format!("epicycloid_n{n}_minima_value"),
        val_err,
        minima.len(),
        1e-9,
    ));
    Ok(report)
}

fn fn_shear(n: u32) -> Result<HarmonicShear> {
    HarmonicShear::closed(ShearSpec::epicycloid(n)?)
}

/// Sign changes of the turning direction along the image of `|z| = r` under the `Fn` shear.
pub fn concave_arc_sign_changes(n: u32, r: f64, samples: usize) -> Result<usize> {
    let shear = fn_shear(n)?;
    let w = (0..samples)
        .map(|k| shear.f_at(Complex64::from_polar(r, TAU * k as f64 / samples as f64)))
        .collect::<Result<Vec<_>>>()?;
    let m = w.len();
    let turn: Vec<f64> = (0..m)
        .map(|k| {
            let d0 = w[k] - w[(k + m - 1) % m];
            let d1 = w[(k + 1) % m] - w[k];
            (d0.conj() * d1).im
        })
        .collect();
    Ok((0..m)
        .filter(|&k| (turn[k] < 0.0) != (turn[(k + m - 1) % m] < 0.0))
        .count())
}

/// `n + 2` concave arcs: `2(n + 2)` turning sign changes on a dense polygon.
pub fn check_concave_arcs(n: u32, r: f64) -> Result<CheckResult> {
    let samples = 3000;
    let changes = concave_arc_sign_changes(n, r, samples)?;
    let expected = 2.0 * f64::from(n + 2);
    Ok(CheckResult::new(
        format!("concave_arcs_n{n}_r{r}"),
        (changes as f64 - expected).abs(),
        samples,
        0.0,
    ))
}

/// Growth of `max |f_n|` on circles approaching the boundary. The residual
/// counts radii where the maximum failed to increase.
pub fn check_growth(n: u32) -> Result<CheckResult> {
    let shear = fn_shear(n)?;
    let radii = [0.9, 0.95, 0.99, 0.995, 0.999];
    let samples = 720;
    let mut maxima = Vec::with_capacity(radii.len());
    for r in radii {
        let mut m = 0.0_f64;
        for k in 0..samples {
            m = m.max(
                shear
                    .f_at(Complex64::from_polar(r, TAU * k as f64 / samples as f64))?
                    .norm(),
            );
        }
        maxima.push(m);
    }
    let stalls = maxima.windows(2).filter(|p| p[1] <= p[0]).count();
    Ok(CheckResult::new(
        format!("fn_growth_n{n}"),
        stalls as f64,
        radii.len() * samples,
        0.0,
    ))
}
