use super::{
    case_pipeline, check_chd, check_concave_arcs, check_degenerate_collapse,
    check_epicycloid_boundary, check_growth, check_local_univalence, check_slit_tip,
    identify_surface, minimality_certificate, seeded_disk_samples, MinimalityConfig,
    VerificationReport,
};
use crate::error::Result;
use crate::families::{ConformalFamily, Dilatation};
use crate::lift::MinimalLift;
use crate::mesh::DiskGrid;
use crate::quadrature::QuadratureConfig;
use crate::shear::{HarmonicShear, ShearSpec};

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteOptions {
    pub grid: DiskGrid,
    pub chd_radius: f64,
    pub chd_lines: usize,
    pub slit_radius: f64,
    pub identify_samples: usize,
    pub seed: u64,
    pub quadrature: QuadratureConfig,
    pub minimality: MinimalityConfig,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            grid: DiskGrid::new(16, 64, 0.99, true).expect("valid default grid"),
            chd_radius: 0.9,
            chd_lines: 64,
            slit_radius: 0.999,
            identify_samples: 500,
            seed: 42,
            quadrature: QuadratureConfig::default(),
            minimality: MinimalityConfig::default(),
        }
    }
}

/// Every check that applies to `spec`, ordered by name.
pub fn run_suite(spec: ShearSpec, opts: &SuiteOptions) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    let shear = HarmonicShear::best(spec, opts.quadrature)?;
    report.push(check_local_univalence(&shear, &opts.grid)?);
    report.push(check_chd(&shear, opts.chd_radius, opts.chd_lines)?);

    match (spec.family(), spec.dilatation()) {
        (ConformalFamily::Fc { c }, Dilatation::MobiusProduct { a }) if c.abs() == 2.0 => {
            if spec.is_degenerate() {
                report.warn(format!(
                    "degenerate shear (c, a) = ({c}, {a}): the unit circle collapses onto the point 1/2"
                ));
                report.push(check_degenerate_collapse(opts.slit_radius, 200, 1e-2)?);
            } else {
                report.push(check_slit_tip(c, a, opts.slit_radius)?);
            }
        }
        (ConformalFamily::Fn { n }, _) => {
            report.extend(check_epicycloid_boundary(n)?);
            if spec.dilatation() == Dilatation::power(n)? {
                report.push(check_concave_arcs(n, 0.99)?);
                report.push(check_growth(n)?);
            }
        }
        _ => {}
    }

    if spec.dilatation().sqrt().is_ok() {
        let lift = MinimalLift::best(spec, opts.quadrature)?;
        for check in minimality_certificate(&lift, "lift", &opts.minimality)? {
            report.push(check);
        }
        if let (ConformalFamily::Fc { c }, Dilatation::MobiusProduct { .. }) =
            (spec.family(), spec.dilatation())
        {
            if [-2.0, 0.0, 2.0].contains(&c) {
                let case = c as i32;
                let samples = seeded_disk_samples(opts.identify_samples, 0.95, opts.seed)?;
                report.push(identify_surface(case, &case_pipeline(case)?, &samples)?);
            }
        }
    }
    Ok(report.sorted())
}
