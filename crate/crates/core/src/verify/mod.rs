//! Numerical checks of the geometric claims about shears and their lifts.
//!
//! Each check reports a worst-case residual against a tolerance; the verdict
//! is always `residual <= tolerance`, so a NaN residual fails.

mod boundary;
mod chd;
mod minimality;
mod suite;
mod surfaces;
mod univalence;

use serde::{Deserialize, Serialize};

pub use boundary::{
    check_concave_arcs, check_degenerate_collapse, check_epicycloid_boundary, check_growth,
    check_slit_tip, concave_arc_sign_changes, epicycloid_speed_minima, slit_tip_estimate,
    slit_tip_target,
};
pub use chd::{check_chd, max_horizontal_crossings, PlanarMap};
pub use minimality::{minimality_certificate, MinimalityConfig};
pub use suite::{run_suite, SuiteOptions};
pub use surfaces::{
    canonical_eval, case_pipeline, case_surface, identify_canonical, identify_surface,
    seeded_disk_samples, CanonicalSurface, NormalizationPipeline, PipelineStep,
};
pub use univalence::{check_local_univalence, jacobian_fd};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub max_residual: f64,
    pub samples: usize,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, max_residual: f64, samples: usize, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            max_residual,
            samples,
            tolerance,
            passed: max_residual <= tolerance,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    #[serde(default)]
    pub warnings: Vec<String>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.warnings.extend(other.warnings);
    }

    /// Orders checks by name so merged reports do not depend on evaluation order.
    pub fn sorted(mut self) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> crate::Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}
