//! JSON serialization of verifier reports and solver diagnostics.

use lctconv_core::solver::SolverDiagnostics;
use lctconv_core::theorems::VerifierReport;
use serde::Serialize;

use crate::io::GridJson;

#[derive(Serialize)]
pub struct ReportJson {
    pub identity: String,
    pub max_rel_error: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub grid: GridJson,
    /// Only present for the ratio-constancy check, which also reports the
    /// observed constant.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constant_magnitude: Option<f64>,
}

impl ReportJson {
    pub fn new(report: &VerifierReport) -> Self {
        Self {
            identity: report.identity.clone(),
            max_rel_error: report.max_rel_error,
            tolerance: report.tolerance,
            passed: report.passed,
            grid: GridJson::from(&report.grid),
            constant_magnitude: None,
        }
    }

    pub fn with_constant(report: &VerifierReport, magnitude: f64) -> Self {
        Self {
            constant_magnitude: Some(magnitude),
            ..Self::new(report)
        }
    }
}

#[derive(Serialize)]
pub struct DiagnosticsJson {
    pub min_abs_symbol: f64,
    pub regularized: bool,
    pub residual_rel_l2: f64,
}

impl From<&SolverDiagnostics> for DiagnosticsJson {
    fn from(d: &SolverDiagnostics) -> Self {
        Self {
            min_abs_symbol: d.min_abs_symbol,
            regularized: d.regularized,
            residual_rel_l2: d.residual_rel_l2,
        }
    }
}

/// Aggregate emitted by `lctconv verify`.
#[derive(Serialize)]
pub struct VerifySummary {
    pub reports: Vec<ReportJson>,
    pub all_passed: bool,
}

impl VerifySummary {
    pub fn new(reports: Vec<ReportJson>) -> Self {
        let all_passed = reports.iter().all(|r| r.passed);
        Self {
            reports,
            all_passed,
        }
    }
}
