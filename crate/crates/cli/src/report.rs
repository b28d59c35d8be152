use std::path::Path;

use rough_cpfs::verifier::{
    sweep_with_workers, ApproximationAudit, Mode, SweepConfig, TheoremReport, VerifyError,
};
use serde::{Deserialize, Serialize};

pub const REPORT_FORMAT_VERSION: u32 = 1;

/// Machine-readable sweep report. Holds no timings or worker counts, so the
/// same config always produces the same bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub format_version: u32,
    pub tool: String,
    pub tool_version: String,
    pub config: SweepConfig,
    /// Zero failures across the claim-mode reports.
    pub passed: bool,
    pub audit: ApproximationAudit,
    /// Each theorem under its stated hypotheses.
    pub reports: Vec<TheoremReport>,
    /// Explore mode only: the same theorems on every congruence.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exploration: Option<Vec<TheoremReport>>,
}

pub fn run(config: &SweepConfig, workers: Option<usize>) -> Result<ReportDocument, VerifyError> {
    let claim_config = SweepConfig {
        mode: Mode::Claim,
        ..config.clone()
    };
    let claim = sweep_with_workers(&claim_config, workers)?;
    let mut audit = claim.audit;
    let exploration = match config.mode {
        Mode::Claim => None,
        Mode::Explore => {
            let explore = sweep_with_workers(config, workers)?;
            audit = explore.audit;
            Some(explore.reports)
        }
    };
    Ok(ReportDocument {
        format_version: REPORT_FORMAT_VERSION,
        tool: "rcpfs".into(),
        tool_version: env!("CARGO_PKG_VERSION").into(),
        config: config.clone(),
        passed: claim.passed(),
        audit,
        reports: claim.reports,
        exploration,
    })
}

pub fn to_json(doc: &ReportDocument) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("report serializes");
    text.push('\n');
    text
}

/// Reads the config echoed in a report, or a bare config document.
pub fn load_config(path: &Path) -> Result<SweepConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    if let Ok(doc) = serde_json::from_str::<ReportDocument>(&text) {
        return Ok(doc.config);
    }
    serde_json::from_str::<SweepConfig>(&text)
        .map_err(|e| format!("{}: not a report or sweep config: {e}", path.display()))
}

pub fn summary_line(r: &TheoremReport) -> String {
    let status = if r.passed() { "pass" } else { "FAIL" };
    let mut line = format!(
        "{:<6} {status}  instances {:>7}  congruences {:>5} (excluded {})",
        r.theorem.name(),
        r.instances_checked,
        r.congruences_checked,
        r.congruences_excluded
    );
    if let Some(strict) = r.strict_instances {
        line.push_str(&format!("  strict {strict}"));
    }
    if r.failure_count > 0 {
        line.push_str(&format!(
            "  failures {} (complete {}, incomplete {})",
            r.failure_count, r.failures_on_complete, r.failures_on_incomplete
        ));
    }
    line
}
