//! Verification suites over the combinatorial families, the bijections, the recursion and the
//! symmetric-function identities, producing deterministic pass/fail reports.

mod combinatorial;
mod engine;
mod figures;
mod identities;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

pub use combinatorial::{ehh_suite, ndinv_suite, recursion_suite};
pub use engine::engine_suite;
pub use figures::{figure_polyomino_word, figures_suite, PRINTED_FIGURE_WORD};
pub use identities::{delta_tiny_suite, identities_suite, Identity};

use crate::bijections::BijectionError;
use crate::enumerate::EnumError;
use crate::lattice::LatticeError;
use crate::macdonald::MacError;
use crate::qt::QtError;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("{0}")]
    Usage(String),
    #[error("size {size} exceeds the cap {cap} for suite {suite}")]
    Capacity { suite: String, size: u32, cap: u32 },
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Qt(#[from] QtError),
    #[error(transparent)]
    Macdonald(#[from] MacError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

/// One checked instance. A failing report always carries a witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub check: String,
    pub instance: String,
    pub status: Status,
    pub detail: String,
    pub witness: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl VerificationReport {
    pub fn pass(suite: &str, check: &str, instance: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::build(suite, check, instance.into(), Status::Pass, detail.into(), None)
    }

    pub fn fail(suite: &str, check: &str, instance: impl Into<String>, detail: impl Into<String>, witness: serde_json::Value) -> Self {
        Self::build(suite, check, instance.into(), Status::Fail, detail.into(), Some(witness))
    }

    pub fn skip(suite: &str, check: &str, instance: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::build(suite, check, instance.into(), Status::Skip, reason.into(), None)
    }

    /// Pass when `witness` is `None`, fail with it otherwise.
    pub fn from_outcome(
        suite: &str,
        check: &str,
        instance: impl Into<String>,
        detail: impl Into<String>,
        witness: Option<serde_json::Value>,
    ) -> Self {
        match witness {
            None => Self::pass(suite, check, instance, detail),
            Some(w) => Self::fail(suite, check, instance, detail, w),
        }
    }

    fn build(suite: &str, check: &str, instance: String, status: Status, detail: String, witness: Option<serde_json::Value>) -> Self {
        Self { suite: suite.into(), check: check.into(), instance, status, detail, witness, elapsed_ms: None }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Renders reports as CSV with a header row.
pub fn reports_to_csv(reports: &[VerificationReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let timing = reports.iter().any(|r| r.elapsed_ms.is_some());
    let mut header = vec!["suite", "check", "instance", "status", "detail", "witness"];
    if timing {
        header.push("elapsed_ms");
    }
    w.write_record(&header).expect("writing to memory");
    for r in reports {
        let witness = r.witness.as_ref().map(|v| v.to_string()).unwrap_or_default();
        let status = r.status.to_string();
        let mut row = vec![r.suite.as_str(), r.check.as_str(), r.instance.as_str(), status.as_str(), r.detail.as_str(), witness.as_str()];
        let elapsed = r.elapsed_ms.map(|e| e.to_string()).unwrap_or_default();
        if timing {
            row.push(elapsed.as_str());
        }
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is utf-8")
}

/// Renders reports as JSON lines.
pub fn reports_to_jsonl(reports: &[VerificationReport]) -> String {
    reports.iter().map(|r| serde_json::to_string(r).expect("reports serialize") + "\n").collect()
}

/// Names accepted by [`run_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Figures,
    Ndinv,
    Ehh,
    RecursionReconcile,
    Identities,
    DeltaTiny,
    Engine,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Figures,
        Suite::Ndinv,
        Suite::Ehh,
        Suite::RecursionReconcile,
        Suite::Identities,
        Suite::DeltaTiny,
        Suite::Engine,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Figures => "figures",
            Suite::Ndinv => "ndinv",
            Suite::Ehh => "ehh",
            Suite::RecursionReconcile => "recursion-reconcile",
            Suite::Identities => "identities",
            Suite::DeltaTiny => "delta-tiny",
            Suite::Engine => "engine",
            Suite::All => "all",
        }
    }

    /// Default size bound and hard cap.
    pub fn size_limits(self) -> (u32, u32) {
        match self {
            Suite::Ndinv | Suite::Ehh => (6, 8),
            Suite::RecursionReconcile => (5, 7),
            Suite::Identities => (6, 7),
            Suite::DeltaTiny => (5, 7),
            Suite::Figures | Suite::Engine | Suite::All => (0, 0),
        }
    }
}

impl FromStr for Suite {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, VerifyError> {
        match s {
            "identity" => Ok(Suite::Identities),
            _ => Suite::ALL
                .into_iter()
                .find(|x| x.name() == s)
                .ok_or_else(|| VerifyError::Usage(format!("unknown suite {s:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Options shared by the suites. Unset bounds fall back to each suite's default.
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub max_size: Option<u32>,
    pub identities: Vec<Identity>,
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub grid_bound: Option<u32>,
    pub per_point: bool,
    pub jobs: usize,
    pub timing: bool,
}

impl SuiteConfig {
    /// The size bound for a suite, checked against its cap.
    pub fn bound_for(&self, suite: Suite) -> Result<u32, VerifyError> {
        let (default, cap) = suite.size_limits();
        let size = self.max_size.unwrap_or(default);
        if size > cap {
            return Err(VerifyError::Capacity { suite: suite.name().into(), size, cap });
        }
        Ok(size)
    }

    /// Runs `f` on a pool of `jobs` worker threads (all available cores when 0).
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match rayon::ThreadPoolBuilder::new().num_threads(self.jobs).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
}

/// Runs one suite, or every suite for [`Suite::All`], in a deterministic order.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<VerificationReport>, VerifyError> {
    let started = Instant::now();
    let mut reports = match suite {
        Suite::Figures => figures_suite(),
        Suite::Ndinv => cfg.install(|| ndinv_suite(cfg.bound_for(suite)?))?,
        Suite::Ehh => cfg.install(|| ehh_suite(cfg.bound_for(suite)?))?,
        Suite::RecursionReconcile => recursion_suite(cfg.bound_for(suite)?)?,
        Suite::Identities => cfg.install(|| identities_suite(cfg))?,
        Suite::DeltaTiny => cfg.install(|| delta_tiny_suite(cfg.bound_for(suite)?, cfg.grid_bound))?,
        Suite::Engine => cfg.install(|| engine_suite(cfg.grid_bound))?,
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::ALL.into_iter().filter(|&s| s != Suite::All) {
                let sub = SuiteConfig { max_size: None, ..cfg.clone() };
                all.extend(run_suite(s, &sub)?);
            }
            return Ok(all);
        }
    };
    if cfg.timing {
        let elapsed = started.elapsed().as_millis();
        for r in &mut reports {
            r.elapsed_ms = Some(elapsed);
        }
    }
    Ok(reports)
}

/// `true` iff no report failed.
pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(VerificationReport::passed)
}
