//! One pass/fail line per acceptance criterion. Exits non-zero when any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dinvkit::verify::{
    delta_tiny_suite, ehh_suite, engine_suite, figures_suite, identities_suite, ndinv_suite, recursion_suite, Identity, Status, SuiteConfig,
    VerificationReport, VerifyError,
};

struct Criterion {
    number: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Result<Vec<VerificationReport>, VerifyError>,
}

fn figures() -> Result<Vec<VerificationReport>, VerifyError> {
    Ok(figures_suite())
}

fn ndinv() -> Result<Vec<VerificationReport>, VerifyError> {
    ndinv_suite(6)
}

fn ehh() -> Result<Vec<VerificationReport>, VerifyError> {
    ehh_suite(6)
}

fn recursion() -> Result<Vec<VerificationReport>, VerifyError> {
    recursion_suite(5)
}

fn identities() -> Result<Vec<VerificationReport>, VerifyError> {
    let cfg = SuiteConfig {
        identities: vec![
            Identity::MacHook,
            Identity::Reciprocity,
            Identity::NewId,
            Identity::DeltaHhSum,
            Identity::DeltahhEhh,
            Identity::EhhSum,
        ],
        ..SuiteConfig::default()
    };
    identities_suite(&cfg)
}

fn delta_tiny() -> Result<Vec<VerificationReport>, VerifyError> {
    delta_tiny_suite(5, None)
}

fn engine() -> Result<Vec<VerificationReport>, VerifyError> {
    engine_suite(None)
}

const CRITERIA: [Criterion; 7] = [
    Criterion { number: 1, title: "figure fidelity", budget: Duration::from_secs(1), run: figures },
    Criterion { number: 2, title: "ndinv transport on Catalan-PLD, m+n <= 6", budget: Duration::from_secs(60), run: ndinv },
    Criterion { number: 3, title: "ehh bijection, m+n-k <= 6", budget: Duration::from_secs(120), run: ehh },
    Criterion { number: 4, title: "recursion reconciliation, m+n <= 5", budget: Duration::from_secs(120), run: recursion },
    Criterion { number: 5, title: "symmetric-function identities on the grid", budget: Duration::from_secs(300), run: identities },
    Criterion { number: 6, title: "Delta conjecture tiny cases, m+n <= 5", budget: Duration::from_secs(300), run: delta_tiny },
    Criterion { number: 7, title: "engine self-validation", budget: Duration::from_secs(60), run: engine },
];

fn main() -> ExitCode {
    let mut all_ok = true;
    for c in &CRITERIA {
        let started = Instant::now();
        let outcome = (c.run)();
        let elapsed = started.elapsed();
        let (ok, summary) = match &outcome {
            Ok(reports) => {
                let failed: Vec<&VerificationReport> = reports.iter().filter(|r| r.status == Status::Fail).collect();
                let mut s = format!("{} checks, {} failed", reports.len(), failed.len());
                if let Some(f) = failed.first() {
                    s += &format!("; first failure {} {} [{}]: {}", f.suite, f.check, f.instance, f.witness.clone().unwrap_or_default());
                }
                if c.number == 4 {
                    if let Some(p) = reports.iter().find(|r| r.check == "printed-variant") {
                        s += &format!("; {}", p.detail);
                    }
                }
                (failed.is_empty(), s)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        let in_budget = elapsed <= c.budget;
        let pass = ok && in_budget;
        all_ok &= pass;
        println!(
            "criterion {} {}: {} ({summary}; {:.2}s of {}s budget{})",
            c.number,
            c.title,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
            if in_budget { "" } else { ", over budget" }
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
