//! Symmetric-function identities and tiny Delta-conjecture cases, compared on the prime grid.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::json;

use crate::enumerate::{qt_enumerator, qt_enumerator_by_content, FamilySpec};
use crate::macdonald::{Evaluator, MacError, Partition, SfEngine};
use crate::qt::{compare_on_grid_with, degree_bound_for_size, EvalPoint, Pole, PointOutcome, QtPoly};

use super::{Suite, SuiteConfig, VerificationReport, VerifyError};

/// The checkable identities, by CLI name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `⟨H̃_μ, s_{(n-r,1^r)}⟩ = e_r[B_μ - 1]`.
    MacHook,
    /// Macdonald–Koornwinder reciprocity.
    Reciprocity,
    /// `mid-delta-hn = rhs-nabla-ehh`.
    NewId,
    /// `lhs-delta-hh = rhs-nabla-ehh`.
    DeltahhEhh,
    /// `sum-r-lhs = mid-delta-hn`.
    DeltaHhSum,
    /// `sum-r-lhs = rhs-nabla-ehh`.
    EhhSum,
    /// `lhs-delta-hh = mid-delta-hn`.
    DeltahhLem,
    /// `lhs-delta-hh` against the two-car parking function enumerator.
    DeltaConjectureHh,
    /// `rhs-nabla-ehh` against the shuffle-path enumerator.
    DeltaConjectureEhh,
    /// Monomial coefficients of the Delta expression against partially labelled paths by content.
    DeltaConjectureContent,
}

impl Identity {
    pub const ALL: [Identity; 10] = [
        Identity::MacHook,
        Identity::Reciprocity,
        Identity::NewId,
        Identity::DeltahhEhh,
        Identity::DeltaHhSum,
        Identity::EhhSum,
        Identity::DeltahhLem,
        Identity::DeltaConjectureHh,
        Identity::DeltaConjectureEhh,
        Identity::DeltaConjectureContent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::MacHook => "mac-hook",
            Identity::Reciprocity => "reciprocity",
            Identity::NewId => "new-id",
            Identity::DeltahhEhh => "deltahh-ehh",
            Identity::DeltaHhSum => "delta-hh-sum",
            Identity::EhhSum => "ehh-sum",
            Identity::DeltahhLem => "deltahh-lem",
            Identity::DeltaConjectureHh => "delta-conjecture-hh",
            Identity::DeltaConjectureEhh => "delta-conjecture-ehh",
            Identity::DeltaConjectureContent => "delta-conjecture-content",
        }
    }

    /// Default size bound: `n` for mac-hook, `|α|, |β|` for reciprocity, `m + n` otherwise.
    pub fn default_bound(self) -> u32 {
        match self {
            Identity::MacHook => 5,
            Identity::Reciprocity => 4,
            _ => 6,
        }
    }

    fn evaluator_pair(self) -> Option<(Evaluator, Evaluator)> {
        use Evaluator::*;
        match self {
            Identity::NewId => Some((MidDeltaHn, RhsNablaEhh)),
            Identity::DeltahhEhh => Some((LhsDeltaHh, RhsNablaEhh)),
            Identity::DeltaHhSum => Some((SumRLhs, MidDeltaHn)),
            Identity::EhhSum => Some((SumRLhs, RhsNablaEhh)),
            Identity::DeltahhLem => Some((LhsDeltaHh, MidDeltaHn)),
            _ => None,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, VerifyError> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| VerifyError::Usage(format!("unknown identity {s:?}")))
    }
}

type Side = Box<dyn Fn(&EvalPoint) -> Result<BigRational, MacError> + Send + Sync>;

/// One grid comparison to run.
struct Job {
    suite: &'static str,
    check: String,
    instance: String,
    degree_bound: u32,
    left: Side,
    right: Side,
}

fn poly_side(f: QtPoly) -> Side {
    Box::new(move |x| Ok(f.eval(&x.q, &x.t)))
}

fn evaluator_side(engine: SfEngine, which: Evaluator, m: u32, n: u32, k: u32) -> Side {
    Box::new(move |x| engine.evaluate(which, m, n, k, x))
}

fn to_pole(e: MacError) -> Pole {
    match e {
        MacError::Pole(p) => p,
        other => Pole(other.to_string()),
    }
}

/// Off-grid evaluation surfacing domain and capacity errors before the grid run.
fn precheck(job: &Job) -> Result<(), VerifyError> {
    let probe = EvalPoint::integers(1, 1, job.degree_bound);
    for side in [&job.left, &job.right] {
        match side(&probe) {
            Ok(_) | Err(MacError::Pole(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

fn run_job(job: &Job, per_point: bool) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut points = Vec::new();
    let cmp = compare_on_grid_with(
        |x| (job.left)(x).map_err(to_pole),
        |x| (job.right)(x).map_err(to_pole),
        job.degree_bound,
        |p, outcome| {
            if per_point {
                points.push((p.to_string(), outcome));
            }
        },
    )?;
    let mut out = Vec::with_capacity(points.len() + 1);
    for (point, outcome) in points {
        let instance = format!("{} at {point}", job.instance);
        out.push(match outcome {
            PointOutcome::Equal => VerificationReport::pass(job.suite, &job.check, instance, "equal"),
            PointOutcome::Skipped => VerificationReport::skip(job.suite, &job.check, instance, "pole"),
            PointOutcome::Differ => VerificationReport::fail(job.suite, &job.check, instance, "values differ", json!({ "point": point })),
        });
    }
    let detail = format!("degree bound {}, {} points, {} skipped", job.degree_bound, cmp.points_checked, cmp.points_skipped);
    let witness = (!cmp.equal).then(|| serde_json::to_value(&cmp.witness).unwrap_or_default());
    out.push(VerificationReport::from_outcome(job.suite, &job.check, job.instance.clone(), detail, witness));
    Ok(out)
}

fn run_jobs(jobs: &[Job], per_point: bool) -> Result<Vec<VerificationReport>, VerifyError> {
    for job in jobs {
        precheck(job)?;
    }
    let results: Vec<Result<Vec<VerificationReport>, VerifyError>> = jobs.par_iter().map(|j| run_job(j, per_point)).collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// `(m, n, k)` with `m >= k`, `n >= k`, `1 <= m + n <= max`, filtered by any pinned values.
fn mnk_instances(max: u32, cfg: &SuiteConfig) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for size in 1..=max {
        for m in 0..=size {
            let n = size - m;
            for k in 0..=m.min(n) {
                let pinned = cfg.m.is_none_or(|x| x == m) && cfg.n.is_none_or(|x| x == n) && cfg.k.is_none_or(|x| x == k);
                if pinned {
                    out.push((m, n, k));
                }
            }
        }
    }
    out
}

fn instance_name(m: u32, n: u32, k: u32) -> String {
    format!("m={m} n={n} k={k}")
}

/// The size bound for one identity: the suite bound when `--max` is given, the identity default
/// otherwise, raised to the cap when a parameter is pinned.
fn identity_bound(identity: Identity, cfg: &SuiteConfig) -> Result<u32, VerifyError> {
    let cap = Suite::Identities.size_limits().1;
    if cfg.max_size.is_some() {
        return cfg.bound_for(Suite::Identities);
    }
    if cfg.m.is_some() || cfg.n.is_some() || cfg.k.is_some() {
        return Ok(cap);
    }
    Ok(identity.default_bound())
}

fn identity_jobs(identity: Identity, cfg: &SuiteConfig, engine: SfEngine) -> Result<Vec<Job>, VerifyError> {
    const SUITE: &str = "identities";
    let bound = identity_bound(identity, cfg)?;
    let grid = |size: u32| cfg.grid_bound.unwrap_or_else(|| degree_bound_for_size(size));
    let check = identity.name().to_string();
    let mut jobs = Vec::new();
    match identity {
        Identity::MacHook => {
            for n in 1..=bound {
                if cfg.n.is_some_and(|x| x != n) {
                    continue;
                }
                for mu in Partition::all(n) {
                    for r in 0..n {
                        let (a, b) = (mu.clone(), mu.clone());
                        jobs.push(Job {
                            suite: SUITE,
                            check: check.clone(),
                            instance: format!("mu={mu} r={r}"),
                            degree_bound: grid(n),
                            left: Box::new(move |x| engine.mac_hook_sides(&a, r, x).map(|s| s.0)),
                            right: Box::new(move |x| engine.mac_hook_sides(&b, r, x).map(|s| s.1)),
                        });
                    }
                }
            }
        }
        Identity::Reciprocity => {
            for a in 1..=bound {
                for b in 1..=bound {
                    if cfg.m.is_some_and(|x| x != a) || cfg.n.is_some_and(|x| x != b) {
                        continue;
                    }
                    for alpha in Partition::all(a) {
                        for beta in Partition::all(b) {
                            let degree_bound = match cfg.grid_bound {
                                Some(g) => g,
                                None => engine.reciprocity_degree_bound(&alpha, &beta)?,
                            };
                            let (a1, b1, a2, b2) = (alpha.clone(), beta.clone(), alpha.clone(), beta.clone());
                            jobs.push(Job {
                                suite: SUITE,
                                check: check.clone(),
                                instance: format!("alpha={alpha} beta={beta}"),
                                degree_bound,
                                left: Box::new(move |x| engine.reciprocity_sides(&a1, &b1, x).map(|s| s.0)),
                                right: Box::new(move |x| engine.reciprocity_sides(&a2, &b2, x).map(|s| s.1)),
                            });
                        }
                    }
                }
            }
        }
        Identity::DeltaConjectureHh => {
            for (m, n, k) in mnk_instances(bound, cfg) {
                let f = qt_enumerator(&FamilySpec::two_car(m, n, k, false))?;
                jobs.push(Job {
                    suite: SUITE,
                    check: check.clone(),
                    instance: instance_name(m, n, k),
                    degree_bound: grid(m + n),
                    left: evaluator_side(engine, Evaluator::LhsDeltaHh, m, n, k),
                    right: poly_side(f),
                });
            }
        }
        Identity::DeltaConjectureEhh => {
            for (m, n, k) in mnk_instances(bound, cfg) {
                let f = qt_enumerator(&FamilySpec::shuffle_knm(k, n, m))?;
                jobs.push(Job {
                    suite: SUITE,
                    check: check.clone(),
                    instance: instance_name(m, n, k),
                    degree_bound: grid(m + n),
                    left: evaluator_side(engine, Evaluator::RhsNablaEhh, m, n, k),
                    right: poly_side(f),
                });
            }
        }
        Identity::DeltaConjectureContent => {
            jobs.extend(content_jobs(SUITE, &check, bound, 2, cfg, engine)?);
        }
        other => {
            let (l, r) = other.evaluator_pair().expect("evaluator identity");
            for (m, n, k) in mnk_instances(bound, cfg) {
                jobs.push(Job {
                    suite: SUITE,
                    check: check.clone(),
                    instance: instance_name(m, n, k),
                    degree_bound: grid(m + n),
                    left: evaluator_side(engine, l, m, n, k),
                    right: evaluator_side(engine, r, m, n, k),
                });
            }
        }
    }
    Ok(jobs)
}

/// Content-refined comparisons for `n >= 1`, `m + n <= max`, `k <= min(max_k, n - 1)` and every
/// `λ ⊢ n`.
fn content_jobs(suite: &'static str, check: &str, max: u32, max_k: u32, cfg: &SuiteConfig, engine: SfEngine) -> Result<Vec<Job>, VerifyError> {
    let mut jobs = Vec::new();
    for size in 1..=max {
        for n in 1..=size {
            let m = size - n;
            for k in 0..=max_k.min(n - 1) {
                if cfg.m.is_some_and(|x| x != m) || cfg.n.is_some_and(|x| x != n) || cfg.k.is_some_and(|x| x != k) {
                    continue;
                }
                let table: BTreeMap<Vec<u32>, QtPoly> = qt_enumerator_by_content(m, n, k)?;
                for lambda in Partition::all(n) {
                    let mut key = lambda.parts().to_vec();
                    key.resize(n as usize, 0);
                    let f = table.get(&key).cloned().unwrap_or_default();
                    let l = lambda.clone();
                    jobs.push(Job {
                        suite,
                        check: check.to_string(),
                        instance: format!("m={m} n={n} k={k} lambda={lambda}"),
                        degree_bound: cfg.grid_bound.unwrap_or_else(|| degree_bound_for_size(size)),
                        left: Box::new(move |x| engine.delta_lhs_by_content(m, n, k, &l, x)),
                        right: poly_side(f),
                    });
                }
            }
        }
    }
    Ok(jobs)
}

/// Runs the selected identities (all of them when none is selected) over their instance ranges.
pub fn identities_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>, VerifyError> {
    let engine = SfEngine::default();
    let selected: Vec<Identity> = if cfg.identities.is_empty() { Identity::ALL.to_vec() } else { cfg.identities.clone() };
    let mut jobs = Vec::new();
    for identity in selected {
        jobs.extend(identity_jobs(identity, cfg, engine)?);
    }
    if jobs.is_empty() {
        return Err(VerifyError::Usage("no instance matches the given parameters".into()));
    }
    run_jobs(&jobs, cfg.per_point)
}

/// Two-part case (`lhs-delta-hh` against the two-car parking function enumerator) for
/// `m + n <= max_size`, and the content-refined statement for `k <= 2` in the same range.
pub fn delta_tiny_suite(max_size: u32, grid_bound: Option<u32>) -> Result<Vec<VerificationReport>, VerifyError> {
    const SUITE: &str = "delta-tiny";
    let engine = SfEngine::default();
    let cfg = SuiteConfig { grid_bound, ..SuiteConfig::default() };
    let mut jobs = Vec::new();
    for (m, n, k) in mnk_instances(max_size, &cfg) {
        let f = qt_enumerator(&FamilySpec::two_car(m, n, k, false))?;
        jobs.push(Job {
            suite: SUITE,
            check: "two-part".into(),
            instance: instance_name(m, n, k),
            degree_bound: grid_bound.unwrap_or_else(|| degree_bound_for_size(m + n)),
            left: evaluator_side(engine, Evaluator::LhsDeltaHh, m, n, k),
            right: poly_side(f),
        });
    }
    jobs.extend(content_jobs(SUITE, "by-content", max_size, 2, &cfg, engine)?);
    run_jobs(&jobs, false)
}
