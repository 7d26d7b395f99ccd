//! Exhaustive checks of the bijections and of the recursion on small families.

use std::collections::HashSet;

use rayon::prelude::*;
use serde_json::json;

use crate::bijections::{
    ehh_forward, ehh_inverse, eta, eta_inverse, ndinv, pld_recursive_step, pld_recursive_step_via_maps, psi, psi_inverse,
    shuffle_recursion_step, DominoSequence,
};
use crate::enumerate::{count, paths, qt_enumerator, FamilySpec};
use crate::lattice::{validate_family, DecoratedLabelledPath, Family};
use crate::qt::reconcile_recursion;

use super::{VerificationReport, VerifyError};

fn path_json(p: &DecoratedLabelledPath) -> serde_json::Value {
    serde_json::to_value(p).unwrap_or(serde_json::Value::Null)
}

/// First failing transport property of `ψ∘η⁻¹` and of the recursive step on one path.
fn ndinv_witness(d: &DecoratedLabelledPath) -> Option<serde_json::Value> {
    let fail = |what: &str, extra: serde_json::Value| Some(json!({ "path": path_json(d), "failed": what, "data": extra }));
    let w = match eta_inverse(d) {
        Ok(w) => w,
        Err(e) => return fail("eta-inv", json!(e.to_string())),
    };
    match eta(&w) {
        Ok(back) if &back == d => {}
        other => return fail("eta round trip", json!(format!("{other:?}"))),
    }
    let pf = match psi(&w) {
        Ok(pf) => pf,
        Err(e) => return fail("psi", json!(e.to_string())),
    };
    if psi_inverse(&pf).ok().as_ref() != Some(&w) {
        return fail("psi round trip", json!(w.to_string()));
    }
    if pf.area() != d.area() {
        return fail("area", json!([d.area(), pf.area()]));
    }
    let nd = DominoSequence::from_path(&pf).and_then(|s| ndinv(&s));
    if nd.as_ref().ok() != Some(&d.dinv()) {
        return fail("dinv to ndinv", json!([d.dinv(), format!("{nd:?}")]));
    }
    let (zc, bc) = (d.zero_composition(), pf.big_car_composition());
    if zc.is_err() || zc.as_ref().ok() != bc.as_ref().ok() {
        return fail("composition", json!([format!("{zc:?}"), format!("{bc:?}")]));
    }
    let (direct, composite) = (pld_recursive_step(d), pld_recursive_step_via_maps(d));
    let step = match (direct, composite) {
        (Ok(a), Ok(b)) if a == b => a,
        (a, b) => return fail("recursive step vs composite", json!([format!("{a:?}"), format!("{b:?}")])),
    };
    let a = d.area_word();
    let doubled = a.len() >= 2 && a[1] == 0;
    let touches = a.iter().filter(|&&x| x == 0).count() as u64;
    let expected_drop = if doubled { 0 } else { touches - 1 };
    if d.dinv().checked_sub(step.dinv()) != Some(expected_drop) {
        return fail("dinv drop", json!({ "before": d.dinv(), "after": step.dinv(), "expected_drop": expected_drop }));
    }
    None
}

/// For every Catalan partially labelled path with `m + n <= max_size`: `ψ∘η⁻¹` keeps area,
/// sends dinv to ndinv and the zero composition to the big car composition, and the recursive
/// step agrees with the four-map composite while dropping dinv by the diagonal touches minus one.
pub fn ndinv_suite(max_size: u32) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut reports = Vec::new();
    for size in 0..=max_size {
        for m in 0..=size {
            let n = size - m;
            let family = paths(&FamilySpec::catalan_pld(m, n))?;
            let witness = family.par_iter().find_map_first(ndinv_witness);
            reports.push(VerificationReport::from_outcome(
                "ndinv",
                "catalan-pld-transport",
                format!("m={m} n={n}"),
                format!("{} paths", family.len()),
                witness,
            ));
        }
    }
    Ok(reports)
}

fn ehh_witness(d: &DecoratedLabelledPath, k: u32, n: u32, m: u32) -> Result<DecoratedLabelledPath, serde_json::Value> {
    let fail = |what: &str, extra: serde_json::Value| json!({ "path": path_json(d), "failed": what, "data": extra });
    let p = ehh_forward(d, k, n, m).map_err(|e| fail("forward", json!(e.to_string())))?;
    validate_family(&p, &Family::TwoCar { m, n, k, ghost: true }).map_err(|e| fail("image family", json!(e.to_string())))?;
    if (p.dinv(), p.area()) != (d.dinv(), d.area()) {
        return Err(fail("statistics", json!([[d.dinv(), d.area()], [p.dinv(), p.area()]])));
    }
    match ehh_inverse(&p) {
        Ok((back, params)) if &back == d && params == (k, n, m) => Ok(p),
        other => Err(fail("round trip", json!(format!("{other:?}")))),
    }
}

fn shuffle_step_witness(d: &DecoratedLabelledPath, k: u32, n: u32, m: u32) -> Option<serde_json::Value> {
    let diagonal = d.area_word().iter().filter(|&&a| a == 0).count() as u64;
    match shuffle_recursion_step(d, k, n, m) {
        Ok(step) if d.area() - step.path.area() == d.size() as u64 - diagonal => None,
        other => Some(json!({ "path": path_json(d), "step": format!("{other:?}") })),
    }
}

fn shuffle_triples(max_size: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        for k in 0..=size {
            for n in k..=size {
                let m = size + k - n;
                if m >= k {
                    out.push((k, n, m));
                }
            }
        }
    }
    out
}

/// For every `(k, n, m)` with `1 <= m + n - k <= max_size`: the shuffle-path map is a
/// (dinv, area)-preserving bijection onto the decorated two-car parking functions, the two
/// q,t-enumerators agree, and the recursive step loses the expected area.
pub fn ehh_suite(max_size: u32) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut reports = Vec::new();
    for (k, n, m) in shuffle_triples(max_size) {
        let instance = format!("k={k} n={n} m={m}");
        let shuffles = paths(&FamilySpec::shuffle_knm(k, n, m))?;
        let images: Vec<Result<DecoratedLabelledPath, serde_json::Value>> =
            shuffles.par_iter().map(|d| ehh_witness(d, k, n, m)).collect();
        let mut witness = images.iter().find_map(|r| r.as_ref().err().cloned());
        if witness.is_none() {
            let distinct: HashSet<&DecoratedLabelledPath> = images.iter().filter_map(|r| r.as_ref().ok()).collect();
            let target = count(&FamilySpec::two_car(m, n, k, true))?;
            if distinct.len() != shuffles.len() || target != shuffles.len() as u64 {
                witness = Some(json!({ "failed": "bijectivity", "domain": shuffles.len(), "images": distinct.len(), "codomain": target }));
            }
        }
        reports.push(VerificationReport::from_outcome(
            "ehh",
            "bijection",
            instance.clone(),
            format!("{} paths", shuffles.len()),
            witness,
        ));
        let lhs = qt_enumerator(&FamilySpec::shuffle_knm(k, n, m))?;
        let rhs = qt_enumerator(&FamilySpec::two_car(m, n, k, true))?;
        let witness = (lhs != rhs).then(|| json!({ "shuffle": lhs.to_string(), "two_car": rhs.to_string() }));
        reports.push(VerificationReport::from_outcome("ehh", "enumerator", instance.clone(), lhs.to_string(), witness));
        let witness = shuffles.par_iter().find_map_first(|d| shuffle_step_witness(d, k, n, m));
        reports.push(VerificationReport::from_outcome(
            "ehh",
            "shuffle-step-area",
            instance,
            "area loss equals size minus diagonal cars",
            witness,
        ));
    }
    Ok(reports)
}

/// Searches the recursion conventions against the bucketed enumerators for `m + n <= max_size`.
pub fn recursion_suite(max_size: u32) -> Result<Vec<VerificationReport>, VerifyError> {
    const SUITE: &str = "recursion-reconcile";
    let report = reconcile_recursion(max_size)?;
    let instance = format!("m+n<={max_size}");
    let survivors: Vec<String> = report.survivors.iter().map(|v| v.to_string()).collect();
    let mut out = vec![VerificationReport::from_outcome(
        SUITE,
        "unique-survivor",
        instance.clone(),
        format!("{} variants, {} comparisons each, survivors: {}", report.outcomes.len(), report.comparisons, survivors.join("; ")),
        report.unique().is_none().then(|| json!({ "survivors": survivors })),
    )];
    out.push(match report.bucket_sums_match {
        Some(true) => VerificationReport::pass(SUITE, "bucket-sums", instance.clone(), "sum over r equals the total enumerator"),
        Some(false) => VerificationReport::fail(SUITE, "bucket-sums", instance.clone(), "sum over r differs", json!({ "survivors": survivors })),
        None => VerificationReport::skip(SUITE, "bucket-sums", instance.clone(), "no unique survivor"),
    });
    let printed = report.outcomes.iter().find(|o| o.variant.is_printed() && o.variant.r_semantics == crate::qt::RSemantics::GhostInclusive);
    out.push(VerificationReport::pass(
        SUITE,
        "printed-variant",
        instance,
        format!(
            "printed offsets (+1,0,0) survive: {}; printed variant with base delta(m,r) survives: {}{}",
            report.printed_offsets_survive(),
            report.printed_variant_survives(),
            printed
                .and_then(|o| o.first_residual.as_ref())
                .map(|r| format!("; first printed residual at m={} r={} n={} k={}", r.m, r.r, r.n, r.k))
                .unwrap_or_default()
        ),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triples_respect_shuffle_ranges() {
        let t = shuffle_triples(2);
        assert!(t.contains(&(0, 1, 1)) && t.contains(&(1, 1, 2)) && t.contains(&(2, 2, 2)));
        assert!(t.iter().all(|&(k, n, m)| k <= n && k <= m && m + n - k <= 2));
    }

    #[test]
    fn small_suites_pass() {
        assert!(ndinv_suite(3).unwrap().iter().all(VerificationReport::passed));
        assert!(ehh_suite(3).unwrap().iter().all(VerificationReport::passed));
    }
}
