//! The recursion for two-car parking functions bucketed by big cars on the main diagonal,
//! written as a template over index conventions, and the search that pins the convention
//! against brute-force enumeration.
//!
//! The template is
//!
//! ```text
//! F(m\r, n; k) = sum_{s=1}^{n} sum_{h=0}^{k} sum_{u=h}^{m-r+c3+1}
//!     t^{m+n-r-s-k+c1} [r+s-1+c2, s]_q q^{h(h-1)/2} [s, h]_q [s+u-h-1, u-h]_q F((m-r+c3)\u, n-s; k-h)
//! ```
//!
//! with base case `F(m\r, 0; k) = [m + shift == r][k == 0]`. The first argument may reach `-1`,
//! which stands for a path without any big car left; anything below `-1` is zero, as is any
//! term whose `t` exponent or q-binomial arguments go negative.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::{q_binomial, QtError, QtPoly};
use crate::enumerate::{pf2_buckets, qt_enumerator, FamilySpec};

/// How the bucket index `r` counts big cars on the main diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RSemantics {
    /// Big cars on the diagonal other than the ghost car.
    NonGhost,
    /// All big cars on the diagonal, the ghost car included. This coincides with
    /// "non-ghost count plus one", since the ghost car always sits on the diagonal.
    GhostInclusive,
}

impl RSemantics {
    pub const ALL: [RSemantics; 2] = [RSemantics::NonGhost, RSemantics::GhostInclusive];

    /// Converts a non-ghost diagonal big-car count to this convention.
    pub fn index(self, non_ghost: u32) -> u32 {
        match self {
            RSemantics::NonGhost => non_ghost,
            RSemantics::GhostInclusive => non_ghost + 1,
        }
    }
}

/// Index shift in the base case `F(m\r, 0; k) = delta_{m+shift, r} delta_{k, 0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseCase {
    MinusOne,
    AsPrinted,
    PlusOne,
}

impl BaseCase {
    pub const ALL: [BaseCase; 3] = [BaseCase::MinusOne, BaseCase::AsPrinted, BaseCase::PlusOne];

    pub fn shift(self) -> i64 {
        match self {
            BaseCase::MinusOne => -1,
            BaseCase::AsPrinted => 0,
            BaseCase::PlusOne => 1,
        }
    }
}

/// One point of the convention space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RecursionVariant {
    pub c1: i8,
    pub c2: i8,
    pub c3: i8,
    pub r_semantics: RSemantics,
    pub base: BaseCase,
}

impl RecursionVariant {
    /// Offsets of the recursion as printed.
    pub const PRINTED_OFFSETS: (i8, i8, i8) = (1, 0, 0);

    /// The full search space: offsets in `{-1, 0, 1}^3`, both `r` conventions, three base shifts.
    pub fn all() -> Vec<RecursionVariant> {
        let mut out = Vec::new();
        for c1 in -1..=1 {
            for c2 in -1..=1 {
                for c3 in -1..=1 {
                    for r_semantics in RSemantics::ALL {
                        for base in BaseCase::ALL {
                            out.push(RecursionVariant { c1, c2, c3, r_semantics, base });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn offsets(&self) -> (i8, i8, i8) {
        (self.c1, self.c2, self.c3)
    }

    pub fn has_printed_offsets(&self) -> bool {
        self.offsets() == Self::PRINTED_OFFSETS
    }

    /// Printed offsets together with the printed base case `delta_{m,r}`.
    pub fn is_printed(&self) -> bool {
        self.has_printed_offsets() && self.base == BaseCase::AsPrinted
    }
}

impl fmt::Display for RecursionVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "offsets=({:+},{:+},{:+}) r={:?} base=delta(m{:+},r)",
            self.c1,
            self.c2,
            self.c3,
            self.r_semantics,
            self.base.shift()
        )
    }
}

type Key = (i64, i64, i64, i64);

/// Memoized evaluator of the template for a fixed variant.
pub struct Pf2Recursion {
    variant: RecursionVariant,
    memo: Mutex<HashMap<Key, QtPoly>>,
    qbin: Mutex<HashMap<(i64, i64), QtPoly>>,
}

impl Pf2Recursion {
    pub fn new(variant: RecursionVariant) -> Self {
        Self { variant, memo: Mutex::new(HashMap::new()), qbin: Mutex::new(HashMap::new()) }
    }

    pub fn variant(&self) -> RecursionVariant {
        self.variant
    }

    fn qbin(&self, n: i64, k: i64) -> QtPoly {
        if n < 0 || k < 0 || n < k {
            return QtPoly::zero();
        }
        if let Some(p) = self.qbin.lock().expect("memo poisoned").get(&(n, k)) {
            return p.clone();
        }
        let p = q_binomial(n, k).expect("arguments checked non-negative");
        self.qbin.lock().expect("memo poisoned").insert((n, k), p.clone());
        p
    }

    /// `F(m\r, n; k)`.
    pub fn eval(&self, m: i64, r: i64, n: i64, k: i64) -> QtPoly {
        if m < -1 || r < 0 || n < 0 || k < 0 {
            return QtPoly::zero();
        }
        let key = (m, r, n, k);
        if let Some(p) = self.memo.lock().expect("memo poisoned").get(&key) {
            return p.clone();
        }
        let v = self.variant;
        let value = if n == 0 {
            if m + v.base.shift() == r && k == 0 {
                QtPoly::one()
            } else {
                QtPoly::zero()
            }
        } else {
            let mut acc = QtPoly::zero();
            let m_next = m - r + v.c3 as i64;
            for s in 1..=n {
                let t_exp = m + n - r - s - k + v.c1 as i64;
                if t_exp < 0 {
                    continue;
                }
                let lead = self.qbin(r + s - 1 + v.c2 as i64, s);
                if lead.is_zero() {
                    continue;
                }
                for h in 0..=k {
                    let qh = self.qbin(s, h);
                    if qh.is_zero() {
                        continue;
                    }
                    for u in h..=m_next + 1 {
                        let sub = self.eval(m_next, u, n - s, k - h);
                        if sub.is_zero() {
                            continue;
                        }
                        let tail = self.qbin(s + u - h - 1, u - h);
                        if tail.is_zero() {
                            continue;
                        }
                        let weight = (&(&lead * &qh) * &tail).shift((h * (h - 1) / 2) as u32, t_exp as u32);
                        acc += &(&weight * &sub);
                    }
                }
            }
            acc
        };
        self.memo.lock().expect("memo poisoned").insert(key, value.clone());
        value
    }
}

/// One disagreement between a variant and the enumerated buckets.
#[derive(Clone, Debug, Serialize)]
pub struct Residual {
    pub m: i64,
    pub r: i64,
    pub n: i64,
    pub k: i64,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VariantOutcome {
    pub variant: RecursionVariant,
    pub mismatches: usize,
    pub first_residual: Option<Residual>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReconciliationReport {
    pub max_size: u32,
    /// Number of `(m, r, n, k)` comparisons made per variant.
    pub comparisons: usize,
    pub outcomes: Vec<VariantOutcome>,
    pub survivors: Vec<RecursionVariant>,
    /// For a unique survivor: whether summing its buckets over `r` gives the full enumerator on
    /// every `(m, n, k)`.
    pub bucket_sums_match: Option<bool>,
}

impl ReconciliationReport {
    pub fn unique(&self) -> Option<RecursionVariant> {
        match self.survivors.as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }

    pub fn printed_variant_survives(&self) -> bool {
        self.survivors.iter().any(|v| v.is_printed())
    }

    pub fn printed_offsets_survive(&self) -> bool {
        self.survivors.iter().any(|v| v.has_printed_offsets())
    }

    pub fn succeeded(&self) -> bool {
        self.unique().is_some() && self.bucket_sums_match == Some(true)
    }
}

/// Searches the whole variant space against brute-force bucketed enumerators of two-car parking
/// functions, on every `(m, n, k)` with `1 <= n`, `m + n <= max_size`, `k <= n`, and every
/// `r` in `0..=m+2`.
pub fn reconcile_recursion(max_size: u32) -> Result<ReconciliationReport, QtError> {
    let max = max_size as i64;
    let mut instances = Vec::new();
    for size in 1..=max {
        for m in 0..size {
            let n = size - m;
            for k in 0..=n {
                let buckets = pf2_buckets(m as u32, n as u32, k as u32, RSemantics::NonGhost)
                    .map_err(|e| QtError::Enumeration(e.to_string()))?;
                let total = qt_enumerator(&FamilySpec::two_car(m as u32, n as u32, k as u32, false))
                    .map_err(|e| QtError::Enumeration(e.to_string()))?;
                instances.push((m, n, k, buckets, total));
            }
        }
    }
    let expected = |sem: RSemantics, buckets: &BTreeMap<u32, QtPoly>, r: i64| -> QtPoly {
        buckets
            .iter()
            .find(|(&c, _)| sem.index(c) as i64 == r)
            .map(|(_, p)| p.clone())
            .unwrap_or_default()
    };
    let mut outcomes = Vec::new();
    let mut comparisons = 0;
    for variant in RecursionVariant::all() {
        let rec = Pf2Recursion::new(variant);
        let mut mismatches = 0;
        let mut first_residual = None;
        comparisons = 0;
        for (m, n, k, buckets, _) in &instances {
            for r in 0..=m + 2 {
                comparisons += 1;
                let want = expected(variant.r_semantics, buckets, r);
                let got = rec.eval(*m, r, *n, *k);
                if want != got {
                    mismatches += 1;
                    if first_residual.is_none() {
                        first_residual = Some(Residual {
                            m: *m,
                            r,
                            n: *n,
                            k: *k,
                            expected: want.to_string(),
                            got: got.to_string(),
                        });
                    }
                }
            }
        }
        outcomes.push(VariantOutcome { variant, mismatches, first_residual });
    }
    let survivors: Vec<RecursionVariant> =
        outcomes.iter().filter(|o| o.mismatches == 0).map(|o| o.variant).collect();
    let bucket_sums_match = match survivors.as_slice() {
        [v] => {
            let rec = Pf2Recursion::new(*v);
            Some(instances.iter().all(|(m, n, k, _, total)| {
                let sum: QtPoly = (0..=m + 2).map(|r| rec.eval(*m, r, *n, *k)).sum();
                &sum == total
            }))
        }
        _ => None,
    };
    Ok(ReconciliationReport { max_size, comparisons, outcomes, survivors, bucket_sums_match })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn survivor() -> RecursionVariant {
        RecursionVariant { c1: 1, c2: 0, c3: 0, r_semantics: RSemantics::GhostInclusive, base: BaseCase::PlusOne }
    }

    #[test]
    fn variant_space_size() {
        let all = RecursionVariant::all();
        assert_eq!(all.len(), 27 * 2 * 3);
        assert_eq!(all.iter().filter(|v| v.is_printed()).count(), 2);
    }

    #[test]
    fn base_cases() {
        for v in RecursionVariant::all() {
            let rec = Pf2Recursion::new(v);
            let s = v.base.shift();
            for m in 0..4i64 {
                if m + s >= 0 {
                    assert_eq!(rec.eval(m, m + s, 0, 0), QtPoly::one());
                }
                assert!(rec.eval(m, m + s + 1, 0, 0).is_zero());
                assert!(rec.eval(m, m + s, 0, 1).is_zero());
            }
        }
        let printed = Pf2Recursion::new(RecursionVariant {
            c1: 1,
            c2: 0,
            c3: 0,
            r_semantics: RSemantics::NonGhost,
            base: BaseCase::AsPrinted,
        });
        assert_eq!(printed.eval(2, 2, 0, 0), QtPoly::one());
        assert!(printed.eval(2, 1, 0, 0).is_zero());
    }

    #[test]
    fn smallest_instance_matches_enumeration() {
        let rec = Pf2Recursion::new(survivor());
        let total: QtPoly = (0..=3).map(|r| rec.eval(1, r, 1, 0)).sum();
        assert_eq!(total, QtPoly::from_terms([(0, 0, 1), (1, 0, 1), (0, 1, 1)]));
    }

    #[test]
    fn memo_is_stable() {
        let rec = Pf2Recursion::new(survivor());
        let a = rec.eval(3, 2, 2, 1);
        let b = rec.eval(3, 2, 2, 1);
        assert_eq!(a, b);
        let fresh = Pf2Recursion::new(survivor()).eval(3, 2, 2, 1);
        assert_eq!(a, fresh);
    }

    #[test]
    fn empty_search_keeps_everything() {
        let report = reconcile_recursion(0).unwrap();
        assert_eq!(report.comparisons, 0);
        assert_eq!(report.survivors.len(), RecursionVariant::all().len());
        assert!(report.unique().is_none());
    }

    #[test]
    fn small_search_has_a_survivor() {
        let report = reconcile_recursion(3).unwrap();
        assert!(!report.survivors.is_empty());
        assert!(report.survivors.contains(&survivor()));
    }
}
